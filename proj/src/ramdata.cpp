#include "ramcover/ramdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ramcover/errors.hpp"

namespace ramcover {

Partition::Partition(const std::vector<Count>& parts) {
  runs_.reserve(parts.size());
  for (Count p : parts) runs_.emplace_back(p, 1);
  canonicalize();
}

Partition Partition::from_runs(std::vector<Run> runs) {
  Partition p;
  p.runs_ = std::move(runs);
  p.canonicalize();
  return p;
}

Partition Partition::trivial(Count degree) { return from_runs({{1, degree}}); }

void Partition::canonicalize() {
  std::map<Count, Count, std::greater<>> merged;
  for (auto [value, mult] : runs_) {
    if (value <= 0) throw DomainError("partition parts must be positive, got " + std::to_string(value));
    if (mult < 0) throw DomainError("negative multiplicity for part " + std::to_string(value));
    if (mult > 0) merged[value] += mult;
  }
  runs_.assign(merged.begin(), merged.end());
  degree_ = 0;
  size_ = 0;
  for (auto [value, mult] : runs_) {
    degree_ += value * mult;
    size_ += mult;
  }
}

std::vector<Count> Partition::parts() const {
  if (size_ > 100'000'000) throw CapExceeded("refusing to expand a partition with " + std::to_string(size_) + " parts");
  std::vector<Count> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (auto [value, mult] : runs_) out.insert(out.end(), static_cast<std::size_t>(mult), value);
  return out;
}

Count Partition::multiplicity(Count part) const {
  for (auto [value, mult] : runs_)
    if (value == part) return mult;
  return 0;
}

Count Partition::lcm_of_parts() const {
  Count l = 1;
  for (auto [value, mult] : runs_) l = lcm(l, value);
  return l;
}

bool Partition::all_divisible_by(Count p) const {
  return std::all_of(runs_.begin(), runs_.end(), [p](const Run& r) { return r.first % p == 0; });
}

Count Partition::count_not_divisible_by(Count p) const {
  Count n = 0;
  for (auto [value, mult] : runs_)
    if (value % p != 0) n += mult;
  return n;
}

std::string Partition::to_compact() const {
  std::string s;
  for (auto [value, mult] : runs_) {
    if (!s.empty()) s += ',';
    s += std::to_string(value);
    if (mult > 1) s += '^' + std::to_string(mult);
  }
  return s;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  std::size_t i = 0, j = 0;
  Count left_i = runs_.empty() ? 0 : runs_[0].second;
  Count left_j = other.runs_.empty() ? 0 : other.runs_[0].second;
  while (i < runs_.size() && j < other.runs_.size()) {
    if (auto c = runs_[i].first <=> other.runs_[j].first; c != 0) return c;
    Count take = std::min(left_i, left_j);
    left_i -= take;
    left_j -= take;
    if (left_i == 0 && ++i < runs_.size()) left_i = runs_[i].second;
    if (left_j == 0 && ++j < other.runs_.size()) left_j = other.runs_[j].second;
  }
  return (i < runs_.size()) <=> (j < other.runs_.size());
}

namespace {

struct Item {
  Count value = 0;
  Count mult = 1;
  bool star = false;
};

Count parse_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) {
    std::string tok = pos < s.size() ? s.substr(pos, 1) : std::string("<end>");
    throw ParseError("expected an integer", start, tok);
  }
  std::string digits = s.substr(start, pos - start);
  if (digits.size() > 15) throw ParseError("integer too large", start, digits);
  return std::stoll(digits);
}

}  // namespace

Partition expand_star(const std::string& compact, Count degree) {
  // Strip whitespace but remember original offsets for diagnostics.
  std::string s;
  std::vector<std::size_t> origin;
  for (std::size_t k = 0; k < compact.size(); ++k) {
    if (std::isspace(static_cast<unsigned char>(compact[k]))) continue;
    s += compact[k];
    origin.push_back(k);
  }
  auto where = [&](std::size_t pos) { return pos < origin.size() ? origin[pos] : compact.size(); };
  std::size_t begin = 0, end = s.size();
  if (end > 0 && s[0] == '[') {
    if (s.back() != ']') throw ParseError("unbalanced '['", where(0), "[");
    begin = 1;
    end -= 1;
  }
  std::vector<Item> items;
  std::size_t pos = begin;
  bool seen_star = false;
  try {
    while (pos < end) {
      Item it;
      it.value = parse_int(s, pos);
      if (it.value == 0) throw ParseError("parts must be positive", pos - 1, "0");
      if (pos < end && s[pos] == '^') {
        ++pos;
        if (pos < end && s[pos] == '*') {
          if (seen_star) throw ParseError("more than one starred item", pos, "*");
          seen_star = true;
          it.star = true;
          ++pos;
        } else {
          it.mult = parse_int(s, pos);
        }
      }
      items.push_back(it);
      if (pos < end) {
        if (s[pos] != ',') throw ParseError("expected ','", pos, s.substr(pos, 1));
        ++pos;
        if (pos == end) throw ParseError("trailing ','", pos - 1, ",");
      }
    }
  } catch (ParseError& e) {
    throw ParseError(e.what(), where(e.position), e.token);
  }
  std::vector<Partition::Run> runs;
  Count used = 0;
  const Item* star = nullptr;
  for (const auto& it : items) {
    if (it.star) {
      star = &it;
      continue;
    }
    used += it.value * it.mult;
    runs.emplace_back(it.value, it.mult);
  }
  if (used > degree)
    throw DomainError("parts of '" + compact + "' sum to " + std::to_string(used) + " > degree " + std::to_string(degree));
  if (star) {
    Count rest = degree - used;
    if (rest % star->value != 0)
      throw DomainError("remainder " + std::to_string(rest) + " not divisible by starred part " +
                        std::to_string(star->value) + " in '" + compact + "'");
    runs.emplace_back(star->value, rest / star->value);
  } else if (used != degree) {
    throw DomainError("parts of '" + compact + "' sum to " + std::to_string(used) + ", expected " + std::to_string(degree));
  }
  return Partition::from_runs(std::move(runs));
}

RamificationData::RamificationData(Count degree, std::vector<Partition> branches) : degree_(degree) {
  if (degree <= 0) throw DomainError("degree must be positive");
  for (auto& b : branches) {
    if (b.degree() != degree)
      throw DomainError("branch " + b.to_string() + " has degree " + std::to_string(b.degree()) + ", expected " +
                        std::to_string(degree));
    if (!b.is_trivial()) branches_.push_back(std::move(b));
  }
  std::sort(branches_.begin(), branches_.end(), std::greater<>());
}

Count RamificationData::rh_sum() const {
  Count s = 0;
  for (const auto& b : branches_) s += b.rh_contribution();
  return s;
}

std::string RamificationData::to_string() const {
  std::string s;
  for (const auto& b : branches_) {
    if (!s.empty()) s += ", ";
    s += b.to_string();
  }
  return s.empty() ? "{}" : s;
}

std::strong_ordering RamificationData::operator<=>(const RamificationData& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(branches_.begin(), branches_.end(), other.branches_.begin(),
                                                other.branches_.end());
}

std::string to_string(GenusResult::Status s) {
  switch (s) {
    case GenusResult::Status::Ok: return "OK";
    case GenusResult::Status::NotIntegral: return "NOT_INTEGRAL";
    case GenusResult::Status::Negative: return "NEGATIVE";
  }
  return "?";
}

GenusResult rh_genus(const RamificationData& d, Count base_genus) {
  GenusResult r;
  r.rh_sum = d.rh_sum();
  r.value = Rational(d.degree() * (base_genus - 1) + 1) + Rational(r.rh_sum, 2);
  if (r.rh_sum % 2 != 0)
    r.status = GenusResult::Status::NotIntegral;
  else if (r.value < 0)
    r.status = GenusResult::Status::Negative;
  else
    r.genus = static_cast<Count>(boost::multiprecision::numerator(r.value));
  return r;
}

Parity total_parity(const RamificationData& d) { return d.rh_sum() % 2 == 0 ? Parity::Even : Parity::Odd; }

}  // namespace ramcover

namespace ramcover {

std::vector<Partition> partitions_of(Count n) {
  if (n < 1 || n > 60) throw DomainError("partitions_of supports 1 <= n <= 60");
  std::vector<Partition> out;
  std::vector<Count> parts;
  auto rec = [&](auto&& self, Count left, Count cap) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (Count p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace ramcover
