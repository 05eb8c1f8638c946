#include "ramcover/tables.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ramcover/errors.hpp"
#include "ramcover/induced.hpp"

namespace ramcover {

std::string to_string(Claim c) {
  switch (c) {
    case Claim::Genus0X2: return "GENUS0_X2";
    case Claim::Nonexistent: return "NONEXISTENT";
    case Claim::SolvableMonodromy: return "SOLVABLE_MONODROMY";
    case Claim::GaloisClosureGenus: return "GALOIS_CLOSURE_GENUS";
  }
  return "?";
}

bool label_less(const std::string& x, const std::string& y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    bool dx = std::isdigit(static_cast<unsigned char>(x[i])), dy = std::isdigit(static_cast<unsigned char>(y[j]));
    if (dx && dy) {
      std::size_t i2 = i, j2 = j;
      while (i2 < x.size() && std::isdigit(static_cast<unsigned char>(x[i2]))) ++i2;
      while (j2 < y.size() && std::isdigit(static_cast<unsigned char>(y[j2]))) ++j2;
      long long a = std::stoll(x.substr(i, i2 - i)), b = std::stoll(y.substr(j, j2 - j));
      if (a != b) return a < b;
      i = i2;
      j = j2;
    } else {
      if (x[i] != y[j]) return x[i] < y[j];
      ++i;
      ++j;
    }
  }
  return x.size() - i < y.size() - j;
}

namespace {

// Recursive-descent evaluation of + - * / ( ) over the rationals.
class Expr {
 public:
  Expr(const std::string& s, Count l, Count a) : s_(s), l_(l), a_(a) {}

  Rational sum() {
    Rational v = product();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      char op = s_[pos_++];
      Rational w = product();
      v = op == '+' ? v + w : v - w;
    }
    return v;
  }
  Rational product() {
    Rational v = atom();
    while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
      char op = s_[pos_++];
      Rational w = atom();
      if (op == '/' && w == 0) throw std::logic_error("division by zero in template " + s_);
      v = op == '*' ? v * w : v / w;
    }
    return v;
  }
  // Number, variable, or parenthesised expression (the operand of '^').
  Rational atom() {
    if (pos_ >= s_.size()) throw std::logic_error("truncated template " + s_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Rational v = sum();
      expect(')');
      return v;
    }
    if (c == 'l') return ++pos_, Rational(l_);
    if (c == 'a') return ++pos_, Rational(a_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Count v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return Rational(v);
    }
    throw std::logic_error("bad template " + s_ + " at " + std::to_string(pos_));
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) throw std::logic_error("bad template " + s_);
    ++pos_;
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool done() const { return pos_ >= s_.size(); }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  Count l_, a_;
};

std::optional<Count> as_count(const Rational& r) {
  if (!is_integer(r)) return std::nullopt;
  return static_cast<Count>(boost::multiprecision::numerator(r));
}

std::optional<Partition> instantiate_branch(const std::string& tmpl, Count degree, Count l, Count a) {
  Expr e(tmpl, l, a);
  std::vector<Partition::Run> runs;
  std::optional<Count> star;
  Count used = 0;
  while (!e.done()) {
    auto part = as_count(e.sum());
    if (!part || *part <= 0) return std::nullopt;
    Count mult = 1;
    if (e.at('^')) {
      e.expect('^');
      if (e.at('*')) {
        e.expect('*');
        star = *part;
        mult = 0;
      } else {
        auto m = as_count(e.atom());
        if (!m || *m < 0) return std::nullopt;
        mult = *m;
      }
    }
    if (!star || mult != 0) {
      runs.emplace_back(*part, mult);
      used += *part * mult;
    }
    if (!e.done()) e.expect(',');
  }
  if (used > degree) return std::nullopt;
  if (star) {
    if ((degree - used) % *star != 0) return std::nullopt;
    runs.emplace_back(*star, (degree - used) / *star);
  } else if (used != degree) {
    return std::nullopt;
  }
  return Partition::from_runs(std::move(runs));
}

using Template = std::vector<std::string>;

std::vector<std::string> times(const std::string& b, int k) { return std::vector<std::string>(static_cast<std::size_t>(k), b); }

Template cat(std::initializer_list<std::vector<std::string>> parts) {
  Template t;
  for (const auto& p : parts) t.insert(t.end(), p.begin(), p.end());
  return t;
}

// Branch shorthands for the two-set table.
const std::string L = "l", AL = "a,l-a", T = "1^(l-2),2";
const std::string O2 = "1,2^((l-1)/2)", O3 = "1^3,2^((l-3)/2)", E2 = "1^2,2^((l-2)/2)", E0 = "2^(l/2)";

const std::vector<std::pair<std::string, Template>>& two_set_templates() {
  static const std::vector<std::pair<std::string, Template>> t = {
      {"I1.1", {L, AL, T}},
      {"I2.1", {L, O3, O2, T}},
      {"I2.2", cat({{L}, times(E2, 2), {T}})},
      {"I2.3", {L, O3, "2^((l-3)/2),3"}},
      {"I2.4", {L, E2, "1,2^((l-4)/2),3"}},
      {"I2.5", {L, O2, "1^2,2^((l-5)/2),3"}},
      {"I2.6", {L, O3, "1,2^((l-5)/2),4"}},
      {"I2.7", {L, E2, "1^2,2^((l-6)/2),4"}},
      {"I2.8", {L, O2, "1^3,2^((l-7)/2),4"}},
      {"I2.9", {AL, E2, E0, T}},
      {"I2.10", cat({{AL}, times(O2, 2), {T}})},
      {"I2.11", {AL, E0, "1^2,2^((l-6)/2),4"}},
      {"I2.12", {AL, O2, "1,2^((l-5)/2),4"}},
      {"I2.13", {AL, E2, "2^((l-4)/2),4"}},
      {"I2.14", {AL, O2, "2^((l-3)/2),3"}},
      {"I2.15", {AL, E0, "1,2^((l-4)/2),3"}},
      {"F1.1", cat({{T, E0}, times(E2, 3)})},
      {"F1.2", cat({{T, O3}, times(O2, 3)})},
      {"F1.3", cat({{O3, "2^((l-3)/2),3"}, times(O2, 2)})},
      {"F1.4", cat({{E0, "1,2^((l-4)/2),3"}, times(E2, 2)})},
      {"F1.5", cat({{"1^2,2^((l-5)/2),3"}, times(O2, 3)})},
      {"F1.6", cat({{O3, "1,2^((l-5)/2),4"}, times(O2, 2)})},
      {"F1.7", cat({{E0, "1^2,2^((l-6)/2),4"}, times(E2, 2)})},
      {"F1.8", cat({{"1^3,2^((l-7)/2),4"}, times(O2, 3)})},
      {"F1.9", cat({{"2^((l-4)/2),4"}, times(E2, 3)})},
      {"F3.1", {E2, "1,3,4^((l-4)/4)", "4^(l/4)"}},
      {"F3.2", {O2, "1,4^((l-1)/4)", "2,3,4^((l-5)/4)"}},
      {"F3.3", {O2, "1,2,4^((l-3)/4)", "3,4^((l-3)/4)"}},
      {"F4.1", {E2, "1,2,3^((l-3)/3)", "6^(l/6)"}},
      {"F4.2", {E2, "2,3^((l-2)/3)", "2,6^((l-2)/6)"}},
      {"F4.3", {O2, "1,3^((l-1)/3)", "3,4,6^((l-7)/6)"}},
      {"F4.4", {O2, "1,2,3^((l-3)/3)", "3,6^((l-3)/6)"}},
      {"F4.5", {E2, "1,3^((l-1)/3)", "4,6^((l-4)/6)"}},
      {"F4.6", {O2, "2,3^((l-2)/3)", "2,3,6^((l-5)/6)"}},
  };
  return t;
}

// Lifted-table shorthands: images of the two-set branches above.
const std::string FL = "l^*", FLE = "l/2,l^*", FT = "2^(l-2),1^*";
const std::string FALO = "a*(l-a),a^((a-1)/2),(l-a)/2,(l-a)^*", FALE = "a*(l-a),a^((a-1)/2),(l-a)^*";
const std::string FO3 = "1^((l+3)/2),2^*", FO2 = "1^((l-1)/2),2^*", FE = "1^(l/2),2^*";
const std::string F3A = "3,1^((l-3)/2),6^((l-3)/2),2^*", F3B = "3^2,1^((l-4)/2),6^((l-4)/2),2^*";
const std::string F3C = "3^3,1^((l-3)/2),6^((l-5)/2),2^*";
const std::string F4A = "1^((l-5)/2),4^(l-3),2^*", F4B = "1^((l-4)/2),4^(l-3),2^*", F4C = "1^((l-1)/2),4^(l-3),2^*";

const std::vector<std::pair<std::string, Template>>& f_templates() {
  static const std::vector<std::pair<std::string, Template>> t = {
      {"I1.1a", {FL, FALO, FT}},
      {"I1.1b", {FLE, FALE, FT}},
      {"I2.1", {FL, FO3, FO2, FT}},
      {"I2.2", cat({{FLE}, times(FE, 2), {FT}})},
      {"I2.3", {FL, FO3, F3A}},
      {"I2.4", {FLE, FE, F3B}},
      {"I2.5", {FL, FO2, F3C}},
      {"I2.6", {FL, FO3, F4A}},
      {"I2.7", {FLE, FE, F4B}},
      {"I2.8", {FL, FO2, F4C}},
      {"I2.9", cat({{FALE}, times(FE, 2), {FT}})},
      {"I2.10", cat({{FALO}, times(FO2, 2), {FT}})},
      {"I2.11", {FALE, FE, F4B}},
      {"I2.12", {FALO, FO2, F4A}},
      {"I2.14", {FALO, FO2, F3A}},
      {"I2.15", {FALE, FE, F3B}},
      {"F1.1", cat({{FT}, times(FE, 4)})},
      {"F1.2", cat({{FT, FO3}, times(FO2, 3)})},
      {"F1.3", cat({{FO3, F3A}, times(FO2, 2)})},
      {"F1.4", cat({times(FE, 3), {F3B}})},
      {"F1.5", cat({{F3C}, times(FO2, 3)})},
      {"F1.6", cat({{FO3, F4A}, times(FO2, 2)})},
      {"F1.7", cat({{F4B}, times(FE, 3)})},
      {"F1.8", cat({{F4C}, times(FO2, 3)})},
      {"F3.1", {FE, "3^2,2^((l-4)/4),12^((l-4)/4),4^*", "2^(l/4),4^*"}},
      {"F3.2", {FO2, "2^((l-1)/4),4^*", "1,3,6,2^((l-5)/4),12^((l-5)/4),4^*"}},
      {"F3.3", {FO2, "1,2^((l+1)/4),4^*", "3,2^((l-3)/4),12^((l-3)/4),4^*"}},
      {"F4.1", {FE, "1,2,6^((l-3)/3),3^*", "3^(l/6),6^*"}},
      {"F4.2", {FE, "1,6^((l-2)/3),3^*", "1,3^((l-2)/6),6^*"}},
      {"F4.3", {FO2, "3^*", "2,4,3^((l-1)/6),12^((l-4)/3),6^*"}},
      {"F4.4", {FO2, "1,2,6^((l-3)/3),3^*", "3^((l+3)/6),6^*"}},
      {"F4.5", {FE, "3^*", "2,4,3^((l-4)/6),12^((l-4)/3),6^*"}},
      {"F4.6", {FO2, "1,6^((l-2)/3),3^*", "1,3^((l+1)/6),6^*"}},
  };
  return t;
}

const std::vector<std::pair<std::string, Template>>& nonexistence_templates() {
  static const std::vector<std::pair<std::string, Template>> t = {
      {"F1.N1", cat({{E2}, times(E0, 3), {"2,1^(l-2)"}})},
      {"F1.N2", cat({{"1,3,2^((l-4)/2)"}, times(E0, 3)})},
      {"F1.N3", cat({{"1^2,4,2^((l-6)/2)"}, times(E0, 3)})},
      {"F1.N4", cat({{"4,2^((l-4)/2)", E2}, times(E0, 2)})},
      {"F4.N1", {E0, "2,3^((l-2)/3)", "1^2,6^((l-2)/6)"}},
      {"I2.N1", {L, "4,2^((l-4)/2)", E0}},
      {"I2.N2", cat({{L}, times(E0, 2), {"2,1^(l-2)"}})},
  };
  return t;
}

const std::vector<Template>& non236_templates() {
  static const std::vector<Template> t = {
      {E0, "3^(l/3)", "1^2,4,6^((l-6)/6)"},
      {E2, "3^(l/3)", "2,4,6^((l-6)/6)"},
      {O2, "3^(l/3)", "2,3,4,6^((l-9)/6)"},
      {E0, "1,2,3^((l-3)/3)", "3^2,6^((l-6)/6)"},
      {E0, "1,3^((l-1)/3)", "3^2,4,6^((l-10)/6)"},
      {E0, "2,3^((l-2)/3)", "2,3^2,6^((l-8)/6)"},
      {E0, "3^(l/3)", "2,3^2,4,6^((l-12)/6)"},
      {E0, "2,3^((l-2)/3)", "1^2,6^((l-2)/6)"},
  };
  return t;
}

struct SolvableRow {
  std::string label;
  Template branches;
  int closure_genus;
  std::string group;
  bool solvable;
  // Degree condition beyond exponent integrality.
  bool (*admissible)(Count l);
};

bool prime_l(Count l) { return is_prime(l); }
Count prime_square_root(Count l) {
  for (Count p = 2; p * p <= l; ++p)
    if (p * p == l && is_prime(p)) return p;
  return 0;
}

const std::vector<SolvableRow>& solvable_rows() {
  static const std::vector<SolvableRow> t = {
      {"A1", {L, L}, 0, "C_l", true, prime_l},
      {"A2", {O2, O2, L}, 0, "D_2l", true, prime_l},
      {"A3", {"1^2,2^4", "1,3^3", "5^2"}, 0, "A_5", false, [](Count l) { return l == 10; }},
      {"A4", {"1^2,2^2", "3^2", "1,5"}, 0, "A_5", false, [](Count l) { return l == 6; }},
      {"A5", {"1,2^2", "1^2,3", "5"}, 0, "A_5", false, [](Count l) { return l == 5; }},
      {"A6", {"1^2,2", "1,3", "4"}, 0, "S_4", true, [](Count l) { return l == 4; }},
      {"A7", {"2^2", "1,3", "1,3"}, 0, "A_4", true, [](Count l) { return l == 4; }},
      {"E1", times(O2, 4), 1, "D_2l", true, prime_l},
      {"E2", times("1,3^((l-1)/3)", 3), 1, "C_l:C_3", true, prime_l},
      {"E3", times("1,3^((l-1)/3)", 3), 1, "(C_p)^2:C_3", true,
       [](Count l) { Count p = prime_square_root(l); return p && p % 3 == 2; }},
      {"E4", {O2, "1,4^((l-1)/4)", "1,4^((l-1)/4)"}, 1, "C_l:C_4", true, prime_l},
      {"E5", {O2, "1,4^((l-1)/4)", "1,4^((l-1)/4)"}, 1, "(C_p)^2:C_4", true,
       [](Count l) { Count p = prime_square_root(l); return p && p % 4 == 3; }},
      {"E6", {O2, "1,3^((l-1)/3)", "1,6^((l-1)/6)"}, 1, "C_l:C_6", true, prime_l},
      {"E7", {O2, "1,3^((l-1)/3)", "1,6^((l-1)/6)"}, 1, "(C_p)^2:C_6", true,
       [](Count l) { Count p = prime_square_root(l); return p && p % 6 == 5; }},
      {"Q1", times("2", 4), 1, "C_2", true, [](Count l) { return l == 2; }},
      {"Q2", times("3", 3), 1, "C_3", true, [](Count l) { return l == 3; }},
  };
  return t;
}

template <class Rows>
const Template& find_template(const Rows& rows, const std::string& label) {
  for (const auto& [name, t] : rows)
    if (name == label) return t;
  throw DomainError("unknown row label '" + label + "'");
}

bool template_uses_a(const Template& t) {
  return std::any_of(t.begin(), t.end(), [](const std::string& b) { return b.find('a') != std::string::npos; });
}

std::vector<std::string> names_of(const std::vector<std::pair<std::string, Template>>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.first);
  return out;
}

}  // namespace

std::optional<RamificationData> instantiate(const std::vector<std::string>& branches, Count degree, Count l, Count a) {
  std::vector<Partition> parts;
  for (const auto& b : branches) {
    auto p = instantiate_branch(b, degree, l, a);
    if (!p) return std::nullopt;
    parts.push_back(std::move(*p));
  }
  return RamificationData(degree, std::move(parts));
}

const std::vector<std::string>& two_set_labels() {
  static const auto v = names_of(two_set_templates());
  return v;
}
const std::vector<std::string>& f_labels() {
  static const auto v = names_of(f_templates());
  return v;
}
const std::vector<std::string>& nonexistence_labels() {
  static const auto v = names_of(nonexistence_templates());
  return v;
}
const std::vector<std::string>& solvable_labels() {
  static const auto v = [] {
    std::vector<std::string> out;
    for (const auto& r : solvable_rows()) out.push_back(r.label);
    return out;
  }();
  return v;
}

bool row_uses_a(const std::string& label) { return template_uses_a(find_template(two_set_templates(), label)); }

std::vector<Count> admissible_a(Count l) {
  std::vector<Count> out;
  for (Count a = 1; a < l; a += 2)
    if (gcd(a, l) == 1) out.push_back(a);
  return out;
}

std::optional<RamificationData> two_set_row(const std::string& label, Count l, Count a) {
  const auto& t = find_template(two_set_templates(), label);
  if (template_uses_a(t) && (a < 1 || a >= l || a % 2 == 0 || gcd(a, l) != 1)) return std::nullopt;
  return instantiate(t, l, l, a);
}

std::optional<RamificationData> f_row(const std::string& label, Count l, Count a) {
  const auto& t = find_template(f_templates(), label);
  if (template_uses_a(t))
    if (a < 1 || a >= l || a % 2 == 0 || gcd(a, l) != 1) return std::nullopt;
  return instantiate(t, binomial(l, 2), l, a);
}

std::optional<RamificationData> nonexistence_row(const std::string& label, Count l) {
  return instantiate(find_template(nonexistence_templates(), label), l, l);
}

std::optional<RamificationData> non236_row(int row, Count n) {
  if (row < 1 || row > static_cast<int>(non236_templates().size())) throw DomainError("no such display row");
  return instantiate(non236_templates()[static_cast<std::size_t>(row - 1)], n, n);
}

std::vector<TableEntry> gen_two_set_table(Count l) {
  if (l < 13) throw DomainError("two-set table requires l >= 13, got " + std::to_string(l));
  std::vector<TableEntry> out;
  auto add = [&](const std::string& label, Count a, bool uses_a) {
    auto d = two_set_row(label, l, a);
    if (!d) return;
    auto hit = std::find_if(out.begin(), out.end(), [&](const TableEntry& e) { return e.data == *d; });
    if (hit != out.end()) {
      // a and l-a give the same multiset; a clash across rows is recorded.
      if (std::find(hit->sources.begin(), hit->sources.end(), label) == hit->sources.end())
        hit->sources.push_back(label);
      return;
    }
    TableEntry e;
    e.label = label;
    e.params["l"] = l;
    if (uses_a) e.params["a"] = a;
    e.data = std::move(*d);
    e.claims = {Claim::Genus0X2};
    e.sources = {label};
    out.push_back(std::move(e));
  };
  for (const auto& label : two_set_labels()) {
    if (row_uses_a(label))
      for (Count a : admissible_a(l)) add(label, a, true);
    else
      add(label, 0, false);
  }
  std::stable_sort(out.begin(), out.end(), [](const TableEntry& x, const TableEntry& y) { return label_less(x.label, y.label); });
  return out;
}

std::string f_label_for(const std::string& label, Count l) {
  if (label == "I1.1") return l % 2 ? "I1.1a" : "I1.1b";
  if (label == "I2.13") return "I2.11";
  if (label == "F1.9") return "F1.7";
  return label;
}

std::vector<TableEntry> gen_f_table(Count l) {
  std::vector<TableEntry> out;
  for (const auto& src : gen_two_set_table(l)) {
    RamificationData lifted = lift_table_entry(src.data);
    auto hit = std::find_if(out.begin(), out.end(), [&](const TableEntry& e) { return e.data == lifted; });
    if (hit != out.end()) {
      if (std::find(hit->sources.begin(), hit->sources.end(), src.label) == hit->sources.end())
        hit->sources.push_back(src.label);
      continue;
    }
    TableEntry e;
    e.label = f_label_for(src.label, l);
    e.params = src.params;
    e.data = std::move(lifted);
    e.claims = {Claim::Genus0X2};
    e.sources = {src.label};
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const TableEntry& x, const TableEntry& y) { return label_less(x.label, y.label); });
  return out;
}

TableEntry solvable_row(const std::string& label, Count l) {
  for (const auto& r : solvable_rows()) {
    if (r.label != label) continue;
    auto d = r.admissible(l) ? instantiate(r.branches, l, l) : std::nullopt;
    if (!d) throw DomainError("row " + label + " is inadmissible at l=" + std::to_string(l));
    TableEntry e;
    e.label = label;
    e.params["l"] = l;
    if (Count p = prime_square_root(l); p && label[0] == 'E') e.params["p"] = p;
    e.data = std::move(*d);
    e.claims = {Claim::GaloisClosureGenus};
    if (r.solvable) e.claims.insert(Claim::SolvableMonodromy);
    e.galois_closure_genus = r.closure_genus;
    e.group = r.group;
    e.sources = {label};
    return e;
  }
  throw DomainError("unknown solvable-table label '" + label + "'");
}

std::vector<TableEntry> gen_solvable_table(Count l) {
  std::vector<TableEntry> out;
  for (const auto& label : solvable_labels()) {
    try {
      out.push_back(solvable_row(label, l));
    } catch (const DomainError&) {
    }
  }
  return out;
}

std::vector<TableEntry> gen_nonexistence_table(Count l) {
  std::vector<TableEntry> out;
  for (const auto& label : nonexistence_labels()) {
    auto d = nonexistence_row(label, l);
    if (!d) continue;
    TableEntry e;
    e.label = label;
    e.params["l"] = l;
    e.data = std::move(*d);
    e.claims = {Claim::Nonexistent};
    e.sources = {label};
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const TableEntry& x, const TableEntry& y) { return label_less(x.label, y.label); });
  return out;
}

Count expected_f_count(Count l) {
  Count e = l % 2 ? 12 : (l % 4 == 0 ? 8 : 7);
  return 2 * euler_phi(l) + e;
}

Count expected_two_set_count(Count l) {
  Count phi = euler_phi(l);
  if (l % 2) return 2 * phi + 12;
  return 5 * phi / 2 + (l % 4 == 0 ? 9 : 8);
}

}  // namespace ramcover
