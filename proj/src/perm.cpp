#include "ramcover/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ramcover/errors.hpp"

namespace ramcover {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
  if (degree < 0) throw DomainError("negative degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("images do not form a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& c : cycles) {
    for (int x : c) {
      if (x < 0 || x >= degree) throw DomainError("cycle point " + std::to_string(x + 1) + " outside degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(x)]) throw DomainError("cycles are not disjoint at point " + std::to_string(x + 1));
      used[static_cast<std::size_t>(x)] = 1;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p.images_[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
  }
  return p;
}

Permutation Permutation::parse(const std::string& text, int degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto token_at = [&](std::size_t at) { return at < text.size() ? text.substr(at, 1) : std::string("<end>"); };
  skip();
  if (pos == text.size()) throw ParseError("empty permutation (use \"()\" for the identity)", 0, "<end>");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos, token_at(pos));
    ++pos;
    skip();
    std::vector<int> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip();
      continue;
    }
    while (true) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected a point", start, token_at(start));
      std::string digits = text.substr(start, pos - start);
      long long v = digits.size() > 9 ? -1 : std::stoll(digits);
      if (v < 1 || v > degree)
        throw ParseError("point out of range 1.." + std::to_string(degree), start, digits);
      int x = static_cast<int>(v - 1);
      if (std::find(cycle.begin(), cycle.end(), x) != cycle.end())
        throw ParseError("point repeated within a cycle", start, digits);
      cycle.push_back(x);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos, token_at(pos));
    }
    skip();
    result = result * from_cycles(degree, {cycle});
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (int len : cycle_lengths()) transpositions += static_cast<std::size_t>(len - 1);
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::pow(long long k) const {
  Permutation p(degree());
  for (const auto& c : cycles()) {
    long long len = static_cast<long long>(c.size());
    long long shift = ((k % len) + len) % len;
    for (std::size_t i = 0; i < c.size(); ++i)
      p.images_[static_cast<std::size_t>(c[i])] = c[static_cast<std::size_t>((static_cast<long long>(i) + shift) % len)];
  }
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      c.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

BigInt Permutation::order() const {
  BigInt o = 1;
  for (int len : cycle_lengths()) o = boost::multiprecision::lcm(o, BigInt(len));
  return o;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(i)] = q(p(i));
  return Permutation(std::move(img));
}

Permutation product(const std::vector<Permutation>& seq, int degree) {
  Permutation acc(degree);
  for (const auto& p : seq) acc = acc * p;
  return acc;
}

Partition cycle_type(const Permutation& p) {
  std::vector<Count> parts;
  for (int len : p.cycle_lengths()) parts.push_back(len);
  return Partition(parts);
}

GeneratorSet::GeneratorSet(int degree, std::vector<Permutation> gens) : degree(degree), gens(std::move(gens)) {
  if (degree <= 0) throw DomainError("generator set needs a positive degree");
  if (this->gens.empty()) throw DomainError("generator set is empty");
  for (const auto& g : this->gens)
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
  std::vector<int> parent;
};

std::vector<std::vector<int>> classes(UnionFind& uf, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (index[static_cast<std::size_t>(r)] < 0) {
      index[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(index[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

void require_transitive(const GeneratorSet& g) {
  if (!is_transitive(g)) throw DomainError("group is not transitive");
}

}  // namespace

std::vector<std::vector<int>> orbits(const GeneratorSet& g) {
  UnionFind uf(g.degree);
  for (const auto& p : g.gens)
    for (int x = 0; x < g.degree; ++x) uf.unite(x, p(x));
  return classes(uf, g.degree);
}

bool is_transitive(const GeneratorSet& g) { return orbits(g).size() == 1; }

std::vector<std::vector<int>> block_system(const GeneratorSet& g, int a, int b) {
  require_transitive(g);
  if (a < 0 || b < 0 || a >= g.degree || b >= g.degree) throw DomainError("block seed out of range");
  // Atkinson's closure: whenever x ~ y is forced, so is g(x) ~ g(y).
  UnionFind uf(g.degree);
  std::vector<std::pair<int, int>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& p : g.gens)
      if (uf.unite(p(x), p(y))) queue.emplace_back(p(x), p(y));
  }
  return classes(uf, g.degree);
}

std::vector<int> minimal_block(const GeneratorSet& g, int a, int b) {
  for (auto& block : block_system(g, a, b))
    if (std::find(block.begin(), block.end(), a) != block.end()) return block;
  return {};
}

bool is_primitive(const GeneratorSet& g) {
  require_transitive(g);
  for (int b = 1; b < g.degree; ++b)
    if (block_system(g, 0, b).size() != 1) return false;
  return true;
}

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Symmetric: return "SYMMETRIC";
    case GroupKind::Alternating: return "ALTERNATING";
    case GroupKind::ProperSubgroup: return "PROPER_SUBGROUP";
    case GroupKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(VerdictMethod m) {
  return m == VerdictMethod::ExactOrder ? "EXACT_ORDER" : "JORDAN_CRITERION";
}

bool is_jordan_type(const Partition& type) {
  Count d = type.degree();
  // Exactly one non-trivial cycle length, possibly repeated.
  Count moved_parts = type.size() - type.multiplicity(1);
  if (moved_parts == 0) return false;
  Count len = type.max_part();
  if (type.multiplicity(len) != moved_parts) return false;
  if (moved_parts == 1) return len == 3 || (is_prime(len) && len < d - 2);
  return moved_parts == 2 && len == 2 && d >= 9;
}

namespace {

// Cycle type of w^(L/p) where L is the order of w, read off the cycle lengths:
// a cycle of length c with v_p(c) = v_p(L) breaks into c/p cycles of length p,
// every other cycle becomes fixed.
Partition prime_part_type(const std::vector<int>& lengths, Count p, int degree) {
  int vmax = 0;
  for (int c : lengths) {
    int v = 0;
    for (int x = c; x % p == 0; x /= static_cast<int>(p)) ++v;
    vmax = std::max(vmax, v);
  }
  Count cycles = 0;
  for (int c : lengths) {
    int v = 0;
    for (int x = c; x % p == 0; x /= static_cast<int>(p)) ++v;
    if (v == vmax && vmax > 0) cycles += c / p;
  }
  return Partition::from_runs({{p, cycles}, {1, degree - p * cycles}});
}

Permutation pow_big(const Permutation& w, const BigInt& e) {
  std::vector<int> img(static_cast<std::size_t>(w.degree()));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : w.cycles()) {
    auto shift = static_cast<std::size_t>(static_cast<long long>(e % c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) img[static_cast<std::size_t>(c[i])] = c[(i + shift) % c.size()];
  }
  return Permutation(std::move(img));
}

}  // namespace

std::optional<JordanWitness> find_jordan_witness(const GeneratorSet& g, int depth) {
  const int r = static_cast<int>(g.gens.size());
  std::vector<int> word;
  for (int len = 1; len <= depth; ++len) {
    word.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      Permutation w(g.degree);
      for (int idx : word) w = w * g.gens[static_cast<std::size_t>(idx)];
      auto lengths = w.cycle_lengths();
      BigInt order = w.order();
      for (Count p = 2; p <= g.degree; ++p) {
        if (!is_prime(p) || order % p != 0) continue;
        if (!is_jordan_type(prime_part_type(lengths, p, g.degree))) continue;
        BigInt e = order / p;
        std::string name;
        for (std::size_t k = 0; k < word.size(); ++k) name += (k ? "*x" : "x") + std::to_string(word[k] + 1);
        if (e != 1) name = (word.size() > 1 ? "(" + name + ")" : name) + "^" + e.str();
        return JordanWitness{pow_big(w, e), name};
      }
      // Next word in lexicographic order.
      int k = len - 1;
      while (k >= 0 && word[static_cast<std::size_t>(k)] == r - 1) word[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++word[static_cast<std::size_t>(k)];
    }
  }
  return std::nullopt;
}

GroupVerdict classify_alternating(const GeneratorSet& g, const Caps& caps, Route route) {
  require_transitive(g);
  if (route == Route::Auto) route = g.degree <= caps.chain_degree ? Route::ExactOrder : Route::Jordan;
  const bool all_even = std::all_of(g.gens.begin(), g.gens.end(), [](const Permutation& p) { return p.is_even(); });
  GroupVerdict v;
  if (route == Route::ExactOrder) {
    BigInt order = group_order(g, caps);
    BigInt full = factorial(g.degree);
    v.method = VerdictMethod::ExactOrder;
    v.order = order;
    if (order == full)
      v.kind = GroupKind::Symmetric;
    else if (g.degree > 2 && order * 2 == full)
      v.kind = GroupKind::Alternating;
    else
      v.kind = GroupKind::ProperSubgroup;
    return v;
  }
  if (g.degree >= 3 && !is_primitive(g)) {
    // A_d is primitive for d >= 3, so an imprimitive group cannot contain it.
    v.kind = GroupKind::ProperSubgroup;
    v.witness_word = "imprimitive";
    return v;
  }
  if (auto w = find_jordan_witness(g, caps.jordan_depth)) {
    v.kind = all_even ? GroupKind::Alternating : GroupKind::Symmetric;
    v.method = VerdictMethod::JordanCriterion;
    v.witness = w->element;
    v.witness_word = w->word;
    v.order = all_even ? factorial(g.degree) / 2 : factorial(g.degree);
  }
  return v;
}

}  // namespace ramcover
