#include "ramcover/certify.hpp"

#include <algorithm>
#include <functional>

#include "ramcover/errors.hpp"
#include "ramcover/tables.hpp"

namespace ramcover {

namespace {

// Constructions are transcribed 1-indexed, exactly as displayed.
struct Builder {
  int l;
  Permutation acc;
  explicit Builder(int l) : l(l), acc(l) {}

  Builder& c(std::initializer_list<Count> pts) { return c(std::vector<Count>(pts)); }
  Builder& c(const std::vector<Count>& pts) {
    std::vector<int> img(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) img[static_cast<std::size_t>(i)] = i;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Count from = pts[k], to = pts[(k + 1) % pts.size()];
      if (from < 1 || from > l || to < 1 || to > l) throw std::logic_error("construction point out of range");
      img[static_cast<std::size_t>(from - 1)] = static_cast<int>(to - 1);
    }
    acc = acc * Permutation(std::move(img));
    return *this;
  }
  Builder& mul(const Permutation& p) {
    acc = acc * p;
    return *this;
  }
  Builder& run(Count lo, Count hi) {  // the cycle (lo, lo+1, ..., hi)
    std::vector<Count> pts;
    for (Count i = lo; i <= hi; ++i) pts.push_back(i);
    return c(pts);
  }
  Permutation done() const { return acc; }
};

// Shared pieces of the F4 constructions.
Permutation six(int l, Count k) {
  Builder b(l);
  for (Count i = 0; i < k; ++i) b.run(6 * i + 1, 6 * i + 6);
  return b.done();
}
Permutation mid(int l, Count k) {
  Builder b(l);
  for (Count i = 1; i <= k - 1; ++i) b.c({6 * i - 3, 6 * i - 1, 6 * i + 1}).c({6 * i + 2, 6 * i - 2, 6 * i + 6});
  return b.done();
}
Permutation tri(int l, Count K) {
  Builder b(l);
  for (Count i = 1; i <= K - 1; ++i) b.c({6 * i - 3, 6 * i}).c({6 * i - 2, 6 * i + 1}).c({6 * i - 1, 6 * i + 2});
  return b.done();
}

const char* kTriple = "x1 x2 = x3 with x3 an involution, used as x1 x2 x3 = 1";

BuiltTuple f1_9(int l) {
  Builder x1(l), x2(l), x3(l), x4(l);
  const Count h = l / 2;
  x1.c({1, 4}).c({3, 5});
  for (Count i = 3; i <= h - 1; ++i) x1.c({2 * i, 2 * i + 1});
  x2.c({1, 2, 3, 4});
  for (Count i = 2; i <= h - 1; ++i) x2.c({2 * i + 1, 2 * i + 2});
  for (Count i = 1; i <= h - 1; ++i) x4.c({2 * i + 1, 2 * i + 2});
  x3.c({2, 3}).c({4, 6});
  for (Count i = 2; i <= h - 2; ++i) x3.c({2 * i + 1, 2 * i + 4});
  return {BranchTuple(l, {x1.done(), x2.done(), x3.done(), x4.done()}),
          "x1 x2 = x4 x3 with x3, x4 involutions, used as x1 x2 x3 x4 = 1"};
}

BuiltTuple f3(const std::string& label, int l) {
  Builder x1(l), x2(l), x3(l);
  if (label == "F3.1") {
    const Count k = l / 4;
    x1.c({2, 1, 4, 5}).c({4 * k - 2, 4 * k - 5, 4 * k, 4 * k - 1});
    for (Count i = 1; i <= k - 2; ++i) x1.c({4 * i + 2, 4 * i - 1, 4 * i + 4, 4 * i + 5});
    x2.c({2, 3, 4});
    for (Count i = 1; i <= k - 1; ++i) x2.run(4 * i + 1, 4 * i + 4);
    x3.c({2, 1});
    for (Count i = 1; i <= k - 1; ++i) x3.c({4 * i, 4 * i + 2}).c({4 * i + 1, 4 * i - 1});
  } else if (label == "F3.2") {
    const Count k = (l - 5) / 4;
    x1.c({4, 5, 4 * k + 5, 4 * k + 4}).c({4 * k - 2, 4 * k - 1, 4 * k + 2, 4 * k + 3});
    for (Count i = 1; i <= k - 1; ++i) x1.c({4 * i - 2, 4 * i - 1, 4 * i + 4, 4 * i + 5});
    x2.c({1, 2, 3}).c({4 * k + 4, 4 * k + 5});
    for (Count i = 1; i <= k; ++i) x2.run(4 * i, 4 * i + 3);
    x3.c({1, 2}).c({5, 4 * k + 4}).c({4 * k - 1, 4 * k + 3}).c({4 * k, 4 * k + 2});
    for (Count i = 1; i <= k - 1; ++i) x3.c({4 * i - 1, 4 * i + 5}).c({4 * i, 4 * i + 2});
  } else {
    const Count k = (l - 3) / 4;
    x1.c({1, 4, 5}).c({4 * k - 2, 4 * k - 1, 4 * k + 2, 4 * k + 3});
    for (Count i = 1; i <= k - 1; ++i) x1.c({4 * i - 2, 4 * i - 1, 4 * i + 4, 4 * i + 5});
    x2.c({2, 3});
    for (Count i = 1; i <= k; ++i) x2.run(4 * i, 4 * i + 3);
    x3.c({1, 5}).c({4 * k - 1, 4 * k + 3}).c({4 * k, 4 * k + 2});
    for (Count i = 1; i <= k - 1; ++i) x3.c({4 * i - 1, 4 * i + 5}).c({4 * i, 4 * i + 2});
  }
  return {BranchTuple(l, {x1.done(), x2.done(), x3.done()}), kTriple};
}

BuiltTuple f4(const std::string& label, int l) {
  Builder x1(l), x2(l), x3(l);
  if (label == "F4.1") {
    const Count k = l / 6;
    x1.c({2, 6}).c({6 * k - 1, 6 * k - 2, 6 * k - 3}).mul(mid(l, k));
    x2.mul(six(l, k));
    x3.c({1, 2}).c({6 * k - 3, 6 * k}).mul(tri(l, k));
  } else if (label == "F4.2") {
    const Count k = (l - 2) / 6;
    x1.c({1, 6 * k + 1}).c({2, 6 * k + 2, 6}).c({6 * k - 1, 6 * k - 2, 6 * k - 3}).mul(mid(l, k));
    x2.c({6 * k + 1, 6 * k + 2}).mul(six(l, k));
    x3.c({1, 6 * k + 2}).c({2, 6 * k + 1}).c({6 * k, 6 * k - 3}).mul(tri(l, k));
  } else if (label == "F4.3") {
    const Count k = (l - 7) / 6;
    x1.c({1, 6 * k + 7, 6 * k + 5}).c({2, 6 * k + 4, 6}).c({6 * k - 3, 6 * k - 1, 6 * k + 1});
    x1.c({6 * k - 2, 6 * k + 3, 6 * k + 2}).mul(mid(l, k));
    x2.c({6 * k + 1, 6 * k + 2, 6 * k + 3}).run(6 * k + 4, 6 * k + 7).mul(six(l, k));
    x3.c({1, 6 * k + 4}).c({2, 6 * k + 5}).c({6 * k + 6, 6 * k + 7}).mul(tri(l, k + 1));
  } else if (label == "F4.4") {
    const Count k = (l - 3) / 6;
    x1.c({2, 6}).c({6 * k - 2, 6 * k + 3, 6 * k + 2}).c({6 * k - 3, 6 * k - 1, 6 * k + 1}).mul(mid(l, k));
    x2.c({6 * k + 1, 6 * k + 2, 6 * k + 3}).mul(six(l, k));
    x3.c({1, 2}).mul(tri(l, k + 1));
  } else if (label == "F4.5") {
    const Count k = (l - 4) / 6;
    x1.c({1, 6, 2}).c({3, 5, 7}).c({6 * k - 2, 6 * k + 4, 6 * k + 2});
    for (Count i = 2; i <= k; ++i) x1.c({6 * i - 4, 6 * i - 8, 6 * i}).c({6 * i - 3, 6 * i - 1, 6 * i + 1});
    x2.run(6 * k + 1, 6 * k + 4).mul(six(l, k));
    x3.c({6 * k + 3, 6 * k + 4}).mul(tri(l, k + 1));
  } else {
    const Count k = (l - 5) / 6;
    x1.c({1, 6 * k + 5}).c({2, 6 * k + 4, 6}).c({6 * k - 3, 6 * k - 1, 6 * k + 1});
    x1.c({6 * k + 2, 6 * k - 2, 6 * k + 3}).mul(mid(l, k));
    x2.c({6 * k + 1, 6 * k + 2, 6 * k + 3}).c({6 * k + 4, 6 * k + 5}).mul(six(l, k));
    x3.c({1, 6 * k + 4}).c({2, 6 * k + 5}).mul(tri(l, k + 1));
  }
  return {BranchTuple(l, {x1.done(), x2.done(), x3.done()}), kTriple};
}

Count default_m(const std::string& label, Count l) {
  if (label == "I2.N1-witness") return ((l - 4) / 2) / 2;
  return std::max<Count>(1, ((l - 2) / 2) / 2);
}

// l = 2m + 2n + 4; b c is the l-cycle (1, ..., l).
BuiltTuple i2n1(int l, Count m) {
  const Count n = (l - 4) / 2 - m;
  Builder c(l), b(l);
  for (Count i = m + 2; i <= m + n + 2; ++i) c.c({i, 3 * m + 2 * n + 6 - i});
  for (Count i = 1; i <= m + 1; ++i) c.c({i, 2 * m + n + 4 - i});
  for (Count i = m + 2; i <= m + n + 1; ++i) b.c({i, 3 * m + 2 * n + 5 - i});
  for (Count i = 1; i <= m; ++i) b.c({i, 2 * m + n + 3 - i});
  b.c({m + 1, 2 * m + 2 * n + 4, 2 * m + n + 3, m + n + 2});
  Permutation bc = b.done() * c.done();
  return {BranchTuple(l, {bc.inverse(), b.done(), c.done()}), "((b c)^-1, b, c)"};
}

// l = 2m + 2n + 2; d c b is the l-cycle (1, ..., l).
BuiltTuple i2n2(int l, Count m) {
  const Count n = (l - 2) / 2 - m;
  Builder c(l), b(l), d(l);
  if (m == 0) {
    c.c({n + 1, 2 * n + 2});
    for (Count i = 1; i <= n; ++i) c.c({i, 2 * n + 2 - i});
    for (Count i = 1; i <= n + 1; ++i) b.c({i, 2 * n + 3 - i});
    d.c({n + 1, 2 * n + 2});
  } else {
    c.c({m + n + 1, 2 * m + n + 1}).c({m, 2 * m + 2 * n + 2});
    for (Count i = 1; i <= m - 1; ++i) c.c({i, 2 * m + n + 1 - i});
    for (Count i = m + 1; i <= m + n; ++i) c.c({i, 3 * m + 2 * n + 2 - i});
    for (Count i = 1; i <= m; ++i) b.c({i, 2 * m + n + 2 - i});
    for (Count i = m + 1; i <= m + n + 1; ++i) b.c({i, 3 * m + 2 * n + 3 - i});
    d.c({l / 2, l});
  }
  Permutation dcb = d.done() * c.done() * b.done();
  return {BranchTuple(l, {d.done(), c.done(), b.done(), dcb.inverse()}), "(d, c, b, (d c b)^-1)"};
}

// x1 = (1, ..., l), x3 = (1, j), x2 = x1^-1 x3^-1 with j chosen so x2 has type [a, l-a].
BuiltTuple i11_generic(int l, Count a) {
  Permutation x1 = Builder(l).run(1, l).done();
  for (Count j = 2; j <= l; ++j) {
    Permutation x3 = Builder(l).c({1, j}).done();
    Permutation x2 = x1.inverse() * x3.inverse();
    auto lens = x2.cycle_lengths();
    std::sort(lens.begin(), lens.end());
    if (lens.size() == 2 && (lens[0] == a || lens[1] == a))
      return {BranchTuple(l, {x1, x2, x3}),
              "x1 = (1,...,l), x3 = (1," + std::to_string(j) + "), x2 = x1^-1 x3^-1"};
  }
  throw std::logic_error("no transposition splits the l-cycle as requested");
}

void require_admissible(const std::string& label, Count l) {
  const auto& known = buildable_labels();
  if (std::find(known.begin(), known.end(), label) == known.end())
    throw DomainError("unknown construction label '" + label + "'");
  if (!admissible(label, l))
    throw DomainError(label + " is not constructible at l=" + std::to_string(l));
}

Count checked_m(const std::string& label, Count l, const BuildParams& p) {
  Count m = p.m.value_or(default_m(label, l));
  Count half = label == "I2.N1-witness" ? (l - 4) / 2 : (l - 2) / 2;
  if (m < 0 || m > half) throw DomainError("m must lie in [0, " + std::to_string(half) + "] at l=" + std::to_string(l));
  return m;
}

Count checked_a(Count l, const BuildParams& p) {
  if (!p.a) throw DomainError("I1.1-generic needs the parameter a");
  if (*p.a < 1 || *p.a >= l) throw DomainError("a must lie in [1, l-1]");
  return *p.a;
}

}  // namespace

const std::vector<std::string>& appendix_labels() {
  static const std::vector<std::string> v = {"F1.9", "F3.1", "F3.2", "F3.3", "F4.1",
                                             "F4.2", "F4.3", "F4.4", "F4.5", "F4.6"};
  return v;
}

const std::vector<std::string>& buildable_labels() {
  static const std::vector<std::string> v = [] {
    auto out = appendix_labels();
    out.insert(out.end(), {"I2.N1-witness", "I2.N2-witness", "I1.1-generic"});
    return out;
  }();
  return v;
}

bool admissible(const std::string& label, Count l) {
  if (l < 1 || l > 4096) return false;
  if (label == "F1.9") return l % 2 == 0 && l >= 6;
  if (label == "F3.1") return l % 4 == 0 && l >= 8;
  if (label == "F3.2") return l % 4 == 1 && l >= 9;
  if (label == "F3.3") return l % 4 == 3 && l >= 7;
  if (label == "F4.1") return l % 6 == 0 && l >= 6;
  if (label == "F4.2") return l % 6 == 2 && l >= 8;
  if (label == "F4.3") return l % 6 == 1 && l >= 13;
  if (label == "F4.4") return l % 6 == 3 && l >= 9;
  if (label == "F4.5") return l % 6 == 4 && l >= 10;
  if (label == "F4.6") return l % 6 == 5 && l >= 11;
  if (label == "I2.N1-witness") return l % 2 == 0 && l >= 4;
  if (label == "I2.N2-witness") return l % 2 == 0 && l >= 4;
  if (label == "I1.1-generic") return l >= 3;
  return false;
}

std::vector<Count> smallest_admissible(const std::string& label, int count) {
  std::vector<Count> out;
  for (Count l = 1; static_cast<int>(out.size()) < count && l <= 4096; ++l)
    if (admissible(label, l)) out.push_back(l);
  return out;
}

std::optional<Count> largest_admissible(const std::string& label, Count bound) {
  for (Count l = bound; l >= 1; --l)
    if (admissible(label, l)) return l;
  return std::nullopt;
}

BuiltTuple build_tuple(const std::string& label, Count l, const BuildParams& params) {
  require_admissible(label, l);
  const int d = static_cast<int>(l);
  if (label == "F1.9") return f1_9(d);
  if (label.rfind("F3.", 0) == 0) return f3(label, d);
  if (label.rfind("F4.", 0) == 0) return f4(label, d);
  if (label == "I2.N1-witness") return i2n1(d, checked_m(label, l, params));
  if (label == "I2.N2-witness") return i2n2(d, checked_m(label, l, params));
  return i11_generic(d, checked_a(l, params));
}

RamificationData expected_data(const std::string& label, Count l, const BuildParams& params) {
  require_admissible(label, l);
  std::optional<RamificationData> d;
  if (label == "I2.N1-witness")
    d = nonexistence_row("I2.N1", l);
  else if (label == "I2.N2-witness")
    d = nonexistence_row("I2.N2", l);
  else if (label == "I1.1-generic") {
    Count a = checked_a(l, params);
    d = RamificationData(l, {Partition({l}), Partition({a, l - a}), expand_star("2,1^*", l)});
  } else {
    d = two_set_row(label, l);
  }
  if (!d) throw std::logic_error("no table row for " + label + " at l=" + std::to_string(l));
  return *d;
}

std::string to_string(Check c) {
  switch (c) {
    case Check::ProductOne: return "PRODUCT_ONE";
    case Check::CycleTypesMatch: return "CYCLE_TYPES_MATCH";
    case Check::Transitive: return "TRANSITIVE";
    case Check::Primitive: return "PRIMITIVE";
    case Check::ContainsAlt: return "CONTAINS_ALT";
    case Check::GenusMatch: return "GENUS_MATCH";
  }
  return "?";
}

bool CertReport::all_passed() const {
  if (checks.size() != 6) return false;
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.passed; });
}

CertReport certify(const std::vector<Permutation>& cycles, const RamificationData& expected, const Caps& caps) {
  CertReport r;
  r.l = expected.degree();
  for (const auto& p : cycles) r.cycles.push_back(p.to_string());
  auto set = [&](Check c, bool ok, std::string detail) { r.checks[c] = CheckResult{ok, std::move(detail)}; };

  const int d = static_cast<int>(expected.degree());
  bool degrees_ok = !cycles.empty() && std::all_of(cycles.begin(), cycles.end(),
                                                   [&](const Permutation& p) { return p.degree() == d; });
  if (!degrees_ok) {
    for (Check c : {Check::ProductOne, Check::CycleTypesMatch, Check::Transitive, Check::Primitive,
                    Check::ContainsAlt, Check::GenusMatch})
      set(c, false, "empty tuple or degree differs from " + std::to_string(d));
    return r;
  }

  Permutation prod = product(cycles, d);
  bool product_one = prod.is_identity();
  set(Check::ProductOne, product_one, product_one ? "product is ()" : "product is " + prod.to_string());

  std::vector<Partition> types;
  for (const auto& p : cycles) types.push_back(cycle_type(p));
  RamificationData actual(d, types);
  set(Check::CycleTypesMatch, actual == expected,
      actual == expected ? actual.to_string() : actual.to_string() + " != " + expected.to_string());

  GeneratorSet g(d, cycles);
  bool transitive = is_transitive(g);
  set(Check::Transitive, transitive, std::to_string(orbits(g).size()) + " orbit(s)");

  if (!transitive) {
    set(Check::Primitive, false, "not transitive");
    set(Check::ContainsAlt, false, "not transitive");
  } else {
    bool prim = is_primitive(g);
    std::string detail = "no non-trivial block system";
    for (int b = 1; !prim && b < d; ++b) {
      auto blk = minimal_block(g, 0, b);
      if (static_cast<int>(blk.size()) == d) continue;
      detail = "block {";
      for (std::size_t i = 0; i < blk.size(); ++i) detail += (i ? "," : "") + std::to_string(blk[i] + 1);
      detail += "}";
      break;
    }
    set(Check::Primitive, prim, detail);
    try {
      r.verdict = classify_alternating(g, caps);
      bool alt = r.verdict->kind == GroupKind::Symmetric || r.verdict->kind == GroupKind::Alternating;
      std::string detail = to_string(r.verdict->kind);
      if (r.verdict->method) detail += " by " + to_string(*r.verdict->method);
      if (!r.verdict->witness_word.empty()) detail += ", witness " + r.verdict->witness_word;
      set(Check::ContainsAlt, alt, detail);
    } catch (const std::exception& e) {
      set(Check::ContainsAlt, false, e.what());
    }
  }

  GenusResult want = rh_genus(expected, 0);
  if (!product_one || !transitive) {
    set(Check::GenusMatch, false, "not a branch tuple");
  } else if (!want.ok()) {
    set(Check::GenusMatch, false, "expected data has no genus: " + to_string(want.status));
  } else {
    try {
      auto q = quotient_genera(BranchTuple(d, cycles), 1, caps);
      bool ok = q.g_Xt == *want.genus;
      set(Check::GenusMatch, ok, "g=" + std::to_string(q.g_Xt) + ", expected " + std::to_string(*want.genus));
    } catch (const std::exception& e) {
      set(Check::GenusMatch, false, e.what());
    }
  }
  return r;
}

CertReport certify_label(const std::string& label, Count l, const BuildParams& params, const Caps& caps) {
  BuiltTuple built = build_tuple(label, l, params);
  CertReport r = certify(built.tuple.cycles(), expected_data(label, l, params), caps);
  r.label = label;
  r.normalization = built.normalization;
  return r;
}

bool imprimitivity_witness(const std::vector<Permutation>& cycles) {
  if (cycles.empty()) throw DomainError("empty tuple");
  const int d = cycles.front().degree();
  if (d % 2) throw DomainError("the pairing i <-> i + l/2 needs even l, got " + std::to_string(d));
  const int h = d / 2;
  for (const auto& p : cycles) {
    if (p.degree() != d) throw DomainError("mixed degrees");
    for (int i = 0; i < h; ++i) {
      int x = p(i), y = p(i + h);
      if (x - y != h && y - x != h) return false;
    }
  }
  return true;
}

}  // namespace ramcover
