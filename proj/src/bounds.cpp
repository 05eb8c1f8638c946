#include "ramcover/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ramcover/errors.hpp"

namespace ramcover {

namespace {

std::vector<Count> orbit_lengths(const Partition& e) { return e.parts(); }

// Visits every ordered k-tuple of orbit indices accepted by `keep` (which sees
// the tuple built so far, checked at completion) and passes the orbit lengths
// and rhat corrections to `visit`.
void for_each_orbit_tuple(const std::vector<Count>& r, int k,
                          const std::function<bool(const std::vector<std::size_t>&)>& keep,
                          const std::function<void(const std::vector<Count>&, const std::vector<Count>&)>& visit) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  std::vector<Count> len(static_cast<std::size_t>(k)), hat(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      if (!keep(idx)) return;
      for (int i = 0; i < k; ++i) {
        Count repeats = 0;
        for (int j = 0; j < i; ++j)
          if (idx[static_cast<std::size_t>(j)] == idx[static_cast<std::size_t>(i)]) ++repeats;
        len[static_cast<std::size_t>(i)] = r[idx[static_cast<std::size_t>(i)]];
        hat[static_cast<std::size_t>(i)] = len[static_cast<std::size_t>(i)] - repeats;
      }
      visit(len, hat);
      return;
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

Count lcm_of(const std::vector<Count>& v) {
  Count l = 1;
  for (Count x : v) l = lcm(l, x);
  return l;
}

Rational prod_hat_over_lcm(const std::vector<Count>& len, const std::vector<Count>& hat) {
  Rational p = 1;
  for (Count h : hat) p *= h;
  return p / lcm_of(len);
}

bool v2_dominant(const std::vector<Count>& r, const std::vector<std::size_t>& idx) {
  Count r1 = r[idx[0]];
  if (r1 % 2 != 0) return false;
  for (std::size_t j = 1; j < idx.size(); ++j)
    if (v2(r1) <= v2(r[idx[j]])) return false;
  return true;
}

}  // namespace

Count r_pi2_count(const Partition& e) {
  Count n = 0;
  for (auto [value, mult] : e.runs())
    if (value % 2 == 0) n += mult;
  return n;
}

Count r_h1t(const Partition& e, int t) {
  if (t < 1) throw DomainError("r_h1t needs t >= 1");
  if (t == 1) return 0;
  if (t == 2) {
    Count s = 0;
    for (auto [r1, c1] : e.runs())
      for (auto [r2, c2] : e.runs()) s += c1 * c2 * (r1 - gcd(r1, r2));
    return s;
  }
  auto r = orbit_lengths(e);
  Rational sum = 0;
  for_each_orbit_tuple(
      r, t, [](const auto&) { return true; },
      [&](const std::vector<Count>& len, const std::vector<Count>& hat) {
        Count L = lcm_of(len);
        sum += prod_hat_over_lcm(len, hat) * Rational(L - len[0], len[0]);
      });
  if (!is_integer(sum)) throw std::logic_error("r_h1t closed form produced a fraction");
  return static_cast<Count>(boost::multiprecision::numerator(sum));
}

Count r_h1t_bruteforce(const Permutation& p, int t, const Caps& caps) {
  const int d = p.degree();
  Count tuples = static_cast<Count>(induced_on_ttuples(p, t, caps).cycle_lengths().size());
  Count points = static_cast<Count>(p.cycle_lengths().size());
  return falling(d - 1, t - 1) * points - tuples;
}

Count r_pit_bruteforce(const Permutation& p, int t, const Caps& caps) {
  const int d = p.degree();
  Count rf = binomial(d, t) - static_cast<Count>(induced_on_tsets(p, t, caps).cycle_lengths().size());
  Count rh = falling(d, t) - static_cast<Count>(induced_on_ttuples(p, t, caps).cycle_lengths().size());
  return rh - falling(t, t) * rf;
}

Count mu_r(const Partition& e) { return -r_pi2_count(e) + r_h1t(e, 2); }

GX2Result g_X2_formula(const RamificationData& d, Count g_Y1) {
  const Count l = d.degree();
  if (l < 5) throw DomainError("g_X2 formula needs degree >= 5");
  Count sum = 2 * (l - 3) * (g_Y1 - 1);
  for (const auto& b : d.branches()) sum += mu_r(b);
  GX2Result r;
  r.value = Rational(g_Y1) + Rational(sum, 4);
  r.integral = is_integer(r.value);
  return r;
}

Rational default_E0() { return Rational(1, 50); }

Rational r_pit_main_term(const Partition& e, int t) {
  if (t < 2) throw DomainError("r_pit_bound needs t >= 2");
  auto r = orbit_lengths(e);
  Rational sum = 0;
  for_each_orbit_tuple(
      r, t - 1, [&](const std::vector<std::size_t>& idx) { return v2_dominant(r, idx); },
      [&](const std::vector<Count>& len, const std::vector<Count>& hat) { sum += prod_hat_over_lcm(len, hat); });
  return Rational(binomial(t, 2)) * sum;
}

Rational r_pit_bound(const Partition& e, int t, const Rational& E0) {
  const Count l = e.degree();
  if (t < 2) throw DomainError("r_pit_bound needs t >= 2");
  if (l <= static_cast<Count>(t) * t) throw DomainError("r_pit_bound needs l > t^2");
  if (t == 2) return Rational(r_pi2_count(e));
  Rational err = E0 * Rational(static_cast<Count>(t) * t * t * t) * Rational(falling(l - 2, t - 2));
  return r_pit_main_term(e, t) + err;
}

T1BoundResult t1_bound_check(const Partition& e, int t) {
  const Count l = e.degree();
  if (t < 3 || 2 * static_cast<Count>(t) > l) throw DomainError("t1_bound_check needs 3 <= t <= l/2");
  auto r = orbit_lengths(e);
  T1BoundResult res;
  for_each_orbit_tuple(
      r, t - 1, [&](const std::vector<std::size_t>& idx) { return v2_dominant(r, idx); },
      [&](const std::vector<Count>& len, const std::vector<Count>& hat) { res.lhs += prod_hat_over_lcm(len, hat); });
  res.rhs = r_h1t(e, t - 1);
  res.holds = res.lhs <= res.rhs;
  return res;
}

std::string PointClass::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(m);
    case Kind::Infinity: return "inf";
    case Kind::Unclassifiable: return "unclassifiable";
  }
  return "?";
}

PointClass classify_point(const Partition& e, Count alpha) {
  if (alpha <= 0) throw DomainError("alpha must be positive");
  const Count l = e.degree();
  PointClass pc;
  pc.alpha = alpha;
  for (int k = 1; k <= 6; ++k) {
    // at least l/k - 2(alpha+1)(k+1) parts equal to k, compared exactly
    if (k * e.multiplicity(k) >= l - 2 * k * (alpha + 1) * (k + 1)) {
      pc.kind = PointClass::Kind::Finite;
      pc.m = k;
      pc.epsilon = 2 * (alpha + 1) * (k + 1) * k;
      return pc;
    }
  }
  bool sparse = true;
  for (int k = 1; k <= 6; ++k) sparse = sparse && e.multiplicity(k) <= 4 * (alpha + 1);
  if (sparse) {
    pc.kind = PointClass::Kind::Infinity;
    pc.epsilon = 84 * (alpha + 1);
  }
  return pc;
}

CoverClass classify_cover(const RamificationData& d, Count alpha) {
  CoverClass cc;
  std::vector<int> finite;
  int infinite = 0;
  for (const auto& b : d.branches()) {
    PointClass pc = classify_point(b, alpha);
    if (pc.kind == PointClass::Kind::Unclassifiable)
      throw DomainError("branch " + b.to_string() + " fits neither alternative at alpha=" + std::to_string(alpha));
    cc.points.push_back(pc);
    if (pc.kind == PointClass::Kind::Infinity)
      ++infinite;
    else if (pc.m > 1)
      finite.push_back(pc.m);
  }
  std::sort(finite.begin(), finite.end());
  for (int m : finite) cc.M.push_back(std::to_string(m));
  for (int i = 0; i < infinite; ++i) cc.M.push_back("inf");
  static const std::map<std::vector<std::string>, std::string> cases = {
      {{"inf", "inf"}, "I1"}, {{"2", "2", "inf"}, "I2"}, {{"2", "2", "2", "2"}, "F1"}, {{"3", "3", "3"}, "F2"},
      {{"2", "4", "4"}, "F3"}, {{"2", "3", "6"}, "F4"},   {{}, "F5"},
  };
  auto it = cases.find(cc.M);
  cc.case_label = it == cases.end() ? "NONE" : it->second;
  return cc;
}

std::vector<FilterTrigger> decomposability_filter(const RamificationData& d) {
  const auto& br = d.branches();
  const Partition unramified = Partition::trivial(d.degree());
  const int n = static_cast<int>(br.size());
  // Real branches 0..n-1, then two distinct unramified points.
  auto at = [&](int i) -> const Partition& { return i < n ? br[static_cast<std::size_t>(i)] : unramified; };
  auto index = [&](int i) { return i < n ? i : -1; };
  std::map<std::pair<int, Count>, FilterTrigger> found;
  auto record = [&](int cond, Count p, int i, int j, int k) {
    found.try_emplace({cond, p}, FilterTrigger{cond, p, index(i), index(j), index(k)});
  };
  const int m = n + 2;
  for (int i = 0; i < n; ++i) {
    const Partition& P1 = at(i);
    Count g = 0;
    for (auto [value, mult] : P1.runs()) g = gcd(g, value);
    std::vector<Count> primes;
    for (Count p = 2; p <= g; ++p)
      if (g % p == 0 && is_prime(p)) primes.push_back(p);
    const bool all_even = P1.all_divisible_by(2);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const Partition& P2 = at(j);
      for (Count p : primes)
        if (P2.all_divisible_by(p)) record(1, p, i, j, -1);
      for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        const Partition& P3 = at(k);
        if (!primes.empty() && P2.count_not_divisible_by(2) + P3.count_not_divisible_by(2) == 2)
          for (Count p : primes) record(2, p, i, j, k);
        if (all_even && P2.count_not_divisible_by(3) + P3.count_not_divisible_by(3) == 2) record(3, 0, i, j, k);
      }
    }
  }
  std::vector<FilterTrigger> out;
  for (auto& [key, t] : found) out.push_back(t);
  return out;
}

std::string to_string(GaloisClosureReport::Geometry g) {
  switch (g) {
    case GaloisClosureReport::Geometry::Spherical: return "SPHERICAL";
    case GaloisClosureReport::Geometry::Euclidean: return "EUCLIDEAN";
    case GaloisClosureReport::Geometry::Hyperbolic: return "HYPERBOLIC";
  }
  return "?";
}

GaloisClosureReport galois_closure_genus(const RamificationData& d, std::optional<BigInt> group_order) {
  GaloisClosureReport rep;
  for (const auto& b : d.branches()) rep.lcms.push_back(b.lcm_of_parts());
  std::sort(rep.lcms.begin(), rep.lcms.end());
  for (Count e : rep.lcms) rep.chi += Rational(e - 1, e);
  if (rep.chi < 2)
    rep.geometry = GaloisClosureReport::Geometry::Spherical;
  else if (rep.chi == 2)
    rep.geometry = GaloisClosureReport::Geometry::Euclidean;
  else
    rep.geometry = GaloisClosureReport::Geometry::Hyperbolic;
  static const std::vector<std::vector<Count>> euclidean = {{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
  rep.solvable = std::find(euclidean.begin(), euclidean.end(), rep.lcms) != euclidean.end();
  if (group_order) {
    GenusResult g;
    Rational total = Rational(*group_order) * rep.chi;  // sum of ramification over all points
    g.value = 1 + Rational(*group_order) * (rep.chi - 2) / 2;
    if (is_integer(total)) g.rh_sum = static_cast<Count>(boost::multiprecision::numerator(total));
    if (!is_integer(g.value) || !is_integer(total))
      g.status = GenusResult::Status::NotIntegral;
    else if (g.value < 0)
      g.status = GenusResult::Status::Negative;
    else
      g.genus = static_cast<Count>(boost::multiprecision::numerator(g.value));
    rep.genus = g;
  } else if (rep.geometry != GaloisClosureReport::Geometry::Hyperbolic) {
    GenusResult g;
    Count genus = rep.geometry == GaloisClosureReport::Geometry::Spherical ? 0 : 1;
    g.value = genus;
    g.genus = genus;
    rep.genus = g;
  }
  return rep;
}

CastelnuovoResult castelnuovo_check(Count g_Y1, Count gap, int t, Count l, const Rational& alpha,
                                    std::optional<Count> g_Y2) {
  if (t < 2 || 2 * static_cast<Count>(t) > l) throw DomainError("castelnuovo_check needs 2 <= t <= l/2");
  if (alpha <= 0) throw DomainError("alpha must be positive");
  if (!(Rational(gap) < alpha * Rational(binomial(l, t)) / l))
    throw DomainError("hypothesis g_Xt - g_Xt-1 < (alpha/l) C(l,t) fails");
  CastelnuovoResult res;
  if (t == 2) {
    res.bound = Rational(g_Y1 * (l + 1)) + (alpha + 1) * (l - 1);
  } else {
    Rational eps(t, l - t + 1);
    res.bound = (Rational((t - 1) * g_Y1 + binomial(t, 2)) + alpha) * l / (1 - eps);
  }
  if (g_Y2) res.holds = Rational(*g_Y2) < res.bound;
  return res;
}

Rational s_h_general(const Partition& e, int m) {
  if (m <= 0) throw DomainError("m must be positive");
  Count s = 0;
  for (auto [r, c] : e.runs()) s += c * (r + m - 2 * gcd(r, m));
  return Rational(e.degree(), m) * s;
}

Rational s_h_estimate(const Partition& e, int m) {
  const Count l = e.degree();
  const Count size = e.size();
  auto count_if = [&](auto pred) {
    Count n = 0;
    for (auto [r, c] : e.runs())
      if (pred(r)) n += c;
    return n;
  };
  Rational inner;
  switch (m) {
    case 1:
      return Rational(l * e.rh_contribution());
    case 2:
      inner = Rational(l, 2) - size + count_if([](Count r) { return r % 2 != 0; });
      break;
    case 3:
      inner = Rational(l, 3) - size + Rational(4, 3) * count_if([](Count r) { return r % 3 != 0; });
      break;
    case 4:
      inner = Rational(l, 4) - size + count_if([](Count r) { return r % 4 == 2; }) +
              Rational(3, 2) * count_if([](Count r) { return r % 2 != 0; });
      break;
    case 6:
      inner = Rational(l, 6) - size + count_if([](Count r) { return r % 6 == 3; }) +
              Rational(4, 3) * count_if([](Count r) { return r % 6 == 2 || r % 6 == 4; }) +
              Rational(5, 3) * count_if([](Count r) { return r % 6 == 1 || r % 6 == 5; });
      break;
    default:
      throw DomainError("s_h_estimate supports m in {1,2,3,4,6}, got " + std::to_string(m));
  }
  return Rational(l) * inner;
}

Partition prime_power_type(const Partition& e, Count p) {
  int vmax = 0;
  for (auto [r, c] : e.runs()) {
    int v = 0;
    for (Count x = r; x % p == 0; x /= p) ++v;
    vmax = std::max(vmax, v);
  }
  Count cycles = 0;
  if (vmax > 0)
    for (auto [r, c] : e.runs()) {
      int v = 0;
      for (Count x = r; x % p == 0; x /= p) ++v;
      if (v == vmax) cycles += c * (r / p);
    }
  return Partition::from_runs({{p, cycles}, {1, e.degree() - p * cycles}});
}

MonotonicityReport refute_by_monotonicity(const RamificationData& d) {
  MonotonicityReport rep;
  const auto& br = d.branches();
  for (std::size_t i = 0; i < br.size() && rep.jordan_branch < 0; ++i) {
    Count L = br[i].lcm_of_parts();
    for (Count p = 2; p <= L; ++p) {
      if (L % p != 0 || !is_prime(p)) continue;
      if (is_jordan_type(prime_power_type(br[i], p))) {
        rep.jordan_branch = static_cast<int>(i);
        rep.jordan_prime = p;
        break;
      }
    }
  }
  if (rep.jordan_branch < 0) throw DomainError("no Jordan-forcing branch; the monotonicity route does not apply");
  rep.g_X1 = rh_genus(d, 0);
  if (!rep.g_X1.ok()) throw DomainError("ramification data has no valid genus: " + to_string(rep.g_X1.status));
  rep.g_X2 = g_X2_formula(d, *rep.g_X1.genus);
  rep.nonexistent = rep.g_X2.value < Rational(*rep.g_X1.genus);
  return rep;
}

}  // namespace ramcover
