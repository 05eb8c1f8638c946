#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramcover/numeric.hpp"
#include "ramcover/perm.hpp"
#include "ramcover/ramdata.hpp"

namespace ramcover {

// Ramification of Y_2 -> X_2 over a branch point: the number of even parts.
Count r_pi2_count(const Partition& e);

// R_{h_1^t}: ramification of Y_t -> Y_1 above the fibre of a branch point,
// via the closed form summing over ordered t-tuples of orbits
//   prod(rhat_i) / lcm(r_i) * (lcm(r_i)/r_1 - 1),
// rhat_i = r_i - #{j < i : theta_j = theta_i}. For t = 2 this is
// sum over ordered pairs of orbits of r_1 - gcd(r_1, r_2). Requires t >= 1.
Count r_h1t(const Partition& e, int t);

// Brute-force counterpart from orbit counts of a permutation:
// (d-1)!/(d-t)! * #cycles(p) - #orbits of <p> on t-tuples.
Count r_h1t_bruteforce(const Permutation& p, int t, const Caps& caps = default_caps());
// R_{h_t} - t! R_{f_t} from the induced actions of p.
Count r_pit_bruteforce(const Permutation& p, int t, const Caps& caps = default_caps());

// -#even + r_h1t(e, 2).
Count mu_r(const Partition& e);

struct GX2Result {
  Rational value;
  bool integral = true;
};
// 4 (g_X2 - g_X1) = 2(l-3)(g_Y1 - 1) + sum over branches of mu_r, with g_X1 = g_Y1.
GX2Result g_X2_formula(const RamificationData& d, Count g_Y1);

// Default E0 = 1/50: the largest need over every cycle type of degree 10..12
// at t = 3 is 8/405 (type [3^4]), rounded up. Sample-calibrated, not a
// constant from the literature.
Rational default_E0();
// C(t,2) * sum over (t-1)-tuples of orbits with r_1 even and v2(r_1) > v2(r_j)
// of prod(rhat)/lcm, plus E0 t^4 (l-2)!/(l-t)!. For t = 2 the exact count of
// even parts is returned. Requires t >= 2 and l > t^2.
Rational r_pit_bound(const Partition& e, int t, const Rational& E0);
// The main term alone (the sum above, before the error term).
Rational r_pit_main_term(const Partition& e, int t);

struct T1BoundResult {
  Rational lhs;   // sum over O_h of prod(rhat)/lcm, over (t-1)-tuples
  Count rhs = 0;  // r_h1t(e, t-1)
  bool holds = false;
};
// Requires 3 <= t <= l/2.
T1BoundResult t1_bound_check(const Partition& e, int t);

struct PointClass {
  enum class Kind { Finite, Infinity, Unclassifiable };
  Kind kind = Kind::Unclassifiable;
  int m = 0;          // 1..6 when finite
  Count epsilon = 0;  // 2(alpha+1)(m+1)m, or 84(alpha+1) for infinity
  Count alpha = 0;
  std::string to_string() const;  // "1".."6", "inf", "unclassifiable"
};
PointClass classify_point(const Partition& e, Count alpha);

struct CoverClass {
  // m-values above 1, ascending, infinity last and printed "inf".
  std::vector<std::string> M;
  std::string case_label;  // I1 I2 F1 F2 F3 F4 F5 NONE
  std::vector<PointClass> points;
};
// Throws DomainError if some branch is unclassifiable.
CoverClass classify_cover(const RamificationData& d, Count alpha);

struct FilterTrigger {
  int condition = 0;  // 1, 2 or 3
  Count p = 0;        // prime for conditions 1 and 2; 0 for condition 3
  // Indices into d.branches(), -1 for an unramified point.
  int p1 = -1, p2 = -1, p3 = -1;
};
// All (condition, prime) pairs that fire for some ordered choice of three
// distinct points, with the first choice that fires as the example.
std::vector<FilterTrigger> decomposability_filter(const RamificationData& d);

struct GaloisClosureReport {
  std::vector<Count> lcms;  // ascending
  Rational chi;             // sum of (1 - 1/e)
  enum class Geometry { Spherical, Euclidean, Hyperbolic } geometry = Geometry::Spherical;
  bool solvable = false;    // lcm multiset is {2,2,2,2}, {3,3,3}, {2,4,4} or {2,3,6}
  // Spherical -> 0, Euclidean -> 1 without an order; hyperbolic needs the
  // order of the Galois group, 2g - 2 = N(chi - 2).
  std::optional<GenusResult> genus;
};
GaloisClosureReport galois_closure_genus(const RamificationData& d,
                                         std::optional<BigInt> group_order = std::nullopt);
std::string to_string(GaloisClosureReport::Geometry g);

struct CastelnuovoResult {
  Rational bound;
  std::optional<bool> holds;  // set when g_Y2 was supplied: g_Y2 < bound
};
// Throws DomainError unless 2 <= t <= l/2 and gap < (alpha/l) C(l,t).
CastelnuovoResult castelnuovo_check(Count g_Y1, Count gap, int t, Count l, const Rational& alpha,
                                    std::optional<Count> g_Y2 = std::nullopt);

// Closed forms for m in {1,2,3,4,6}; DomainError otherwise.
Rational s_h_estimate(const Partition& e, int m);
// (l/m) sum (r + m - 2 gcd(r,m)), the form the closed forms evaluate.
Rational s_h_general(const Partition& e, int m);

struct MonotonicityReport {
  GenusResult g_X1;
  GX2Result g_X2;
  int jordan_branch = -1;     // index of the branch whose power is Jordan-forcing
  Count jordan_prime = 0;     // the prime p with x^(ord/p) of Jordan type
  bool nonexistent = false;   // g_X2 < g_X1
};
// Requires a Jordan-forcing branch (some power of its cycle type is a p-cycle,
// 3-cycle or double transposition, so a primitive realization contains A_l).
MonotonicityReport refute_by_monotonicity(const RamificationData& d);

// Cycle type of x^(ord(x)/p) for x of cycle type e.
Partition prime_power_type(const Partition& e, Count p);

}  // namespace ramcover
