#pragma once

#include <vector>

#include "ramcover/caps.hpp"
#include "ramcover/perm.hpp"
#include "ramcover/ramdata.hpp"

namespace ramcover {

// Branch cycles x_1,...,x_r with x_1 x_2 ... x_r = 1 generating a transitive
// group. Both conditions are checked on construction.
class BranchTuple {
 public:
  BranchTuple(int degree, std::vector<Permutation> cycles);

  int degree() const { return degree_; }
  const std::vector<Permutation>& cycles() const { return cycles_; }
  GeneratorSet generators() const { return GeneratorSet(degree_, cycles_); }
  // Ramification data read off the cycle types.
  RamificationData ramification() const;

 private:
  int degree_;
  std::vector<Permutation> cycles_;
};

// Orbit lengths (as (length, count) runs) of <x> on unordered pairs drawn from
// two x-orbits of lengths r1, r2 (or from one orbit when same_orbit).
std::vector<Partition::Run> pair_orbit_split(Count r1, Count r2, bool same_orbit);

// Cycle type on 2-subsets induced from cycle type e.
Partition lift_to_2sets(const Partition& e);

// Branch-wise lift, trivial branches dropped.
RamificationData lift_table_entry(const RamificationData& d);

struct BranchContribution {
  Count r_f = 0;   // ramification of X_t -> P^1 over the branch point
  Count r_h = 0;   // ramification of Y_t -> P^1
  Count r_pi = 0;  // ramification of Y_t -> X_t above it, r_h - t! r_f
};

struct QuotientGenusReport {
  int t = 0;
  Count g_Xt = 0;
  Count g_Yt = 0;
  std::vector<BranchContribution> per_branch;
};

// Genera of the quotients by a t-set stabilizer and by the pointwise
// stabilizer of t points, from the induced cycle types of the branch cycles.
// Throws DomainError if a genus comes out non-integral (a bug, not an answer).
QuotientGenusReport quotient_genera(const BranchTuple& b, int t, const Caps& caps = default_caps());

}  // namespace ramcover
