#pragma once

#include <cstdint>
#include <vector>

#include "ramcover/numeric.hpp"
#include "ramcover/perm.hpp"

namespace ramcover::detail {

// Stabilizer chain built by randomized Schreier-Sims followed by deterministic
// completion over Schreier generators. Once the order reaches `order_bound`
// (a known upper bound for the group) the chain is complete and construction
// stops early.
class StabChain {
 public:
  StabChain(const GeneratorSet& g, const BigInt& order_bound);

  BigInt order() const;
  bool contains(const Permutation& p) const;
  const std::vector<int>& base() const { return base_; }

 private:
  struct Level {
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> slot;              // point -> index into orbit / trans, -1 if absent
    std::vector<Permutation> trans;     // base point -> orbit[k]
    std::vector<Permutation> trans_inv;
  };

  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  // Adds a non-trivial residue found at `stop` (fixing base points < stop)
  // to levels from..stop, extending the base if needed.
  void add_residue(const Permutation& r, std::size_t from, std::size_t stop);
  void random_phase(const std::vector<Permutation>& gens);
  void deterministic_phase();
  bool complete() const { return order() == bound_; }

  int n_;
  BigInt bound_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

}  // namespace ramcover::detail
