#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ramcover/caps.hpp"
#include "ramcover/numeric.hpp"
#include "ramcover/ramdata.hpp"

namespace ramcover {

// A bijection of {0,...,d-1}. Printed 1-indexed in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);                 // identity
  explicit Permutation(std::vector<int> images);    // throws DomainError unless a bijection
  // Disjoint 0-indexed cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // 1-indexed cycle notation such as "(1,2)(3,4,5)"; "()" is the identity.
  // Cycles need not be disjoint: they are multiplied left to right.
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  // Lengths of all cycles including fixed points, in order of smallest point.
  std::vector<int> cycle_lengths() const;
  // Non-trivial cycles, each rotated to start at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  BigInt order() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Left-to-right product: i -> q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
// Product of a sequence, left to right.
Permutation product(const std::vector<Permutation>& seq, int degree);

Partition cycle_type(const Permutation& p);

struct GeneratorSet {
  GeneratorSet() = default;
  // Throws DomainError on mixed degrees or an empty list.
  GeneratorSet(int degree, std::vector<Permutation> gens);
  int degree = 0;
  std::vector<Permutation> gens;
};

std::vector<std::vector<int>> orbits(const GeneratorSet& g);
bool is_transitive(const GeneratorSet& g);
// Smallest block containing a and b (sorted). Requires transitivity.
std::vector<int> minimal_block(const GeneratorSet& g, int a, int b);
// The block system generated by {a,b}; blocks sorted by smallest point.
std::vector<std::vector<int>> block_system(const GeneratorSet& g, int a, int b);
bool is_primitive(const GeneratorSet& g);

// Exact order via a Schreier-Sims stabilizer chain. Throws CapExceeded when the
// degree exceeds caps.chain_degree.
BigInt group_order(const GeneratorSet& g, const Caps& caps = default_caps());
// Membership test against the group generated by g (same cap).
bool contains(const GeneratorSet& g, const Permutation& p, const Caps& caps = default_caps());

enum class GroupKind { Symmetric, Alternating, ProperSubgroup, Unknown };
enum class VerdictMethod { ExactOrder, JordanCriterion };
enum class Route { Auto, ExactOrder, Jordan };

std::string to_string(GroupKind k);
std::string to_string(VerdictMethod m);

struct GroupVerdict {
  GroupKind kind = GroupKind::Unknown;
  // Empty when kind == Unknown, and for an imprimitive group settled without
  // either route (witness_word is then "imprimitive").
  std::optional<VerdictMethod> method;
  // Present iff method == JordanCriterion.
  std::optional<Permutation> witness;
  // Word in the generators (1-indexed "x2^2", "x1*x3") producing the witness.
  std::string witness_word;
  std::optional<BigInt> order;
};

// Decides whether the transitive group generated by g contains A_d.
// The exact-order route is used when the degree is within the chain cap,
// the Jordan route otherwise; `route` forces one of them.
GroupVerdict classify_alternating(const GeneratorSet& g, const Caps& caps = default_caps(),
                                  Route route = Route::Auto);

// Searches words of length <= depth in the generators for an element having
// a power whose cycle type is a p-cycle (p prime, p < d-2), a 3-cycle, or a
// double transposition (d >= 9).
struct JordanWitness {
  Permutation element;
  std::string word;
};
std::optional<JordanWitness> find_jordan_witness(const GeneratorSet& g, int depth);
bool is_jordan_type(const Partition& type);

// Induced action on t-subsets in colex order / on ordered t-tuples of distinct
// points in lexicographic order.
Permutation induced_on_tsets(const Permutation& p, int t, const Caps& caps = default_caps());
Permutation induced_on_ttuples(const Permutation& p, int t, const Caps& caps = default_caps());
// Colex rank of a sorted t-subset; the inverse of the enumeration order above.
Count tset_rank(const std::vector<int>& sorted_subset);

Count orbit_count_on_tsets(const GeneratorSet& g, int t, const Caps& caps = default_caps());
Count orbit_count_on_ttuples(const GeneratorSet& g, int t, const Caps& caps = default_caps());

}  // namespace ramcover
