#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramcover/caps.hpp"
#include "ramcover/induced.hpp"
#include "ramcover/perm.hpp"
#include "ramcover/ramdata.hpp"

namespace ramcover {

struct BuildParams {
  std::optional<Count> a;  // I1.1-generic
  std::optional<Count> m;  // I2.N1-witness / I2.N2-witness split of l
};

// Labels with an explicit construction.
const std::vector<std::string>& appendix_labels();  // F1.9, F3.1-F3.3, F4.1-F4.6
const std::vector<std::string>& buildable_labels();  // the above plus witnesses and I1.1-generic

// Whether build_tuple accepts (label, l) (congruence and lower bound).
bool admissible(const std::string& label, Count l);
// The smallest `count` admissible degrees >= 1, and the largest <= bound.
std::vector<Count> smallest_admissible(const std::string& label, int count);
std::optional<Count> largest_admissible(const std::string& label, Count bound);

struct BuiltTuple {
  BranchTuple tuple;
  // How the printed relation was turned into a product-one sequence.
  std::string normalization;
};

// Throws DomainError for an unknown label or inadmissible l.
BuiltTuple build_tuple(const std::string& label, Count l, const BuildParams& params = {});

// Ramification data the construction is meant to realize: the matching row of
// the two-set table (or non-existence table for the witnesses).
RamificationData expected_data(const std::string& label, Count l, const BuildParams& params = {});

enum class Check { ProductOne, CycleTypesMatch, Transitive, Primitive, ContainsAlt, GenusMatch };
std::string to_string(Check c);

struct CheckResult {
  bool passed = false;
  std::string detail;
};

struct CertReport {
  std::string label;
  Count l = 0;
  std::map<Check, CheckResult> checks;
  std::optional<GroupVerdict> verdict;  // present iff TRANSITIVE passed
  std::string normalization;
  std::vector<std::string> cycles;  // the tuple in 1-indexed cycle notation

  bool all_passed() const;
};

// Runs all six checks on an arbitrary sequence of permutations; failures are
// report content, never exceptions.
CertReport certify(const std::vector<Permutation>& cycles, const RamificationData& expected,
                   const Caps& caps = default_caps());
// build_tuple + expected_data + certify.
CertReport certify_label(const std::string& label, Count l, const BuildParams& params = {},
                         const Caps& caps = default_caps());

// True iff every cycle maps each block {i, i + l/2} onto a block. DomainError for odd l.
bool imprimitivity_witness(const std::vector<Permutation>& cycles);

struct RefuteReport {
  std::vector<int> order;        // branch indices in search order (last one is determined)
  Count tuples_examined = 0;     // candidates whose last element was computed
  Count product_one = 0;         // candidates whose determined element has the right type
  Count transitive = 0;
  Count with_alt = 0;         // transitive tuples generating a group containing A_l
  bool realized_with_alt = false;
  std::map<std::string, Count> transitive_orders;  // group order -> count
  std::optional<std::vector<Permutation>> alt_example;
};

// Exhaustive product-one tuple search with the prescribed cycle types. The
// first element is fixed to a canonical representative of its class and the
// second runs over representatives of orbits of its centralizer.
RefuteReport exhaustive_refute(const RamificationData& d, int degree_cap, const Caps& caps = default_caps());

}  // namespace ramcover
