#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramcover/numeric.hpp"

namespace ramcover {

// A partition of `degree` into positive parts, stored run-length encoded as
// (part, multiplicity) with parts strictly decreasing. Lifted table entries
// have degree ~ l^2/2 with only a handful of distinct parts, so the encoding
// keeps everything linear in the number of distinct parts.
class Partition {
 public:
  using Run = std::pair<Count, Count>;  // (part, multiplicity)

  Partition() = default;
  // Any order of parts is accepted; zero or negative parts throw DomainError.
  explicit Partition(const std::vector<Count>& parts);
  // Runs may repeat values and come in any order; zero multiplicities vanish.
  static Partition from_runs(std::vector<Run> runs);
  // A single cycle type [1^degree].
  static Partition trivial(Count degree);

  Count degree() const { return degree_; }
  // Number of parts, i.e. number of orbits |E|.
  Count size() const { return size_; }
  const std::vector<Run>& runs() const { return runs_; }
  // Fully expanded descending list; guarded against absurd sizes.
  std::vector<Count> parts() const;
  Count multiplicity(Count part) const;
  bool is_trivial() const { return size_ == degree_; }
  Count max_part() const { return runs_.empty() ? 0 : runs_.front().first; }
  // Ramification contribution degree - |E|.
  Count rh_contribution() const { return degree_ - size_; }
  Count lcm_of_parts() const;
  bool all_divisible_by(Count p) const;
  // Number of parts not divisible by p (counted with multiplicity).
  Count count_not_divisible_by(Count p) const;

  // Compact form, e.g. "13" or "30,10^4,5,3" (descending, exponent when > 1).
  std::string to_compact() const;
  // Bracketed form for reports, e.g. "[30,10^4,5,3]".
  std::string to_string() const { return "[" + to_compact() + "]"; }

  // Total order: by degree, then lexicographically on the descending
  // expanded sequence (without expanding).
  std::strong_ordering operator<=>(const Partition& other) const;
  bool operator==(const Partition& other) const = default;

 private:
  void canonicalize();
  std::vector<Run> runs_;
  Count degree_ = 0;
  Count size_ = 0;
};

// Expands the compact grammar `item := INT | INT '^' INT | INT '^*'`,
// comma separated, optional surrounding brackets, at most one starred item.
// The starred part absorbs whatever remains of `degree`.
Partition expand_star(const std::string& compact, Count degree);

// Every partition of n in descending lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(Count n);

// Ramification data: a degree plus a canonically sorted multiset of
// non-trivial partitions of that degree.
class RamificationData {
 public:
  RamificationData() = default;
  // Trivial partitions are dropped; a branch of the wrong degree throws DomainError.
  RamificationData(Count degree, std::vector<Partition> branches);

  Count degree() const { return degree_; }
  const std::vector<Partition>& branches() const { return branches_; }
  Count rh_sum() const;

  std::string to_string() const;
  bool operator==(const RamificationData& other) const = default;
  std::strong_ordering operator<=>(const RamificationData& other) const;

 private:
  Count degree_ = 0;
  std::vector<Partition> branches_;  // sorted descending
};

struct GenusResult {
  enum class Status { Ok, NotIntegral, Negative };
  Status status = Status::Ok;
  Rational value;               // exact solution of Riemann-Hurwitz, may be fractional
  std::optional<Count> genus;   // set iff status == Ok
  Count rh_sum = 0;

  bool ok() const { return status == Status::Ok; }
};

std::string to_string(GenusResult::Status s);

// Solves 2(g - l*g_Y + l - 1) = sum of contributions for g.
GenusResult rh_genus(const RamificationData& d, Count base_genus);

enum class Parity { Even, Odd };
// Parity of the Riemann-Hurwitz sum; odd means no product-one tuple exists.
Parity total_parity(const RamificationData& d);

}  // namespace ramcover
