#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramcover/ramdata.hpp"

namespace ramcover {

enum class Claim { Genus0X2, Nonexistent, SolvableMonodromy, GaloisClosureGenus };
std::string to_string(Claim c);

struct TableEntry {
  std::string label;
  std::map<std::string, Count> params;  // keys "l", "a", "p"
  RamificationData data;
  std::set<Claim> claims;
  std::optional<int> galois_closure_genus;  // set with Claim::GaloisClosureGenus
  std::string group;                        // monodromy group, solvable table only
  // Source rows collapsed into this entry (lifted table), e.g. {"I2.11", "I2.13"}.
  std::vector<std::string> sources;
};

// Natural label order: "F1.2" < "F1.10" < "I1.1" < "I2.3".
bool label_less(const std::string& x, const std::string& y);

// Evaluates a row template. Each branch is written in the compact grammar with
// arithmetic in the variables l and a allowed in parts and exponents, e.g.
// "1^3,2^((l-3)/2)" or "a*(l-a),a^((a-1)/2),(l-a)^*". Returns nullopt when an
// exponent is not a non-negative integer, a part is not a positive integer,
// or the parts do not fill `degree`.
std::optional<RamificationData> instantiate(const std::vector<std::string>& branches, Count degree, Count l,
                                            Count a = 0);

// Row labels in table order.
const std::vector<std::string>& two_set_labels();
const std::vector<std::string>& f_labels();
const std::vector<std::string>& solvable_labels();
const std::vector<std::string>& nonexistence_labels();
bool row_uses_a(const std::string& two_set_label);

// A single row at (l, a), or nullopt when inadmissible there. No lower bound
// on l is imposed here; gen_* tables require l >= 13.
std::optional<RamificationData> two_set_row(const std::string& label, Count l, Count a = 0);
std::optional<RamificationData> f_row(const std::string& label, Count l, Count a = 0);
std::optional<RamificationData> nonexistence_row(const std::string& label, Count l);
// The display of two-set-free types ruled out by the translation lemma and
// F4.N1, rows numbered 1..8 (row 8 is F4.N1).
std::optional<RamificationData> non236_row(int row, Count n);

// Admissible a-values for a row: odd, coprime to l, 1 <= a <= l-1.
std::vector<Count> admissible_a(Count l);

std::vector<TableEntry> gen_two_set_table(Count l);
// Lifted entries, deduplicated, labelled by the lifted-table row whose
// template they match (I1.1a / I1.1b split by parity of l).
std::vector<TableEntry> gen_f_table(Count l);
// The lifted-table label a two-set row maps to at l (handles the collapses).
std::string f_label_for(const std::string& two_set_label, Count l);
std::vector<TableEntry> gen_solvable_table(Count l);
// Throws DomainError when the row is inadmissible at l.
TableEntry solvable_row(const std::string& label, Count l);
std::vector<TableEntry> gen_nonexistence_table(Count l);

// Closed forms for the entry counts, frozen from the enumeration over l in [13, 100].
// Distinct lifted types: 2 phi(l) + e with e = 12 (l odd), 8 (l = 0 mod 4), 7 (l = 2 mod 4).
Count expected_f_count(Count l);
// Distinct two-set rows: 2 phi(l) + 12 (l odd), 5 phi(l)/2 + 9 (l = 0 mod 4),
// 5 phi(l)/2 + 8 (l = 2 mod 4).
Count expected_two_set_count(Count l);

}  // namespace ramcover
