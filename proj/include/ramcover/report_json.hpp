#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramcover/bounds.hpp"
#include "ramcover/certify.hpp"
#include "ramcover/induced.hpp"
#include "ramcover/perm.hpp"
#include "ramcover/ramdata.hpp"
#include "ramcover/tables.hpp"

namespace ramcover {

using Json = nlohmann::json;  // std::map backed, so keys serialize sorted

// Malformed input file. The message reads "<source>:<line>:<column>: <reason>
// (at 'token')"; line and column are 1-based.
struct InputError : std::invalid_argument {
  InputError(const std::string& source, int line, int column, const std::string& token, const std::string& reason);
  int line;
  int column;
  std::string token;
};

// {"degree": N, "branches": [[p, ...], ...]} with each branch either a fully
// expanded array or a compact string such as "1^3,2^*". Unknown keys are ignored.
RamificationData ramdata_from_json(const std::string& text, const std::string& source = "<input>");

struct TupleInput {
  int degree = 0;
  std::vector<Permutation> cycles;
};
// {"degree": N, "cycles": ["(1,2,3)", ...]} in 1-indexed cycle notation.
TupleInput tuple_from_json(const std::string& text, const std::string& source = "<input>");

Json to_json(const Rational& r);  // integer when integral, else "p/q"
Json to_json(const BigInt& v);    // integer when it fits in 64 bits, else a decimal string
Json to_json(const Partition& e);
Json to_json(const RamificationData& d);
Json to_json(const TableEntry& e);
Json to_json(const GroupVerdict& v);
Json to_json(const CertReport& r);
Json to_json(const RefuteReport& r);
Json to_json(const QuotientGenusReport& r);
Json to_json(const CoverClass& c);
Json to_json(const FilterTrigger& t, const RamificationData& d);

// CSV with the fixed header "label,degree,partition": one row per branch,
// label suffixed with "[a=A]" on rows that take a, partition in compact form.
std::string table_csv(const std::vector<TableEntry>& entries);

}  // namespace ramcover
