#pragma once

#include <cstdint>
#include <string>

namespace ramcover {

// Resource limits. These bound the work done at desk scale; they are not
// mathematical constants.
struct Caps {
  int chain_degree = 64;                  // largest degree handed to Schreier-Sims
  std::int64_t induced_domain = 10'000'000;  // largest t-set / t-tuple domain
  int search_degree = 10;                 // exhaustive tuple search degree
  std::int64_t search_work = 2'000'000'000;  // tuples examined by exhaustive search
  int jordan_depth = 3;                   // word length in the Jordan witness search

  // Parses "key=value,key=value". Unknown keys and non-positive values throw
  // std::invalid_argument.
  static Caps parse(const std::string& text, Caps base);
  static Caps parse(const std::string& text);
  std::string to_string() const;
};

// Defaults, overridable through the RAMCOVER_CAPS environment variable.
const Caps& default_caps();

}  // namespace ramcover
