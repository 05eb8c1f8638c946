#pragma once

#include <stdexcept>
#include <string>

namespace ramcover {

// A precondition on the mathematical input was violated (inadmissible degree,
// non-transitive group where a transitive one is required, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a 0-based offset into the text and
// `token` the offending fragment.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position, std::string token)
      : std::invalid_argument(what), position(position), token(std::move(token)) {}
  std::size_t position;
  std::string token;
};

}  // namespace ramcover
