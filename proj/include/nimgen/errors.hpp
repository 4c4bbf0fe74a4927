#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nimgen {

// |G| = 1 passed to an operation that needs a maximal subgroup
struct TrivialGroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// DNG on the trivial group: the empty set already generates
struct UnplayableGameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// configurable caps (subgroup count, product order, oracle size) exceeded
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed Cayley table or violated group axiom
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group-spec text that does not match the grammar; position is a 0-based
// offset into the original input
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace nimgen
