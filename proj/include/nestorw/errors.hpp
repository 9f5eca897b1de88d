#pragma once

#include <stdexcept>
#include <string>

namespace nestorw {

// Bad arguments to an operation (empty subset, non-distinct vertices, ...).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input text: .hg/.json files, construct and term literals.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input well-formed but rejected by a structural rule (non-atomic, not a construct, ...).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex count above the configured enumeration cap.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked invariant failed. Always a bug in this library.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_invariant(bool condition, const std::string& what) {
  if (!condition) throw invariant_error(what);
}

}  // namespace nestorw
