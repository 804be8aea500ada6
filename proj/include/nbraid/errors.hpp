#pragma once

#include <stdexcept>
#include <string>

namespace nbraid {

/// A parameter tuple or call argument violates a stated bound.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed braid-word, T-link, trace or certificate text.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A rewrite rule was asked to fire at a site whose letters do not match its left side.
struct SiteMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Markov move is not legal on the word it is applied to.
struct IllegalMove : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The closure is not a knot, so the requested knot invariant is not computed.
struct UnsupportedClosure : std::domain_error {
  using std::domain_error::domain_error;
};

/// det(I - Burau) vanished identically.
struct DegenerateDeterminant : std::domain_error {
  using std::domain_error::domain_error;
};

/// An internal self-check failed. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nbraid
