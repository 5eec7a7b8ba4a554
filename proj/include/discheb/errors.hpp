#pragma once

#include <stdexcept>

namespace discheb {

// Base for everything the library throws on domain violations. Plain misuse
// of preconditions (negative counts, null sizes, ...) throws
// std::invalid_argument instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// interpolate(): two nodes share an abscissa.
struct DuplicateAbscissa : Error {
  using Error::Error;
};

// affine_compose(): scale factor zero collapses every input to a constant.
struct DegenerateMap : Error {
  using Error::Error;
};

// lead_coefficient() of the identically zero polynomial.
struct ZeroPolynomial : Error {
  using Error::Error;
};

// Extremal problem with k <= d: a degree-d polynomial can vanish on all k
// points, so the sup-norm constraint does not bound the lead coefficient.
struct NoMaximum : Error {
  using Error::Error;
};

// Closed forms cover degrees 1 through 4 only.
struct UnsupportedDegree : Error {
  using Error::Error;
};

// correction_term(): polynomial degree disagrees with the requested degree.
struct DegreeMismatch : Error {
  using Error::Error;
};

// The enumeration contradicted a structural guarantee (no feasible candidate,
// or two distinct feasible polynomials sharing the maximal lead). Indicates
// an implementation bug, never a property of valid input.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Malformed rational literal or record field.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace discheb
