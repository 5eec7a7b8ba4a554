#pragma once

#include "discheb/point_set.hpp"
#include "discheb/polynomial.hpp"
#include "discheb/rational.hpp"

namespace discheb {

// x |-> a*x + b
struct AffineMap {
  Rational a;
  Rational b;
};

// How far the discrete extremal polynomial, pulled back to [-1, 1], exceeds
// the Chebyshev polynomial of the same degree. Vanishes at x = +-1.
struct CorrectionTerm {
  Polynomial delta;
};

// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
// T_{d+1} = 2x T_d - T_{d-1}.
Polynomial chebyshev_t(int degree);

// Affine map sending the first point to -1 and the last to +1.
AffineMap map_to_unit(const PointSet& ps);
// Inverse direction for the grid {1..k}: sends -1 to 1 and +1 to k.
AffineMap map_from_unit(int k);

// Largest lead coefficient of a degree-d polynomial bounded by 1 on the whole
// interval [x1, xk]: 2^(2d-1) / (xk - x1)^d. Any finite subset of the
// interval admits at least this value.
Rational continuous_lead_bound(int degree, const Rational& x1, const Rational& xk);

// delta(x) = extremal(t(x)) - T_d(x) with t = map_from_unit(k). Throws
// DegreeMismatch unless deg(extremal) = degree.
CorrectionTerm correction_term(const Polynomial& extremal, int degree, int k);

}  // namespace discheb
