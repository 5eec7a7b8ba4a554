#pragma once

#include <vector>

#include "discheb/polynomial.hpp"
#include "discheb/rational.hpp"

namespace discheb {

// Maximal lead coefficient among degree-`degree` polynomials bounded by
// `bound` in absolute value on an arithmetic progression of `count` points
// spaced `step` apart. The answer depends only on these four numbers.
struct ClosedFormQuery {
  int degree = 0;       // 1..4
  int count = 0;        // k, must exceed degree
  Rational bound = 1;   // M > 0
  Rational step = 1;    // positive spacing
};

// Throws UnsupportedDegree outside 1..4 and NoMaximum when count <= degree.
Rational lead_coefficient_closed_form(const ClosedFormQuery& query);

// The extremal polynomial itself on the grid {1, ..., count}, normalized to
// bound 1. Same error contract as lead_coefficient_closed_form.
Polynomial closed_form_polynomial(int degree, int count);

// Degree-4 internals, exposed for diagnostics. The lead on {1..k} is the
// minimum over interior points x of the centered grid (integers for odd k,
// half-odd integers for even k, 0 < x < (k-1)/2) of
//   odd k:   8 / (x^2 (k-1)^2 - 4 x^4)
//   even k: -32 / (16 x^4 - 4((k-1)^2 + 1) x^2 + (k-1)^2)
// restricted to points where the denominator has the sign that makes the
// bound positive.
struct QuarticScan {
  Rational lead;
  std::vector<Rational> minimizers;  // interior points attaining the minimum
};
QuarticScan quartic_lead_scan(int k);

// The two centered-grid neighbors of the continuous minimizer (k-1)/(2*sqrt 2),
// computed with exact integer square roots. Candidates only: for small k one
// of them can leave the valid range, which is why the scan above is the
// authoritative path.
std::vector<Rational> quartic_minimizer_hint(int k);

}  // namespace discheb
