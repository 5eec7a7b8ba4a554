#include "discheb/chebyshev.hpp"

#include <stdexcept>
#include <utility>

#include "discheb/errors.hpp"

namespace discheb {

Polynomial chebyshev_t(int degree) {
  if (degree < 0) throw std::invalid_argument("chebyshev_t: negative degree");
  Polynomial prev{Rational(1)};
  if (degree == 0) return prev;
  Polynomial cur{Rational(0), Rational(1)};
  const Polynomial two_x{Rational(0), Rational(2)};
  for (int i = 1; i < degree; ++i) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

AffineMap map_to_unit(const PointSet& ps) {
  const Rational width = ps.back() - ps.front();
  return {Rational(2) / width, -(ps.back() + ps.front()) / width};
}

AffineMap map_from_unit(int k) {
  if (k < 2) throw std::invalid_argument("map_from_unit: need k >= 2");
  return {Rational(k - 1, 2), Rational(k + 1, 2)};
}

Rational continuous_lead_bound(int degree, const Rational& x1, const Rational& xk) {
  if (degree < 1) throw std::invalid_argument("continuous_lead_bound: degree must be positive");
  if (!(x1 < xk)) throw std::invalid_argument("continuous_lead_bound: need x1 < xk");
  return Rational(2).pow(static_cast<unsigned>(2 * degree - 1)) /
         (xk - x1).pow(static_cast<unsigned>(degree));
}

CorrectionTerm correction_term(const Polynomial& extremal, int degree, int k) {
  if (degree < 1) throw std::invalid_argument("correction_term: degree must be positive");
  if (extremal.degree() != degree)
    throw DegreeMismatch("correction_term: polynomial has degree " +
                         std::to_string(extremal.degree()) + ", expected " +
                         std::to_string(degree));
  const AffineMap t = map_from_unit(k);
  return {affine_compose(extremal, t.a, t.b) - chebyshev_t(degree)};
}

}  // namespace discheb
