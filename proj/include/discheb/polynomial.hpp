#pragma once

#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "discheb/rational.hpp"

namespace discheb {

// Dense univariate polynomial over Rational, coefficients lowest degree
// first. Invariant: the stored vector is empty (the zero polynomial) or its
// last entry is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs_low_first);
  explicit Polynomial(std::vector<Rational> coeffs_low_first);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Throws ZeroPolynomial on the zero polynomial.
  Rational lead_coefficient() const;
  const std::vector<Rational>& coefficients() const { return c_; }
  // Zero outside the stored range, so callers can index freely.
  Rational coefficient(int i) const;

  Rational eval(const Rational& x) const;
  Rational operator()(const Rational& x) const { return eval(x); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> c_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

// p(a*x + b). Throws DegenerateMap when a = 0; otherwise preserves degree.
Polynomial affine_compose(const Polynomial& p, const Rational& a, const Rational& b);

// Unique polynomial of degree <= n-1 through n nodes (x_i, y_i), built from
// Newton divided differences and expanded to dense form. Throws
// DuplicateAbscissa when two nodes share an x.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& nodes);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace discheb
