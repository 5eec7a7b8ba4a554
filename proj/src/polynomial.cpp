#include "discheb/polynomial.hpp"

#include <ostream>
#include <stdexcept>

#include "discheb/errors.hpp"

namespace discheb {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs_low_first)
    : c_(coeffs_low_first) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::lead_coefficient() const {
  if (is_zero()) throw ZeroPolynomial("lead coefficient of the zero polynomial");
  return c_.back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) { return scale(p, Rational(-1)); }

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, const Rational& c) {
  std::vector<Rational> out = p.coefficients();
  for (auto& e : out) e *= c;
  return Polynomial(std::move(out));
}

Polynomial affine_compose(const Polynomial& p, const Rational& a, const Rational& b) {
  if (a.sgn() == 0) throw DegenerateMap("affine_compose: zero scale factor");
  if (p.is_zero()) return Polynomial();
  const Polynomial lin{b, a};
  Polynomial out{p.lead_coefficient()};
  for (int i = p.degree() - 1; i >= 0; --i) out = out * lin + Polynomial{p.coefficient(i)};
  return out;
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& nodes) {
  const size_t n = nodes.size();
  if (n == 0) throw std::invalid_argument("interpolate: no nodes");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (nodes[i].first == nodes[j].first)
        throw DuplicateAbscissa("interpolate: repeated abscissa " + nodes[i].first.str());

  // In-place divided differences: after pass j, coef[i] = f[x_{i-j}..x_i].
  std::vector<Rational> coef(n);
  for (size_t i = 0; i < n; ++i) coef[i] = nodes[i].second;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (nodes[i].first - nodes[i - j].first);

  Polynomial out{coef[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    const Polynomial lin{-nodes[i].first, Rational(1)};
    out = out * lin + Polynomial{coef[i]};
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coefficient(i);
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sgn() < 0) os << "-";
      first = false;
    } else {
      os << (c.sgn() < 0 ? " - " : " + ");
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

}  // namespace discheb
