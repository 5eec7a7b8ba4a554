#include "discheb/closed_forms.hpp"

#include <stdexcept>

#include "discheb/errors.hpp"

namespace discheb {

namespace {

void check_degree_and_count(int degree, int count) {
  if (degree < 1 || degree > 4)
    throw UnsupportedDegree("closed forms cover degrees 1 through 4, got " +
                            std::to_string(degree));
  if (count <= degree)
    throw NoMaximum("no maximum for k = " + std::to_string(count) +
                    " <= d = " + std::to_string(degree) +
                    ": the bound constrains nothing");
}

// Lead on the unit-spaced grid {1..k} with bound 1.
Rational base_lead(int degree, int k) {
  switch (degree) {
    case 1:
      return Rational(2, k - 1);
    case 2:
      if (k % 2 == 1) return Rational(8) / Rational(k - 1).pow(2);
      return Rational(8) / Rational(static_cast<long>(k) * (k - 2));
    case 3:
      switch (k % 4) {
        case 1:
          return Rational(32) / Rational(k - 1).pow(3);
        case 3:
          return Rational(32) /
                 (Rational(k + 1) * Rational(k - 1) * Rational(k - 3));
        default:  // k even
          return Rational(32) /
                 (Rational(k) * Rational(k - 1) * Rational(k - 2));
      }
    default:
      return quartic_lead_scan(k).lead;
  }
}

}  // namespace

Rational lead_coefficient_closed_form(const ClosedFormQuery& query) {
  check_degree_and_count(query.degree, query.count);
  if (query.bound.sgn() <= 0)
    throw std::invalid_argument("lead_coefficient_closed_form: bound must be positive");
  if (query.step.sgn() <= 0)
    throw std::invalid_argument("lead_coefficient_closed_form: step must be positive");
  return query.bound / query.step.pow(static_cast<unsigned>(query.degree)) *
         base_lead(query.degree, query.count);
}

QuarticScan quartic_lead_scan(int k) {
  check_degree_and_count(4, k);
  const Rational span2 = Rational(k - 1).pow(2);
  QuarticScan scan;
  // Interior centered-grid points: odd k walks 1, 2, ...; even k walks
  // 3/2, 5/2, ...; both stop short of the terminal (k-1)/2.
  for (Rational x = (k % 2 == 1) ? Rational(1) : Rational(3, 2);
       x < Rational(k - 1, 2); x += 1) {
    const Rational x2 = x * x;
    Rational bound;
    if (k % 2 == 1) {
      const Rational den = x2 * span2 - Rational(4) * x2 * x2;
      if (den.sgn() <= 0) continue;
      bound = Rational(8) / den;
    } else {
      const Rational den =
          Rational(16) * x2 * x2 - Rational(4) * (span2 + 1) * x2 + span2;
      if (den.sgn() >= 0) continue;
      bound = Rational(-32) / den;
    }
    if (scan.minimizers.empty() || bound < scan.lead) {
      scan.lead = bound;
      scan.minimizers = {x};
    } else if (bound == scan.lead) {
      scan.minimizers.push_back(x);
    }
  }
  if (scan.minimizers.empty())
    throw InternalInconsistency("quartic scan found no valid interior point for k = " +
                                std::to_string(k));
  return scan;
}

std::vector<Rational> quartic_minimizer_hint(int k) {
  check_degree_and_count(4, k);
  const mpz_class n = mpz_class(k - 1) * (k - 1);
  if (k % 2 == 1) {
    // Largest m with 8 m^2 <= (k-1)^2, i.e. m = floor((k-1) / (2 sqrt 2)).
    mpz_class m;
    mpz_sqrt(m.get_mpz_t(), mpz_class(n / 8).get_mpz_t());
    while (8 * (m + 1) * (m + 1) <= n) ++m;
    return {Rational(mpq_class(m)), Rational(mpq_class(m + 1))};
  }
  // Largest m with 2 m^2 <= (k-1)^2; the candidates are m/2 and (m+1)/2.
  mpz_class m;
  mpz_sqrt(m.get_mpz_t(), mpz_class(n / 2).get_mpz_t());
  while (2 * (m + 1) * (m + 1) <= n) ++m;
  return {Rational(mpq_class(m) / 2), Rational(mpq_class(m + 1) / 2)};
}

Polynomial closed_form_polynomial(int degree, int count) {
  check_degree_and_count(degree, count);
  const int k = count;
  const Rational lead = base_lead(degree, k);
  const Rational half_span(k - 1, 2);

  // Coefficients in the centered coordinate, where the grid is symmetric
  // about 0 and the polynomial has the parity of its degree (except degree 4
  // on even grids, which keeps the even part only).
  std::vector<Rational> c;
  switch (degree) {
    case 1:
      c = {Rational(0), lead};
      break;
    case 2:
      c = {Rational(1) - lead * half_span * half_span, Rational(0), lead};
      break;
    case 3: {
      const Rational cube = Rational(k - 1).pow(3);
      const Rational c1 = (Rational(8) - lead * cube) / Rational(4L * (k - 1));
      c = {Rational(0), c1, Rational(0), lead};
      break;
    }
    default: {
      if (k % 2 == 1) {
        c = {Rational(1), Rational(0), -lead * half_span * half_span, Rational(0), lead};
      } else {
        const Rational span2 = Rational(k - 1).pow(2);
        c = {lead * span2 / 16 + 1, Rational(0), -lead * (span2 + 1) / 4, Rational(0), lead};
      }
      break;
    }
  }
  return affine_compose(Polynomial(std::move(c)), Rational(1), Rational(-(k + 1), 2));
}

}  // namespace discheb
