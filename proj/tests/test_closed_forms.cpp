#include <algorithm>
#include <stdexcept>

#include "doctest.h"

#include "discheb/closed_forms.hpp"
#include "discheb/errors.hpp"
#include "discheb/point_set.hpp"
#include "discheb/solver.hpp"

using namespace discheb;

namespace {

Rational unit_lead(int d, int k) {
  return lead_coefficient_closed_form({d, k, Rational(1), Rational(1)});
}

}  // namespace

TEST_CASE("closed-form leads on hand-checked instances") {
  CHECK(unit_lead(1, 2) == Rational(2));
  CHECK(unit_lead(1, 5) == Rational(1, 2));
  CHECK(unit_lead(2, 3) == Rational(2));
  CHECK(unit_lead(2, 4) == Rational(1));
  CHECK(unit_lead(2, 5) == Rational(1, 2));
  CHECK(unit_lead(3, 4) == Rational(4, 3));
  CHECK(unit_lead(3, 5) == Rational(1, 2));   // k = 1 mod 4
  CHECK(unit_lead(3, 6) == Rational(4, 15));  // k = 2 mod 4
  CHECK(unit_lead(3, 7) == Rational(1, 6));   // k = 3 mod 4
  CHECK(unit_lead(3, 8) == Rational(2, 21));  // k = 0 mod 4
  CHECK(unit_lead(4, 5) == Rational(2, 3));
  CHECK(unit_lead(4, 6) == Rational(1, 4));
  CHECK(unit_lead(4, 7) == Rational(1, 10));
  CHECK(unit_lead(4, 9) == Rational(2, 63));
}

TEST_CASE("closed-form error contract") {
  CHECK_THROWS_AS(unit_lead(0, 5), UnsupportedDegree);
  CHECK_THROWS_AS(unit_lead(5, 10), UnsupportedDegree);
  CHECK_THROWS_AS(unit_lead(2, 2), NoMaximum);
  CHECK_THROWS_AS(unit_lead(4, 4), NoMaximum);
  CHECK_THROWS_AS(lead_coefficient_closed_form({2, 5, Rational(0), Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lead_coefficient_closed_form({2, 5, Rational(1), Rational(-1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form_polynomial(5, 10), UnsupportedDegree);
  CHECK_THROWS_AS(closed_form_polynomial(3, 3), NoMaximum);
}

TEST_CASE("bound and spacing enter only through M over step^d") {
  const Rational m(3, 2);
  const Rational step(2, 5);
  for (int d = 1; d <= 4; ++d)
    for (int k = d + 1; k <= 12; ++k)
      CHECK(lead_coefficient_closed_form({d, k, m, step}) ==
            m / step.pow(static_cast<unsigned>(d)) * unit_lead(d, k));
  CHECK(lead_coefficient_closed_form({2, 5, Rational(3), Rational(2)}) == Rational(3, 8));
}

TEST_CASE("closed-form polynomials on hand-checked instances") {
  CHECK(closed_form_polynomial(1, 3) == Polynomial{-2, 1});
  CHECK(closed_form_polynomial(2, 3) == Polynomial{7, -8, 2});
  CHECK(closed_form_polynomial(2, 4) == Polynomial{5, -5, 1});
  CHECK(closed_form_polynomial(3, 4) == Polynomial{-15, Rational(68, 3), -10, Rational(4, 3)});
}

TEST_CASE("closed-form polynomial structure for all degrees and sizes") {
  for (int d = 1; d <= 4; ++d) {
    for (int k = d + 1; k <= 30; ++k) {
      const Polynomial p = closed_form_polynomial(d, k);
      CHECK(p.degree() == d);
      CHECK(p.lead_coefficient() == unit_lead(d, k));
      // bounded by one on the grid, +-1 at the ends
      for (int x = 1; x <= k; ++x) CHECK(p(Rational(x)).abs() <= Rational(1));
      CHECK(p(Rational(1)) == Rational(d % 2 == 0 ? 1 : -1));
      CHECK(p(Rational(k)) == Rational(1));
      // mirror symmetry about the grid midpoint, with the parity of d
      const Polynomial mirrored = affine_compose(p, Rational(-1), Rational(k + 1));
      CHECK(mirrored == (d % 2 == 0 ? p : scale(p, Rational(-1))));
    }
  }
}

TEST_CASE("quartic scan minimizers") {
  const QuarticScan k5 = quartic_lead_scan(5);
  CHECK(k5.lead == Rational(2, 3));
  CHECK(k5.minimizers == std::vector<Rational>{Rational(1)});

  const QuarticScan k6 = quartic_lead_scan(6);
  CHECK(k6.lead == Rational(1, 4));
  CHECK(k6.minimizers == std::vector<Rational>{Rational(3, 2)});

  const QuarticScan k9 = quartic_lead_scan(9);
  CHECK(k9.lead == Rational(2, 63));
  CHECK(k9.minimizers == std::vector<Rational>{Rational(3)});

  // scan minimizers live strictly inside the centered grid
  for (int k = 5; k <= 40; ++k) {
    const QuarticScan scan = quartic_lead_scan(k);
    CHECK(!scan.minimizers.empty());
    for (const Rational& x : scan.minimizers) {
      CHECK(x > Rational(0));
      CHECK(x < Rational(k - 1, 2));
      CHECK((x * 2).denominator() == 1);  // integer or half-odd per parity
    }
  }
}

TEST_CASE("quartic hint brackets the continuous minimizer") {
  for (int k = 5; k <= 40; ++k) {
    const auto hint = quartic_minimizer_hint(k);
    REQUIRE(hint.size() == 2);
    CHECK(hint[1] - hint[0] == (k % 2 == 1 ? Rational(1) : Rational(1, 2)));
    // (k-1)^2 / 8 lies between the squares of the two candidates
    const Rational target(static_cast<long>(k - 1) * (k - 1), 8);
    CHECK(hint[0] * hint[0] <= target);
    CHECK(target < hint[1] * hint[1]);
  }
  // one of the two hint points always attains the scan lead (the other can
  // fall outside the valid range, which is why the scan stays authoritative)
  for (int k = 5; k <= 40; ++k) {
    const QuarticScan scan = quartic_lead_scan(k);
    const auto hint = quartic_minimizer_hint(k);
    const bool hit = std::find(scan.minimizers.begin(), scan.minimizers.end(), hint[0]) !=
                         scan.minimizers.end() ||
                     std::find(scan.minimizers.begin(), scan.minimizers.end(), hint[1]) !=
                         scan.minimizers.end();
    CHECK(hit);
  }
}

TEST_CASE("closed forms agree with enumeration") {
  for (int d = 1; d <= 4; ++d)
    for (int k = d + 1; k <= 14; ++k)
      CHECK(solve(PointSet::arithmetic(1, 1, k), d).lead == unit_lead(d, k));
}

TEST_CASE("closed forms agree with enumeration off the unit grid") {
  const Rational start(-3, 2);
  const Rational step(2, 3);
  for (int d = 1; d <= 4; ++d)
    for (int k = d + 1; k <= 9; ++k)
      CHECK(solve(PointSet::arithmetic(start, step, k), d).lead ==
            lead_coefficient_closed_form({d, k, Rational(1), step}));
}
