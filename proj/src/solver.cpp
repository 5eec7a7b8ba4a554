#include "discheb/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "discheb/errors.hpp"
#include "enumeration.hpp"

namespace discheb {

namespace {

void check_instance(const PointSet& ps, int degree) {
  if (degree < 1) throw std::invalid_argument("solve: degree must be positive");
  if (ps.size() <= degree)
    throw NoMaximum("no maximum for k = " + std::to_string(ps.size()) +
                    " <= d = " + std::to_string(degree) +
                    ": a degree-" + std::to_string(degree) +
                    " polynomial can vanish on all points, so the bound "
                    "constrains nothing");
}

ExtremalResult finish(const PointSet& ps, int degree, detail::EnumerationOutcome&& outcome) {
  if (!outcome.found)
    throw InternalInconsistency("no feasible alternation candidate for k = " +
                                std::to_string(ps.size()) + ", d = " + std::to_string(degree));
  if (outcome.ambiguous_max)
    throw InternalInconsistency("two distinct feasible polynomials share the maximal lead");
  if (outcome.best_poly.degree() != degree || outcome.best_lead.sgn() <= 0)
    throw InternalInconsistency("winning candidate violates the degree or sign contract");

  ExtremalResult result;
  result.certificate.points.reserve(static_cast<size_t>(degree) + 1);
  result.certificate.points.push_back(ps.front());
  for (int s : outcome.best_support) result.certificate.points.push_back(ps[1 + s]);
  result.certificate.points.push_back(ps.back());
  result.polynomial = std::move(outcome.best_poly);
  result.lead = std::move(outcome.best_lead);
  result.candidates_enumerated = outcome.enumerated;
  result.candidates_feasible = outcome.feasible;
  return result;
}

}  // namespace

ExtremalResult solve(const PointSet& ps, int degree, int num_threads) {
  check_instance(ps, degree);
  return finish(ps, degree, detail::enumerate_extremal(ps, degree, num_threads));
}

ExtremalResult solve_serial(const PointSet& ps, int degree) {
  check_instance(ps, degree);
  return finish(ps, degree, detail::enumerate_extremal_serial(ps, degree));
}

int count_sign_changes(const std::vector<Rational>& values) {
  int count = 0;
  int prev = 0;
  for (const Rational& v : values) {
    const int s = v.sgn();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

VerificationReport verify(const ExtremalResult& result, const PointSet& ps, int degree) {
  if (degree < 1) throw std::invalid_argument("verify: degree must be positive");
  const Polynomial& q = result.polynomial;
  VerificationReport report;

  report.terminal_ok = q(ps.front()) == Rational(degree % 2 == 0 ? 1 : -1) &&
                       q(ps.back()) == Rational(1);

  std::vector<Rational> values;
  values.reserve(static_cast<size_t>(ps.size()));
  for (int i = 0; i < ps.size(); ++i) values.push_back(q(ps[i]));
  report.bounded_ok =
      std::all_of(values.begin(), values.end(),
                  [](const Rational& v) { return v.abs() <= Rational(1); });
  report.sign_change_count = count_sign_changes(values);

  const auto& cert = result.certificate.points;
  bool alternation = cert.size() == static_cast<size_t>(degree) + 1 &&
                     cert.front() == ps.front() && cert.back() == ps.back();
  for (size_t i = 0; alternation && i < cert.size(); ++i) {
    if (i > 0 && !(cert[i - 1] < cert[i])) alternation = false;
    if (!std::binary_search(ps.points().begin(), ps.points().end(), cert[i]))
      alternation = false;
    if (q(cert[i]) !=
        Rational(AlternationCertificate::expected_sign(degree, static_cast<int>(i))))
      alternation = false;
  }
  report.alternation_ok = alternation;

  // Unique maximality is judged against a fresh enumeration. When k <= degree
  // no maximum exists, so nothing can be the unique maximum.
  if (ps.size() > degree) {
    const auto outcome = detail::enumerate_extremal(ps, degree, 0);
    report.unique_max_ok = outcome.found && !outcome.ambiguous_max &&
                           outcome.best_lead == result.lead && outcome.best_poly == q;
  }
  return report;
}

}  // namespace discheb
