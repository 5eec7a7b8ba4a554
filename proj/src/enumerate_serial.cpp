#include <numeric>
#include <utility>

#include "enumeration.hpp"

namespace discheb::detail {

void record_feasible(EnumerationOutcome& out, const Polynomial& q,
                     const std::vector<int>& support) {
  ++out.feasible;
  const Rational lead = q.lead_coefficient();
  if (!out.found || lead > out.best_lead) {
    out.found = true;
    out.best_lead = lead;
    out.best_poly = q;
    out.best_support = support;
    out.ambiguous_max = false;  // a previous tie was below the new maximum
    return;
  }
  if (lead == out.best_lead && !(q == out.best_poly)) out.ambiguous_max = true;
  // Same polynomial reached again: the earlier support is lexicographically
  // smaller, keep it.
}

void merge_outcomes(EnumerationOutcome& a, EnumerationOutcome&& b) {
  a.enumerated += b.enumerated;
  a.feasible += b.feasible;
  if (!b.found) return;
  if (!a.found || b.best_lead > a.best_lead) {
    a.found = true;
    a.best_lead = std::move(b.best_lead);
    a.best_poly = std::move(b.best_poly);
    a.best_support = std::move(b.best_support);
    a.ambiguous_max = b.ambiguous_max;
    return;
  }
  if (b.best_lead == a.best_lead) {
    if (b.best_poly == a.best_poly)
      a.ambiguous_max = a.ambiguous_max || b.ambiguous_max;
    else
      a.ambiguous_max = true;
  }
}

bool next_combination(std::vector<int>& comb, int n) {
  const int m = static_cast<int>(comb.size());
  int i = m - 1;
  while (i >= 0 && comb[static_cast<size_t>(i)] == n - m + i) --i;
  if (i < 0) return false;
  int v = ++comb[static_cast<size_t>(i)];
  for (int j = i + 1; j < m; ++j) comb[static_cast<size_t>(j)] = ++v;
  return true;
}

EnumerationOutcome enumerate_extremal_serial(const PointSet& ps, int degree) {
  const int k = ps.size();
  const int d = degree;
  const int m = d - 1;  // interior points per candidate

  EnumerationOutcome out;
  std::vector<int> comb(static_cast<size_t>(m));
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<std::pair<Rational, Rational>> nodes(static_cast<size_t>(d) + 1);

  do {
    ++out.enumerated;
    nodes.front() = {ps[0], Rational(support_value(d, 0))};
    for (int j = 0; j < m; ++j)
      nodes[static_cast<size_t>(j) + 1] = {ps[1 + comb[static_cast<size_t>(j)]],
                                           Rational(support_value(d, j + 1))};
    nodes.back() = {ps[k - 1], Rational(1)};

    const Polynomial q = interpolate(nodes);
    if (q.degree() != d || q.lead_coefficient().sgn() <= 0) continue;
    bool bounded = true;
    for (int i = 0; i < k && bounded; ++i) bounded = q(ps[i]).abs() <= Rational(1);
    if (bounded) record_feasible(out, q, comb);
  } while (next_combination(comb, k - 2));

  return out;
}

}  // namespace discheb::detail
