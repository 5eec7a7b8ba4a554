#pragma once

#include <cstdint>
#include <vector>

#include "discheb/point_set.hpp"
#include "discheb/polynomial.hpp"

// Internal enumeration plumbing shared by the solver front end and both
// kernels. Not installed.

namespace discheb::detail {

struct EnumerationOutcome {
  bool found = false;
  Rational best_lead;
  Polynomial best_poly;
  // Interior support of the winner as indices into {x_2, ..., x_{k-1}},
  // lexicographically smallest among supports of the winning polynomial.
  std::vector<int> best_support;
  std::uint64_t enumerated = 0;
  std::uint64_t feasible = 0;
  // Two distinct feasible polynomials attained best_lead. Theory rules this
  // out; seeing it means a bug somewhere.
  bool ambiguous_max = false;
};

// Every candidate fixes the two terminal points plus d-1 interior points and
// interpolates values alternating in sign, ending at +1 on the last point.
// A candidate is feasible when the interpolant has exact degree d, positive
// lead, and magnitude <= 1 across the whole set. Both kernels scan all
// C(k-2, d-1) supports and return identical outcomes; callers must ensure
// k > d >= 1.

// OpenMP-parallel scan; deterministic regardless of thread count.
// num_threads = 0 uses the runtime default.
EnumerationOutcome enumerate_extremal(const PointSet& ps, int degree, int num_threads);

// Single-threaded reference, kept deliberately straightforward.
EnumerationOutcome enumerate_extremal_serial(const PointSet& ps, int degree);

// Feasible candidate found: fold it into the running outcome. Assumes
// supports arrive in lexicographic order within one outcome.
void record_feasible(EnumerationOutcome& out, const Polynomial& q,
                     const std::vector<int>& support);

// Merge b into a, where a covers lexicographically earlier supports.
void merge_outcomes(EnumerationOutcome& a, EnumerationOutcome&& b);

// Interpolation value at the j-th support point (0-based) of a degree-d
// candidate: alternates and ends at +1.
inline int support_value(int degree, int j) { return (degree - j) % 2 == 0 ? 1 : -1; }

// C(n, m) without overflow; throws std::overflow_error past 2^63.
std::uint64_t binomial_checked(int n, int m);

// Lexicographic successor of an m-subset of {0..n-1}; false after the last.
bool next_combination(std::vector<int>& comb, int n);

}  // namespace discheb::detail
