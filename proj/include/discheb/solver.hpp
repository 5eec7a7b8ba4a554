#pragma once

#include <cstdint>
#include <vector>

#include "discheb/point_set.hpp"
#include "discheb/polynomial.hpp"
#include "discheb/rational.hpp"

namespace discheb {

// The d+1 points where the extremal polynomial attains +-1 with alternating
// signs, ending at +1 on the last point of the set. Always contains both
// terminal points.
struct AlternationCertificate {
  std::vector<Rational> points;

  // Sign the certified polynomial must take at points[i] (0-based).
  static int expected_sign(int degree, int i) { return (degree - i) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const AlternationCertificate&, const AlternationCertificate&) = default;
};

struct ExtremalResult {
  Polynomial polynomial;
  Rational lead;
  AlternationCertificate certificate;
  std::uint64_t candidates_enumerated = 0;
  std::uint64_t candidates_feasible = 0;

  friend bool operator==(const ExtremalResult&, const ExtremalResult&) = default;
};

struct VerificationReport {
  bool terminal_ok = false;     // value (-1)^d at the first point, +1 at the last
  bool bounded_ok = false;      // |value| <= 1 across the whole set
  bool alternation_ok = false;  // certificate structure and values
  int sign_change_count = 0;    // strict sign alternations over the set, zeros skipped
  bool unique_max_ok = false;   // re-enumeration reproduces lead and polynomial uniquely

  bool pass(int degree) const {
    return terminal_ok && bounded_ok && alternation_ok && unique_max_ok &&
           sign_change_count == degree;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// The unique polynomial of exact degree `degree` maximizing the lead
// coefficient subject to |Q(x)| <= 1 on ps, found by exact enumeration of
// alternation supports. Deterministic for every thread count; num_threads = 0
// uses the OpenMP default. Throws NoMaximum when ps.size() <= degree and
// InternalInconsistency if the enumeration contradicts the structure theory.
ExtremalResult solve(const PointSet& ps, int degree, int num_threads = 0);

// Single-threaded reference with the same contract, kept as the test oracle
// for the parallel kernel.
ExtremalResult solve_serial(const PointSet& ps, int degree);

// Re-checks a result from scratch. Check failures are reported in the
// returned flags, never thrown; a result whose lead is not the unique
// enumerated maximum (including the k <= degree case, where no maximum
// exists) fails unique_max_ok.
VerificationReport verify(const ExtremalResult& result, const PointSet& ps, int degree);

// Strict sign alternations in order, ignoring zeros: (1, 0, -1, -1, 2) has 2.
int count_sign_changes(const std::vector<Rational>& values);

}  // namespace discheb
