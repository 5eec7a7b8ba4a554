#pragma once

#include <optional>
#include <vector>

#include "discheb/rational.hpp"

namespace discheb {

// Finite evaluation set: at least two strictly increasing rational points.
class PointSet {
 public:
  // Throws std::invalid_argument unless xs is strictly increasing with
  // size >= 2.
  explicit PointSet(std::vector<Rational> xs);
  // start, start + step, ..., start + (count-1)*step; step must be positive.
  static PointSet arithmetic(const Rational& start, const Rational& step, int count);

  int size() const { return static_cast<int>(xs_.size()); }
  const Rational& operator[](int i) const { return xs_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& points() const { return xs_; }
  const Rational& front() const { return xs_.front(); }
  const Rational& back() const { return xs_.back(); }

  // The common spacing, or nullopt when the points are unevenly spaced.
  std::optional<Rational> arithmetic_step() const;
  // True exactly for {1, 2, ..., k}.
  bool is_unit_range() const;

 private:
  std::vector<Rational> xs_;
};

}  // namespace discheb
