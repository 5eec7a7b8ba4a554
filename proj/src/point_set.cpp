#include "discheb/point_set.hpp"

#include <stdexcept>
#include <utility>

namespace discheb {

PointSet::PointSet(std::vector<Rational> xs) : xs_(std::move(xs)) {
  if (xs_.size() < 2) throw std::invalid_argument("PointSet: need at least two points");
  for (size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i - 1] < xs_[i]))
      throw std::invalid_argument("PointSet: points must be strictly increasing");
}

PointSet PointSet::arithmetic(const Rational& start, const Rational& step, int count) {
  if (count < 2) throw std::invalid_argument("PointSet: need at least two points");
  if (step.sgn() <= 0) throw std::invalid_argument("PointSet: step must be positive");
  std::vector<Rational> xs;
  xs.reserve(static_cast<size_t>(count));
  Rational x = start;
  for (int i = 0; i < count; ++i, x += step) xs.push_back(x);
  return PointSet(std::move(xs));
}

std::optional<Rational> PointSet::arithmetic_step() const {
  const Rational step = xs_[1] - xs_[0];
  for (size_t i = 2; i < xs_.size(); ++i)
    if (xs_[i] - xs_[i - 1] != step) return std::nullopt;
  return step;
}

bool PointSet::is_unit_range() const {
  for (size_t i = 0; i < xs_.size(); ++i)
    if (xs_[i] != Rational(static_cast<long>(i) + 1)) return false;
  return true;
}

}  // namespace discheb
