#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace discheb {

// Exact arbitrary-precision rational. Always stored reduced with positive
// denominator; every arithmetic result preserves that form.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // implicit: lets integer literals mix in
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  // Accepts an optionally signed integer or "p/q" with positive q.
  static Rational from_string(std::string_view text);

  // Canonical form: "p" or "p/q" with q > 1, reduced, sign on the numerator.
  std::string str() const;
  // Fixed-point decimal with the given fraction digits, ties to even.
  std::string decimal(int digits) const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  int sgn() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_zero() const { return sgn() == 0; }
  Rational abs() const;
  Rational pow(unsigned exponent) const;

  const mpq_class& raw() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  struct canonical_t {};
  Rational(mpq_class q, canonical_t) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace discheb
