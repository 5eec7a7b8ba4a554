#include "discheb/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "discheb/errors.hpp"

namespace discheb {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (mpz_sgn(mpq_denref(q_.get_mpq_t())) == 0)
    throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("invalid rational literal: '" + std::string(text) + "'");
  };

  std::string_view v = text;
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  if (v.empty()) return fail();

  bool negative = false;
  if (v.front() == '+' || v.front() == '-') {
    negative = v.front() == '-';
    v.remove_prefix(1);
  }

  const auto slash = v.find('/');
  const std::string_view num_part = v.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : v.substr(slash + 1);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(num_part) || !all_digits(den_part)) return fail();

  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) return fail();
  if (negative) num = -num;

  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q), canonical_t{});
}

std::string Rational::str() const {
  std::string s = q_.get_num().get_str();
  if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
  return s;
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("decimal: negative digit count");
  mpz_class num = numerator();
  const mpz_class den = denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  num *= scale;

  mpz_class whole, rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(rem * 2, den);
  if (half > 0 || (half == 0 && mpz_odd_p(whole.get_mpz_t()))) ++whole;

  std::string s = whole.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits)
      s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  if (negative && whole != 0) s.insert(0, "-");
  return s;
}

Rational Rational::abs() const {
  Rational r = *this;
  mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational Rational::pow(unsigned exponent) const {
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(q_.get_mpq_t()), exponent);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(q_.get_mpq_t()), exponent);
  return Rational(std::move(out), canonical_t{});  // powers of a reduced fraction stay reduced
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ + b.q_), Rational::canonical_t{});
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ - b.q_), Rational::canonical_t{});
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ * b.q_), Rational::canonical_t{});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sgn() == 0) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_), Rational::canonical_t{});
}

Rational operator-(const Rational& a) {
  return Rational(mpq_class(-a.q_), Rational::canonical_t{});
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace discheb
