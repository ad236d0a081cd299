#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace grasp {

/// Exact rational scalar backed by GMP. Values are always canonical:
/// denominator > 0 and gcd(|num|, den) = 1. No rounding anywhere.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int n) : q_(n) {}   // NOLINT
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || s.empty())
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  /// True when both numerator and denominator fit in int64.
  bool fits_int64() const {
    return q_.get_num().fits_slong_p() && q_.get_den().fits_slong_p();
  }
  int64_t num_int64() const { return q_.get_num().get_si(); }
  int64_t den_int64() const { return q_.get_den().get_si(); }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inv() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

 private:
  mpq_class q_;
};

inline Rational lcm_den(const Rational& acc, const Rational& x) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), acc.raw().get_den().get_mpz_t(), x.raw().get_den().get_mpz_t());
  return Rational(mpq_class(l));
}

}  // namespace grasp
