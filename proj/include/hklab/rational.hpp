#ifndef HKLAB_RATIONAL_HPP
#define HKLAB_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace hklab {

using BigInt = mpz_class;

// Exact rational number.  Always kept in lowest terms with a positive
// denominator, so equality is plain value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(const BigInt& n) : v_(n) {}
  Rational(long n, long d);
  Rational(const BigInt& n, const BigInt& d);

  // Parses "n", "-n" or "n/d" in base 10.
  static Rational from_string(const std::string& text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Renders "n" for integers and "n/d" otherwise, base 10.
  std::string str() const;
  double to_double() const { return v_.get_d(); }

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_abs(const Rational& r);

// r^k for k >= 0 (and k < 0 when r is nonzero).
Rational rational_pow(const Rational& r, long k);

// q^k as a big integer, k >= 0.
BigInt bigint_pow(std::uint64_t base, unsigned k);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace hklab

#endif
