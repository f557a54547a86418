#include "hklab/rational.hpp"

#include <ostream>

#include "hklab/errors.hpp"

namespace hklab {

Rational::Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (sgn(d) == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text), BigInt(1));
    }
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::BadInput, "malformed rational '" + text + "'");
  }
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  }
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) {
    return v_.get_num().get_str();
  }
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational rational_pow(const Rational& r, long k) {
  if (k < 0) {
    if (r.is_zero()) {
      throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    }
    return Rational(1) / rational_pow(r, -k);
  }
  Rational acc(1);
  Rational base = r;
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

BigInt bigint_pow(std::uint64_t base, unsigned k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, k);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace hklab
