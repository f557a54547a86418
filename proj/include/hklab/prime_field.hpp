#ifndef HKLAB_PRIME_FIELD_HPP
#define HKLAB_PRIME_FIELD_HPP

#include <cstdint>
#include <iosfwd>

#include "hklab/errors.hpp"

namespace hklab {

// Deterministic primality test for moduli below 2^31.
bool is_prime(std::uint32_t n);

// Multiplicative inverse of a modulo p, a in [1, p).  Uses a cached table
// when p fits in 16 bits and the extended Euclidean algorithm otherwise.
std::uint32_t modular_inverse(std::uint32_t a, std::uint32_t p);

// Element of the prime field GF(p) for a prime p < 2^31.  Values carry
// their characteristic; mixing characteristics raises CharMismatch.
class FieldElement {
 public:
  FieldElement() : r_(0), p_(2) {}
  FieldElement(std::uint32_t p, std::int64_t value) : p_(p) {
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    r_ = static_cast<std::uint32_t>(m);
  }

  std::uint32_t residue() const { return r_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  FieldElement operator-() const { return FieldElement(p_, r_ == 0 ? 0 : p_ - r_, 0); }

  FieldElement& operator+=(FieldElement o) {
    check_char(o);
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
    return *this;
  }

  FieldElement& operator-=(FieldElement o) {
    check_char(o);
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
  }

  FieldElement& operator*=(FieldElement o) {
    check_char(o);
    r_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(r_) * o.r_) % p_);
    return *this;
  }

  FieldElement& operator/=(FieldElement o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, FieldElement b) { return a += b; }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, FieldElement b) { return a /= b; }

  FieldElement inverse() const {
    if (r_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    return FieldElement(p_, modular_inverse(r_, p_), 0);
  }

  FieldElement pow(std::uint64_t k) const;

  friend bool operator==(FieldElement a, FieldElement b) {
    a.check_char(b);
    return a.r_ == b.r_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  // Trusted constructor: value already reduced.
  FieldElement(std::uint32_t p, std::uint32_t reduced, int) : r_(reduced), p_(p) {}

  void check_char(FieldElement o) const {
    if (p_ != o.p_) {
      throw Error(ErrorCode::CharMismatch, "operands over different prime fields");
    }
  }

  std::uint32_t r_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, FieldElement x);

}  // namespace hklab

#endif
