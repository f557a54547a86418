#ifndef HKLAB_MONOMIAL_HPP
#define HKLAB_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hklab/errors.hpp"

namespace hklab {

// Power product of a fixed variable set.  Exponents are 16-bit; operations
// that would push one past 65535 raise ExponentOverflow.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exponents) : e_(std::move(exponents)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint16_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return e_; }

  bool is_constant() const;
  std::uint32_t degree() const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // this / o; raises NotDivisible unless o divides this.
  Monomial quotient(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  // Componentwise q-fold exponent scaling (the q-th power of the monomial).
  Monomial power(std::uint64_t q) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  void check_arity(const Monomial& o) const {
    if (e_.size() != o.e_.size()) {
      throw Error(ErrorCode::ArityMismatch, "monomials with different variable counts");
    }
  }

  std::vector<std::uint16_t> e_;
};

enum class OrderKind { Grevlex, Lex };

// Term order on monomials: graded reverse lexicographic or lexicographic,
// optionally composed with a permutation of the variables.  perm[k] is the
// variable compared at position k; empty means the identity.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> perm = {})
      : kind_(kind), perm_(std::move(perm)) {}

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  // -1, 0 or +1 as a <, =, > b.  Zero only for identical exponent vectors.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_;
  }

 private:
  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<std::size_t> perm_;
};

}  // namespace hklab

#endif
