#ifndef HKLAB_POLYNOMIAL_HPP
#define HKLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hklab/monomial.hpp"
#include "hklab/prime_field.hpp"

namespace hklab {

// Ambient polynomial ring GF(p)[vars] together with its active term order.
// Contexts are immutable and shared by the polynomials built over them.
struct RingContext {
  std::uint32_t p;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  // Index of a named variable, or nvars() when absent.
  std::size_t var_index(const std::string& name) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.p == b.p && a.vars == b.vars && a.order == b.order;
  }
};

using RingContextPtr = std::shared_ptr<const RingContext>;

// Validates that p is prime (< 2^31) and the variable names are distinct.
RingContextPtr make_context(std::uint32_t p, std::vector<std::string> vars,
                            MonomialOrder order = MonomialOrder());

struct Term {
  Monomial mono;
  FieldElement coeff;
};

// Polynomial over a shared RingContext.  Terms are strictly descending in
// the context order and never carry zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(RingContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(const RingContextPtr& ctx, std::int64_t value);
  static Polynomial variable(const RingContextPtr& ctx, std::size_t index);
  static Polynomial from_term(const RingContextPtr& ctx, Monomial m, FieldElement c);
  // Builds a polynomial from arbitrary (monomial, coefficient) pairs,
  // merging duplicates and dropping zeros.
  static Polynomial from_terms(const RingContextPtr& ctx, std::vector<Term> terms);

  const RingContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().mono; }
  FieldElement lead_coefficient() const { return lead_term().coeff; }
  std::uint32_t degree() const;
  FieldElement constant_coefficient() const;
  // True when every term has positive degree (no constant term).
  bool has_positive_degree_terms_only() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial times_term(const Monomial& m, FieldElement c) const;
  Polynomial times_scalar(FieldElement c) const;
  Polynomial monic() const;

  // f^q for q = p^e: in characteristic p this is the termwise map sending
  // each monomial to its q-fold power with coefficients fixed.
  Polynomial frobenius_power(std::uint64_t q) const;

  // Reinterprets the polynomial in a wider context; var_map[i] is the index
  // in the target context of this context's variable i.
  Polynomial mapped_to(const RingContextPtr& target,
                       const std::vector<std::size_t>& var_map) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  RingContextPtr ctx_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace hklab

#endif
