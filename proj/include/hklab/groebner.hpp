#ifndef HKLAB_GROEBNER_HPP
#define HKLAB_GROEBNER_HPP

#include <vector>

#include "hklab/polynomial.hpp"

namespace hklab {

// Reduced Groebner basis: monic elements, no lead monomial divides another,
// every tail term reduced, sorted ascending by lead monomial.  This form is
// unique for a given ideal and order, so bases compare elementwise.
struct GroebnerBasis {
  RingContextPtr ctx;
  std::vector<Polynomial> elements;

  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return elements.empty(); }
  std::vector<Monomial> lead_monomials() const;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // f = sum quotients[i] * basis[i] + remainder
};

// Multivariate division of f by the given divisors under the context order.
// Deterministic: at each step the first divisor whose lead monomial divides
// the current lead term is used.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Remainder of f on division by the basis.  Against a Groebner basis this is
// the unique normal form.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

// S-polynomial of f and g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with the normal pair-selection strategy (smallest
// lcm degree first) and the coprime-lead and chain criteria, followed by
// interreduction to the canonical reduced basis.  Zero generators are
// ignored; the zero ideal yields an empty basis.
GroebnerBasis buchberger(const RingContextPtr& ctx, const std::vector<Polynomial>& gens);

// Same algorithm with both pair-discarding criteria disabled.  Slower, used
// as a cross-check and by the syzygy computation, which must lift every
// S-pair reduction.
GroebnerBasis buchberger_no_criteria(const RingContextPtr& ctx,
                                     const std::vector<Polynomial>& gens);

// True when the two generator lists span the same ideal (reduced bases equal).
bool ideal_equal(const RingContextPtr& ctx, const std::vector<Polynomial>& lhs,
                 const std::vector<Polynomial>& rhs);

// Rows generating the module of relations sum_s row[s] * gens[s] = 0 over the
// ambient polynomial ring.  Every S-pair reduction of the tracked basis is
// lifted and converted back to generator coordinates; the trivial
// alternating rows (g_j, -g_i) are appended and single-row multiples pruned.
struct SyzygyBasis {
  RingContextPtr ctx;
  std::size_t generator_count = 0;
  std::vector<std::vector<Polynomial>> rows;
};

SyzygyBasis syzygy_basis(const RingContextPtr& ctx, const std::vector<Polynomial>& gens);

// Generators of the ideal quotient (gens : f), read off from the first
// coordinates of the syzygies of (f, gens...).
std::vector<Polynomial> ideal_colon(const RingContextPtr& ctx,
                                    const std::vector<Polynomial>& gens,
                                    const Polynomial& f);

}  // namespace hklab

#endif
