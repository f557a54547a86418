#ifndef HKLAB_STAIRCASE_HPP
#define HKLAB_STAIRCASE_HPP

#include <cstdint>
#include <vector>

#include "hklab/monomial.hpp"

namespace hklab {

// Operations on the monomial ideal spanned by a list of monomials, given by
// the lead monomials of a Groebner basis.  Inputs are minimalized first, so
// redundant generators are accepted.

// True when every variable has a pure power among the generators, i.e. the
// quotient by the ideal is a finite-dimensional vector space.
bool is_artinian(std::size_t nvars, const std::vector<Monomial>& gens);

// Number of monomials outside the ideal.  Raises InfiniteLength when the
// ideal is not Artinian and ResourceLimit if the count exceeds 2^64 - 1.
std::uint64_t standard_monomial_count(std::size_t nvars,
                                      const std::vector<Monomial>& gens);

// The monomials outside the ideal themselves, in a fixed scan order.  Only
// for Artinian ideals; raises ResourceLimit when the enumeration box has
// more than ~2^24 cells.
std::vector<Monomial> standard_monomials(std::size_t nvars,
                                         const std::vector<Monomial>& gens);

// Dimension of the quotient by the monomial ideal: nvars minus the size of
// a minimum vertex cover of the generator supports.  The exhaustive cover
// search requires nvars <= 24.  Raises UnitIdeal on the unit ideal.
int krull_dimension(std::size_t nvars, const std::vector<Monomial>& gens);

}  // namespace hklab

#endif
