#ifndef HKLAB_FORMULAS_HPP
#define HKLAB_FORMULAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hklab/frobenius.hpp"
#include "hklab/rational.hpp"
#include "hklab/ring.hpp"

namespace hklab {

// Outcome of comparing an estimator value against an exact prediction.
// pass holds exactly when relative_gap <= tolerance.
struct FormulaVerdict {
  std::string citation;
  Rational predicted;
  HKEstimate estimated;
  Rational absolute_gap;
  Rational relative_gap;
  Rational tolerance;
  bool pass = false;
};

// Two-sided comparison: relative gap |prediction - estimate| / max(prediction, 1).
FormulaVerdict verify(const Rational& prediction, const HKEstimate& estimate,
                      const Rational& tolerance, std::string citation);

// Multiplicity of a fiber product over the residue field from the component
// multiplicities, split by the dimension pattern.  Symmetric in the first
// two components; requires max(dimR, dimS) >= min >= dimT >= 0.
Rational fiber_formula(Rational ehkR, Rational ehkS, const Rational& ehkT,
                       int dimR, int dimS, int dimT);

// r-fold generalization: components of maximal dimension d contribute their
// sum; when d equals the common quotient's dimension the overlap is removed
// (r - 1) times.
Rational multi_fiber_formula(const std::vector<Rational>& ehks,
                             const std::vector<int>& dims, const Rational& ehkT,
                             int dimT);

// Multiplicity of the duplication of R along an ideal with quotient R/I.
Rational duplication_formula(const Rational& ehkR, int dimR,
                             const Rational& ehkRmodI, int dimRmodI);

// Multiplicity of an idealization: ring part plus the module part taken
// against the maximal ideal.
Rational idealization_formula(const Rational& ehkR, const Rational& ehk_mM);

// (alternating sum of Betti numbers + 1) * e_HK(I, R), for modules of finite
// projective dimension.
Rational betti_formula(const std::vector<long>& betti, const Rational& ehkIR);

// Checks ehkIR <= ehkJ <= (1 + mu) * ehkIR.
bool mu_bound(long mu, const Rational& ehkIR, const Rational& ehkJ);

// Minimal generator count of a presented module: n minus the rank of the
// relation matrix with all variables evaluated at zero.
long minimal_generator_count(const ModulePresentation& module);

// Sharp lower bound 1 + 1/(d * (d!(d-1) + 1)^d) for the multiplicity of a
// non-regular unmixed ring of dimension d >= 2.
Rational aberbach_enescu_bound(int d);

enum class FiberBoundCase { BothRegular, OneNonRegular, BothNonRegular, StrictDims };

const char* fiber_bound_case_name(FiberBoundCase kind);
FiberBoundCase fiber_bound_case_from_name(const std::string& name);

// Lower bounds for fiber products by regularity pattern, with
// delta(d) = aberbach_enescu_bound(d) - 1.
Rational fiber_bound(FiberBoundCase kind, int d);

enum class MultiFiberBoundCase { EqualDimT, Strict };

// Lower bound for r-fold fiber products; t counts the non-regular components
// of maximal dimension.
Rational multi_fiber_bound(int r, int t, int d, const Rational& ehkT,
                           MultiFiberBoundCase kind);

// Lower bounds for idealizations: (1 + lambda_count) * (1 + delta(d)) and the
// rank variant (rank + 1) * (1 + delta(d)).
Rational idealization_bound(long lambda_count, int d);
Rational idealization_rank_bound(long rank, int d);

// Multiplicity of the r-th Veronese subring of a d-dimensional regular ring:
// (1/r) * C(d + r - 1, r - 1).
Rational veronese_hk(long r, long d);

// d-th Maclaurin coefficient of sec x + tan x by exact truncated series
// arithmetic; 1 <= d <= 64.
Rational zigzag_m(int d);

// One-sided check of the sharp threshold: estimate >= 1 + m_d up to the
// relative tolerance, and >= the quadric hypersurface estimate when one is
// supplied.  The reported relative gap is the worst shortfall.
FormulaVerdict wy_check(const HKEstimate& estimate, int d,
                        const std::optional<HKEstimate>& quadric = std::nullopt,
                        const Rational& tolerance = Rational(1, 20));

}  // namespace hklab

#endif
