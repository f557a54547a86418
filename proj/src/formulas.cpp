#include "hklab/formulas.hpp"

#include <algorithm>
#include <utility>

#include "hklab/linalg.hpp"

namespace hklab {

namespace {

void require_dim(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadDims, what);
}

Rational delta(int d) { return aberbach_enescu_bound(d) - Rational(1); }

Rational shortfall_gap(const Rational& bound, const Rational& value) {
  const Rational gap = bound - value;
  return gap.sign() > 0 ? gap : Rational(0);
}

Rational relative_to(const Rational& gap, const Rational& scale) {
  return gap / std::max(scale, Rational(1));
}

}  // namespace

FormulaVerdict verify(const Rational& prediction, const HKEstimate& estimate,
                      const Rational& tolerance, std::string citation) {
  if (tolerance.sign() < 0) {
    throw Error(ErrorCode::BadInput, "tolerance must be nonnegative");
  }
  FormulaVerdict v;
  v.citation = std::move(citation);
  v.predicted = prediction;
  v.estimated = estimate;
  v.tolerance = tolerance;
  v.absolute_gap = rational_abs(prediction - estimate.value);
  v.relative_gap = relative_to(v.absolute_gap, prediction);
  v.pass = v.relative_gap <= tolerance;
  return v;
}

Rational fiber_formula(Rational ehkR, Rational ehkS, const Rational& ehkT,
                       int dimR, int dimS, int dimT) {
  if (dimR < dimS) {
    std::swap(ehkR, ehkS);
    std::swap(dimR, dimS);
  }
  require_dim(dimT >= 0 && dimS >= dimT, "fiber formula needs dimR >= dimS >= dimT >= 0");
  if (dimR > dimS) return ehkR;
  if (dimS > dimT) return ehkR + ehkS;
  return ehkR + ehkS - ehkT;
}

Rational multi_fiber_formula(const std::vector<Rational>& ehks,
                             const std::vector<int>& dims, const Rational& ehkT,
                             int dimT) {
  require_dim(ehks.size() >= 2, "multi fiber formula needs at least two components");
  require_dim(ehks.size() == dims.size(), "one dimension per component");
  require_dim(dimT >= 0, "quotient dimension must be nonnegative");
  int d = dimT;
  for (int dim : dims) {
    require_dim(dim >= dimT, "component dimension below the common quotient");
    d = std::max(d, dim);
  }
  if (d == dimT) {
    Rational sum(0);
    for (const Rational& e : ehks) sum += e;
    return sum - Rational(static_cast<long>(ehks.size()) - 1) * ehkT;
  }
  Rational sum(0);
  for (std::size_t i = 0; i < ehks.size(); ++i) {
    if (dims[i] == d) sum += ehks[i];
  }
  return sum;
}

Rational duplication_formula(const Rational& ehkR, int dimR,
                             const Rational& ehkRmodI, int dimRmodI) {
  require_dim(dimRmodI >= 0 && dimR >= dimRmodI,
              "duplication formula needs dimR >= dim(R/I) >= 0");
  if (dimR == dimRmodI) return Rational(2) * ehkR - ehkRmodI;
  return Rational(2) * ehkR;
}

Rational idealization_formula(const Rational& ehkR, const Rational& ehk_mM) {
  return ehkR + ehk_mM;
}

Rational betti_formula(const std::vector<long>& betti, const Rational& ehkIR) {
  Rational alternating(0);
  int sign = 1;
  for (long b : betti) {
    alternating += Rational(sign * b);
    sign = -sign;
  }
  return (alternating + Rational(1)) * ehkIR;
}

bool mu_bound(long mu, const Rational& ehkIR, const Rational& ehkJ) {
  if (mu < 0) throw Error(ErrorCode::BadDims, "generator count must be nonnegative");
  return ehkIR <= ehkJ && ehkJ <= Rational(1 + mu) * ehkIR;
}

long minimal_generator_count(const ModulePresentation& module) {
  const std::uint32_t p = module.ring()->characteristic();
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(module.relation_count());
  for (const auto& column : module.columns()) {
    std::vector<std::uint32_t> row;
    row.reserve(column.size());
    for (const Polynomial& entry : column) {
      row.push_back(entry.is_zero() ? 0 : entry.constant_coefficient().residue());
    }
    rows.push_back(std::move(row));
  }
  return static_cast<long>(module.generator_count()) -
         static_cast<long>(gf_rank(std::move(rows), p));
}

Rational aberbach_enescu_bound(int d) {
  require_dim(d >= 2, "bound defined for dimension at least 2");
  const BigInt inner = factorial(static_cast<unsigned>(d)) * (d - 1) + 1;
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(d));
  return Rational(1) + Rational(BigInt(1), BigInt(d) * denom);
}

const char* fiber_bound_case_name(FiberBoundCase kind) {
  switch (kind) {
    case FiberBoundCase::BothRegular: return "both-regular";
    case FiberBoundCase::OneNonRegular: return "one-nonregular";
    case FiberBoundCase::BothNonRegular: return "both-nonregular";
    case FiberBoundCase::StrictDims: return "strict-dims";
  }
  return "both-regular";
}

FiberBoundCase fiber_bound_case_from_name(const std::string& name) {
  for (FiberBoundCase kind :
       {FiberBoundCase::BothRegular, FiberBoundCase::OneNonRegular,
        FiberBoundCase::BothNonRegular, FiberBoundCase::StrictDims}) {
    if (name == fiber_bound_case_name(kind)) return kind;
  }
  throw Error(ErrorCode::BadInput, "unknown fiber bound case '" + name + "'");
}

Rational fiber_bound(FiberBoundCase kind, int d) {
  require_dim(d >= 2, "bound defined for dimension at least 2");
  switch (kind) {
    case FiberBoundCase::BothRegular: return Rational(2);
    case FiberBoundCase::OneNonRegular: return Rational(2) + delta(d);
    case FiberBoundCase::BothNonRegular: return Rational(2) * (Rational(1) + delta(d));
    case FiberBoundCase::StrictDims: return Rational(1) + delta(d);
  }
  return Rational(2);
}

Rational multi_fiber_bound(int r, int t, int d, const Rational& ehkT,
                           MultiFiberBoundCase kind) {
  require_dim(r >= 2, "bound needs at least two components");
  require_dim(t >= 1 && t <= r, "non-regular count must lie in [1, r]");
  require_dim(d >= 2, "bound defined for dimension at least 2");
  const Rational unit = Rational(1) + delta(d);
  if (kind == MultiFiberBoundCase::EqualDimT) {
    return Rational(r) * unit - Rational(r - 1) * ehkT;
  }
  return Rational(t) * unit;
}

Rational idealization_bound(long lambda_count, int d) {
  require_dim(lambda_count >= 0, "component count must be nonnegative");
  require_dim(d >= 2, "bound defined for dimension at least 2");
  return Rational(1 + lambda_count) * (Rational(1) + delta(d));
}

Rational idealization_rank_bound(long rank, int d) {
  require_dim(rank >= 0, "rank must be nonnegative");
  require_dim(d >= 2, "bound defined for dimension at least 2");
  return Rational(rank + 1) * (Rational(1) + delta(d));
}

Rational veronese_hk(long r, long d) {
  require_dim(r >= 1 && d >= 1, "Veronese formula needs r >= 1 and d >= 1");
  return Rational(binomial(static_cast<unsigned>(d + r - 1), static_cast<unsigned>(r - 1)),
                  BigInt(r));
}

Rational zigzag_m(int d) {
  require_dim(d >= 1 && d <= 64, "series coefficient index must lie in [1, 64]");
  const std::size_t n = static_cast<std::size_t>(d);

  // Exact Maclaurin data for cos and sin up to degree d.
  std::vector<Rational> cosc(n + 1, Rational(0)), sinc(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational term(BigInt(1), factorial(static_cast<unsigned>(k)));
    if (k % 2 == 0) {
      cosc[k] = (k / 2) % 2 == 0 ? term : -term;
    } else {
      sinc[k] = ((k - 1) / 2) % 2 == 0 ? term : -term;
    }
  }

  // sec = 1 / cos via series inversion (cos has constant term 1), then
  // tan = sin * sec, both truncated at degree d.
  std::vector<Rational> sec(n + 1, Rational(0));
  sec[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc(0);
    for (std::size_t k = 1; k <= m; ++k) acc += cosc[k] * sec[m - k];
    sec[m] = -acc;
  }
  Rational tangent(0);
  for (std::size_t k = 0; k <= n; ++k) tangent += sinc[k] * sec[n - k];
  return sec[n] + tangent;
}

FormulaVerdict wy_check(const HKEstimate& estimate, int d,
                        const std::optional<HKEstimate>& quadric,
                        const Rational& tolerance) {
  require_dim(d >= 2, "threshold check needs dimension at least 2");
  if (tolerance.sign() < 0) {
    throw Error(ErrorCode::BadInput, "tolerance must be nonnegative");
  }
  FormulaVerdict v;
  v.predicted = Rational(1) + zigzag_m(d);
  v.estimated = estimate;
  v.tolerance = tolerance;
  v.citation = "sharp threshold 1 + m_d for non-regular unmixed rings";

  v.absolute_gap = shortfall_gap(v.predicted, estimate.value);
  v.relative_gap = relative_to(v.absolute_gap, v.predicted);
  if (quadric) {
    const Rational gap = shortfall_gap(quadric->value, estimate.value);
    v.relative_gap = std::max(v.relative_gap, relative_to(gap, quadric->value));
    v.citation += "; dominance over the quadric hypersurface estimate";
  }
  v.pass = v.relative_gap <= tolerance;
  return v;
}

}  // namespace hklab
