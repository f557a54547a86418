#include "hklab/frobenius.hpp"

#include <chrono>
#include <unordered_map>

#include "hklab/linalg.hpp"
#include "hklab/parallel.hpp"
#include "hklab/staircase.hpp"

namespace hklab {

const char* fit_method_name(FitMethod method) {
  return method == FitMethod::LastSample ? "last-sample" : "two-point-fit";
}

FitMethod fit_method_from_name(const std::string& name) {
  if (name == "last-sample" || name == "last") return FitMethod::LastSample;
  if (name == "two-point-fit" || name == "two-point") return FitMethod::TwoPointFit;
  throw Error(ErrorCode::BadInput, "unknown fit method '" + name + "'");
}

bool is_frobenius_power(std::uint64_t q, std::uint32_t p) {
  if (q < p) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<Polynomial> bracket_power(const RingContextPtr& ctx,
                                      const std::vector<Polynomial>& gens,
                                      std::uint64_t q) {
  if (!is_frobenius_power(q, ctx->p)) {
    throw Error(ErrorCode::NotFrobeniusPower,
                std::to_string(q) + " is not a positive power of " + std::to_string(ctx->p));
  }
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.frobenius_power(q));
  return out;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.exponents()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_positive_degree(const std::vector<Polynomial>& gens, const char* what) {
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    any = true;
    if (!g.has_positive_degree_terms_only()) {
      throw Error(ErrorCode::NotLocalInput,
                  std::string(what) + " must be generated in positive degree");
    }
  }
  if (!any) {
    throw Error(ErrorCode::NotPrimary, std::string(what) + " generates the zero ideal");
  }
}

// Shared sample-loop scaffolding: dimension, locality and primarity checks,
// then one task per e merged in order.
std::vector<HKSample> run_samples(const RingPtr& ring,
                                  const std::vector<Polynomial>& ideal_gens,
                                  unsigned e_max, unsigned threads,
                                  const std::function<std::uint64_t(const GroebnerBasis&,
                                                                    std::uint64_t)>& length_of) {
  if (e_max == 0) {
    throw Error(ErrorCode::InsufficientSamples, "e_max must be at least 1");
  }
  const auto& ctx = ring->context();
  if (!ring->has_local_generators()) {
    throw Error(ErrorCode::NotLocalInput, "ring generators must lie in positive degree");
  }
  check_positive_degree(ideal_gens, "the ideal");
  const int d = ring->dimension();
  if (d == 0) {
    throw Error(ErrorCode::ZeroDimensionalRing,
                "multiplicity requires a ring of positive dimension");
  }

  // Primarity screen at q = p: I + J must be Artinian.
  {
    std::vector<Polynomial> combined = ring->generators();
    combined.insert(combined.end(), ideal_gens.begin(), ideal_gens.end());
    const GroebnerBasis gb = buchberger(ctx, combined);
    if (!is_artinian(ctx->nvars(), gb.lead_monomials())) {
      throw Error(ErrorCode::NotPrimary,
                  "ideal is not primary to the irrelevant maximal ideal");
    }
  }

  std::vector<HKSample> samples(e_max);
  parallel_for(e_max, threads, [&](std::size_t idx) {
    const auto start = std::chrono::steady_clock::now();
    const unsigned e = static_cast<unsigned>(idx) + 1;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (q > (std::uint64_t(1) << 62) / ctx->p) {
        throw Error(ErrorCode::ExponentOverflow, "Frobenius power exceeds 2^62");
      }
      q *= ctx->p;
    }
    std::vector<Polynomial> combined = ring->generators();
    for (const auto& g : bracket_power(ctx, ideal_gens, q)) combined.push_back(g);
    const GroebnerBasis gb = buchberger(ctx, combined);
    const std::uint64_t length = length_of(gb, q);

    HKSample s;
    s.e = e;
    s.q = q;
    s.length = length;
    s.normalized = Rational(BigInt(static_cast<unsigned long>(length)),
                            bigint_pow(q, static_cast<unsigned>(d)));
    s.dimension = d;
    s.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    samples[idx] = s;
  });
  return samples;
}

}  // namespace

std::vector<HKSample> hk_function(const RingPtr& ring,
                                  const std::vector<Polynomial>& ideal_gens,
                                  unsigned e_max, unsigned threads) {
  const std::size_t nvars = ring->nvars();
  return run_samples(ring, ideal_gens, e_max, threads,
                     [nvars](const GroebnerBasis& gb, std::uint64_t) {
                       return standard_monomial_count(nvars, gb.lead_monomials());
                     });
}

std::vector<HKSample> hk_module_function(const ModulePresentation& module,
                                         const std::vector<Polynomial>& ideal_gens,
                                         unsigned e_max, unsigned threads) {
  const RingPtr& ring = module.ring();
  const auto& ctx = ring->context();
  const std::size_t nvars = ctx->nvars();
  const std::size_t n = module.generator_count();
  const std::size_t m = module.relation_count();
  const std::uint32_t p = ctx->p;

  auto length_of = [&](const GroebnerBasis& gb, std::uint64_t) -> std::uint64_t {
    const std::vector<Monomial> basis = standard_monomials(nvars, gb.lead_monomials());
    const std::size_t L = basis.size();
    if (n == 0 || m == 0) return n * L;

    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    index.reserve(L);
    for (std::size_t j = 0; j < L; ++j) index.emplace(basis[j], j);

    // Column (s, j): the relation column s multiplied by basis monomial j,
    // expanded over the monomial basis of the quotient.  Stored transposed
    // (one row per column) since ranks are transpose-invariant.
    std::vector<std::vector<std::uint32_t>> columns;
    columns.reserve(m * L);
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<Polynomial> reduced(n, Polynomial::zero(ctx));
      for (std::size_t i = 0; i < n; ++i) {
        reduced[i] = normal_form(module.columns()[s][i], gb);
      }
      for (std::size_t j = 0; j < L; ++j) {
        std::vector<std::uint32_t> column(n * L, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (reduced[i].is_zero()) continue;
          const Polynomial prod =
              normal_form(reduced[i].times_term(basis[j], FieldElement(p, 1)), gb);
          for (const auto& t : prod.terms()) {
            column[i * L + index.at(t.mono)] = t.coeff.residue();
            nonzero = true;
          }
        }
        if (nonzero) columns.push_back(std::move(column));
      }
    }
    const std::size_t rank = gf_rank(std::move(columns), p);
    return n * L - rank;
  };

  return run_samples(ring, ideal_gens, e_max, threads, length_of);
}

HKEstimate hk_estimate(const std::vector<HKSample>& samples, FitMethod method) {
  if (samples.empty()) {
    throw Error(ErrorCode::InsufficientSamples, "no samples to estimate from");
  }
  HKEstimate out;
  out.method = method;
  out.dimension = samples.back().dimension;

  if (method == FitMethod::LastSample) {
    out.value = samples.back().normalized;
    out.error = Rational(0);
    return out;
  }

  if (samples.size() < 2) {
    throw Error(ErrorCode::InsufficientSamples, "two-point fit needs two samples");
  }
  const unsigned d = static_cast<unsigned>(samples.back().dimension);
  auto fit = [&](const HKSample& s1, const HKSample& s2) {
    // Solve len = a q^d + b q^(d-1) through the two samples; a is the fit.
    const BigInt q1d1 = bigint_pow(s1.q, d - 1), q2d1 = bigint_pow(s2.q, d - 1);
    const BigInt q1d = bigint_pow(s1.q, d), q2d = bigint_pow(s2.q, d);
    const BigInt l1(static_cast<unsigned long>(s1.length));
    const BigInt l2(static_cast<unsigned long>(s2.length));
    return Rational(l2 * q1d1 - l1 * q2d1, q2d * q1d1 - q1d * q2d1);
  };
  const std::size_t k = samples.size();
  out.value = fit(samples[k - 2], samples[k - 1]);
  if (k >= 3) {
    out.error = rational_abs(out.value - fit(samples[k - 3], samples[k - 2]));
  } else {
    out.error = rational_abs(out.value - samples.back().normalized);
  }
  return out;
}

bool bracket_identity_check(const RingPtr& ring,
                            const std::vector<Polynomial>& ideal_gens,
                            const std::vector<Polynomial>& nilpotent_gens,
                            std::uint64_t q) {
  const auto& ctx = ring->context();
  if (q == 1 || !is_frobenius_power(q, ctx->p)) {
    throw Error(ErrorCode::NotFrobeniusPower,
                "bracket identity check needs q = p^e with e >= 1");
  }
  std::vector<Polynomial> extended = ideal_gens;
  extended.insert(extended.end(), nilpotent_gens.begin(), nilpotent_gens.end());

  // Compare ideals of the quotient by comparing their preimages upstairs.
  std::vector<Polynomial> lhs = bracket_power(ctx, extended, q);
  std::vector<Polynomial> rhs = bracket_power(ctx, ideal_gens, q);
  for (const auto& g : ring->generators()) {
    lhs.push_back(g);
    rhs.push_back(g);
  }
  return ideal_equal(ctx, lhs, rhs);
}

}  // namespace hklab
