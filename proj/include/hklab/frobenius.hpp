#ifndef HKLAB_FROBENIUS_HPP
#define HKLAB_FROBENIUS_HPP

#include <cstdint>
#include <vector>

#include "hklab/rational.hpp"
#include "hklab/ring.hpp"

namespace hklab {

// One Frobenius sample: the colength of the q-th bracket power and its
// normalization by q^d, where d is the ring's Krull dimension.
struct HKSample {
  unsigned e = 0;
  std::uint64_t q = 0;
  std::uint64_t length = 0;
  Rational normalized;
  int dimension = 0;
  double wall_seconds = 0.0;  // informational; excluded from report identity
};

enum class FitMethod { LastSample, TwoPointFit };

const char* fit_method_name(FitMethod method);
FitMethod fit_method_from_name(const std::string& name);

// Multiplicity estimate extracted from a sample family.  The error field is
// a heuristic spread indicator, reported but never asserted.
struct HKEstimate {
  Rational value;
  FitMethod method = FitMethod::TwoPointFit;
  Rational error;
  int dimension = 0;
};

// True when q is a power p^e, e >= 1, of the given characteristic.
bool is_frobenius_power(std::uint64_t q, std::uint32_t p);

// Generators raised to the q-th power, q = p^e.  In characteristic p this
// is the termwise exponent scaling.
std::vector<Polynomial> bracket_power(const RingContextPtr& ctx,
                                      const std::vector<Polynomial>& gens,
                                      std::uint64_t q);

// Colengths len(R / (I + J^[q])) for e = 1..e_max, where I defines the ring
// and J is generated in positive degree and primary to the maximal ideal.
// Samples for distinct e are independent tasks on a bounded pool.
std::vector<HKSample> hk_function(const RingPtr& ring,
                                  const std::vector<Polynomial>& ideal_gens,
                                  unsigned e_max, unsigned threads = 1);

// Colengths len(M / J^[q] M) of a cokernel-presented module, computed as
// n*L - rank of the assembled multiplication-operator matrix over GF(p).
std::vector<HKSample> hk_module_function(const ModulePresentation& module,
                                         const std::vector<Polynomial>& ideal_gens,
                                         unsigned e_max, unsigned threads = 1);

// Estimate from the samples: the last normalized value, or the leading
// coefficient of an exact two-point fit len = a q^d + b q^(d-1) through the
// last two samples.
HKEstimate hk_estimate(const std::vector<HKSample>& samples, FitMethod method);

// Checks the bracket-power identity for a ring extension whose adjoined
// generators are nilpotent: the bracket power of the extended ideal
// (ideal_gens plus nilpotent_gens) equals the extension of the bracket power
// of ideal_gens alone, as ideals of the presented quotient.  q must be a
// Frobenius power p^e with e >= 1.
bool bracket_identity_check(const RingPtr& ring,
                            const std::vector<Polynomial>& ideal_gens,
                            const std::vector<Polynomial>& nilpotent_gens,
                            std::uint64_t q);

}  // namespace hklab

#endif
