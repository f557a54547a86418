#ifndef HKLAB_RING_HPP
#define HKLAB_RING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hklab/groebner.hpp"
#include "hklab/polynomial.hpp"

namespace hklab {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// Quotient GF(p)[vars]/(gens) of the ambient polynomial ring.  Immutable
// once built; the reduced Groebner basis of the defining ideal and the Krull
// dimension are computed on first use, published once, and then shared by
// concurrent readers.
class RingPresentation {
 public:
  RingPresentation(RingContextPtr ctx, std::vector<Polynomial> gens);

  static RingPtr make(RingContextPtr ctx, std::vector<Polynomial> gens);
  // The ambient polynomial ring itself (zero defining ideal).
  static RingPtr ambient(RingContextPtr ctx);

  const RingContextPtr& context() const { return ctx_; }
  std::uint32_t characteristic() const { return ctx_->p; }
  std::size_t nvars() const { return ctx_->nvars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_ambient() const { return gens_.empty(); }

  // True when every defining generator has zero constant term.
  bool has_local_generators() const;

  // Reduced Groebner basis of the defining ideal.
  const GroebnerBasis& groebner() const;

  // Krull dimension of the quotient; raises UnitIdeal on the zero ring.
  int dimension() const;

  // Normal form against the cached basis: the canonical representative of
  // the class of f in the quotient.
  Polynomial reduce(const Polynomial& f) const;

 private:
  RingContextPtr ctx_;
  std::vector<Polynomial> gens_;

  mutable std::once_flag gb_once_;
  mutable std::shared_ptr<const GroebnerBasis> gb_;
  mutable std::once_flag dim_once_;
  mutable std::optional<int> dim_;
};

// Cokernel presentation of a finitely generated module over a ring: n
// generators subject to the columns of an n x m matrix of ring elements.
// Entries are stored in normal form against the ring's basis.
class ModulePresentation {
 public:
  ModulePresentation(RingPtr ring, std::size_t generator_count,
                     std::vector<std::vector<Polynomial>> relation_columns);

  static ModulePresentation free_module(RingPtr ring, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t generator_count() const { return n_; }
  std::size_t relation_count() const { return columns_.size(); }
  // columns()[s][i]: coefficient of generator i in relation s.
  const std::vector<std::vector<Polynomial>>& columns() const { return columns_; }

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<std::vector<Polynomial>> columns_;
};

}  // namespace hklab

#endif
