#include "hklab/ring.hpp"

#include "hklab/staircase.hpp"

namespace hklab {

RingPresentation::RingPresentation(RingContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (!g.context() || !(*g.context() == *ctx_)) {
      throw Error(ErrorCode::BadInput, "ring generator over a different context");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

RingPtr RingPresentation::make(RingContextPtr ctx, std::vector<Polynomial> gens) {
  return std::make_shared<RingPresentation>(std::move(ctx), std::move(gens));
}

RingPtr RingPresentation::ambient(RingContextPtr ctx) {
  return make(std::move(ctx), {});
}

bool RingPresentation::has_local_generators() const {
  for (const auto& g : gens_) {
    if (!g.has_positive_degree_terms_only()) return false;
  }
  return true;
}

const GroebnerBasis& RingPresentation::groebner() const {
  std::call_once(gb_once_, [this] {
    gb_ = std::make_shared<const GroebnerBasis>(buchberger(ctx_, gens_));
  });
  return *gb_;
}

int RingPresentation::dimension() const {
  std::call_once(dim_once_, [this] {
    dim_ = krull_dimension(ctx_->nvars(), groebner().lead_monomials());
  });
  return *dim_;
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
  return normal_form(f, groebner());
}

ModulePresentation::ModulePresentation(RingPtr ring, std::size_t generator_count,
                                       std::vector<std::vector<Polynomial>> relation_columns)
    : ring_(std::move(ring)), n_(generator_count) {
  columns_.reserve(relation_columns.size());
  for (auto& column : relation_columns) {
    if (column.size() != n_) {
      throw Error(ErrorCode::BadDims,
                  "relation column length differs from generator count");
    }
    for (auto& entry : column) {
      entry = ring_->reduce(entry);
    }
    columns_.push_back(std::move(column));
  }
}

ModulePresentation ModulePresentation::free_module(RingPtr ring, std::size_t rank) {
  return ModulePresentation(std::move(ring), rank, {});
}

}  // namespace hklab
