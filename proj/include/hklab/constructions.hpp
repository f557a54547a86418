#ifndef HKLAB_CONSTRUCTIONS_HPP
#define HKLAB_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "hklab/ring.hpp"

namespace hklab {

struct VariableOrigin {
  std::size_t component = 0;  // 1-based input index; 0 for adjoined variables
  std::string source;         // name in the input ring; empty when adjoined
  bool adjoined = false;
};

// Output of a ring construction: the presented result plus enough
// bookkeeping to lift elements of the inputs into it.
struct ConstructionReport {
  RingPtr result;
  std::string kind;
  std::vector<int> component_dimensions;
  // One entry per result variable, in context order.
  std::vector<std::pair<std::string, VariableOrigin>> provenance;
  // Duplication of the zero ideal returns the ring unchanged with this set.
  bool zero_ideal_warning = false;
  // Result-context indices of adjoined variables (duplication/idealization).
  std::vector<std::size_t> adjoined_vars;
  // base_var_map[i]: result-context index of input variable i.  For fiber
  // products this covers the first component; see provenance for the rest.
  std::vector<std::size_t> base_var_map;
};

// Fiber product over the ground field of two local presentations with the
// same coefficient field: variables of component c are renamed v_c, the
// defining ideals are joined, and all cross products between components are
// added.
ConstructionReport fiber_product_over_k(const RingPtr& a, const RingPtr& b);

// Left-associated iterated fiber product of r >= 2 presentations; equivalent
// to joining all component ideals and all pairwise cross products.
ConstructionReport multi_fiber_product_over_k(const std::vector<RingPtr>& factors);

// Amalgamated duplication of a ring along an ideal: one new variable per
// ideal generator, linear relations from a full syzygy basis of the
// generators over the quotient, and the quadratic relations
// y_s y_t - f_s y_t.  The zero ideal returns the ring unchanged with a
// warning flag.
ConstructionReport amalgamated_duplication(const RingPtr& ring,
                                           const std::vector<Polynomial>& ideal_gens);

// Idealization of a module presented over the ring: one new variable per
// module generator, all products of new variables, and one linear form per
// relation column.
ConstructionReport idealization(const RingPtr& ring, const ModulePresentation& module);

// Lifts a polynomial on the construction's base ring (the first component)
// into the result's ambient ring.
Polynomial lift_to_construction(const ConstructionReport& report, const Polynomial& f);

}  // namespace hklab

#endif
