#include "hklab/constructions.hpp"

#include <algorithm>
#include <set>

#include "hklab/groebner.hpp"
#include "hklab/staircase.hpp"

namespace hklab {

namespace {

// Fresh names for n adjoined variables: a single letter when n == 1, else
// letter1..lettern, using the first candidate letter that avoids every
// existing name.  Deterministic, so repeated constructions agree.
std::vector<std::string> adjoined_names(const std::vector<std::string>& taken, std::size_t n) {
  const std::set<std::string> used(taken.begin(), taken.end());
  static const char* kLetters[] = {"y", "z", "w", "u", "v", "t", "s", "a", "b", "c"};
  for (const char* letter : kLetters) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(n == 1 ? std::string(letter)
                             : std::string(letter) + std::to_string(i + 1));
    }
    if (std::none_of(names.begin(), names.end(),
                     [&](const std::string& s) { return used.count(s) != 0; })) {
      return names;
    }
  }
  for (std::string prefix = "y_";; prefix += "_") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    if (std::none_of(names.begin(), names.end(),
                     [&](const std::string& s) { return used.count(s) != 0; })) {
      return names;
    }
  }
}

// Context with the base ring's variables plus `extra` new ones, preserving
// the monomial order kind (any custom permutation is extended by comparing
// the new block last, in index order).
RingContextPtr extended_context(const RingContextPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = base->vars;
  vars.insert(vars.end(), extra.begin(), extra.end());
  std::vector<std::size_t> perm = base->order.permutation();
  if (!perm.empty()) {
    for (std::size_t i = 0; i < extra.size(); ++i) perm.push_back(base->vars.size() + i);
  }
  return make_context(base->p, vars, MonomialOrder(base->order.kind(), perm));
}

void require_local(const RingPtr& ring) {
  if (!ring->has_local_generators()) {
    throw Error(ErrorCode::NotLocalInput, "defining ideal has a generator with a constant term");
  }
}

void require_same_context(const Polynomial& f, const RingContextPtr& ctx) {
  if (f.context() == ctx) return;
  if (!f.context() || !(*f.context() == *ctx)) {
    throw Error(ErrorCode::BadInput, "polynomial belongs to a different ring context");
  }
}

}  // namespace

ConstructionReport multi_fiber_product_over_k(const std::vector<RingPtr>& factors) {
  if (factors.size() < 2) {
    throw Error(ErrorCode::BadDims, "fiber product needs at least two factors");
  }
  const std::uint32_t p = factors.front()->characteristic();
  const OrderKind kind = factors.front()->context()->order.kind();
  for (const RingPtr& f : factors) {
    require_local(f);
    if (f->characteristic() != p) {
      throw Error(ErrorCode::CharMismatch, "fiber product factors over different prime fields");
    }
    if (f->context()->order.kind() != kind) {
      throw Error(ErrorCode::OrderMismatch, "fiber product factors use different monomial orders");
    }
  }

  ConstructionReport report;
  report.kind = factors.size() == 2 ? "fiber_product" : "multi_fiber_product";

  std::vector<std::string> vars;
  std::vector<std::size_t> offsets;
  for (std::size_t c = 0; c < factors.size(); ++c) {
    offsets.push_back(vars.size());
    for (const std::string& name : factors[c]->context()->vars) {
      const std::string renamed = name + "_" + std::to_string(c + 1);
      vars.push_back(renamed);
      report.provenance.emplace_back(renamed, VariableOrigin{c + 1, name, false});
    }
    report.component_dimensions.push_back(factors[c]->dimension());
  }
  RingContextPtr ctx = make_context(p, vars, MonomialOrder(kind));

  std::vector<Polynomial> gens;
  for (std::size_t c = 0; c < factors.size(); ++c) {
    std::vector<std::size_t> var_map(factors[c]->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = offsets[c] + i;
    for (const Polynomial& g : factors[c]->generators()) gens.push_back(g.mapped_to(ctx, var_map));
  }
  for (std::size_t c1 = 0; c1 < factors.size(); ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < factors.size(); ++c2) {
      for (std::size_t i = 0; i < factors[c1]->nvars(); ++i) {
        for (std::size_t j = 0; j < factors[c2]->nvars(); ++j) {
          gens.push_back(Polynomial::variable(ctx, offsets[c1] + i) *
                         Polynomial::variable(ctx, offsets[c2] + j));
        }
      }
    }
  }

  report.result = RingPresentation::make(ctx, gens);
  for (std::size_t i = 0; i < factors.front()->nvars(); ++i) {
    report.base_var_map.push_back(offsets[0] + i);
  }
  return report;
}

ConstructionReport fiber_product_over_k(const RingPtr& a, const RingPtr& b) {
  return multi_fiber_product_over_k({a, b});
}

ConstructionReport amalgamated_duplication(const RingPtr& ring,
                                           const std::vector<Polynomial>& ideal_gens) {
  require_local(ring);
  const RingContextPtr base = ring->context();

  std::vector<Polynomial> fs;
  for (const Polynomial& f : ideal_gens) {
    require_same_context(f, base);
    Polynomial reduced = ring->reduce(f);
    if (reduced.is_zero()) continue;
    if (!reduced.constant_coefficient().is_zero()) {
      throw Error(ErrorCode::UnitIdeal, "duplication ideal contains a unit");
    }
    fs.push_back(std::move(reduced));
  }

  ConstructionReport report;
  report.kind = "duplication";
  report.component_dimensions.push_back(ring->dimension());
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    report.base_var_map.push_back(i);
    report.provenance.emplace_back(base->vars[i], VariableOrigin{1, base->vars[i], false});
  }

  if (fs.empty()) {
    report.result = ring;
    report.zero_ideal_warning = true;
    report.component_dimensions.push_back(ring->dimension());
    return report;
  }

  // Syzygies of (f_1..f_n) over the quotient ring: compute syzygies of the
  // generators together with the ring relations in the ambient ring, then
  // keep the coordinates that multiply the f_s.
  std::vector<Polynomial> combined = fs;
  for (const Polynomial& g : ring->generators()) combined.push_back(g);
  const SyzygyBasis syz = syzygy_basis(base, combined);

  {
    std::vector<Polynomial> quotient_gens = ring->generators();
    for (const Polynomial& f : fs) quotient_gens.push_back(f);
    report.component_dimensions.push_back(
        krull_dimension(base->nvars(), buchberger(base, quotient_gens).lead_monomials()));
  }

  const std::size_t n = fs.size();
  const std::vector<std::string> fresh = adjoined_names(base->vars, n);
  RingContextPtr ctx = extended_context(base, fresh);
  std::vector<std::size_t> var_map(base->nvars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i;

  for (std::size_t s = 0; s < n; ++s) {
    report.adjoined_vars.push_back(base->nvars() + s);
    report.provenance.emplace_back(fresh[s], VariableOrigin{0, "", true});
  }

  std::vector<Polynomial> gens;
  for (const Polynomial& g : ring->generators()) gens.push_back(g.mapped_to(ctx, var_map));
  std::vector<Polynomial> mapped_fs;
  for (const Polynomial& f : fs) mapped_fs.push_back(f.mapped_to(ctx, var_map));

  for (const std::vector<Polynomial>& row : syz.rows) {
    Polynomial form = Polynomial::zero(ctx);
    for (std::size_t s = 0; s < n; ++s) {
      if (row[s].is_zero()) continue;
      form += row[s].mapped_to(ctx, var_map) *
              Polynomial::variable(ctx, report.adjoined_vars[s]);
    }
    if (!form.is_zero()) gens.push_back(form);
  }

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const Polynomial ys = Polynomial::variable(ctx, report.adjoined_vars[s]);
      const Polynomial yt = Polynomial::variable(ctx, report.adjoined_vars[t]);
      gens.push_back(ys * yt - mapped_fs[s] * yt);
    }
  }

  report.result = RingPresentation::make(ctx, gens);
  return report;
}

ConstructionReport idealization(const RingPtr& ring, const ModulePresentation& module) {
  require_local(ring);
  if (module.ring() != ring) {
    throw Error(ErrorCode::BadInput, "module is presented over a different ring");
  }
  const RingContextPtr base = ring->context();
  const std::size_t n = module.generator_count();

  ConstructionReport report;
  report.kind = "idealization";
  report.component_dimensions.push_back(ring->dimension());
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    report.base_var_map.push_back(i);
    report.provenance.emplace_back(base->vars[i], VariableOrigin{1, base->vars[i], false});
  }

  if (n == 0) {
    report.result = ring;
    return report;
  }

  const std::vector<std::string> fresh = adjoined_names(base->vars, n);
  RingContextPtr ctx = extended_context(base, fresh);
  std::vector<std::size_t> var_map(base->nvars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i;
  for (std::size_t i = 0; i < n; ++i) {
    report.adjoined_vars.push_back(base->nvars() + i);
    report.provenance.emplace_back(fresh[i], VariableOrigin{0, "", true});
  }

  std::vector<Polynomial> gens;
  for (const Polynomial& g : ring->generators()) gens.push_back(g.mapped_to(ctx, var_map));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      gens.push_back(Polynomial::variable(ctx, report.adjoined_vars[i]) *
                     Polynomial::variable(ctx, report.adjoined_vars[j]));
    }
  }
  for (const std::vector<Polynomial>& column : module.columns()) {
    Polynomial form = Polynomial::zero(ctx);
    for (std::size_t i = 0; i < n; ++i) {
      if (column[i].is_zero()) continue;
      form += column[i].mapped_to(ctx, var_map) *
              Polynomial::variable(ctx, report.adjoined_vars[i]);
    }
    if (!form.is_zero()) gens.push_back(form);
  }

  report.result = RingPresentation::make(ctx, gens);
  return report;
}

Polynomial lift_to_construction(const ConstructionReport& report, const Polynomial& f) {
  return f.mapped_to(report.result->context(), report.base_var_map);
}

}  // namespace hklab
