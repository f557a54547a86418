#include "hklab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace hklab {

bool GroebnerBasis::is_unit_ideal() const {
  return elements.size() == 1 && elements.front().lead_monomial().is_constant();
}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.lead_monomial());
  return out;
}

namespace {

// Division loop shared by the tracking and non-tracking entry points.
Polynomial divide_impl(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       std::vector<Polynomial>* quotients) {
  const auto& ctx = f.context();
  Polynomial h = f;
  Polynomial remainder = Polynomial::zero(ctx);
  while (!h.is_zero()) {
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& g = divisors[i];
      if (g.is_zero()) continue;
      if (!g.lead_monomial().divides(h.lead_monomial())) continue;
      const Monomial m = h.lead_monomial().quotient(g.lead_monomial());
      const FieldElement c = h.lead_coefficient() / g.lead_coefficient();
      h -= g.times_term(m, c);
      if (quotients) {
        (*quotients)[i] += Polynomial::from_term(ctx, m, c);
      }
      divided = true;
      break;
    }
    if (!divided) {
      const Term lt = h.lead_term();
      remainder += Polynomial::from_term(ctx, lt.mono, lt.coeff);
      h -= Polynomial::from_term(ctx, lt.mono, lt.coeff);
    }
  }
  return remainder;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  DivisionResult out;
  out.quotients.assign(divisors.size(), Polynomial::zero(f.context()));
  out.remainder = divide_impl(f, divisors, &out.quotients);
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  return divide_impl(f, divisors, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return divide_impl(f, basis.elements, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  const Polynomial a =
      f.times_term(l.quotient(f.lead_monomial()), f.lead_coefficient().inverse());
  const Polynomial b =
      g.times_term(l.quotient(g.lead_monomial()), g.lead_coefficient().inverse());
  return a - b;
}

namespace {

struct PairEntry {
  std::uint32_t degree;
  Monomial lcm;
  std::size_t i, j;  // i < j
};

// Normal selection strategy: smallest lcm degree first, then the lcm under
// the active order, then indices.  Total, so the run is deterministic.
struct PairLess {
  const MonomialOrder* order;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

struct BuchbergerRun {
  std::vector<Polynomial> basis;
  // basis[k] = sum cofactors[k][s] * input[s]; tracked only when lifting.
  std::vector<std::vector<Polynomial>> cofactors;
  // Lifted relations among the inputs found during the run.
  std::vector<std::vector<Polynomial>> syzygy_rows;
};

BuchbergerRun buchberger_loop(const RingContextPtr& ctx,
                              const std::vector<Polynomial>& gens, bool use_criteria,
                              bool track) {
  BuchbergerRun run;
  const std::size_t n = gens.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (gens[s].is_zero()) continue;
    run.basis.push_back(gens[s]);
    if (track) {
      std::vector<Polynomial> row(n, Polynomial::zero(ctx));
      row[s] = Polynomial::constant(ctx, 1);
      run.cofactors.push_back(std::move(row));
    }
  }

  PairLess less{&ctx->order};
  std::set<PairEntry, PairLess> queue(less);
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial l = run.basis[i].lead_monomial().lcm(run.basis[j].lead_monomial());
      queue.insert(PairEntry{l.degree(), l, i, j});
    }
  };
  for (std::size_t j = 0; j < run.basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    const PairEntry pair = *queue.begin();
    queue.erase(queue.begin());
    const std::size_t i = pair.i, j = pair.j;
    done.insert({i, j});

    if (use_criteria) {
      if (run.basis[i].lead_monomial().coprime(run.basis[j].lead_monomial())) continue;
      bool chained = false;
      for (std::size_t k = 0; k < run.basis.size() && !chained; ++k) {
        if (k == i || k == j) continue;
        if (!run.basis[k].lead_monomial().divides(pair.lcm)) continue;
        chained = done.count({std::min(i, k), std::max(i, k)}) != 0 &&
                  done.count({std::min(j, k), std::max(j, k)}) != 0;
      }
      if (chained) continue;
    }

    const Polynomial& gi = run.basis[i];
    const Polynomial& gj = run.basis[j];
    const Monomial ui_m = pair.lcm.quotient(gi.lead_monomial());
    const Monomial uj_m = pair.lcm.quotient(gj.lead_monomial());
    const FieldElement ui_c = gi.lead_coefficient().inverse();
    const FieldElement uj_c = gj.lead_coefficient().inverse();
    const Polynomial spoly = gi.times_term(ui_m, ui_c) - gj.times_term(uj_m, uj_c);

    if (!track) {
      const Polynomial r = normal_form(spoly, run.basis);
      if (!r.is_zero()) {
        run.basis.push_back(r.monic());
        push_pairs(run.basis.size() - 1);
      }
      continue;
    }

    DivisionResult div = divide(spoly, run.basis);
    std::vector<Polynomial> lifted(n, Polynomial::zero(ctx));
    for (std::size_t s = 0; s < n; ++s) {
      lifted[s] = run.cofactors[i][s].times_term(ui_m, ui_c) -
                  run.cofactors[j][s].times_term(uj_m, uj_c);
      for (std::size_t t = 0; t < run.basis.size(); ++t) {
        if (div.quotients[t].is_zero()) continue;
        lifted[s] -= div.quotients[t] * run.cofactors[t][s];
      }
    }
    if (div.remainder.is_zero()) {
      run.syzygy_rows.push_back(std::move(lifted));
    } else {
      const FieldElement inv = div.remainder.lead_coefficient().inverse();
      run.basis.push_back(div.remainder.times_scalar(inv));
      for (auto& entry : lifted) entry = entry.times_scalar(inv);
      run.cofactors.push_back(std::move(lifted));
      push_pairs(run.basis.size() - 1);
    }
  }
  return run;
}

GroebnerBasis reduce_basis(const RingContextPtr& ctx, std::vector<Polynomial> basis) {
  // Minimalize: scan ascending by lead monomial, dropping any element whose
  // lead monomial is divisible by one already kept.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    const int c = ctx->order.compare(a.lead_monomial(), b.lead_monomial());
    if (c != 0) return c < 0;
    return a.term_count() < b.term_count();
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.lead_monomial().divides(g.lead_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g.monic());
  }
  // Interreduce tails; lead monomials are pairwise non-divisible so one full
  // pass reaches the unique reduced basis.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ctx->order.less(a.lead_monomial(), b.lead_monomial());
  });
  return GroebnerBasis{ctx, std::move(minimal)};
}

void check_generators(const RingContextPtr& ctx, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (g.context() == ctx) continue;
    if (!g.context() || !(*g.context() == *ctx)) {
      throw Error(ErrorCode::BadInput, "generator over a different ring context");
    }
  }
}

}  // namespace

GroebnerBasis buchberger(const RingContextPtr& ctx, const std::vector<Polynomial>& gens) {
  check_generators(ctx, gens);
  BuchbergerRun run = buchberger_loop(ctx, gens, /*use_criteria=*/true, /*track=*/false);
  return reduce_basis(ctx, std::move(run.basis));
}

GroebnerBasis buchberger_no_criteria(const RingContextPtr& ctx,
                                     const std::vector<Polynomial>& gens) {
  check_generators(ctx, gens);
  BuchbergerRun run = buchberger_loop(ctx, gens, /*use_criteria=*/false, /*track=*/false);
  return reduce_basis(ctx, std::move(run.basis));
}

bool ideal_equal(const RingContextPtr& ctx, const std::vector<Polynomial>& lhs,
                 const std::vector<Polynomial>& rhs) {
  const GroebnerBasis a = buchberger(ctx, lhs);
  const GroebnerBasis b = buchberger(ctx, rhs);
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (a.elements[i] != b.elements[i]) return false;
  }
  return true;
}

namespace {

bool row_is_zero(const std::vector<Polynomial>& row) {
  return std::all_of(row.begin(), row.end(),
                     [](const Polynomial& f) { return f.is_zero(); });
}

// Scales the row so the first nonzero entry is monic.
void normalize_row(std::vector<Polynomial>& row) {
  for (const auto& f : row) {
    if (!f.is_zero()) {
      const FieldElement inv = f.lead_coefficient().inverse();
      for (auto& g : row) g = g.times_scalar(inv);
      return;
    }
  }
}

// True when candidate = h * base for a single polynomial h.
bool is_polynomial_multiple(const std::vector<Polynomial>& candidate,
                            const std::vector<Polynomial>& base) {
  std::size_t pivot = base.size();
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (!base[s].is_zero()) {
      pivot = s;
      break;
    }
  }
  if (pivot == base.size()) return false;
  const DivisionResult div = divide(candidate[pivot], {base[pivot]});
  if (!div.remainder.is_zero()) return false;
  const Polynomial& h = div.quotients[0];
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (candidate[s] != h * base[s]) return false;
  }
  return true;
}

}  // namespace

SyzygyBasis syzygy_basis(const RingContextPtr& ctx, const std::vector<Polynomial>& gens) {
  check_generators(ctx, gens);
  SyzygyBasis out{ctx, gens.size(), {}};
  std::vector<std::vector<Polynomial>> rows;

  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (gens[s].is_zero()) {
      std::vector<Polynomial> row(gens.size(), Polynomial::zero(ctx));
      row[s] = Polynomial::constant(ctx, 1);
      rows.push_back(std::move(row));
    }
  }

  BuchbergerRun run = buchberger_loop(ctx, gens, /*use_criteria=*/false, /*track=*/true);
  for (auto& row : run.syzygy_rows) rows.push_back(std::move(row));

  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (std::size_t t = s + 1; t < gens.size(); ++t) {
      if (gens[s].is_zero() || gens[t].is_zero()) continue;
      std::vector<Polynomial> row(gens.size(), Polynomial::zero(ctx));
      row[s] = gens[t];
      row[t] = -gens[s];
      rows.push_back(std::move(row));
    }
  }

  // Smallest rows first, then drop duplicates and single-row multiples.
  for (auto& row : rows) normalize_row(row);
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    std::uint32_t da = 0, db = 0;
    std::size_t ta = 0, tb = 0;
    for (const auto& f : a) {
      da = std::max(da, f.is_zero() ? 0 : f.degree());
      ta += f.term_count();
    }
    for (const auto& f : b) {
      db = std::max(db, f.is_zero() ? 0 : f.degree());
      tb += f.term_count();
    }
    if (da != db) return da < db;
    return ta < tb;
  });
  for (auto& row : rows) {
    if (row_is_zero(row)) continue;
    bool dominated = false;
    for (const auto& kept : out.rows) {
      if (is_polynomial_multiple(row, kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<Polynomial> ideal_colon(const RingContextPtr& ctx,
                                    const std::vector<Polynomial>& gens,
                                    const Polynomial& f) {
  std::vector<Polynomial> extended;
  extended.reserve(gens.size() + 1);
  extended.push_back(f);
  for (const auto& g : gens) extended.push_back(g);
  const SyzygyBasis syz = syzygy_basis(ctx, extended);
  std::vector<Polynomial> colon;
  for (const auto& row : syz.rows) {
    if (!row[0].is_zero()) colon.push_back(row[0]);
  }
  return colon;
}

}  // namespace hklab
