#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hklab/groebner.hpp"

using namespace hklab;

// ---------------------------------------------------------------------------
// Independent oracle: a textbook Buchberger loop over map-backed polynomials,
// no pair criteria, no interreduction, plus exhaustive staircase enumeration.
// Written directly from the definitions so it shares nothing with the engine.
// ---------------------------------------------------------------------------
namespace naive {

using Expo = std::vector<int>;

int deg(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

struct Less {
  bool operator()(const Expo& a, const Expo& b) const {
    if (deg(a) != deg(b)) return deg(a) < deg(b);
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

using Poly = std::map<Expo, long, Less>;

long inv_mod(long a, long p) {
  long r = 1, b = a % p;
  for (long e = p - 2; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

void add_term(Poly& f, const Expo& e, long c, long p) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return;
  auto [it, fresh] = f.emplace(e, 0);
  it->second = (it->second + c) % p;
  if (it->second == 0) f.erase(it);
  (void)fresh;
}

const Expo& lead(const Poly& f) { return f.rbegin()->first; }
long lead_coeff(const Poly& f) { return f.rbegin()->second; }

bool expo_divides(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Poly times_term(const Poly& f, const Expo& e, long c, long p) {
  Poly out;
  for (const auto& [fe, fc] : f) {
    Expo ne = fe;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
    add_term(out, ne, fc * c % p, p);
  }
  return out;
}

Poly minus(Poly a, const Poly& b, long p) {
  for (const auto& [e, c] : b) add_term(a, e, -c, p);
  return a;
}

Poly spoly(const Poly& f, const Poly& g, long p) {
  const Expo &lf = lead(f), &lg = lead(g);
  Expo l(lf.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(lf[i], lg[i]);
  Expo uf = l, ug = l;
  for (std::size_t i = 0; i < l.size(); ++i) {
    uf[i] -= lf[i];
    ug[i] -= lg[i];
  }
  return minus(times_term(f, uf, inv_mod(lead_coeff(f), p), p),
               times_term(g, ug, inv_mod(lead_coeff(g), p), p), p);
}

Poly reduce(Poly f, const std::vector<Poly>& basis, long p) {
  Poly remainder;
  while (!f.empty()) {
    bool divided = false;
    for (const auto& g : basis) {
      if (!expo_divides(lead(g), lead(f))) continue;
      Expo u = lead(f);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= lead(g)[i];
      f = minus(f, times_term(g, u, lead_coeff(f) * inv_mod(lead_coeff(g), p) % p, p), p);
      divided = true;
      break;
    }
    if (!divided) {
      add_term(remainder, lead(f), lead_coeff(f), p);
      f.erase(std::prev(f.end()));
    }
  }
  return remainder;
}

std::vector<Poly> groebner(std::vector<Poly> gens, long p) {
  std::vector<Poly> basis;
  for (auto& g : gens) {
    if (!g.empty()) basis.push_back(std::move(g));
  }
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
  }
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    Poly r = reduce(spoly(basis[i], basis[j], p), basis, p);
    if (r.empty()) continue;
    basis.push_back(std::move(r));
    for (std::size_t i2 = 0; i2 + 1 < basis.size(); ++i2) {
      queue.emplace_back(i2, basis.size() - 1);
    }
  }
  return basis;
}

// Minimal lead exponents of a basis (drop any divisible by another).
std::vector<Expo> minimal_leads(const std::vector<Poly>& basis) {
  std::vector<Expo> leads;
  for (const auto& g : basis) leads.push_back(lead(g));
  std::vector<Expo> minimal;
  for (const auto& e : leads) {
    bool redundant = false;
    for (const auto& other : leads) {
      if (other != e && expo_divides(other, e)) redundant = true;
    }
    if (redundant) continue;
    if (std::find(minimal.begin(), minimal.end(), e) == minimal.end()) {
      minimal.push_back(e);
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// Exhaustive staircase count: enumerate the box cut out by the pure-power
// leads and count the monomials no lead divides.
std::uint64_t count_standard(const std::vector<Expo>& leads, std::size_t nvars) {
  std::vector<int> bound(nvars, -1);
  for (const auto& e : leads) {
    int support = 0, var = -1;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] > 0) {
        ++support;
        var = static_cast<int>(i);
      }
    }
    if (support == 1 && (bound[var] < 0 || e[var] < bound[var])) bound[var] = e[var];
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    REQUIRE(bound[i] >= 0);  // oracle only called on Artinian ideals
  }
  std::uint64_t count = 0;
  Expo point(nvars, 0);
  while (true) {
    bool inside = false;
    for (const auto& e : leads) {
      if (expo_divides(e, point)) {
        inside = true;
        break;
      }
    }
    if (!inside) ++count;
    std::size_t i = 0;
    while (i < nvars && point[i] + 1 >= bound[i]) point[i++] = 0;
    if (i == nvars) break;
    ++point[i];
  }
  return count;
}

}  // namespace naive

// ---------------------------------------------------------------------------
// Bridges between engine values and oracle values.
// ---------------------------------------------------------------------------
namespace {

Polynomial pp(const RingContextPtr& ctx,
              std::vector<std::pair<std::vector<std::uint16_t>, int>> terms) {
  std::vector<Term> out;
  for (auto& [e, c] : terms) out.push_back(Term{Monomial(e), FieldElement(ctx->p, c)});
  return Polynomial::from_terms(ctx, std::move(out));
}

naive::Poly to_naive(const Polynomial& f) {
  naive::Poly out;
  for (const auto& t : f.terms()) {
    naive::Expo e(t.mono.exponents().begin(), t.mono.exponents().end());
    naive::add_term(out, e, t.coeff.residue(), f.context()->p);
  }
  return out;
}

naive::Expo to_naive_expo(const Monomial& m) {
  return naive::Expo(m.exponents().begin(), m.exponents().end());
}

// Structural checks that a basis is the reduced basis of the ideal it spans:
// monic, pairwise non-divisible lead monomials, irreducible tails, every
// S-polynomial reducing to zero.
void check_reduced_groebner(const GroebnerBasis& basis) {
  const auto& ctx = basis.ctx;
  for (const auto& g : basis.elements) {
    CHECK(g.lead_coefficient().is_one());
  }
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    for (std::size_t j = 0; j < basis.elements.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(basis.elements[i].lead_monomial().divides(
          basis.elements[j].lead_monomial()));
      for (std::size_t t = 1; t < basis.elements[j].terms().size(); ++t) {
        CHECK_FALSE(basis.elements[i].lead_monomial().divides(
            basis.elements[j].terms()[t].mono));
      }
    }
  }
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
      const Polynomial s = s_polynomial(basis.elements[i], basis.elements[j]);
      CHECK(normal_form(s, basis).is_zero());
    }
  }
  for (std::size_t i = 0; i + 1 < basis.elements.size(); ++i) {
    CHECK(ctx->order.less(basis.elements[i].lead_monomial(),
                          basis.elements[i + 1].lead_monomial()));
  }
}

// Full agreement with the oracle: same minimal lead exponents, mutual
// membership, and (on Artinian ideals) the same staircase count.
void check_against_oracle(const RingContextPtr& ctx, const std::vector<Polynomial>& gens,
                          bool compare_counts) {
  const GroebnerBasis basis = buchberger(ctx, gens);
  check_reduced_groebner(basis);

  std::vector<naive::Poly> naive_gens;
  for (const auto& g : gens) naive_gens.push_back(to_naive(g));
  const std::vector<naive::Poly> naive_basis = naive::groebner(naive_gens, ctx->p);

  std::vector<naive::Expo> engine_leads;
  for (const auto& g : basis.elements) engine_leads.push_back(to_naive_expo(g.lead_monomial()));
  std::sort(engine_leads.begin(), engine_leads.end());
  CHECK(engine_leads == naive::minimal_leads(naive_basis));

  for (const auto& g : basis.elements) {
    CHECK(naive::reduce(to_naive(g), naive_basis, ctx->p).empty());
  }
  for (const auto& g : gens) {
    CHECK(normal_form(g, basis).is_zero());
  }

  if (compare_counts) {
    std::vector<naive::Expo> leads;
    for (const auto& g : naive_basis) leads.push_back(naive::lead(g));
    CHECK(naive::count_standard(leads, ctx->nvars()) ==
          naive::count_standard(engine_leads, ctx->nvars()));
  }
}

}  // namespace

TEST_CASE("s-polynomial of a worked pair") {
  auto ctx = make_context(3, {"x", "y"});
  // f = x^2 + y, g = xy + y, lcm = x^2 y:
  //   S = y f - x g = y^2 - xy = 2xy + y^2 over GF(3).
  const Polynomial f = pp(ctx, {{{2, 0}, 1}, {{0, 1}, 1}});
  const Polynomial g = pp(ctx, {{{1, 1}, 1}, {{0, 1}, 1}});
  CHECK(s_polynomial(f, g) == pp(ctx, {{{1, 1}, 2}, {{0, 2}, 1}}));
}

TEST_CASE("division identity f = sum q_i g_i + r with irreducible remainder") {
  auto ctx = make_context(5, {"x", "y"});
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> expo(0, 4), coeff(0, 4), nterm(1, 6);
  auto rand_poly = [&] {
    std::vector<Term> terms;
    const int k = nterm(rng);
    for (int t = 0; t < k; ++t) {
      terms.push_back(Term{Monomial({static_cast<std::uint16_t>(expo(rng)),
                                     static_cast<std::uint16_t>(expo(rng))}),
                           FieldElement(5, coeff(rng))});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
  };
  for (int round = 0; round < 100; ++round) {
    const Polynomial f = rand_poly();
    std::vector<Polynomial> divisors = {rand_poly(), rand_poly()};
    divisors.erase(std::remove_if(divisors.begin(), divisors.end(),
                                  [](const Polynomial& g) { return g.is_zero(); }),
                   divisors.end());
    if (divisors.empty()) continue;
    const DivisionResult div = divide(f, divisors);
    Polynomial recombined = div.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      recombined += div.quotients[i] * divisors[i];
    }
    CHECK(recombined == f);
    for (const auto& t : div.remainder.terms()) {
      for (const auto& g : divisors) {
        CHECK_FALSE(g.lead_monomial().divides(t.mono));
      }
    }
  }
}

TEST_CASE("frozen reduced basis of a classic two-variable ideal") {
  // (x^3 - 2xy, x^2 y - 2y^2 + x) over GF(7), grevlex.  Hand run: the
  // S-pair chain yields x^2, then xy, then y^2 - x/2; with 1/2 = 4 in GF(7)
  // the reduced basis is {x^2, xy, y^2 + 3x}.
  auto ctx = make_context(7, {"x", "y"});
  const Polynomial f1 = pp(ctx, {{{3, 0}, 1}, {{1, 1}, -2}});
  const Polynomial f2 = pp(ctx, {{{2, 1}, 1}, {{0, 2}, -2}, {{1, 0}, 1}});
  const GroebnerBasis basis = buchberger(ctx, {f1, f2});
  REQUIRE(basis.elements.size() == 3);
  // Ascending lead monomials under grevlex: y^2 < xy < x^2.
  CHECK(basis.elements[0] == pp(ctx, {{{0, 2}, 1}, {{1, 0}, 3}}));
  CHECK(basis.elements[1] == pp(ctx, {{{1, 1}, 1}}));
  CHECK(basis.elements[2] == pp(ctx, {{{2, 0}, 1}}));
  check_against_oracle(ctx, {f1, f2}, false);
}

TEST_CASE("engine agrees with the criterion-free oracle on mixed ideals") {
  auto ctx = make_context(3, {"x", "y", "z"});
  const Polynomial x3 = pp(ctx, {{{3, 0, 0}, 1}});
  const Polynomial y3 = pp(ctx, {{{0, 3, 0}, 1}});
  const Polynomial xy_z2 = pp(ctx, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}});
  check_against_oracle(ctx, {x3, y3, xy_z2}, true);

  // A complete intersection of degrees 3, 3, 2 has length 18; the staircase
  // count of the lead ideal must match.
  const GroebnerBasis basis = buchberger(ctx, {x3, y3, xy_z2});
  std::vector<naive::Expo> leads;
  for (const auto& g : basis.elements) leads.push_back(to_naive_expo(g.lead_monomial()));
  CHECK(naive::count_standard(leads, 3) == 18);
}

TEST_CASE("engine agrees with the oracle on random small ideals") {
  std::mt19937 rng(20240813);
  std::uniform_int_distribution<int> expo(0, 3), nterm(1, 3), ngens(2, 3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ctx = make_context(p, {"x", "y"});
    std::uniform_int_distribution<int> coeff(1, static_cast<int>(p) - 1);
    for (int round = 0; round < 25; ++round) {
      std::vector<Polynomial> gens;
      const int k = ngens(rng);
      for (int g = 0; g < k; ++g) {
        std::vector<Term> terms;
        const int t = nterm(rng);
        for (int s = 0; s < t; ++s) {
          terms.push_back(Term{Monomial({static_cast<std::uint16_t>(expo(rng)),
                                         static_cast<std::uint16_t>(expo(rng))}),
                               FieldElement(p, coeff(rng))});
        }
        gens.push_back(Polynomial::from_terms(ctx, std::move(terms)));
      }
      const bool all_zero = std::all_of(gens.begin(), gens.end(),
                                        [](const Polynomial& f) { return f.is_zero(); });
      if (all_zero) continue;
      check_against_oracle(ctx, gens, false);
    }
  }
}

TEST_CASE("criteria do not change the computed basis") {
  auto ctx = make_context(3, {"x", "y", "z"});
  const std::vector<Polynomial> gens = {
      pp(ctx, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}),
      pp(ctx, {{{3, 0, 0}, 1}, {{0, 1, 1}, 2}}),
      pp(ctx, {{{0, 3, 0}, 1}}),
  };
  const GroebnerBasis fast = buchberger(ctx, gens);
  const GroebnerBasis slow = buchberger_no_criteria(ctx, gens);
  REQUIRE(fast.elements.size() == slow.elements.size());
  for (std::size_t i = 0; i < fast.elements.size(); ++i) {
    CHECK(fast.elements[i] == slow.elements[i]);
  }
}

TEST_CASE("reduced basis is independent of generator order and scaling") {
  auto ctx = make_context(5, {"x", "y"});
  std::vector<Polynomial> gens = {
      pp(ctx, {{{3, 0}, 1}, {{1, 1}, 3}}),
      pp(ctx, {{{2, 1}, 1}, {{0, 2}, 3}, {{1, 0}, 1}}),
      pp(ctx, {{{0, 4}, 2}}),
  };
  const GroebnerBasis reference = buchberger(ctx, gens);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> scale(1, 4);
  for (int round = 0; round < 10; ++round) {
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g = g.times_scalar(FieldElement(5, scale(rng)));
    const GroebnerBasis redone = buchberger(ctx, shuffled);
    REQUIRE(redone.elements.size() == reference.elements.size());
    for (std::size_t i = 0; i < reference.elements.size(); ++i) {
      CHECK(redone.elements[i] == reference.elements[i]);
    }
  }
}

TEST_CASE("unit and zero ideals") {
  auto ctx = make_context(3, {"x"});
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial x_plus_1 = x + Polynomial::constant(ctx, 1);
  const GroebnerBasis unit = buchberger(ctx, {x, x_plus_1});
  CHECK(unit.is_unit_ideal());
  REQUIRE(unit.elements.size() == 1);
  CHECK(unit.elements[0] == Polynomial::constant(ctx, 1));

  const GroebnerBasis one = buchberger(ctx, {Polynomial::constant(ctx, 1)});
  CHECK(one.is_unit_ideal());

  const GroebnerBasis zero = buchberger(ctx, {Polynomial::zero(ctx)});
  CHECK(zero.is_zero_ideal());
  CHECK(ideal_equal(ctx, {Polynomial::zero(ctx)}, {}));
}

TEST_CASE("ideal equality compares spans, not generator lists") {
  auto ctx = make_context(3, {"x", "y"});
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial y = Polynomial::variable(ctx, 1);
  CHECK(ideal_equal(ctx, {x, y}, {x + y, y}));
  CHECK(ideal_equal(ctx, {x * x, x * y, y * y}, {x * x, y * y, x * y, x * x + x * y}));
  CHECK_FALSE(ideal_equal(ctx, {x}, {x * x}));
  CHECK_FALSE(ideal_equal(ctx, {x}, {y}));
}

TEST_CASE("normal forms match the oracle's fully reduced remainders") {
  auto ctx = make_context(3, {"x", "y"});
  const std::vector<Polynomial> gens = {
      pp(ctx, {{{2, 0}, 1}, {{0, 1}, 2}}),
      pp(ctx, {{{1, 2}, 1}, {{1, 0}, 1}}),
  };
  const GroebnerBasis basis = buchberger(ctx, gens);
  std::vector<naive::Poly> naive_basis = naive::groebner({to_naive(gens[0]), to_naive(gens[1])}, 3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> expo(0, 5), coeff(0, 2);
  for (int round = 0; round < 50; ++round) {
    std::vector<Term> terms;
    for (int t = 0; t < 4; ++t) {
      terms.push_back(Term{Monomial({static_cast<std::uint16_t>(expo(rng)),
                                     static_cast<std::uint16_t>(expo(rng))}),
                           FieldElement(3, coeff(rng))});
    }
    const Polynomial f = Polynomial::from_terms(ctx, std::move(terms));
    CHECK(to_naive(normal_form(f, basis)) == naive::reduce(to_naive(f), naive_basis, 3));
  }
}

TEST_CASE("syzygies of (x^2, x^3) are generated by (x, -1)") {
  auto ctx = make_context(5, {"x"});
  const Polynomial x2 = pp(ctx, {{{2}, 1}});
  const Polynomial x3 = pp(ctx, {{{3}, 1}});
  const SyzygyBasis syz = syzygy_basis(ctx, {x2, x3});
  REQUIRE(syz.rows.size() >= 1);
  // Every row is a relation.
  for (const auto& row : syz.rows) {
    CHECK((row[0] * x2 + row[1] * x3).is_zero());
  }
  // The minimal relation itself is present.
  bool found = false;
  for (const auto& row : syz.rows) {
    if (row[0] == Polynomial::variable(ctx, 0) && row[1] == -Polynomial::constant(ctx, 1)) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("syzygies of (x, y) are generated by (y, -x)") {
  auto ctx = make_context(3, {"x", "y"});
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial y = Polynomial::variable(ctx, 1);
  const SyzygyBasis syz = syzygy_basis(ctx, {x, y});
  REQUIRE(syz.rows.size() == 1);
  CHECK(syz.rows[0][0] == y);
  CHECK(syz.rows[0][1] == -x);
}

TEST_CASE("syzygy rows of random ideals are honest relations") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> expo(0, 2), nterm(1, 2);
  auto ctx = make_context(3, {"x", "y"});
  for (int round = 0; round < 20; ++round) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term> terms;
      const int t = nterm(rng);
      for (int s = 0; s < t; ++s) {
        terms.push_back(Term{Monomial({static_cast<std::uint16_t>(expo(rng)),
                                       static_cast<std::uint16_t>(expo(rng))}),
                             FieldElement(3, 1)});
      }
      gens.push_back(Polynomial::from_terms(ctx, std::move(terms)));
    }
    const SyzygyBasis syz = syzygy_basis(ctx, gens);
    for (const auto& row : syz.rows) {
      Polynomial acc = Polynomial::zero(ctx);
      for (std::size_t s = 0; s < gens.size(); ++s) acc += row[s] * gens[s];
      CHECK(acc.is_zero());
    }
    // Random module combinations of rows stay relations.
    std::uniform_int_distribution<int> pick(0, 1);
    if (!syz.rows.empty()) {
      std::vector<Polynomial> combo(gens.size(), Polynomial::zero(ctx));
      for (const auto& row : syz.rows) {
        const Polynomial mult = pp(ctx, {{{static_cast<std::uint16_t>(pick(rng)),
                                           static_cast<std::uint16_t>(pick(rng))},
                                          1}});
        for (std::size_t s = 0; s < gens.size(); ++s) combo[s] += mult * row[s];
      }
      Polynomial acc = Polynomial::zero(ctx);
      for (std::size_t s = 0; s < gens.size(); ++s) acc += combo[s] * gens[s];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("zero generators contribute unit syzygy rows") {
  auto ctx = make_context(3, {"x"});
  const Polynomial x = Polynomial::variable(ctx, 0);
  const SyzygyBasis syz = syzygy_basis(ctx, {x, Polynomial::zero(ctx)});
  bool found = false;
  for (const auto& row : syz.rows) {
    if (row[0].is_zero() && row[1] == Polynomial::constant(ctx, 1)) found = true;
  }
  CHECK(found);
}

TEST_CASE("a single generator in a polynomial ring has no relations") {
  auto ctx = make_context(5, {"x", "y"});
  const SyzygyBasis syz = syzygy_basis(ctx, {pp(ctx, {{{2, 1}, 1}, {{0, 3}, 4}})});
  CHECK(syz.rows.empty());
}

TEST_CASE("ideal colon via syzygies") {
  auto ctx = make_context(3, {"x", "y"});
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial y = Polynomial::variable(ctx, 1);
  // ((x^3, y^3) : x) = (x^2, y^3)
  const auto colon = ideal_colon(ctx, {x * x * x, y * y * y}, x);
  CHECK(ideal_equal(ctx, colon, {x * x, y * y * y}));
  // ((xy) : x) = (y)
  const auto colon2 = ideal_colon(ctx, {x * y}, x);
  CHECK(ideal_equal(ctx, colon2, {y}));
}
