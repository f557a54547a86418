#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hklab/polynomial.hpp"

using namespace hklab;

namespace {

RingContextPtr ctx3() { return make_context(3, {"x", "y"}); }

Polynomial poly(const RingContextPtr& ctx, std::vector<std::pair<std::vector<std::uint16_t>, int>> terms) {
  std::vector<Term> out;
  for (auto& [e, c] : terms) {
    out.push_back(Term{Monomial(e), FieldElement(ctx->p, c)});
  }
  return Polynomial::from_terms(ctx, std::move(out));
}

Polynomial random_poly(const RingContextPtr& ctx, std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, 4);
  std::uniform_int_distribution<int> coeff(0, static_cast<int>(ctx->p) - 1);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<std::uint16_t> e(ctx->nvars());
    for (auto& x : e) x = static_cast<std::uint16_t>(expo(rng));
    terms.push_back(Term{Monomial(e), FieldElement(ctx->p, coeff(rng))});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

TEST_CASE("construction merges duplicates and drops zeros") {
  auto ctx = ctx3();
  const Polynomial f = poly(ctx, {{{1, 0}, 2}, {{1, 0}, 2}, {{0, 1}, 3}});
  // 2x + 2x + 3y = 4x + 0y = x over GF(3).
  CHECK(f == poly(ctx, {{{1, 0}, 1}}));
  CHECK(f.term_count() == 1);
  CHECK(poly(ctx, {}).is_zero());
}

TEST_CASE("terms stay strictly descending under the context order") {
  auto ctx = ctx3();
  const Polynomial f = poly(ctx, {{{0, 1}, 1}, {{2, 0}, 1}, {{1, 1}, 1}});
  for (std::size_t i = 0; i + 1 < f.terms().size(); ++i) {
    CHECK(ctx->order.greater(f.terms()[i].mono, f.terms()[i + 1].mono));
  }
  CHECK(f.lead_monomial() == Monomial({2, 0}));
}

TEST_CASE("ring arithmetic against hand expansions") {
  auto ctx = ctx3();
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial y = Polynomial::variable(ctx, 1);
  // (x + y)^2 = x^2 + 2xy + y^2
  CHECK((x + y) * (x + y) == poly(ctx, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
  // (x + y)^3 = x^3 + y^3 over GF(3)
  CHECK((x + y) * (x + y) * (x + y) == poly(ctx, {{{3, 0}, 1}, {{0, 3}, 1}}));
  CHECK((x - x).is_zero());
  CHECK(x + y - y == x);
  CHECK((x * y).lead_monomial() == Monomial({1, 1}));
}

TEST_CASE("ring axioms on random polynomials") {
  auto ctx = ctx3();
  std::mt19937 rng(20240812);
  for (int round = 0; round < 100; ++round) {
    const Polynomial f = random_poly(ctx, rng, 5);
    const Polynomial g = random_poly(ctx, rng, 5);
    const Polynomial h = random_poly(ctx, rng, 5);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f + Polynomial::zero(ctx) == f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("q-th power map agrees with repeated multiplication") {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ctx = make_context(p, {"x", "y"});
    for (int round = 0; round < 30; ++round) {
      const Polynomial f = random_poly(ctx, rng, 4);
      Polynomial power = Polynomial::constant(ctx, 1);
      for (std::uint32_t i = 0; i < p; ++i) power = power * f;
      CHECK(f.frobenius_power(p) == power);
      // Second Frobenius layer: (f^[p])^[p] = f^[p^2].
      CHECK(f.frobenius_power(p).frobenius_power(p) == f.frobenius_power(p * p));
    }
  }
}

TEST_CASE("bracket of x + y in characteristic 2") {
  auto ctx = make_context(2, {"x", "y"});
  const Polynomial f = Polynomial::variable(ctx, 0) + Polynomial::variable(ctx, 1);
  CHECK(f.frobenius_power(2) ==
        Polynomial::from_terms(ctx, {Term{Monomial({2, 0}), FieldElement(2, 1)},
                                     Term{Monomial({0, 2}), FieldElement(2, 1)}}));
}

TEST_CASE("constant detection for local-input screening") {
  auto ctx = ctx3();
  CHECK(poly(ctx, {{{1, 0}, 1}, {{0, 1}, 2}}).has_positive_degree_terms_only());
  CHECK_FALSE(poly(ctx, {{{1, 0}, 1}, {{0, 0}, 2}}).has_positive_degree_terms_only());
  CHECK(poly(ctx, {{{1, 0}, 1}, {{0, 0}, 2}}).constant_coefficient().residue() == 2);
  CHECK(Polynomial::zero(ctx).has_positive_degree_terms_only());
}

TEST_CASE("mapping into a wider variable set preserves arithmetic") {
  auto small = ctx3();
  auto wide = make_context(3, {"a", "x", "y", "b"});
  const std::vector<std::size_t> var_map = {1, 2};
  const Polynomial f = poly(small, {{{2, 1}, 2}, {{0, 1}, 1}});
  const Polynomial g = poly(small, {{{1, 0}, 1}});
  CHECK(f.mapped_to(wide, var_map) * g.mapped_to(wide, var_map) ==
        (f * g).mapped_to(wide, var_map));
  CHECK(f.mapped_to(wide, var_map).str() == "2*x^2*y + y");
}

TEST_CASE("mixing contexts is rejected with the specific mismatch") {
  auto a = ctx3();
  auto b = make_context(5, {"x", "y"});
  auto c = make_context(3, {"x", "z"});
  const Polynomial fa = Polynomial::variable(a, 0);
  const Polynomial fb = Polynomial::variable(b, 0);
  const Polynomial fc = Polynomial::variable(c, 0);
  try {
    (void)(fa + fb);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharMismatch);
  }
  try {
    (void)(fa + fc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("printing uses canonical residues and descending terms") {
  auto ctx = ctx3();
  const Polynomial f = poly(ctx, {{{0, 1}, -1}, {{2, 0}, 1}});
  CHECK(f.str() == "x^2 + 2*y");
  CHECK(Polynomial::zero(ctx).str() == "0");
  CHECK(Polynomial::constant(ctx, 1).str() == "1");
}

TEST_CASE("non-prime moduli are rejected at context construction") {
  CHECK_THROWS_AS(make_context(6, {"x"}), Error);
  CHECK_THROWS_AS(make_context(1, {"x"}), Error);
  CHECK_THROWS_AS(make_context(3, {"x", "x"}), Error);
}
