#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hklab/monomial.hpp"

using namespace hklab;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("grevlex and lex disagree on x^2 vs x*y^2") {
  const MonomialOrder grevlex(OrderKind::Grevlex);
  const MonomialOrder lex(OrderKind::Lex);
  const Monomial x2 = mono({2, 0});
  const Monomial xy2 = mono({1, 2});
  CHECK(grevlex.less(x2, xy2));     // degree 2 < degree 3
  CHECK(lex.greater(x2, xy2));      // first exponent 2 > 1
}

TEST_CASE("frozen descending chains on the degree-2 monomials in 3 variables") {
  // x > y > z.  Hand-derived orderings:
  // grevlex: x^2 > xy > y^2 > xz > yz > z^2
  // lex:     x^2 > xy > xz > y^2 > yz > z^2
  const Monomial x2 = mono({2, 0, 0}), xy = mono({1, 1, 0}), y2 = mono({0, 2, 0});
  const Monomial xz = mono({1, 0, 1}), yz = mono({0, 1, 1}), z2 = mono({0, 0, 2});

  const MonomialOrder grevlex(OrderKind::Grevlex);
  const std::vector<Monomial> grevlex_chain = {x2, xy, y2, xz, yz, z2};
  for (std::size_t i = 0; i + 1 < grevlex_chain.size(); ++i) {
    CHECK(grevlex.greater(grevlex_chain[i], grevlex_chain[i + 1]));
  }

  const MonomialOrder lex(OrderKind::Lex);
  const std::vector<Monomial> lex_chain = {x2, xy, xz, y2, yz, z2};
  for (std::size_t i = 0; i + 1 < lex_chain.size(); ++i) {
    CHECK(lex.greater(lex_chain[i], lex_chain[i + 1]));
  }
}

TEST_CASE("variable permutation reverses the roles") {
  // Comparison order z > y > x.
  const MonomialOrder grevlex_zyx(OrderKind::Grevlex, {2, 1, 0});
  const Monomial x = mono({1, 0, 0}), z = mono({0, 0, 1});
  CHECK(grevlex_zyx.greater(z, x));
  const MonomialOrder lex_zyx(OrderKind::Lex, {2, 1, 0});
  CHECK(lex_zyx.greater(z, x));
}

TEST_CASE("orders are total and agree with equality") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 6);
  for (const auto kind : {OrderKind::Grevlex, OrderKind::Lex}) {
    const MonomialOrder order(kind);
    for (int round = 0; round < 500; ++round) {
      const Monomial a = mono({static_cast<std::uint16_t>(e(rng)),
                               static_cast<std::uint16_t>(e(rng)),
                               static_cast<std::uint16_t>(e(rng))});
      const Monomial b = mono({static_cast<std::uint16_t>(e(rng)),
                               static_cast<std::uint16_t>(e(rng)),
                               static_cast<std::uint16_t>(e(rng))});
      const int ab = order.compare(a, b);
      const int ba = order.compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      // Multiplicative compatibility: a > b implies am > bm.
      const Monomial m = mono({1, 2, 0});
      if (ab > 0) CHECK(order.greater(a.times(m), b.times(m)));
    }
  }
}

TEST_CASE("product, quotient, lcm, gcd-free coprimality") {
  const Monomial a = mono({3, 0, 2});
  const Monomial b = mono({1, 4, 0});
  CHECK(a.times(b) == mono({4, 4, 2}));
  CHECK(a.lcm(b) == mono({3, 4, 2}));
  CHECK_FALSE(a.divides(b));
  CHECK(mono({1, 0, 0}).divides(a));
  CHECK(a.times(b).quotient(b) == a);
  CHECK_FALSE(a.coprime(b));
  CHECK(mono({2, 0, 0}).coprime(mono({0, 3, 1})));
  CHECK(a.degree() == 5);
  CHECK(mono({0, 0, 0}).is_constant());
  CHECK_THROWS_AS(b.quotient(a), Error);
  try {
    b.quotient(a);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("16-bit exponent overflow is detected") {
  const Monomial big = mono({40000});
  CHECK_THROWS_AS(big.times(mono({30000})), Error);
  CHECK_THROWS_AS(big.power(2), Error);
  CHECK(big.power(1) == big);
  CHECK(mono({255}).power(257) == mono({65535}));
  try {
    big.power(3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExponentOverflow);
  }
}

TEST_CASE("monomial powers multiply exponents") {
  CHECK(mono({2, 1, 0}).power(9) == mono({18, 9, 0}));
  CHECK(mono({0, 0, 0}).power(1000) == mono({0, 0, 0}));
}
