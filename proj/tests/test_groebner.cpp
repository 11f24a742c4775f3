#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mfp/groebner.hpp"
#include "mfp/ideal.hpp"

using namespace mfp;
using mfp::testing::P;

namespace {

std::vector<std::string> lm_strings(const GroebnerBasis& G) {
  std::vector<std::string> out;
  for (const auto& g : G.basis) out.push_back(g.leading_monomial().to_string(G.ring->variables()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("normal_form examples") {
  auto r = mfp::testing::ring({"x", "y"});
  CHECK(normal_form(P(r, "x^2*y"), {P(r, "x^2 - y")}) == P(r, "y^2"));
  CHECK(normal_form(P(r, "x^2 - y"), {P(r, "x^2 - y")}).is_zero());
  CHECK(normal_form(P(r, "x + y"), {P(r, "x - y")}) == P(r, "2y"));
}

TEST_CASE("normal_form remainder property") {
  auto r = mfp::testing::ring({"x", "y", "z"});
  std::mt19937 rng(8);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> G{mfp::testing::random_polynomial(rng, r), mfp::testing::random_polynomial(rng, r)};
    if (G[0].is_zero() || G[1].is_zero()) continue;
    auto f = mfp::testing::random_polynomial(rng, r, 6, 5);
    auto rem = normal_form(f, G);
    for (const auto& t : rem.terms())
      for (const auto& g : G) CHECK_FALSE(g.leading_monomial().divides(t.monomial));
    IdealPresentation I(r, G);
    CHECK(ideal_membership(f - rem, I));
  }
}

TEST_CASE("buchberger examples") {
  auto r = mfp::testing::ring({"x", "y"});
  auto G = buchberger({P(r, "x + y"), P(r, "x - y")}, MonomialOrder::grevlex());
  REQUIRE(G.basis.size() == 2);
  CHECK(G.basis[0] == P(r, "y"));
  CHECK(G.basis[1] == P(r, "x"));

  auto lex = buchberger({P(r, "x*y - 1"), P(r, "y^2 - 1")}, MonomialOrder::lex());
  REQUIRE(lex.basis.size() == 2);
  auto rl = lex.ring;
  CHECK(lex.basis[0] == P(rl, "y^2 - 1"));
  CHECK(lex.basis[1] == P(rl, "x - y"));
  // Oracle: both generating sets describe the same ideal (mutual membership).
  IdealPresentation original(rl, {P(rl, "x*y - 1"), P(rl, "y^2 - 1")});
  IdealPresentation claimed(rl, {P(rl, "x - y"), P(rl, "y^2 - 1")});
  CHECK(ideals_equal(original, claimed));
  CHECK(satisfies_buchberger_criterion(lex));
}

TEST_CASE("four-bar block-order basis has the expected leading monomials") {
  // Enumeration v,y,u,x; block order grevlex{v,y} | grevlex{u,x}; l2 = l4 = 3/2, l3 = 1.
  auto r = Ring::make({"v", "y", "u", "x"}, MonomialOrder::block(2));
  RationalPoint p{0, 0, 3, mfp::testing::q(3, 2)};
  std::vector<Polynomial> gens;
  for (const char* g : {"x^2 + y^2 - 9/4", "(u - 2)^2 + v^2 - 1", "(u - x)^2 + (v - y)^2 - 9/4"})
    gens.push_back(translate(P(r, g), p));
  auto G = buchberger(gens, MonomialOrder::block(2));
  CHECK(satisfies_buchberger_criterion(G));
  std::vector<std::string> expected{"u^2*x", "v*u", "v*x^2", "y^2", "v*y", "v^2"};
  std::sort(expected.begin(), expected.end());
  CHECK(lm_strings(G) == expected);

  // The untranslated ideal has the same leading monomials.
  std::vector<Polynomial> raw;
  for (const char* g : {"x^2 + y^2 - 9/4", "(u - 2)^2 + v^2 - 1", "(u - x)^2 + (v - y)^2 - 9/4"})
    raw.push_back(P(r, g));
  CHECK(lm_strings(buchberger(raw, MonomialOrder::block(2))) == expected);
}

TEST_CASE("ideal_membership examples") {
  auto r = mfp::testing::ring({"x", "y"});
  IdealPresentation X(r, {P(r, "x")});
  CHECK(ideal_membership(P(r, "x*y"), X));
  CHECK_FALSE(ideal_membership(P(r, "1"), mfp::testing::ideal(r, {"x", "y"})));
  auto node = mfp::testing::ideal(r, {"y^2 - x^2 - x^3"});
  CHECK(ideal_membership(P(r, "y^2 - x^2 - x^3"), node));
}

TEST_CASE("property: self-check, idempotence, order-independent membership") {
  auto r = mfp::testing::ring({"x", "y", "z"});
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(mfp::testing::random_polynomial(rng, r, 3, 2));
    auto G = buchberger(gens, MonomialOrder::grevlex());
    CHECK(satisfies_buchberger_criterion(G));
    auto again = buchberger(G.basis, MonomialOrder::grevlex());
    REQUIRE(again.basis.size() == G.basis.size());
    for (std::size_t i = 0; i < G.basis.size(); ++i) CHECK(again.basis[i] == G.basis[i]);

    auto L = buchberger(gens, MonomialOrder::lex());
    CHECK(satisfies_buchberger_criterion(L));
    for (int probe = 0; probe < 5; ++probe) {
      Polynomial f = mfp::testing::random_polynomial(rng, r, 2, 2) * gens[probe % 3];
      if (probe % 2) f += mfp::testing::random_polynomial(rng, r, 1, 1);
      bool in_grevlex = normal_form(f, G).is_zero();
      bool in_lex = normal_form(f, L).is_zero();
      CHECK(in_grevlex == in_lex);
    }
  }
}
