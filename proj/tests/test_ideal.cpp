#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mfp/ideal.hpp"

using namespace mfp;
using mfp::testing::ideal;
using mfp::testing::P;

TEST_CASE("eliminate examples") {
  auto r = mfp::testing::ring({"t", "x", "y"});
  auto E = eliminate(ideal(r, {"t - x", "t - y"}), 1);
  auto rxy = E.ring();
  CHECK(ideals_equal(E, ideal(rxy, {"x - y"})));

  auto r1 = mfp::testing::ring({"x", "y"});
  CHECK(eliminate(ideal(r1, {"x"}), 1).generators().empty());

  auto E2 = eliminate(ideal(r, {"t*x", "(1 - t)*y"}), 1);
  CHECK(ideals_equal(E2, ideal(E2.ring(), {"x*y"})));
}

TEST_CASE("intersect examples") {
  auto r = mfp::testing::ring({"x", "y"});
  CHECK(ideals_equal(intersect(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  auto I = ideal(r, {"y^2 - x^3", "x*y"});
  CHECK(ideals_equal(intersect(I, IdealPresentation::unit(r)), I));
  CHECK(ideals_equal(intersect(ideal(r, {"x^2"}), ideal(r, {"x"})), ideal(r, {"x^2"})));
}

TEST_CASE("quotient examples") {
  auto r = mfp::testing::ring({"x", "y"});
  CHECK(ideals_equal(quotient(ideal(r, {"x^2", "x*y"}), ideal(r, {"x"})), ideal(r, {"x", "y"})));
  auto I = ideal(r, {"y^2 - x^3"});
  CHECK(ideals_equal(quotient(I, IdealPresentation::unit(r)), I));
  auto rt = mfp::testing::ring({"t", "yh"});
  CHECK(ideals_equal(quotient(ideal(rt, {"t", "yh^2"}), ideal(rt, {"t", "yh"})), ideal(rt, {"t", "yh"})));
}

TEST_CASE("saturate examples") {
  auto r = mfp::testing::ring({"t", "x", "y"});
  auto S = saturate(ideal(r, {"t^2*x", "t^3*y"}), ideal(r, {"t"}));
  CHECK(ideals_equal(S.ideal, ideal(r, {"x", "y"})));
  CHECK(S.iterations == 3);
  auto I = ideal(r, {"x*y - t", "t^2"});
  auto S1 = saturate(I, IdealPresentation::unit(r));
  CHECK(ideals_equal(S1.ideal, I));
  CHECK(S1.iterations == 0);
}

TEST_CASE("krull_dimension examples") {
  auto r = mfp::testing::ring({"v", "y", "u", "x"});
  CHECK(krull_dimension(ideal(r, {"u^2*x", "v*u", "v*x^2", "y^2", "v*y", "v^2"})) == 1);
  auto r2 = mfp::testing::ring({"x", "y"});
  CHECK(krull_dimension(ideal(r2, {"x", "y"})) == 0);
  CHECK(krull_dimension(IdealPresentation(r, {})) == 4);
  CHECK(krull_dimension(IdealPresentation::unit(r2)) == -1);
  CHECK(krull_dimension(ideal(r2, {"y^2 - x^2 - x^3"})) == 1);
}

TEST_CASE("four-bar instance ideal has dimension 1") {
  auto r = mfp::testing::ring({"v", "y", "u", "x"});
  auto I = ideal(r, {"x^2 + y^2 - 9/4", "(u - 2)^2 + v^2 - 1", "(u - x)^2 + (v - y)^2 - 9/4"});
  CHECK(krull_dimension(I) == 1);
}

TEST_CASE("property: containment chain, saturation stability, intersection symmetry") {
  auto r = mfp::testing::ring({"x", "y"});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    auto f = mfp::testing::random_polynomial(rng, r, 3, 2);
    auto g = mfp::testing::random_polynomial(rng, r, 3, 2);
    auto h = mfp::testing::random_polynomial(rng, r, 2, 1);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    IdealPresentation I(r, {f * h, g * h * h});
    IdealPresentation J(r, {h});
    auto Q = quotient(I, J);
    auto S = saturate(I, J);
    CHECK(contains(Q, I));
    CHECK(contains(S.ideal, Q));
    CHECK(ideals_equal(saturate(S.ideal, J).ideal, S.ideal));

    IdealPresentation K(r, {g});
    auto IK = intersect(I, K);
    auto KI = intersect(K, I);
    CHECK(contains(I, IK));
    CHECK(contains(K, IK));
    CHECK(ideals_equal(IK, KI));
  }
}
