#include "doctest.h"
#include "helpers.hpp"
#include "mfp/blowup.hpp"
#include "mfp/decider.hpp"
#include "mfp/error.hpp"
#include "mfp/fourbar.hpp"
#include "mfp/zerodim.hpp"

using namespace mfp;
using mfp::testing::ideal;
using mfp::testing::P;
using mfp::testing::q;

namespace {

IdealPresentation curve(const char* f) { return ideal(mfp::testing::ring({"x", "y"}), {f}); }

// Each original generator pulled back through the chart lies in the strict
// transform, and the exceptional variable is a non-zerodivisor modulo it.
void check_chart_invariants(const IdealPresentation& I, const BlowupChart& c) {
  for (const auto& g : I.generators()) CHECK(ideal_membership(substitute(g, c.pullbacks), c.strict_ideal));
  if (c.exceptional_generator) {
    IdealPresentation E(c.ring, {Polynomial::variable(c.ring, *c.exceptional_generator)});
    CHECK(ideals_equal(quotient(c.strict_ideal, E), c.strict_ideal));
  }
}

}  // namespace

TEST_CASE("blowup_origin examples") {
  auto node = curve("y^2 - x^2 - x^3");
  auto charts = blowup_origin(node);
  REQUIRE(charts.size() == 2);
  auto& cx = charts[0];
  CHECK(cx.variables().names() == std::vector<std::string>{"x", "yh"});
  CHECK(ideals_equal(cx.strict_ideal, ideal(cx.ring, {"yh^2 - 1 - x"})));
  CHECK(cx.saturation_steps == 2);  // x^2 * (yh^2 - 1 - x)
  CHECK(cx.depth == 1);

  auto cusp = blowup_origin(curve("y^2 - x^3"));
  CHECK(ideals_equal(cusp[0].strict_ideal, ideal(cusp[0].ring, {"yh^2 - x"})));

  auto p = FourBarParams::grashof(q(3, 2), q(3, 2));
  auto F = translate_ideal(fourbar_ideal(p), grashof_singular_point(p));
  auto fc = blowup_origin(F);
  REQUIRE(fc.size() == 4);
  auto& cy = fc[1];
  CHECK(cy.variables().names() == std::vector<std::string>{"xh", "y", "uh", "vh"});
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 4; ++i)
    images.push_back(i == 1 ? Polynomial::variable(cy.ring, 1)
                            : Polynomial::variable(cy.ring, 1) * Polynomial::variable(cy.ring, i));
  CHECK(substitute(F.generators()[0], images) == P(cy.ring, "y*(y*xh^2 + y + 3xh)"));

  CHECK_THROWS_AS(blowup_origin(curve("y^2 - x^3 - 1")), Error);
}

TEST_CASE("fiber_ideal examples") {
  auto cusp = blowup_origin(curve("y^2 - x^3"));
  auto& c = cusp[0];
  CHECK(ideals_equal(fiber_ideal(c, true), ideal(c.ring, {"x", "yh^2"})));
  auto node = blowup_origin(curve("y^2 - x^2 - x^3"));
  CHECK(ideals_equal(fiber_ideal(node[0], true), ideal(node[0].ring, {"x", "yh^2 - 1"})));
  auto vi = blowup_origin(curve("y^3 + 2x^2*y - x^4"));
  CHECK(ideals_equal(fiber_ideal(vi[0], true), ideal(vi[0].ring, {"x", "yh^3 + 2yh"})));
  CHECK(count_points(fiber_ideal(vi[0], true)) == PointCounts{3, 1});
}

TEST_CASE("resolve_curve examples") {
  auto node = resolve_curve(curve("y^2 - x^2 - x^3"));
  CHECK(node.depth == 1);
  for (const auto* leaf : node.leaves()) CHECK(leaf->chart.depth == 1);

  auto vii = resolve_curve(curve("y^3 - x^10"));
  CHECK(vii.depth > 1);
  CHECK(vii.depth == 3);

  auto smooth = resolve_curve(curve("y - x^2"));
  CHECK(smooth.depth == 0);
  CHECK(smooth.nodes.size() == 1);

  CHECK_THROWS_AS(resolve_curve(ideal(mfp::testing::ring({"x", "y", "z"}), {"z"})), Error);
}

TEST_CASE("resolve_curve error paths") {
  ResolveOptions shallow;
  shallow.max_depth = 2;
  try {
    resolve_curve(curve("y^3 - x^10"), shallow);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthExceeded);
  }
  // (y^2 - 2x^2)^2 - x^6: chart x gives (yh^2 - 2)^2 - x^2, nodes at yh = +-sqrt(2).
  try {
    resolve_curve(curve("(y^2 - 2x^2)^2 - x^6"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrationalSingularFiberPoint);
  }
}

TEST_CASE("fiber_summary examples") {
  auto s = fiber_summary(resolve_curve(curve("y^2 - x^2 - x^3")));
  CHECK(s.real_points == 2);
  CHECK(s.complex_points == 2);
  CHECK(s.nonreduced_real_points == 0);
  auto c = fiber_summary(resolve_curve(curve("y^2 - x^3")));
  CHECK(c.real_points == 1);
  CHECK(c.complex_points == 1);
  CHECK(c.nonreduced_real_points == 1);
  auto iso = fiber_summary(resolve_curve(curve("x^2 + y^2")));
  CHECK(iso.real_points == 0);
  CHECK(iso.complex_points == 2);
  CHECK(iso.nonreduced_real_points == 0);
  auto vii = fiber_summary(resolve_curve(curve("y^3 - x^10")));
  CHECK(vii.real_points == 1);
  CHECK(vii.nonreduced_real_points == 1);
}

TEST_CASE("property: pullback soundness and saturation on every chart") {
  for (const char* f : {"y^2 - x^2 - x^3", "y^2 - x^3", "y^3 + 2x^2*y - x^4", "x^3 - 5y^3", "y^3 - x^10", "x^2 + y^2"}) {
    auto I = curve(f);
    auto model = resolve_curve(I);
    for (const auto& n : model.nodes) check_chart_invariants(I, n.chart);
  }
  auto p = FourBarParams::grashof(q(3, 2), q(3, 2));
  auto F = translate_ideal(fourbar_ideal(p), grashof_singular_point(p));
  auto model = resolve_curve(F);
  CHECK(model.depth == 1);
  for (const auto& n : model.nodes) check_chart_invariants(F, n.chart);
}

TEST_CASE("property: dedup partitions the fiber") {
  // Projective count of the node's tangent directions: y^2 - x^2 = 0 has two
  // points in P^1. Charts x and y together with dedup see each exactly once.
  auto model = resolve_curve(curve("y^2 - x^2 - x^3"));
  auto s = fiber_summary(model);
  CHECK(s.complex_points == 2);
  std::size_t without_dedup = 0;
  for (const auto& n : model.nodes) {
    auto F = fiber_ideal(n.chart, false);
    if (!is_unit_ideal(F)) without_dedup += count_points(F).complex_distinct;
  }
  CHECK(without_dedup >= s.complex_points);
  // A cusp tangent to the y-axis is seen by chart y alone.
  auto m2 = resolve_curve(curve("x^2 - y^3"));
  auto s2 = fiber_summary(m2);
  CHECK(s2.complex_points == 1);
  CHECK(s2.real_points == 1);
}
