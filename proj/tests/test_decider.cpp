#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mfp/decider.hpp"
#include "mfp/oracle.hpp"

using namespace mfp;
using mfp::testing::ideal;
using mfp::testing::q;

namespace {

RingPtr xy() { return mfp::testing::ring({"x", "y"}); }

Verdict verdict_of(const char* f, RationalPoint p = {0, 0}, ClassifyOptions opts = {}) {
  return classify_point(ideal(xy(), {f}), p, opts).verdict;
}

}  // namespace

TEST_CASE("classify_point examples") {
  CHECK(verdict_of("y^2 - x^2 - x^3") == Verdict::NotManifoldPoint);
  CHECK(verdict_of("y^3 + 2x^2*y - x^4") == Verdict::ManifoldPointAtSingularity);
  CHECK(verdict_of("y^3 - x^10") == Verdict::NotManifoldPoint);
  CHECK(verdict_of("x^3 - 5y^3") == Verdict::ManifoldPointAtSingularity);
  CHECK(verdict_of("x^2 + y^2") == Verdict::IsolatedPoint);
  CHECK(verdict_of("y - x^2") == Verdict::SmoothManifoldPoint);
}

TEST_CASE("classify_point certificates") {
  auto c = classify_point(ideal(xy(), {"y^2 - x^2 - x^3"}), {0, 0});
  CHECK(c.certificate.dimension == 1);
  CHECK(c.certificate.blowup_depth == 1);
  REQUIRE(c.certificate.fiber.has_value());
  CHECK(c.certificate.fiber->real_points == 2);
  CHECK_FALSE(c.certificate.smooth_shortcircuit);
  CHECK_FALSE(c.certificate.reason_text.empty());

  auto s = classify_point(ideal(xy(), {"y^2 - x^2 - x^3"}), {-1, 0});
  CHECK(s.verdict == Verdict::SmoothManifoldPoint);
  CHECK(s.certificate.smooth_shortcircuit);
}

TEST_CASE("classify_point inconclusive and error paths") {
  auto r = xy();
  // Not certifiably radical.
  auto u = classify_point(ideal(r, {"x^2", "x*y"}), {0, 0});
  CHECK(u.verdict == Verdict::Inconclusive);
  CHECK_FALSE(u.certificate.reason_text.empty());
  // The line x = 0 plus the point (1, 0): no certificate, but the user may vouch for it.
  ClassifyOptions assume;
  assume.assume_radical = true;
  auto plain = classify_point(ideal(r, {"x*y", "x*(x-1)"}), {0, 0});
  CHECK(plain.verdict == Verdict::Inconclusive);
  auto a = classify_point(ideal(r, {"x*y", "x*(x-1)"}), {0, 0}, assume);
  CHECK(a.certificate.radicality.reason == RadicalityReason::UserAsserted);
  CHECK(a.verdict == Verdict::SmoothManifoldPoint);

  // Surfaces are not curves.
  auto r3 = mfp::testing::ring({"x", "y", "z"});
  auto sfc = classify_point(ideal(r3, {"z^2 - x^2 - y^2"}), {0, 0, 0});
  CHECK(sfc.verdict == Verdict::Inconclusive);
  CHECK(sfc.certificate.failure == ErrorKind::NotACurve);

  ClassifyOptions shallow;
  shallow.max_depth = 1;
  auto d = classify_point(ideal(r, {"y^3 - x^10"}), {0, 0}, shallow);
  CHECK(d.verdict == Verdict::Inconclusive);
  CHECK(d.certificate.failure == ErrorKind::DepthExceeded);

  auto irr = classify_point(ideal(r, {"(y^2 - 2x^2)^2 - x^6"}), {0, 0});
  CHECK(irr.verdict == Verdict::Inconclusive);
  CHECK(irr.certificate.failure == ErrorKind::IrrationalSingularFiberPoint);

  try {
    classify_point(ideal(r, {"y^2 - x^3"}), {1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PointNotOnVariety);
  }
}

TEST_CASE("property: decision table is total") {
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t nr = 0; nr <= r; ++nr) {
      Verdict v = decide(r, nr);
      int hits = (v == Verdict::IsolatedPoint) + (v == Verdict::NotManifoldPoint) +
                 (v == Verdict::ManifoldPointAtSingularity);
      CHECK(hits == 1);
      if (r == 0) CHECK(v == Verdict::IsolatedPoint);
      if (r >= 2) CHECK(v == Verdict::NotManifoldPoint);
      if (r == 1) CHECK(v == (nr == 0 ? Verdict::ManifoldPointAtSingularity : Verdict::NotManifoldPoint));
    }
}

TEST_CASE("property: forced blow-up at a smooth point agrees with the shortcut") {
  auto node = ideal(xy(), {"y^2 - x^2 - x^3"});
  ClassifyOptions force;
  force.force_blowup = true;
  auto c = classify_point(translate_ideal(node, {-1, 0}), {0, 0}, force);
  REQUIRE(c.certificate.fiber.has_value());
  CHECK(c.certificate.fiber->real_points == 1);
  CHECK(c.certificate.fiber->nonreduced_real_points == 0);
  CHECK(c.verdict == Verdict::ManifoldPointAtSingularity);
  CHECK(c.certificate.smooth_shortcircuit);
}

TEST_CASE("property: translation invariance") {
  std::mt19937 rng(11);
  for (const char* f : {"y^2 - x^2 - x^3", "y^3 + 2x^2*y - x^4", "x^2 + y^2", "y^2 - x^3"}) {
    auto I = ideal(xy(), {f});
    Verdict at_origin = classify_point(I, {0, 0}).verdict;
    for (int k = 0; k < 2; ++k) {
      RationalPoint p{mfp::testing::random_rational(rng, 3, 2), mfp::testing::random_rational(rng, 3, 2)};
      // Move the curve so that its singular point sits at p.
      auto moved = translate_ideal(I, {-p[0], -p[1]});
      CHECK(classify_point(moved, p).verdict == at_origin);
      CHECK(classify_point(translate_ideal(moved, p), {0, 0}).verdict == at_origin);
    }
  }
}

TEST_CASE("property: oracle consistency") {
  for (const char* f : {"y^2 - x^2 - x^3", "y^3 + 2x^2*y - x^4", "x^3 - 5y^3", "y^2 - x^3", "x^2 + y^2"}) {
    auto I = ideal(xy(), {f});
    auto c = classify_point(I, {0, 0});
    std::size_t h = halfbranch_count(I, {0, 0});
    if (c.verdict == Verdict::IsolatedPoint) {
      CHECK(h == 0);
    } else {
      REQUIRE(c.certificate.fiber.has_value());
      CHECK(h == 2 * c.certificate.fiber->real_points);
    }
  }
}
