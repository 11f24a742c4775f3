// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfp/blowup.hpp"
#include "mfp/decider.hpp"
#include "mfp/fourbar.hpp"
#include "mfp/groebner.hpp"
#include "mfp/oracle.hpp"
#include "mfp/parse.hpp"
#include "mfp/singularity.hpp"
#include "mfp/zerodim.hpp"

using namespace mfp;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitCurve = 5.0;
constexpr double kLimitDeepCurve = 30.0;
constexpr double kLimitFourBar = 120.0;
constexpr double kLimitRandomFourBar = 300.0;
constexpr double kLimitProperties = 300.0;

constexpr unsigned kFourBarSeed = 20240611;
constexpr int kFourBarInstances = 10;
constexpr unsigned kSturmSeed = 77;
constexpr int kSturmInstances = 25;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit) out.require(false, "time limit exceeded");
  if (!out.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", n, title.c_str(), secs,
              limit, out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

IdealPresentation fixture(const std::string& name) {
  std::ifstream in(std::string(MFP_DATA_DIR) + "/" + name + ".ideal");
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal(buf.str());
}

RationalPoint origin(std::size_t n) { return RationalPoint(n, Rational(0)); }

std::string fiber_text(const Classification& c) {
  if (!c.certificate.fiber) return "no fiber";
  const auto& f = *c.certificate.fiber;
  return std::to_string(f.real_points) + " real, " + std::to_string(f.complex_points) + " complex, " +
         std::to_string(f.nonreduced_real_points) + " non-reduced";
}

Outcome curve_check(const std::string& name, Verdict want, const std::function<void(Outcome&, const Classification&)>& extra) {
  Outcome o;
  auto c = classify_point(fixture(name), origin(2));
  o.require(c.verdict == want, "verdict " + std::string(to_string(c.verdict)));
  o.require(c.certificate.fiber.has_value(), "missing fiber summary");
  if (c.certificate.fiber) extra(o, c);
  o.detail = o.ok ? std::string(to_string(c.verdict)) + ", " + fiber_text(c) + ", depth " +
                        std::to_string(c.certificate.blowup_depth)
                  : o.detail;
  return o;
}

}  // namespace

int main() {
  criterion(1, "node y^2 = x^2 + x^3 is not a manifold point (2 real fiber points, depth 1)", kLimitCurve, [] {
    return curve_check("node", Verdict::NotManifoldPoint, [](Outcome& o, const Classification& c) {
      o.require(c.certificate.fiber->real_points == 2, "real points != 2");
      o.require(c.certificate.blowup_depth == 1, "depth != 1");
    });
  });

  criterion(2, "y^3 + 2x^2y - x^4: manifold point at a singularity (1 real, 3 complex, reduced)", kLimitCurve, [] {
    return curve_check("ex_vi", Verdict::ManifoldPointAtSingularity, [](Outcome& o, const Classification& c) {
      o.require(c.certificate.fiber->real_points == 1, "real points != 1");
      o.require(c.certificate.fiber->complex_points == 3, "complex points != 3");
      o.require(c.certificate.fiber->nonreduced_real_points == 0, "non-reduced real point present");
    });
  });

  criterion(3, "y^3 = x^10: not a manifold point (non-reduced real fiber point, depth > 1)", kLimitDeepCurve, [] {
    return curve_check("ex_vii", Verdict::NotManifoldPoint, [](Outcome& o, const Classification& c) {
      o.require(c.certificate.fiber->nonreduced_real_points >= 1, "no non-reduced real point");
      o.require(c.certificate.blowup_depth > 1, "depth <= 1");
    });
  });

  criterion(4, "x^3 = 5y^3: manifold point at a singularity", kLimitCurve, [] {
    return curve_check("ex_v", Verdict::ManifoldPointAtSingularity, [](Outcome& o, const Classification& c) {
      o.require(c.certificate.fiber->real_points == 1, "real points != 1");
      o.require(c.certificate.fiber->nonreduced_real_points == 0, "non-reduced real point present");
    });
  });

  criterion(5, "x^2 + y^2: isolated point", kLimitCurve, [] {
    Outcome o;
    auto c = classify_point(fixture("isolated"), origin(2));
    o.require(c.verdict == Verdict::IsolatedPoint, "verdict " + std::string(to_string(c.verdict)));
    if (o.ok) o.detail = std::string(to_string(c.verdict)) + ", " + fiber_text(c);
    return o;
  });

  criterion(6, "four-bar l2 = l4 = 3/2, l3 = 1 at (3/2, 0, 3, 0)", kLimitFourBar, [] {
    Outcome o;
    auto a = analyze_fourbar(FourBarParams::grashof(make_rational(3, 2), make_rational(3, 2)));
    o.require(a.params.l3 == 1, "l3 != 1");
    o.require(a.ideal_dimension == 1, "dim I != 1");
    o.require(a.singular_locus_dimension == 0, "dim J != 0");
    RationalPoint want{make_rational(3, 2), 0, 3, 0};
    o.require(a.singular_points && a.singular_points->size() == 1 && a.singular_points->front() == want,
              "V(J) != {(3/2, 0, 3, 0)}");
    o.require(a.classification.certificate.radicality.verdict == RadicalityVerdict::RadicalEquidimensional,
              "radicality not certified");
    o.require(a.classification.verdict == Verdict::NotManifoldPoint, "verdict not not-manifold-point");
    o.require(a.classification.certificate.fiber && a.classification.certificate.fiber->real_points == 2,
              "real fiber points != 2");
    auto lms = a.block_leading_monomials;
    std::sort(lms.begin(), lms.end());
    std::vector<std::string> expected{"u^2*x", "v*u", "v*x^2", "y^2", "v*y", "v^2"};
    std::sort(expected.begin(), expected.end());
    o.require(lms == expected, "block-order leading monomials differ");
    if (o.ok) o.detail = "not-manifold-point, " + fiber_text(a.classification) + ", 6 leading monomials match";
    return o;
  });

  criterion(7, std::to_string(kFourBarInstances) + " random Grashof four-bars: quadratic fiber, disc*(l2^2-2l2)^2 = 8 l2 l3 l4",
            kLimitRandomFourBar, [] {
              Outcome o;
              std::mt19937 rng(kFourBarSeed);
              std::uniform_int_distribution<int> num(1, 24), den(1, 8);
              int done = 0, draws = 0;
              while (done < kFourBarInstances && draws < 10000) {
                ++draws;
                auto p = FourBarParams::grashof(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
                if (!parameter_violations(p).empty()) continue;
                ++done;
                std::string tag = "(l2=" + to_string(p.l2) + ", l4=" + to_string(p.l4) + ")";
                auto F = translate_ideal(fourbar_ideal(p), grashof_singular_point(p));
                auto chart_y = blowup_origin(F)[1];
                auto e = eliminant(ZeroDimAlgebra::build(fiber_ideal(chart_y, false)), 3);
                if (e.degree() != 2) {
                  o.require(false, tag + " eliminant degree " + std::to_string(e.degree()));
                  continue;
                }
                Rational a = p.l2 * p.l2 - 2 * p.l2;
                Rational lhs = discriminant_of_quadratic(e) * a * a;
                Rational rhs = 8 * p.l2 * p.l3 * p.l4;
                o.require(lhs == rhs, tag + " discriminant identity");
                o.require(rhs > 0, tag + " discriminant not positive");
                o.require(sturm_real_root_count(e) == 2, tag + " Sturm count != 2");
                auto c = classify_point(fourbar_ideal(p), grashof_singular_point(p));
                o.require(c.verdict == Verdict::NotManifoldPoint, tag + " verdict");
                o.require(c.certificate.fiber && c.certificate.fiber->real_points == 2, tag + " real fiber points");
              }
              o.require(done == kFourBarInstances, "not enough valid instances drawn");
              if (o.ok) o.detail = std::to_string(done) + " instances, seed " + std::to_string(kFourBarSeed);
              return o;
            });

  criterion(8, "properties: every basis passes the S-pair test, saturation idempotent, trace form = Sturm, "
               "half-branches = 2r",
            kLimitProperties, [] {
              Outcome o;
              std::size_t bases = 0, bad = 0;
              bool inside = false;
              auto prev = set_groebner_observer([&](const GroebnerBasis& G) {
                if (inside) return;
                inside = true;
                ++bases;
                if (!satisfies_buchberger_criterion(G)) ++bad;
                inside = false;
              });

              // Saturation is idempotent on the fixtures and on the translated four-bar.
              std::vector<IdealPresentation> ideals;
              for (const char* f : {"node", "ex_vi", "ex_vii", "ex_v", "isolated", "cusp"}) ideals.push_back(fixture(f));
              auto p = FourBarParams::grashof(make_rational(3, 2), make_rational(3, 2));
              ideals.push_back(translate_ideal(fourbar_ideal(p), grashof_singular_point(p)));
              for (const auto& I : ideals) {
                std::vector<Polynomial> m;
                for (std::size_t i = 0; i < I.nvars(); ++i) m.push_back(Polynomial::variable(I.ring(), i));
                IdealPresentation M(I.ring(), m);
                IdealPresentation J = product(I, M);
                auto S = saturate(J, M);
                o.require(ideals_equal(saturate(S.ideal, M).ideal, S.ideal), "saturation not idempotent");
              }

              // Hermite count against Sturm on random <t, f(yh)>.
              auto ring = Ring::make({"t", "yh"});
              std::mt19937 rng(kSturmSeed);
              std::uniform_int_distribution<int> coef(-6, 6), deg(1, 6);
              for (int trial = 0; trial < kSturmInstances; ++trial) {
                std::vector<Rational> cs(static_cast<std::size_t>(deg(rng) + 1));
                for (auto& x : cs) x = coef(rng);
                cs.back() = 1 + std::abs(coef(rng));
                UnivariatePolynomial f(cs);
                IdealPresentation I(ring, {Polynomial::variable(ring, 0), from_univariate(f, ring, 1)});
                auto counts = count_points(I);
                o.require(counts.real_distinct == sturm_real_root_count(f), "trace form vs Sturm");
                o.require(counts.complex_distinct == static_cast<std::size_t>(squarefree_part(f).degree()),
                          "trace form rank vs squarefree degree");
              }

              // Sphere-probe half-branches against the fiber counts.
              for (const char* f : {"node", "ex_vi", "ex_vii", "ex_v", "isolated"}) {
                auto I = fixture(f);
                auto c = classify_point(I, origin(2));
                std::size_t r = c.certificate.fiber ? c.certificate.fiber->real_points : 0;
                std::size_t h = halfbranch_count(I, origin(2));
                o.require(h == 2 * r, std::string(f) + ": " + std::to_string(h) + " half-branches, r = " +
                                          std::to_string(r));
              }

              set_groebner_observer(prev);
              o.require(bases > 0, "observer saw no bases");
              o.require(bad == 0, std::to_string(bad) + " bases failed the S-pair test");
              if (o.ok) o.detail = std::to_string(bases) + " bases checked";
              return o;
            });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
