#include "mfp/fourbar.hpp"

#include <algorithm>

#include "mfp/singularity.hpp"
#include "mfp/zerodim.hpp"

namespace mfp {

FourBarParams FourBarParams::grashof(const Rational& l2, const Rational& l4) {
  return {l2, l2 + l4 - 2, l4};
}

std::vector<std::string> parameter_violations(const FourBarParams& p) {
  std::vector<std::string> out;
  if (p.l2 <= 0) out.push_back("l2 must be positive");
  if (p.l3 <= 0) out.push_back("l3 must be positive");
  if (p.l4 <= 0) out.push_back("l4 must be positive");
  if (p.l2 == 2) out.push_back("l2 must differ from 2");
  if (p.l4 == 2) out.push_back("l4 must differ from 2");
  if (p.l3 == 2) out.push_back("l3 must differ from 2");
  if (p.l2 == Rational(8, 3)) out.push_back("l2 must differ from 8/3");
  return out;
}

namespace {

void validate(const FourBarParams& p) {
  auto v = parameter_violations(p);
  if (v.empty()) return;
  std::string msg = "invalid four-bar parameters:";
  for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? "; " : " ") + v[i];
  throw Error(ErrorKind::InvalidParams, msg);
}

std::size_t index(const RingPtr& ring, const char* name) {
  auto i = ring->variables().index_of(name);
  if (!i) throw Error(ErrorKind::UnknownVariable, std::string("ring lacks variable ") + name);
  return *i;
}

}  // namespace

std::vector<Polynomial> fourbar_generators(const FourBarParams& p, const RingPtr& ring) {
  validate(p);
  auto var = [&](const char* n) { return Polynomial::variable(ring, index(ring, n)); };
  auto c = [&](const Rational& q) { return Polynomial::constant(ring, q); };
  Polynomial x = var("x"), y = var("y"), u = var("u"), v = var("v");
  Polynomial um2 = u - c(2), ux = u - x, vy = v - y;
  return {x * x + y * y - c(p.l2 * p.l2), um2 * um2 + v * v - c(p.l3 * p.l3), ux * ux + vy * vy - c(p.l4 * p.l4)};
}

IdealPresentation fourbar_ideal(const FourBarParams& p) {
  RingPtr ring = Ring::make({"x", "y", "u", "v"});
  return IdealPresentation(ring, fourbar_generators(p, ring));
}

RationalPoint grashof_singular_point(const FourBarParams& p) {
  validate(p);
  if (p.l2 - p.l3 + p.l4 != 2)
    throw Error(ErrorKind::NotSingularFamily, "l2 - l3 + l4 = " + to_string(Rational(p.l2 - p.l3 + p.l4)) +
                                                  ", the singular family needs 2");
  RationalPoint pt{p.l2, 0, p.l2 + p.l4, 0};
  IdealPresentation I = fourbar_ideal(p);
  for (const auto& g : I.generators())
    if (g.evaluate(pt) != 0) throw Error(ErrorKind::InvalidArgument, "singular configuration is not on V(I)");
  return pt;
}

FourBarAnalysis analyze_fourbar(const FourBarParams& params, const ClassifyOptions& opts) {
  FourBarAnalysis a;
  a.params = params;
  a.ideal = fourbar_ideal(params);
  a.point = grashof_singular_point(params);
  a.ideal_dimension = krull_dimension(a.ideal);
  IdealPresentation J = singular_locus_ideal(a.ideal, a.ideal_dimension);
  a.singular_locus_dimension = krull_dimension(J);
  if (a.singular_locus_dimension == 0) a.singular_points = rational_points(J);

  // Translated ideal in the enumeration (v, y, u, x) with the (v, y) block first.
  RingPtr block = Ring::make({"v", "y", "u", "x"}, MonomialOrder::block(2));
  RationalPoint shift{0, 0, a.point[2], a.point[0]};
  std::vector<Polynomial> gens;
  for (const auto& g : fourbar_generators(params, block)) gens.push_back(translate(g, shift));
  GroebnerBasis G = buchberger(gens, MonomialOrder::block(2));
  for (const auto& m : G.leading_monomials()) a.block_leading_monomials.push_back(m.to_string(block->variables()));

  a.classification = classify_point(a.ideal, a.point, opts);
  return a;
}

}  // namespace mfp
