#ifndef MFP_FOURBAR_HPP
#define MFP_FOURBAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "mfp/decider.hpp"

namespace mfp {

/// Four-bar with ground bar A=(0,0), B=(2,0): crank |AC| = l2, coupler
/// |CD| = l4, rocker |BD| = l3, C = (x, y), D = (u, v).
struct FourBarParams {
  Rational l2, l3, l4;

  /// The singular family member with l3 = l2 + l4 - 2.
  static FourBarParams grashof(const Rational& l2, const Rational& l4);
};

/// Human-readable list of violated parameter restrictions.
std::vector<std::string> parameter_violations(const FourBarParams& params);

/// <x^2+y^2-l2^2, (u-2)^2+v^2-l3^2, (u-x)^2+(v-y)^2-l4^2> in variables (x,y,u,v).
/// Throws InvalidParams.
IdealPresentation fourbar_ideal(const FourBarParams& params);

/// Same generators in an arbitrary ring whose variables include x, y, u, v.
std::vector<Polynomial> fourbar_generators(const FourBarParams& params, const RingPtr& ring);

/// (l2, 0, l2 + l4, 0). Throws InvalidParams, NotSingularFamily.
RationalPoint grashof_singular_point(const FourBarParams& params);

struct FourBarAnalysis {
  FourBarParams params;
  IdealPresentation ideal;
  RationalPoint point;
  int ideal_dimension = -2;
  int singular_locus_dimension = -2;
  /// Points of V(singular locus ideal) when all are rational.
  std::optional<std::vector<RationalPoint>> singular_points;
  /// Leading monomials of the translated ideal's basis under grevlex(v,y) | grevlex(u,x).
  std::vector<std::string> block_leading_monomials;
  Classification classification;
};

FourBarAnalysis analyze_fourbar(const FourBarParams& params, const ClassifyOptions& opts = {});

}  // namespace mfp

#endif
