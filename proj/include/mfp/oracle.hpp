#ifndef MFP_ORACLE_HPP
#define MFP_ORACLE_HPP

#include <optional>
#include <vector>

#include "mfp/ideal.hpp"

namespace mfp {

struct SphereProbe {
  RationalPoint center;
  Rational radius;
  IdealPresentation probe_ideal;
};

SphereProbe sphere_probe(const IdealPresentation& I, const RationalPoint& center, const Rational& radius);

/// 1/2, 1/4, ..., 1/256.
std::vector<Rational> default_radii();

struct HalfBranchResult {
  std::size_t count = 0;
  /// Real point count per radius; empty where the probe was not zero-dimensional.
  std::vector<std::optional<std::size_t>> counts;
  Rational radius;
};

/// Real points of V(I) on shrinking spheres around p; the first value seen
/// on two consecutive usable radii. Throws PointNotOnVariety, NotACurve,
/// NoStabilization.
HalfBranchResult halfbranch_probe(const IdealPresentation& I, const RationalPoint& p,
                                  const std::vector<Rational>& radii = default_radii());

std::size_t halfbranch_count(const IdealPresentation& I, const RationalPoint& p,
                             const std::vector<Rational>& radii = default_radii());

}  // namespace mfp

#endif
