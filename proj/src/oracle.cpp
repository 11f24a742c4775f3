#include "mfp/oracle.hpp"

#include "mfp/error.hpp"
#include "mfp/zerodim.hpp"

namespace mfp {

SphereProbe sphere_probe(const IdealPresentation& I, const RationalPoint& center, const Rational& radius) {
  if (radius <= 0) throw Error(ErrorKind::InvalidArgument, "probe radius must be positive");
  const RingPtr& r = I.ring();
  Polynomial sphere = Polynomial::constant(r, -radius * radius);
  for (std::size_t i = 0; i < I.nvars(); ++i) {
    Polynomial d = Polynomial::variable(r, i) - Polynomial::constant(r, center[i]);
    sphere += d * d;
  }
  return {center, radius, sum(I, {sphere})};
}

std::vector<Rational> default_radii() {
  std::vector<Rational> out;
  Rational r(1, 2);
  for (int i = 0; i < 8; ++i, r /= 2) out.push_back(r);
  return out;
}

HalfBranchResult halfbranch_probe(const IdealPresentation& I, const RationalPoint& p, const std::vector<Rational>& radii) {
  if (p.size() != I.nvars()) throw Error(ErrorKind::VariableSetMismatch, "point has the wrong number of coordinates");
  for (const auto& g : I.generators())
    if (g.evaluate(p) != 0) throw Error(ErrorKind::PointNotOnVariety, "generator " + g.to_string() + " does not vanish");
  int dim = krull_dimension(I);
  if (dim != 1) throw Error(ErrorKind::NotACurve, "V(I) has dimension " + std::to_string(dim));

  HalfBranchResult res;
  std::optional<std::size_t> previous;
  for (const auto& r : radii) {
    std::optional<std::size_t> c;
    try {
      c = count_points(sphere_probe(I, p, r).probe_ideal).real_distinct;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    }
    res.counts.push_back(c);
    if (!c) continue;
    if (previous && *previous == *c) {
      res.count = *c;
      res.radius = r;
      return res;
    }
    previous = c;
  }
  throw Error(ErrorKind::NoStabilization, "half-branch counts did not stabilise over " + std::to_string(radii.size()) +
                                              " radii");
}

std::size_t halfbranch_count(const IdealPresentation& I, const RationalPoint& p, const std::vector<Rational>& radii) {
  return halfbranch_probe(I, p, radii).count;
}

}  // namespace mfp
