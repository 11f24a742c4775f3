#include "mfp/decider.hpp"

namespace mfp {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::SmoothManifoldPoint: return "smooth-manifold-point";
    case Verdict::ManifoldPointAtSingularity: return "manifold-point-at-singularity";
    case Verdict::IsolatedPoint: return "isolated-point";
    case Verdict::NotManifoldPoint: return "not-manifold-point";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict decide(std::size_t r, std::size_t nr) {
  if (r == 0) return Verdict::IsolatedPoint;
  if (r >= 2) return Verdict::NotManifoldPoint;
  return nr == 0 ? Verdict::ManifoldPointAtSingularity : Verdict::NotManifoldPoint;
}

IdealPresentation translate_ideal(const IdealPresentation& I, const RationalPoint& p) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(translate(g, p));
  return IdealPresentation(I.ring(), std::move(gens));
}

Classification classify_point(const IdealPresentation& I, const RationalPoint& p, const ClassifyOptions& opts) {
  if (p.size() != I.nvars())
    throw Error(ErrorKind::VariableSetMismatch, "point has " + std::to_string(p.size()) + " coordinates, ring has " +
                                                    std::to_string(I.nvars()));
  for (const auto& g : I.generators())
    if (g.evaluate(p) != 0)
      throw Error(ErrorKind::PointNotOnVariety, "generator " + g.to_string() + " does not vanish at the point");

  Classification out;
  Certificate& cert = out.certificate;
  IdealPresentation J = translate_ideal(I, p);
  RationalPoint origin(I.nvars(), Rational(0));

  cert.radicality = radicality_certificate(J);
  if (!cert.radicality.radical()) {
    if (!opts.assume_radical) {
      cert.reason_text = "no radicality certificate; rerun with the radical assumption to proceed";
      return out;
    }
    cert.radicality.verdict = RadicalityVerdict::Radical;
    cert.radicality.reason = RadicalityReason::UserAsserted;
  }

  cert.dimension = krull_dimension(J);
  if (cert.dimension != 1) {
    cert.failure = ErrorKind::NotACurve;
    cert.reason_text = "V(I) has dimension " + std::to_string(cert.dimension) + ", not a curve";
    return out;
  }

  cert.jacobian_rank = rank_at(jacobian(J), origin);
  if (*cert.jacobian_rank == I.nvars() - 1) {
    cert.smooth_shortcircuit = true;
    if (!opts.force_blowup) {
      out.verdict = Verdict::SmoothManifoldPoint;
      cert.reason_text = "Jacobian has full rank " + std::to_string(*cert.jacobian_rank);
      return out;
    }
  }

  try {
    ResolveOptions ro;
    ro.max_depth = opts.max_depth;
    ro.force_blowup = opts.force_blowup;
    SmoothModel model = resolve_curve(J, ro);
    cert.blowup_depth = model.depth;
    cert.chart_count = model.nodes.size();
    FiberSummary fs = fiber_summary(model);
    cert.fiber = fs;
    out.verdict = decide(fs.real_points, fs.nonreduced_real_points);
    switch (out.verdict) {
      case Verdict::IsolatedPoint: cert.reason_text = "no real points over the point"; break;
      case Verdict::NotManifoldPoint:
        cert.reason_text = fs.real_points >= 2 ? std::to_string(fs.real_points) + " real points over the point"
                                               : "the real point over the point is non-reduced";
        break;
      case Verdict::ManifoldPointAtSingularity: cert.reason_text = "one reduced real point over the point"; break;
      default: break;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DepthExceeded && e.kind() != ErrorKind::IrrationalSingularFiberPoint) throw;
    out.verdict = Verdict::Inconclusive;
    cert.failure = e.kind();
    cert.reason_text = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return out;
}

}  // namespace mfp
