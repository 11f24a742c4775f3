#ifndef MFP_DECIDER_HPP
#define MFP_DECIDER_HPP

#include <optional>
#include <string>

#include "mfp/blowup.hpp"
#include "mfp/error.hpp"
#include "mfp/singularity.hpp"

namespace mfp {

enum class Verdict { SmoothManifoldPoint, ManifoldPointAtSingularity, IsolatedPoint, NotManifoldPoint, Inconclusive };

/// smooth-manifold-point, manifold-point-at-singularity, isolated-point,
/// not-manifold-point, inconclusive.
const char* to_string(Verdict v) noexcept;

struct Certificate {
  RadicalityCertificate radicality;
  /// Krull dimension of I; -2 when not computed.
  int dimension = -2;
  bool smooth_shortcircuit = false;
  /// Rank of the Jacobian at the point; empty when not computed.
  std::optional<std::size_t> jacobian_rank;
  std::size_t blowup_depth = 0;
  std::size_t chart_count = 0;
  std::optional<FiberSummary> fiber;
  /// Set when the pipeline stopped on an error turned into Inconclusive.
  std::optional<ErrorKind> failure;
  std::string reason_text;
};

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  Certificate certificate;
};

struct ClassifyOptions {
  bool assume_radical = false;
  std::size_t max_depth = 6;
  /// Run the blow-up path even at smooth points.
  bool force_blowup = false;
};

/// Verdict from the fiber counts: r real points, nr of them non-reduced.
Verdict decide(std::size_t real_points, std::size_t nonreduced_real_points);

/// Throws PointNotOnVariety (and VariableSetMismatch for a point of the wrong size).
Classification classify_point(const IdealPresentation& I, const RationalPoint& p, const ClassifyOptions& opts = {});

/// The ideal with p moved to the origin.
IdealPresentation translate_ideal(const IdealPresentation& I, const RationalPoint& p);

}  // namespace mfp

#endif
