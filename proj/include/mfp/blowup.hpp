#ifndef MFP_BLOWUP_HPP
#define MFP_BLOWUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "mfp/ideal.hpp"

namespace mfp {

/// One affine chart of an iterated point blow-up. Chart k of a blow-up at q
/// substitutes y_i = q_i + z_k * zh_i (i != k), y_k = q_k + z_k; the chart
/// keeps the name of y_k for z_k and appends "h" to the others.
struct BlowupChart {
  std::size_t chart_index = 0;
  RingPtr ring;
  IdealPresentation strict_ideal;
  /// Index of the chart variable cutting out the exceptional divisor;
  /// empty for the trivial chart of an unblown-up curve.
  std::optional<std::size_t> exceptional_generator;
  /// Each original variable expressed in chart variables.
  std::vector<Polynomial> pullbacks;
  std::size_t depth = 0;
  /// Quotient steps the saturation needed (multiplicity of the exceptional divisor).
  std::size_t saturation_steps = 0;
  /// Centre of this blow-up in the parent chart's coordinates.
  RationalPoint center;
  /// Exceptional variable names from the root down, e.g. "x/x".
  std::string label;

  const VariableSet& variables() const { return ring->variables(); }
};

/// The n charts of the blow-up at the origin. Throws OriginNotOnVariety.
std::vector<BlowupChart> blowup_origin(const IdealPresentation& I);

/// Blow up the point `center` of `parent`'s chart.
std::vector<BlowupChart> blowup_point(const BlowupChart& parent, const RationalPoint& center);

/// Linear forms zh_i = 0 (i < chart_index): keeps only directions whose first
/// nonzero homogeneous coordinate is the chart's.
std::vector<Polynomial> dedup_constraints(const BlowupChart& chart);

/// strict + <pullbacks of the original variables> (+ dedup constraints).
IdealPresentation fiber_ideal(const BlowupChart& chart, bool dedup);

struct ModelNode {
  BlowupChart chart;
  /// The fiber points this node accounts for, with their scheme structure.
  /// Points blown up further are saturated away and belong to the children.
  IdealPresentation piece;
  std::vector<Polynomial> dedup;
  std::vector<RationalPoint> singular_points;
  std::optional<std::size_t> parent;
  bool leaf = true;
};

struct SmoothModel {
  RingPtr original_ring;
  std::vector<ModelNode> nodes;
  /// Longest chain of blow-ups; 0 when the curve was already smooth.
  std::size_t depth = 0;

  std::vector<const ModelNode*> leaves() const;
};

struct ResolveOptions {
  std::size_t max_depth = 6;
  /// Blow up even when the origin is a smooth point.
  bool force_blowup = false;
};

/// Resolution of the curve V(I) over the origin. Throws OriginNotOnVariety,
/// NotACurve, DepthExceeded, IrrationalSingularFiberPoint.
SmoothModel resolve_curve(const IdealPresentation& I, const ResolveOptions& opts = {});

struct FiberContribution {
  std::string chart;
  std::size_t real_points = 0;
  std::size_t complex_points = 0;
  std::size_t nonreduced_real_points = 0;
};

struct FiberSummary {
  std::size_t real_points = 0;
  std::size_t complex_points = 0;
  std::size_t nonreduced_real_points = 0;
  std::vector<FiberContribution> charts;
};

FiberSummary fiber_summary(const SmoothModel& model);

}  // namespace mfp

#endif
