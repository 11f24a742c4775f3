#include "mfp/blowup.hpp"

#include <functional>

#include "mfp/error.hpp"
#include "mfp/singularity.hpp"
#include "mfp/zerodim.hpp"

namespace mfp {

namespace {

std::string point_string(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

std::vector<std::string> chart_names(const VariableSet& vars, std::size_t k) {
  std::vector<std::string> names(vars.size());
  names[k] = vars.name(k);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i == k) continue;
    std::string n = vars.name(i) + "h";
    auto taken = [&](const std::string& s) {
      for (std::size_t j = 0; j < vars.size(); ++j)
        if ((j == k || j < i) && names[j] == s) return true;
      return false;
    };
    while (taken(n)) n += "_";
    names[i] = n;
  }
  return names;
}

// The trivial chart: identity pullbacks, strict transform = I.
BlowupChart root_chart(const IdealPresentation& I) {
  BlowupChart c;
  c.ring = I.ring();
  c.strict_ideal = I;
  for (std::size_t j = 0; j < I.nvars(); ++j) c.pullbacks.push_back(Polynomial::variable(I.ring(), j));
  return c;
}

IdealPresentation maximal_ideal(const RingPtr& ring, const RationalPoint& q) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, q[i]));
  return IdealPresentation(ring, std::move(gens));
}

bool vanishes_at(const IdealPresentation& I, const RationalPoint& p) {
  for (const auto& g : I.generators())
    if (g.evaluate(p) != 0) return false;
  return true;
}

}  // namespace

std::vector<BlowupChart> blowup_point(const BlowupChart& parent, const RationalPoint& center) {
  const std::size_t n = parent.ring->nvars();
  if (center.size() != n) throw Error(ErrorKind::VariableSetMismatch, "centre has the wrong number of coordinates");
  std::vector<BlowupChart> charts;
  for (std::size_t k = 0; k < n; ++k) {
    RingPtr ring = Ring::make(chart_names(parent.variables(), k));
    std::vector<Polynomial> images;
    Polynomial e = Polynomial::variable(ring, k);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial img = i == k ? e : e * Polynomial::variable(ring, i);
      images.push_back(img + Polynomial::constant(ring, center[i]));
    }
    std::vector<Polynomial> total;
    for (const auto& g : parent.strict_ideal.generators()) total.push_back(substitute(g, images));
    Saturation sat = saturate(IdealPresentation(ring, std::move(total)), IdealPresentation(ring, {e}));

    BlowupChart c;
    c.chart_index = k;
    c.ring = ring;
    c.strict_ideal = std::move(sat.ideal);
    c.saturation_steps = sat.iterations;
    c.exceptional_generator = k;
    for (const auto& p : parent.pullbacks) c.pullbacks.push_back(substitute(p, images));
    c.depth = parent.depth + 1;
    c.center = center;
    c.label = parent.label.empty() ? ring->variables().name(k) : parent.label + "/" + ring->variables().name(k);
    charts.push_back(std::move(c));
  }
  return charts;
}

std::vector<BlowupChart> blowup_origin(const IdealPresentation& I) {
  RationalPoint origin(I.nvars(), Rational(0));
  if (!vanishes_at(I, origin)) throw Error(ErrorKind::OriginNotOnVariety, "origin is not on V(I)");
  if (is_unit_ideal(I)) throw Error(ErrorKind::OriginNotOnVariety, "unit ideal has no points");
  return blowup_point(root_chart(I), origin);
}

std::vector<Polynomial> dedup_constraints(const BlowupChart& chart) {
  std::vector<Polynomial> out;
  if (!chart.exceptional_generator) return out;
  for (std::size_t i = 0; i < chart.chart_index; ++i) out.push_back(Polynomial::variable(chart.ring, i));
  return out;
}

IdealPresentation fiber_ideal(const BlowupChart& chart, bool dedup) {
  IdealPresentation F = sum(chart.strict_ideal, chart.pullbacks);
  if (dedup) F = sum(F, dedup_constraints(chart));
  return F;
}

std::vector<const ModelNode*> SmoothModel::leaves() const {
  std::vector<const ModelNode*> out;
  for (const auto& n : nodes)
    if (n.leaf) out.push_back(&n);
  return out;
}

SmoothModel resolve_curve(const IdealPresentation& I, const ResolveOptions& opts) {
  const std::size_t n = I.nvars();
  RationalPoint origin(n, Rational(0));
  if (!vanishes_at(I, origin)) throw Error(ErrorKind::OriginNotOnVariety, "origin is not on V(I)");
  int dim = krull_dimension(I);
  if (dim != 1) throw Error(ErrorKind::NotACurve, "V(I) has dimension " + std::to_string(dim) + ", not 1");

  SmoothModel model;
  model.original_ring = I.ring();
  if (!opts.force_blowup && is_smooth_at(I, origin, dim)) {
    ModelNode node;
    node.chart = root_chart(I);
    node.chart.label = "origin";
    node.piece = fiber_ideal(node.chart, false);
    model.nodes.push_back(std::move(node));
    return model;
  }

  std::function<void(ModelNode)> process = [&](ModelNode node) {
    const BlowupChart& chart = node.chart;
    model.depth = std::max(model.depth, chart.depth);
    const std::size_t m = chart.ring->nvars();
    const std::size_t index = model.nodes.size();
    model.nodes.push_back(node);

    IdealPresentation here = sum(sum(chart.strict_ideal, node.piece), node.dedup);
    GroebnerBasis G = here.groebner();
    if (G.is_unit()) return;
    IdealPresentation sing = sum(to_presentation(G, chart.ring),
                                 minors_ideal(jacobian(chart.strict_ideal), m - 1, &G));
    if (is_unit_ideal(sing)) return;
    auto points = rational_points(sing);
    if (!points)
      throw Error(ErrorKind::IrrationalSingularFiberPoint,
                  "chart " + chart.label + ": singular fiber point with irrational coordinates, isolated by " +
                      to_presentation(sing.groebner(), chart.ring).to_string());
    if (chart.depth >= opts.max_depth)
      throw Error(ErrorKind::DepthExceeded, "chart " + chart.label + " is still singular at depth " +
                                                std::to_string(chart.depth) + " (max_depth " +
                                                std::to_string(opts.max_depth) + ")");

    IdealPresentation residual = node.piece;
    for (const auto& q : *points) residual = saturate(residual, maximal_ideal(chart.ring, q)).ideal;
    model.nodes[index].piece = residual;
    model.nodes[index].singular_points = *points;
    model.nodes[index].leaf = false;

    for (const auto& q : *points) {
      for (auto& child : blowup_point(chart, q)) {
        child.label += "@" + point_string(q);
        ModelNode c;
        IdealPresentation F = fiber_ideal(child, false);
        std::size_t d = ZeroDimAlgebra::build(F).dimension();
        Polynomial e = Polynomial::variable(child.ring, *child.exceptional_generator);
        c.piece = sum(F, {pow(e, static_cast<unsigned>(d))});
        c.dedup = dedup_constraints(child);
        c.parent = index;
        c.chart = std::move(child);
        process(std::move(c));
      }
    }
  };

  for (auto& chart : blowup_origin(I)) {
    ModelNode node;
    node.piece = fiber_ideal(chart, false);
    node.dedup = dedup_constraints(chart);
    node.chart = std::move(chart);
    process(std::move(node));
  }
  return model;
}

FiberSummary fiber_summary(const SmoothModel& model) {
  FiberSummary s;
  for (const auto& node : model.nodes) {
    FiberContribution fc;
    fc.chart = node.chart.label;
    IdealPresentation counted = sum(node.piece, node.dedup);
    if (!is_unit_ideal(counted)) {
      PointCounts pc = count_points(counted);
      fc.real_points = pc.real_distinct;
      fc.complex_points = pc.complex_distinct;
      IdealPresentation nr = sum(nonreduced_locus(node.piece), node.dedup);
      if (!is_unit_ideal(nr)) fc.nonreduced_real_points = count_points(nr).real_distinct;
    }
    s.real_points += fc.real_points;
    s.complex_points += fc.complex_points;
    s.nonreduced_real_points += fc.nonreduced_real_points;
    s.charts.push_back(std::move(fc));
  }
  return s;
}

}  // namespace mfp
