#include "mfp/report.hpp"

#include <chrono>
#include <cstdio>

#include "json.hpp"

#ifndef MFP_VERSION
#define MFP_VERSION "0.0.0"
#endif

namespace mfp {

const char* version() noexcept { return MFP_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::string> point_strings(const RationalPoint& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

std::string point_text(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

Report analyze_report(const IdealPresentation& I, const RationalPoint& p, const ClassifyOptions& opts) {
  auto t0 = Clock::now();
  Report r;
  r.ideal = I;
  r.point = p;
  r.options = opts;
  r.classification = classify_point(I, p, opts);
  r.seconds = since(t0);
  return r;
}

Report fourbar_report(const FourBarParams& params, const ClassifyOptions& opts) {
  auto t0 = Clock::now();
  Report r;
  FourBarAnalysis a = analyze_fourbar(params, opts);
  r.ideal = a.ideal;
  r.point = a.point;
  r.options = opts;
  r.classification = a.classification;
  r.fourbar = std::move(a);
  r.seconds = since(t0);
  return r;
}

std::string render_machine(const Report& r) {
  const Certificate& c = r.classification.certificate;
  nlohmann::json j;
  j["schema_version"] = 1;
  j["tool.name"] = "mfp";
  j["tool.version"] = version();
  j["input.variables"] = r.ideal.variables().names();
  std::vector<std::string> gens;
  for (const auto& g : r.ideal.generators()) gens.push_back(g.to_string());
  j["input.generators"] = gens;
  j["input.point"] = point_strings(r.point);
  j["input.assume_radical"] = r.options.assume_radical;
  j["input.max_depth"] = r.options.max_depth;
  j["verdict"] = to_string(r.classification.verdict);
  j["certificate.radicality.verdict"] = to_string(c.radicality.verdict);
  j["certificate.radicality.reason"] = to_string(c.radicality.reason);
  j["certificate.radicality.equidimensional"] = c.radicality.equidimensional;
  j["certificate.radicality.singular_locus_dimension"] = optional_json(c.radicality.singular_locus_dimension);
  j["certificate.dimension"] = c.dimension == -2 ? nlohmann::json(nullptr) : nlohmann::json(c.dimension);
  j["certificate.smooth_shortcircuit"] = c.smooth_shortcircuit;
  j["certificate.jacobian_rank"] = optional_json(c.jacobian_rank);
  j["certificate.blowup_depth"] = c.blowup_depth;
  j["certificate.chart_count"] = c.chart_count;
  if (c.fiber) {
    j["certificate.fiber.real_points"] = c.fiber->real_points;
    j["certificate.fiber.complex_points"] = c.fiber->complex_points;
    j["certificate.fiber.nonreduced_real_points"] = c.fiber->nonreduced_real_points;
    nlohmann::json charts = nlohmann::json::array();
    for (const auto& fc : c.fiber->charts)
      charts.push_back({{"chart", fc.chart},
                        {"real_points", fc.real_points},
                        {"complex_points", fc.complex_points},
                        {"nonreduced_real_points", fc.nonreduced_real_points}});
    j["certificate.fiber.charts"] = charts;
  } else {
    for (const char* k : {"certificate.fiber.real_points", "certificate.fiber.complex_points",
                          "certificate.fiber.nonreduced_real_points", "certificate.fiber.charts"})
      j[k] = nullptr;
  }
  j["certificate.failure"] = c.failure ? nlohmann::json(to_string(*c.failure)) : nlohmann::json(nullptr);
  j["certificate.reason"] = c.reason_text;
  j["timing.seconds"] = r.seconds;
  if (r.fourbar) {
    const FourBarAnalysis& a = *r.fourbar;
    j["fourbar.l2"] = to_string(a.params.l2);
    j["fourbar.l3"] = to_string(a.params.l3);
    j["fourbar.l4"] = to_string(a.params.l4);
    j["fourbar.ideal_dimension"] = a.ideal_dimension;
    j["fourbar.singular_locus_dimension"] = a.singular_locus_dimension;
    if (a.singular_points) {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& p : *a.singular_points) pts.push_back(point_strings(p));
      j["fourbar.singular_points"] = pts;
    } else {
      j["fourbar.singular_points"] = nullptr;
    }
    j["fourbar.block_leading_monomials"] = a.block_leading_monomials;
  }
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  const Certificate& c = r.classification.certificate;
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
  line("verdict", to_string(r.classification.verdict));
  line("point", point_text(r.point));
  std::string vars;
  for (const auto& n : r.ideal.variables().names()) vars += (vars.empty() ? "" : ", ") + n;
  line("ideal", r.ideal.to_string() + " in " + vars);
  std::string rad = to_string(c.radicality.verdict);
  if (c.radicality.reason != RadicalityReason::None) rad += std::string(" (") + to_string(c.radicality.reason) + ")";
  line("radicality", rad);
  if (c.dimension != -2) line("dimension", std::to_string(c.dimension));
  if (c.jacobian_rank) line("jacobian rank", std::to_string(*c.jacobian_rank));
  if (c.fiber) {
    line("blow-up depth", std::to_string(c.blowup_depth) + " (" + std::to_string(c.chart_count) + " charts)");
    auto counts = [](std::size_t re, std::size_t co, std::size_t nr) {
      return std::to_string(re) + " real, " + std::to_string(co) + " complex, " + std::to_string(nr) +
             " non-reduced real";
    };
    line("fiber", counts(c.fiber->real_points, c.fiber->complex_points, c.fiber->nonreduced_real_points));
    for (const auto& fc : c.fiber->charts)
      out += "  chart " + fc.chart + ": " + counts(fc.real_points, fc.complex_points, fc.nonreduced_real_points) + "\n";
  }
  if (r.fourbar) {
    const FourBarAnalysis& a = *r.fourbar;
    line("four-bar", "l2 = " + to_string(a.params.l2) + ", l3 = " + to_string(a.params.l3) + ", l4 = " +
                         to_string(a.params.l4));
    line("dim I", std::to_string(a.ideal_dimension));
    line("dim singular locus", std::to_string(a.singular_locus_dimension));
    if (a.singular_points) {
      std::string pts;
      for (const auto& p : *a.singular_points) pts += (pts.empty() ? "" : " ") + point_text(p);
      line("singular points", pts.empty() ? "none" : pts);
    }
    std::string lms;
    for (const auto& m : a.block_leading_monomials) lms += (lms.empty() ? "" : ", ") + m;
    line("block-order leading monomials", "{" + lms + "}");
  }
  if (c.failure) line("failure", to_string(*c.failure));
  line("reason", c.reason_text);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", r.seconds);
  line("time", buf);
  line("version", std::string("mfp ") + version());
  return out;
}

}  // namespace mfp
