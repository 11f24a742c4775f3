#ifndef MFP_REPORT_HPP
#define MFP_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "mfp/decider.hpp"
#include "mfp/fourbar.hpp"

namespace mfp {

const char* version() noexcept;

struct Report {
  IdealPresentation ideal;
  RationalPoint point;
  ClassifyOptions options;
  Classification classification;
  double seconds = 0;
  std::optional<FourBarAnalysis> fourbar;
};

/// classify_point, timed.
Report analyze_report(const IdealPresentation& I, const RationalPoint& p, const ClassifyOptions& opts = {});
/// analyze_fourbar, timed.
Report fourbar_report(const FourBarParams& params, const ClassifyOptions& opts = {});

/// Flat JSON object with dotted keys in sorted order; schema_version 1.
std::string render_machine(const Report& r);
std::string render_text(const Report& r);

}  // namespace mfp

#endif
