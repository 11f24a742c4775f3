#include "mfp/mfp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <regex>

#include "mfp/error.hpp"
#include "mfp/oracle.hpp"
#include "mfp/parse.hpp"
#include "mfp/report.hpp"
#include "mfp/singularity.hpp"
#include "mfp/zerodim.hpp"

struct mfp_ideal {
  mfp::IdealPresentation ideal;
};

struct mfp_report {
  mfp::Report report;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

bool is_input_error(mfp::ErrorKind k) {
  using mfp::ErrorKind;
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::ZeroPolynomialLine:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidParams:
    case ErrorKind::NotSingularFamily:
    case ErrorKind::PointNotOnVariety:
    case ErrorKind::VariableSetMismatch:
      return true;
    default:
      return false;
  }
}

template <class F>
mfp_status guarded(F&& fn) {
  last_error.clear();
  last_kind.clear();
  try {
    fn();
    return MFP_OK;
  } catch (const mfp::Error& e) {
    last_error = e.what();
    last_kind = mfp::to_string(e.kind());
    return is_input_error(e.kind()) ? MFP_ERROR_INPUT : MFP_ERROR_COMPUTATION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    last_kind = "Internal";
    return MFP_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    last_kind = "Internal";
    return MFP_ERROR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw mfp::Error(mfp::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mfp::ClassifyOptions options_from(const mfp_analyze_options* o) {
  mfp::ClassifyOptions opts;
  if (o) {
    opts.assume_radical = o->assume_radical != 0;
    if (o->max_depth) opts.max_depth = o->max_depth;
  }
  return opts;
}

mfp::Rational rational_arg(const char* text, const char* name) {
  static const std::regex rat(R"(^\s*[+-]?[0-9]+(/[0-9]+)?\s*$)");
  require(text, name);
  std::string s(text);
  if (!std::regex_match(s, rat))
    throw mfp::Error(mfp::ErrorKind::InvalidArgument, std::string(name) + " is not a rational number: '" + s + "'");
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s[0] == '+') s.erase(0, 1);
  return mfp::parse_rational(s);
}

mfp::MonomialOrder order_arg(const char* text, std::size_t nvars) {
  require(text, "order");
  std::string s(text);
  if (s == "lex") return mfp::MonomialOrder::lex();
  if (s == "grevlex") return mfp::MonomialOrder::grevlex();
  static const std::regex elim(R"(^elim:([0-9]+)$)");
  std::smatch m;
  if (std::regex_match(s, m, elim)) {
    std::size_t k = std::stoul(m[1]);
    if (k == 0 || k >= nvars)
      throw mfp::Error(mfp::ErrorKind::InvalidArgument, "elim:K needs 0 < K < " + std::to_string(nvars));
    return mfp::MonomialOrder::block(k);
  }
  throw mfp::Error(mfp::ErrorKind::InvalidArgument, "unknown order '" + s + "' (lex, grevlex, elim:K)");
}

mfp::RationalPoint point_arg(const char* text, std::size_t nvars) {
  require(text, "point");
  mfp::RationalPoint p = mfp::parse_point(text);
  if (p.size() != nvars)
    throw mfp::Error(mfp::ErrorKind::InvalidArgument, "point has " + std::to_string(p.size()) +
                                                          " coordinates, the ideal has " + std::to_string(nvars) +
                                                          " variables");
  return p;
}

std::string lines(const std::vector<mfp::Polynomial>& ps) {
  std::string out;
  for (const auto& p : ps) out += p.to_string() + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* mfp_version(void) { return mfp::version(); }
const char* mfp_last_error(void) { return last_error.c_str(); }
const char* mfp_last_error_kind(void) { return last_kind.c_str(); }
void mfp_string_free(char* s) { std::free(s); }

mfp_status mfp_ideal_parse(const char* text, mfp_ideal** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto* h = new mfp_ideal{mfp::parse_ideal(text)};
    *out = h;
  });
}

void mfp_ideal_free(mfp_ideal* ideal) { delete ideal; }

mfp_status mfp_ideal_format(const mfp_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = dup(mfp::format_ideal(ideal->ideal));
  });
}

size_t mfp_ideal_nvars(const mfp_ideal* ideal) { return ideal ? ideal->ideal.nvars() : 0; }

mfp_status mfp_analyze(const mfp_ideal* ideal, const char* point, const mfp_analyze_options* options,
                       mfp_report** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = nullptr;
    auto p = point_arg(point, ideal->ideal.nvars());
    *out = new mfp_report{mfp::analyze_report(ideal->ideal, p, options_from(options))};
  });
}

mfp_status mfp_fourbar(const char* l2, const char* l3, const char* l4, const mfp_analyze_options* options,
                       mfp_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    mfp::Rational a = rational_arg(l2, "l2"), c = rational_arg(l4, "l4");
    mfp::FourBarParams params = mfp::FourBarParams::grashof(a, c);
    if (l3) params.l3 = rational_arg(l3, "l3");
    *out = new mfp_report{mfp::fourbar_report(params, options_from(options))};
  });
}

void mfp_report_free(mfp_report* report) { delete report; }

const char* mfp_report_verdict(const mfp_report* report) {
  return report ? mfp::to_string(report->report.classification.verdict) : "";
}

mfp_status mfp_report_render(const mfp_report* report, mfp_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (format != MFP_FORMAT_TEXT && format != MFP_FORMAT_MACHINE)
      throw mfp::Error(mfp::ErrorKind::InvalidArgument, "unknown report format");
    *out = dup(format == MFP_FORMAT_MACHINE ? mfp::render_machine(report->report) : mfp::render_text(report->report));
  });
}

mfp_status mfp_groebner(const mfp_ideal* ideal, const char* order, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    auto G = ideal->ideal.groebner(order_arg(order, ideal->ideal.nvars()));
    *out = dup(lines(G.basis));
  });
}

mfp_status mfp_dimension(const mfp_ideal* ideal, int* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = mfp::krull_dimension(ideal->ideal);
  });
}

mfp_status mfp_singular_locus(const mfp_ideal* ideal, char** generators, int* dimension) {
  return guarded([&] {
    require(ideal, "ideal");
    require(generators, "generators");
    require(dimension, "dimension");
    auto J = mfp::singular_locus_ideal(ideal->ideal);
    auto G = J.groebner();
    *dimension = mfp::krull_dimension(G, J.nvars());
    *generators = dup(lines(G.basis));
  });
}

mfp_status mfp_real_count(const mfp_ideal* ideal, size_t* complex_points, size_t* real_points) {
  return guarded([&] {
    require(ideal, "ideal");
    require(complex_points, "complex_points");
    require(real_points, "real_points");
    auto c = mfp::count_points(ideal->ideal);
    *complex_points = c.complex_distinct;
    *real_points = c.real_distinct;
  });
}

mfp_status mfp_halfbranches(const mfp_ideal* ideal, const char* point, const char* radii, size_t* out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    auto p = point_arg(point, ideal->ideal.nvars());
    std::vector<mfp::Rational> rs = mfp::default_radii();
    if (radii) {
      rs.clear();
      std::string s(radii);
      std::size_t start = 0;
      while (true) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        mfp::Rational r = rational_arg(item.c_str(), "radius");
        if (r <= 0) throw mfp::Error(mfp::ErrorKind::InvalidArgument, "radii must be positive");
        rs.push_back(r);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    *out = mfp::halfbranch_count(ideal->ideal, p, rs);
  });
}

}  // extern "C"
