// mfp command-line front end; talks to the library only through mfp.h.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mfp/mfp.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kComputationError = 2;

struct Failure {
  int code;
};

int exit_code(mfp_status s) { return s == MFP_ERROR_INPUT ? kUsageError : kComputationError; }

void check(mfp_status s) {
  if (s == MFP_OK) return;
  std::cerr << "mfp: " << mfp_last_error() << "\n";
  throw Failure{exit_code(s)};
}

struct IdealDeleter {
  void operator()(mfp_ideal* p) const { mfp_ideal_free(p); }
};
struct ReportDeleter {
  void operator()(mfp_report* p) const { mfp_report_free(p); }
};
using IdealPtr = std::unique_ptr<mfp_ideal, IdealDeleter>;
using ReportPtr = std::unique_ptr<mfp_report, ReportDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  mfp_string_free(s);
  return out;
}

IdealPtr load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "mfp: cannot read " << path << "\n";
    throw Failure{kUsageError};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  mfp_ideal* raw = nullptr;
  mfp_status s = mfp_ideal_parse(buf.str().c_str(), &raw);
  if (s != MFP_OK) {
    std::cerr << "mfp: " << path << ": " << mfp_last_error() << "\n";
    throw Failure{exit_code(s)};
  }
  return IdealPtr(raw);
}

void print_report(const ReportPtr& r, const std::string& format) {
  char* out = nullptr;
  check(mfp_report_render(r.get(), format == "machine" ? MFP_FORMAT_MACHINE : MFP_FORMAT_TEXT, &out));
  std::cout << take(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a point of a real algebraic curve is a manifold point"};
  app.set_version_flag("--version", std::string("mfp ") + mfp_version());
  app.require_subcommand(1);

  std::string ideal_path, point, format = "text", order = "grevlex", l2, l3, l4, radii;
  bool assume_radical = false;
  unsigned max_depth = 6;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_depth = [&](CLI::App* c) {
    c->add_option("--max-depth", max_depth, "Maximum blow-up depth")->check(CLI::Range(1u, 64u));
  };

  auto* analyze = app.add_subcommand("analyze", "Classify a point of V(I)");
  analyze->add_option("--ideal", ideal_path, "Ideal file")->required();
  analyze->add_option("--point", point, "Rational point c1,...,cn")->required();
  analyze->add_flag("--assume-radical", assume_radical, "Treat I as radical without a certificate");
  add_depth(analyze);
  add_format(analyze);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("--ideal", ideal_path, "Ideal file")->required();
  gb->add_option("--order", order, "lex, grevlex or elim:K");

  auto* dim = app.add_subcommand("dim", "Krull dimension");
  dim->add_option("--ideal", ideal_path, "Ideal file")->required();

  auto* singlocus = app.add_subcommand("singlocus", "Singular locus ideal and its dimension");
  singlocus->add_option("--ideal", ideal_path, "Ideal file")->required();

  auto* realcount = app.add_subcommand("realcount", "Distinct complex and real points of a zero-dimensional ideal");
  realcount->add_option("--ideal", ideal_path, "Ideal file")->required();

  auto* fourbar = app.add_subcommand("fourbar", "Analyze the singular configuration of a four-bar linkage");
  fourbar->add_option("--l2", l2, "Crank length")->required();
  fourbar->add_option("--l4", l4, "Coupler length")->required();
  fourbar->add_option("--l3", l3, "Rocker length (default l2 + l4 - 2)");
  fourbar->add_flag("--assume-radical", assume_radical, "Treat I as radical without a certificate");
  add_depth(fourbar);
  add_format(fourbar);

  auto* oracle = app.add_subcommand("oracle", "Count real half-branches through a point");
  oracle->add_option("--ideal", ideal_path, "Ideal file")->required();
  oracle->add_option("--point", point, "Rational point c1,...,cn")->required();
  oracle->add_option("--radii", radii, "Comma-separated decreasing radii");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  mfp_analyze_options opts{assume_radical ? 1 : 0, max_depth};
  try {
    if (*analyze) {
      auto I = load_ideal(ideal_path);
      mfp_report* raw = nullptr;
      check(mfp_analyze(I.get(), point.c_str(), &opts, &raw));
      print_report(ReportPtr(raw), format);
    } else if (*gb) {
      auto I = load_ideal(ideal_path);
      char* out = nullptr;
      check(mfp_groebner(I.get(), order.c_str(), &out));
      std::cout << take(out);
    } else if (*dim) {
      auto I = load_ideal(ideal_path);
      int d = 0;
      check(mfp_dimension(I.get(), &d));
      std::cout << d << "\n";
    } else if (*singlocus) {
      auto I = load_ideal(ideal_path);
      char* gens = nullptr;
      int d = 0;
      check(mfp_singular_locus(I.get(), &gens, &d));
      std::cout << take(gens) << "dimension: " << d << "\n";
    } else if (*realcount) {
      auto I = load_ideal(ideal_path);
      size_t c = 0, r = 0;
      check(mfp_real_count(I.get(), &c, &r));
      std::cout << "complex: " << c << "\nreal: " << r << "\n";
    } else if (*fourbar) {
      mfp_report* raw = nullptr;
      check(mfp_fourbar(l2.c_str(), l3.empty() ? nullptr : l3.c_str(), l4.c_str(), &opts, &raw));
      print_report(ReportPtr(raw), format);
    } else if (*oracle) {
      auto I = load_ideal(ideal_path);
      size_t n = 0;
      check(mfp_halfbranches(I.get(), point.c_str(), radii.empty() ? nullptr : radii.c_str(), &n));
      std::cout << n << "\n";
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
