// Command-line front end: single evaluations, table reproduction, region
// rasters and the invariant self-test.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyp2f1/harness.hpp"

namespace {

using hyp2f1::Complex;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 2;
  }
  file << text;
  return 0;
}

std::string evaluation_text(const hyp2f1::Evaluation& ev, const std::string& format) {
  const auto& r = ev.result;
  if (format == "json") {
    nlohmann::json j;
    j["value"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
    j["method"] = std::string(hyp2f1::to_string(ev.method));
    j["terms"] = r.terms_used;
    j["est_error"] = r.est_error;
    j["converged"] = r.converged;
    j["error_inflation"] = r.error_inflation;
    j["in_region_margin"] = ev.in_region_margin;
    return j.dump(2) + "\n";
  }
  char buf[256];
  if (format == "csv") {
    std::snprintf(buf, sizeof buf,
                  "re,im,method,terms,est_error,converged,in_region_margin\n"
                  "%.17g,%.17g,%s,%zu,%.6e,%d,%.17g\n",
                  r.value.real(), r.value.imag(), std::string(hyp2f1::to_string(ev.method)).c_str(),
                  r.terms_used, r.est_error, r.converged ? 1 : 0, ev.in_region_margin);
    return buf;
  }
  std::snprintf(buf, sizeof buf,
                "value      %.16e %+.16ei\nmethod     %s\nterms      %zu\nest_error  %.3e\n"
                "converged  %s\nmargin     %.6g\n",
                r.value.real(), r.value.imag(), std::string(hyp2f1::to_string(ev.method)).c_str(),
                r.terms_used, r.est_error, r.converged ? "yes" : "no", ev.in_region_margin);
  return buf;
}

std::optional<hyp2f1::MethodId> method_from(const std::string& name) {
  if (name == "auto") return std::nullopt;
  auto id = hyp2f1::parse_method(name);
  if (!id) throw hyp2f1::ConfigError("unknown method '" + name + "'");
  return id;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss hypergeometric 2F1(a, b; c; z) via multi-point Taylor expansions"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate 2F1 at a single point");
  double a = 0, b = 0, c = 0;
  std::string z_text, method_name = "auto", w_text = "0.5+0.5i", z0_text = "0.5";
  std::optional<std::size_t> terms;
  double tol = hyp2f1::kDefaultTolerance;
  std::string format = "text", out_path;
  eval->add_option("-a", a, "parameter a")->required();
  eval->add_option("-b", b, "parameter b")->required();
  eval->add_option("-c", c, "parameter c")->required();
  eval->add_option("-z", z_text, "argument, e.g. 0.5+0.8660254i or exp(i*pi/3)")->required();
  eval->add_option("--method", method_name,
                   "auto|maclaurin|euler-oracle|buhring|onepoint-half|onepoint-w|twopoint|threepoint");
  eval->add_option("--terms", terms, "truncation index n (sum over 0..n)");
  eval->add_option("--w", w_text, "expansion point for onepoint-w");
  eval->add_option("--z0", z0_text, "Buhring expansion point");
  eval->add_option("--tol", tol, "relative tolerance for convergence flags and oracles");
  eval->add_option("--format", format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  eval->add_option("--out", out_path, "write output to FILE");

  // table
  auto* table = app.add_subcommand("table", "reproduce a relative-error table");
  int table_id = 1;
  bool literal_n = false;
  std::string table_format = "csv", table_out;
  table->add_option("--id", table_id, "table id")->required()->check(CLI::Range(1, 4));
  table->add_flag("--literal-n", literal_n, "table 4: use the column label as summation index");
  table->add_option("--format", table_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "write output to FILE");

  // region
  auto* region = app.add_subcommand("region", "rasterize a method's convergence region");
  std::string region_method = "twopoint", region_w = "0.5+0.5i", region_z0 = "0.5", region_out;
  double xmin = -4, xmax = 4, ymin = -4, ymax = 4, rho = 0.9;
  std::size_t res = 256;
  region->add_option("--method", region_method, "method whose region is rasterized")->required();
  region->add_option("--w", region_w, "expansion point for onepoint-w");
  region->add_option("--z0", region_z0, "Buhring expansion point");
  region->add_option("--rho", rho, "radius for the classical (maclaurin) regions");
  region->add_option("--xmin", xmin);
  region->add_option("--xmax", xmax);
  region->add_option("--ymin", ymin);
  region->add_option("--ymax", ymax);
  region->add_option("--res", res, "points per axis (<= 4096)");
  region->add_option("--out", region_out, "write output to FILE");

  auto* self = app.add_subcommand("selftest", "run the invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      hyp2f1::MethodOptions options;
      options.w = hyp2f1::parse_complex(w_text);
      options.z0 = hyp2f1::parse_complex(z0_text);
      options.tol = tol;
      options.n_terms = terms;
      const hyp2f1::HypParams params(a, b, c);
      const auto ev = hyp2f1::evaluate(params, hyp2f1::parse_complex(z_text),
                                       method_from(method_name), options);
      return emit(evaluation_text(ev, format), out_path);
    }
    if (*table) {
      const auto result = hyp2f1::run_table(hyp2f1::table_spec(table_id, literal_n));
      return emit(table_format == "json" ? hyp2f1::table_to_json(result)
                                         : hyp2f1::table_to_csv(result),
                  table_out);
    }
    if (*region) {
      hyp2f1::RasterSpec spec;
      const auto id = hyp2f1::parse_method(region_method);
      if (!id) throw hyp2f1::ConfigError("unknown method '" + region_method + "'");
      spec.method = *id;
      spec.xmin = xmin;
      spec.xmax = xmax;
      spec.ymin = ymin;
      spec.ymax = ymax;
      spec.res = res;
      spec.options.w = hyp2f1::parse_complex(region_w);
      spec.options.z0 = hyp2f1::parse_complex(region_z0);
      spec.options.rho = rho;
      return emit(hyp2f1::raster_to_csv(hyp2f1::region_raster(spec)), region_out);
    }
    if (*self) {
      bool all = true;
      for (const auto& chk : hyp2f1::selftest()) {
        std::cout << (chk.passed ? "PASS  " : "FAIL  ") << chk.name;
        if (!chk.detail.empty()) std::cout << "  (" << chk.detail << ")";
        std::cout << '\n';
        all = all && chk.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const hyp2f1::Error& e) {
    std::cerr << "error [" << hyp2f1::to_string(e.kind()) << "]: " << e.what() << '\n';
    return hyp2f1::exit_code(e.kind());
  }
  return 0;
}
