// Command line front end for the p-harmonic map library: radius tables,
// Bloch bounds, geometric predicate checks on map files, and region of
// variability sampling.

#include <clocale>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pharmonic/pharmonic.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using pharmonic::Complex;
using pharmonic::io::format_sig;

struct CommonOpts {
  std::string format;
  int precision = 6;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_format,
                int default_precision) {
  o.format = default_format;
  o.precision = default_precision;
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--precision", o.precision,
                  "significant digits for csv output")
      ->envname("PHARMONIC_PRECISION");
  cmd->add_option("--output", o.output, "write output to a file");
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.output);
  if (!f) {
    std::cerr << "error: cannot open output file: " << o.output << "\n";
    return 1;
  }
  f << text;
  return 0;
}

std::string csv_row_landau(const pharmonic::landau::LandauResult& r,
                           int digits) {
  return format_sig(r.M, digits) + "," + std::to_string(r.p) + "," +
         format_sig(r.rho, digits) + "," + format_sig(r.R, digits) + "\n";
}

ordered_json json_row_landau(const pharmonic::landau::LandauResult& r) {
  ordered_json j;
  j["theorem"] = static_cast<int>(r.family);
  j["M"] = r.M;
  j["p"] = r.p;
  j["rho"] = r.rho;
  j["R"] = r.R;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  return j;
}

int run_constants(const CommonOpts& o) {
  const auto c = pharmonic::landau::constants();
  std::string text;
  if (o.format == "json") {
    ordered_json j;
    j["M0"] = c.M0;
    j["M1"] = c.M1;
    j["s0"] = c.s0;
    j["r0"] = c.r0;
    text = j.dump() + "\n";
  } else {
    text = "name,value\n";
    text += "M0," + format_sig(c.M0, o.precision) + "\n";
    text += "M1," + format_sig(c.M1, o.precision) + "\n";
    text += "s0," + format_sig(c.s0, o.precision) + "\n";
    text += "r0," + format_sig(c.r0, o.precision) + "\n";
  }
  return emit(o, text);
}

int run_landau(int theorem, double M, int p, double tol, const CommonOpts& o) {
  if (theorem != 41 && theorem != 42)
    return usage_error("theorem must be 41 or 42");
  if (!(M >= 1.0)) return usage_error("M must be >= 1");
  if (p < 1) return usage_error("p must be >= 1");
  if (!(tol > 0.0)) return usage_error("tol must be > 0");

  const auto fam = theorem == 41 ? pharmonic::landau::LandauFamily::layered
                                 : pharmonic::landau::LandauFamily::weighted;
  const auto res = pharmonic::landau::solve(fam, M, p, tol);
  if (o.format == "json") return emit(o, json_row_landau(res).dump() + "\n");
  return emit(o, csv_row_landau(res, o.precision));
}

int run_landau_table(int theorem, std::vector<double> Ms, std::vector<int> ps,
                     double tol, const CommonOpts& o) {
  if (theorem != 41 && theorem != 42)
    return usage_error("theorem must be 41 or 42");
  if (Ms.empty()) Ms = {1.1296, 2.0, 2.2976, 3.0};
  if (ps.empty()) ps = theorem == 41 ? std::vector<int>{2, 3, 4}
                                     : std::vector<int>{2, 3};
  for (double M : Ms)
    if (!(M >= 1.0)) return usage_error("M must be >= 1");
  for (int p : ps)
    if (p < 1) return usage_error("p must be >= 1");
  if (!(tol > 0.0)) return usage_error("tol must be > 0");

  const auto fam = theorem == 41 ? pharmonic::landau::LandauFamily::layered
                                 : pharmonic::landau::LandauFamily::weighted;
  const auto rows = pharmonic::landau::generate_table(fam, Ms, ps, tol);
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back(json_row_landau(r));
    return emit(o, arr.dump() + "\n");
  }
  std::string text = "M,p,rho,R\n";
  for (const auto& r : rows) text += csv_row_landau(r, o.precision);
  return emit(o, text);
}

int run_bloch(int p, double M, const std::string& curve_path,
              int curve_samples, const CommonOpts& o) {
  if (p < 1) return usage_error("p must be >= 1");
  if (!(M > 0.0)) return usage_error("M must be > 0");
  if (curve_samples < 1) return usage_error("curve samples must be >= 1");

  const auto b = pharmonic::bloch::bloch_upper_bound(p, M);
  const char* note =
      "published value 30.7682M conflicts with the closed form maximum; "
      "reporting the closed form";

  std::string text;
  if (o.format == "csv") {
    text = "p,M,y_star,phi_at_star,bound\n";
    text += std::to_string(b.p) + "," + format_sig(b.M, o.precision) + ",";
    text += b.degenerate ? std::string("degenerate")
                         : format_sig(b.y_star, o.precision);
    text += "," + format_sig(b.phi_at_star, o.precision) + "," +
            format_sig(b.bound, o.precision) + "\n";
    if (p == 2) text += std::string("# note: ") + note + "\n";
  } else {
    ordered_json j;
    j["p"] = b.p;
    j["M"] = b.M;
    if (b.degenerate)
      j["y_star"] = "degenerate";
    else
      j["y_star"] = b.y_star;
    j["phi_at_star"] = b.phi_at_star;
    j["bound"] = b.bound;
    if (p == 2) j["note"] = note;
    text = j.dump() + "\n";
  }

  if (!curve_path.empty()) {
    std::ofstream f(curve_path);
    if (!f) {
      std::cerr << "error: cannot open curve file: " << curve_path << "\n";
      return 1;
    }
    f << "y,phi\n";
    for (int i = 0; i <= curve_samples; ++i) {
      const double y = static_cast<double>(i) / curve_samples;
      f << format_sig(y, o.precision) << ","
        << format_sig(pharmonic::bloch::phi(p, y), o.precision) << "\n";
    }
  }
  return emit(o, text);
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

int run_check(const std::string& map_path, const std::string& predicate,
              int radii, int angles, double r_max, const CommonOpts& o) {
  if (radii < 1) return usage_error("radii must be >= 1");
  if (angles < 1) return usage_error("angles must be >= 1");
  if (!(r_max > 0.0 && r_max <= 0.999))
    return usage_error("r-max must be in (0, 0.999]");

  const pharmonic::PHarmonicMap f = pharmonic::io::parse_map_file(map_path);
  const auto grid = pharmonic::SamplingGrid::uniform(radii, angles, r_max);
  pharmonic::geometry::PredicateReport rep;
  if (predicate == "sense")
    rep = pharmonic::geometry::sense_preserving_report(f, grid);
  else if (predicate == "starlike")
    rep = pharmonic::geometry::starlike_report(f, grid);
  else
    rep = pharmonic::geometry::convex_report(f, grid);

  std::string text;
  if (o.format == "csv") {
    text = "passed,min_margin,worst_re,worst_im,points_checked,vacuous,reason\n";
    text += std::string(bool_str(rep.passed)) + "," +
            format_sig(rep.min_margin, o.precision) + "," +
            format_sig(rep.worst_point.real(), o.precision) + "," +
            format_sig(rep.worst_point.imag(), o.precision) + "," +
            std::to_string(rep.points_checked) + "," + bool_str(rep.vacuous) +
            "," + rep.reason + "\n";
  } else {
    ordered_json j;
    j["passed"] = rep.passed;
    j["min_margin"] = rep.min_margin;
    j["worst_point"] = {{"re", rep.worst_point.real()},
                        {"im", rep.worst_point.imag()}};
    j["points_checked"] = rep.points_checked;
    j["vacuous"] = rep.vacuous;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    text = j.dump() + "\n";
  }
  const int code = emit(o, text);
  if (code != 0) return code;
  return rep.passed ? 0 : 1;
}

int run_variability(int p, double z0_re, double z0_im, int samples,
                    const CommonOpts& o) {
  if (p < 2) return usage_error("p must be >= 2");
  const Complex z0{z0_re, z0_im};
  if (!(std::abs(z0) < 1.0)) return usage_error("z0 must satisfy |z0| < 1");
  if (samples < 10) return usage_error("samples must be >= 10");

  const auto rs = pharmonic::variability::region_sample(p, z0, samples);
  std::string text;
  if (o.format == "json") {
    ordered_json j;
    j["p"] = rs.p;
    j["z0"] = {{"re", z0.real()}, {"im", z0.imag()}};
    j["samples"] = rs.points.size();
    j["coverage_radius"] = rs.coverage_radius;
    ordered_json pts = ordered_json::array();
    for (const Complex& pt : rs.points)
      pts.push_back({pt.real(), pt.imag()});
    j["points"] = pts;
    text = j.dump() + "\n";
  } else {
    text = "re,im\n";
    for (const Complex& pt : rs.points)
      text += format_sig(pt.real(), o.precision) + "," +
              format_sig(pt.imag(), o.precision) + "\n";
    text += "# coverage_radius = " + format_sig(rs.coverage_radius, o.precision) +
            "\n";
  }
  return emit(o, text);
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{"p-harmonic disk map toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "read options from an INI file; subcommand options go in a "
                 "section named after the subcommand");

  auto* constants_cmd =
      app.add_subcommand("constants", "print the module constants");
  CommonOpts constants_opts;
  add_common(constants_cmd, constants_opts, "csv", 10);

  auto* landau_cmd =
      app.add_subcommand("landau", "solve one Landau radius equation");
  CommonOpts landau_opts;
  int landau_theorem = 0;
  double landau_M = 0.0;
  int landau_p = 0;
  double landau_tol = 1e-12;
  landau_cmd->add_option("--theorem", landau_theorem,
                         "radius family, 41 (layered) or 42 (weighted)")
      ->required();
  landau_cmd->add_option("--M", landau_M, "layer bound, M >= 1")->required();
  landau_cmd->add_option("--p", landau_p, "number of layers")->required();
  landau_cmd->add_option("--tol", landau_tol, "solver tolerance");
  add_common(landau_cmd, landau_opts, "csv", 6);

  auto* table_cmd =
      app.add_subcommand("landau-table", "tabulate Landau radii");
  CommonOpts table_opts;
  int table_theorem = 0;
  std::vector<double> table_Ms;
  std::vector<int> table_ps;
  double table_tol = 1e-12;
  table_cmd->add_option("--theorem", table_theorem,
                        "radius family, 41 (layered) or 42 (weighted)")
      ->required();
  table_cmd->add_option("--M", table_Ms, "layer bounds (repeatable)");
  table_cmd->add_option("--p", table_ps, "layer counts (repeatable)");
  table_cmd->add_option("--tol", table_tol, "solver tolerance");
  add_common(table_cmd, table_opts, "csv", 6);

  auto* bloch_cmd =
      app.add_subcommand("bloch", "Bloch seminorm upper bound");
  CommonOpts bloch_opts;
  int bloch_p = 0;
  double bloch_M = 0.0;
  std::string bloch_curve;
  int bloch_curve_samples = 200;
  bloch_cmd->add_option("--p", bloch_p, "number of layers")->required();
  bloch_cmd->add_option("--M", bloch_M, "layer bound, M > 0")->required();
  bloch_cmd->add_option("--emit-curve", bloch_curve,
                        "write (y, phi) csv samples to a file");
  bloch_cmd->add_option("--curve-samples", bloch_curve_samples,
                        "sample count for --emit-curve");
  add_common(bloch_cmd, bloch_opts, "json", 6);

  auto* check_cmd =
      app.add_subcommand("check", "run a geometric predicate on a map file");
  CommonOpts check_opts;
  std::string check_map;
  std::string check_predicate;
  int check_radii = 64;
  int check_angles = 256;
  double check_rmax = 0.99;
  check_cmd->add_option("map", check_map, "map file to check")->required();
  check_cmd->add_option("--predicate", check_predicate, "predicate to run")
      ->required()
      ->check(CLI::IsMember({"sense", "starlike", "convex"}));
  check_cmd->add_option("--radii", check_radii, "grid radii");
  check_cmd->add_option("--angles", check_angles, "grid angles per ring");
  check_cmd->add_option("--r-max", check_rmax, "outermost grid radius");
  add_common(check_cmd, check_opts, "json", 6);

  auto* var_cmd = app.add_subcommand(
      "variability", "sample the region of variability at a point");
  CommonOpts var_opts;
  int var_p = 0;
  double var_re = 0.0;
  double var_im = 0.0;
  int var_samples = 10000;
  var_cmd->add_option("--p", var_p, "number of layers, p >= 2")->required();
  var_cmd->add_option("--z0-re", var_re, "evaluation point, real part")
      ->required();
  var_cmd->add_option("--z0-im", var_im, "evaluation point, imaginary part")
      ->required();
  var_cmd->add_option("--samples", var_samples, "number of parameter samples");
  add_common(var_cmd, var_opts, "csv", 6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*constants_cmd) return run_constants(constants_opts);
    if (*landau_cmd)
      return run_landau(landau_theorem, landau_M, landau_p, landau_tol,
                        landau_opts);
    if (*table_cmd)
      return run_landau_table(table_theorem, table_Ms, table_ps, table_tol,
                              table_opts);
    if (*bloch_cmd)
      return run_bloch(bloch_p, bloch_M, bloch_curve, bloch_curve_samples,
                       bloch_opts);
    if (*check_cmd)
      return run_check(check_map, check_predicate, check_radii, check_angles,
                       check_rmax, check_opts);
    if (*var_cmd)
      return run_variability(var_p, var_re, var_im, var_samples, var_opts);
  } catch (const pharmonic::io::MapParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
