#include "starsdym/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "starsdym/chiral_sequence.hpp"
#include "starsdym/errors.hpp"
#include "starsdym/example_solution.hpp"
#include "starsdym/heavenly_geometry.hpp"
#include "starsdym/io.hpp"
#include "starsdym/kowalewska.hpp"
#include "starsdym/me_solver.hpp"
#include "starsdym/projection.hpp"
#include "starsdym/torus_fft.hpp"

namespace starsdym::cli {

namespace {

constexpr const char* kOutputDirVariable = "STARSDYM_OUTPUT_DIR";
constexpr double kOrderTarget = 2.0;

struct Result {
  std::string document;
  std::string extension;
  Json summary;  // null when the document is the whole result
  bool passed = true;
};

struct CommonOptions {
  std::string out;
  std::string format = "csv";
};

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("missing comma");
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, comma), &used);
    const double hi = std::stod(text.substr(comma + 1));
    if (lo > hi) throw std::invalid_argument("reversed range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ValidationError(fmt::format("{} expects 'lo,hi' with lo <= hi, got '{}'", flag, text));
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ValidationError(fmt::format("{} expects a comma-separated list of integers, got '{}'", flag, text));
    }
  }
  if (out.empty()) throw ValidationError(fmt::format("{} must not be empty", flag));
  return out;
}

Json parse_json(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(fmt::format("{}: malformed JSON ({})", flag, e.what()));
  }
}

void require_positive(double v, const char* flag) {
  if (!(v > 0.0)) throw ValidationError(fmt::format("{} must be positive", flag));
}

void require_format(const std::string& format) {
  if (format != "csv" && format != "json") throw ValidationError("--format must be csv or json");
}

SpacetimeGrid plane_grid(std::pair<double, double> w, std::pair<double, double> z, double h) {
  return SpacetimeGrid({UniformAxis::from_range(w.first, w.second, h), UniformAxis::from_range(z.first, z.second, h)});
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct StarOptions {
  std::string f, g, op = "star";
  double hbar = 1.0;
  double prune = kDefaultPruneThreshold;
};

Result run_star(const StarOptions& o) {
  const FourierField f = field_from_json(parse_json(o.f, "--f"));
  const FourierField g = field_from_json(parse_json(o.g, "--g"));
  const AlgebraOptions opts{o.prune};
  FourierField r;
  if (o.op == "star") {
    require_positive(o.hbar, "--hbar");
    r = star_product(f, g, o.hbar, opts);
  } else if (o.op == "moyal") {
    require_positive(o.hbar, "--hbar");
    r = moyal_bracket(f, g, o.hbar, opts);
  } else if (o.op == "poisson") {
    r = poisson_bracket(f, g, opts);
  } else {
    throw ValidationError("--op must be star, moyal or poisson");
  }
  return {dump(field_to_json(r)), "json", nullptr, true};
}

struct BasisOptions {
  int n = 3;
  double tol = 1e-11;
  double det_tol = 1e-10;
};

Json check_json(const PropertyCheck& c) { return Json{{"passed", c.passed}, {"max_deviation", c.max_deviation}}; }

Result run_basis(const BasisOptions& o) {
  require_positive(o.tol, "--tol");
  require_positive(o.det_tol, "--det-tol");
  const auto report = verify_basis_properties(o.n, o.tol, o.det_tol);
  Json props = Json::object();
  for (const auto& p : report.properties) props[p.name] = check_json(p);
  const auto su = su_n_basis(o.n);
  Json j{{"n", o.n},
         {"properties", props},
         {"determinant_corrected", check_json(report.determinant_corrected)},
         {"structure_constants", check_json(report.structure_constants)},
         {"su_n_basis_size", su.size()},
         {"all_passed", report.all_properties_passed()}};
  return {dump(j), "json", nullptr, report.all_properties_passed()};
}

struct ProjectOptions {
  int n = 2;
  std::string modes;
};

Result run_project(const ProjectOptions& o) {
  const FourierField f = field_from_json(parse_json(o.modes, "--modes"));
  return {dump(matrix_to_json(chi_project(f, o.n).matrix)), "json", nullptr, true};
}

struct SolveOptions {
  double hbar = 2.0 * std::numbers::pi / 5.0;
  double w = 0.3;
  double z = 0.7;
  int band_limit = 40;
  int torus = 128;
  int k = 12;
  double tol = 1e-8;
};

Result run_solve(const SolveOptions& o) {
  if (o.hbar < 0.0) throw ValidationError("--hbar must be non-negative");
  const FourierField projected = example_modes(o.hbar, o.w, o.z, o.torus, o.band_limit);
  const FourierField expansion = fourier_expansion_theta(o.hbar, o.w, o.z, o.band_limit);
  const double deviation = max_abs_difference(projected, expansion);
  const auto series = kowalewska_series(example_cauchy0(), example_cauchy1(), o.hbar, o.k);
  const double series_deviation = max_abs_difference(series.evaluate(o.w, o.z), projected);
  const double value_origin = example_solution(o.hbar).evaluator(o.w, o.z, 0.0, 0.0);
  Json j{{"hbar", o.hbar},
         {"w", o.w},
         {"z", o.z},
         {"band_limit", o.band_limit},
         {"torus", o.torus},
         {"theta_at_origin", value_origin},
         {"bessel_expansion_deviation", deviation},
         {"bessel_expansion_tail_bound", fourier_expansion_tail_bound(o.hbar, o.z, o.band_limit)},
         {"series_order", o.k},
         {"series_deviation", series_deviation},
         {"field", field_to_json(projected)},
         {"passed", deviation <= o.tol}};
  return {dump(j), "json", nullptr, deviation <= o.tol};
}

struct VerifyMeOptions {
  CommonOptions common;
  double hbar = 2.0 * std::numbers::pi / 5.0;
  bool classical = false;
  double h = 1.0 / 16.0;
  double extent = 1.0;
  int band_limit = 24;
  int torus = 64;
  double order_tol = 0.3;
};

Result run_verify_me(const VerifyMeOptions& o) {
  require_format(o.common.format);
  require_positive(o.h, "--h");
  require_positive(o.extent, "--extent");
  if (!o.classical) require_positive(o.hbar, "--hbar");
  const double hbar = o.classical ? 0.0 : o.hbar;
  auto residual = [&](double h) {
    const auto grid = plane_grid({-o.extent, o.extent}, {-o.extent, o.extent}, h);
    const auto field = sample_example_solution(grid, hbar, o.torus, o.band_limit);
    if (o.classical) return residual_hp_classical(field);
    return residual_moyal_hp(field);
  };
  const ResidualField coarse = residual(o.h);
  const ResidualField fine = residual(0.5 * o.h);
  const auto order = estimate_order(coarse, fine);
  const auto s = coarse.summary();
  const bool passed = std::abs(order.order - kOrderTarget) <= o.order_tol;
  Json summary{{"hbar", hbar},
               {"classical", o.classical},
               {"h", s.h},
               {"sup_norm", s.sup_norm},
               {"l2_norm", s.l2_norm},
               {"fine_sup_norm", order.fine_sup},
               {"richardson_order", order.order},
               {"passed", passed}};
  if (o.common.format == "json") return {dump(summary), "json", nullptr, passed};
  CsvWriter csv({"w", "z", "residual"});
  for (std::size_t k = 0; k < coarse.values.size(); ++k) {
    const auto x = coarse.grid.coordinates(k);
    csv.add_row({x[0], x[1], coarse.values[k]});
  }
  return {csv.str(), "csv", summary, passed};
}

struct VerifyChiralOptions {
  CommonOptions common;
  int n = 2;
  double h = 1.0 / 16.0;
  std::string grid_w = "-1,1";
  std::string grid_z = "-1,1";
  int band_limit = 60;
  double order_tol = 0.3;
};

Result run_verify_chiral(const VerifyChiralOptions& o) {
  require_format(o.common.format);
  require_positive(o.h, "--h");
  const auto wr = parse_range(o.grid_w, "--grid-w");
  const auto zr = parse_range(o.grid_z, "--grid-z");
  const ChiralField coarse = generate_chiral_field(o.n, plane_grid(wr, zr, o.h));
  const ChiralField fine = generate_chiral_field(o.n, plane_grid(wr, zr, 0.5 * o.h));
  const ResidualField rc = residual_chiral(coarse);
  const ResidualField rf = residual_chiral(fine);
  const auto order = estimate_order(rc, rf);
  const auto membership = su_n_membership(coarse);

  // Fold-project cross-check at the grid centre and corners.
  double fold = 0.0;
  const ChiralFormula formula = chiral_formula(o.n, std::max({2.0, std::abs(zr.first), std::abs(zr.second)}));
  for (double w : {wr.first, 0.5 * (wr.first + wr.second), wr.second}) {
    for (double z : {zr.first, 0.5 * (zr.first + zr.second), zr.second}) {
      const Matrix folded = chi_project(fourier_expansion_theta(matrix_hbar(o.n), w, z, o.band_limit), o.n).matrix;
      fold = std::max(fold, (formula.evaluate(w, z) - folded).cwiseAbs().maxCoeff());
    }
  }
  double pauli = 0.0;
  if (o.n == 2) {
    for (std::size_t k = 0; k < coarse.values.size(); ++k) {
      const auto x = coarse.grid.coordinates(k);
      pauli = std::max(pauli, (coarse.values[k] - pauli_closed_form(x[0], x[1])).cwiseAbs().maxCoeff());
    }
  }
  const auto s = rc.summary();
  const bool passed = std::abs(order.order - kOrderTarget) <= o.order_tol && membership.anti_hermitian <= 1e-11 &&
                      membership.trace <= 1e-11 && fold <= 1e-7 && pauli <= 1e-9;
  Json summary{{"n", o.n},
               {"h", s.h},
               {"sup_norm", s.sup_norm},
               {"l2_norm", s.l2_norm},
               {"fine_sup_norm", order.fine_sup},
               {"richardson_order", order.order},
               {"anti_hermitian_deviation", membership.anti_hermitian},
               {"trace_deviation", membership.trace},
               {"fold_project_deviation", fold},
               {"passed", passed}};
  if (o.n == 2) summary["pauli_deviation"] = pauli;
  if (o.common.format == "json") return {dump(summary), "json", nullptr, passed};

  std::vector<std::string> header{"w", "z", "residual"};
  for (int i = 0; i < o.n; ++i) {
    for (int k = 0; k < o.n; ++k) {
      header.push_back(fmt::format("re_{}_{}", i, k));
      header.push_back(fmt::format("im_{}_{}", i, k));
    }
  }
  CsvWriter csv(header);
  for (std::size_t k = 0; k < rc.values.size(); ++k) {
    const auto x = rc.grid.coordinates(k);
    auto idx = rc.grid.multi_index(k);
    for (auto& i : idx) ++i;
    const Matrix& m = coarse.values[coarse.grid.flat_index(idx)];
    std::vector<double> row{x[0], x[1], rc.values[k]};
    for (int i = 0; i < o.n; ++i) {
      for (int c = 0; c < o.n; ++c) {
        row.push_back(m(i, c).real());
        row.push_back(m(i, c).imag());
      }
    }
    csv.add_row(row);
  }
  return {csv.str(), "csv", summary, passed};
}

struct CurvatureOptions {
  CommonOptions common;
  int points = 20;
  std::uint64_t seed = 1;
  double h = 1e-3;
};

Result run_curvature(const CurvatureOptions& o) {
  require_format(o.common.format);
  require_positive(o.h, "--h");
  if (o.points < 1) throw ValidationError("--points must be positive");
  const FrameFunction frame = [](const Point4& x) { return example_tetrad(x).e; };
  CsvWriter csv({"w", "z", "p", "q", "C1_re", "C1_im", "dotted_norm", "structure_residual"});
  double c1_error = 0.0, other = 0.0, dotted = 0.0, dotted_curv = 0.0, structure = 0.0;
  for (const auto& x : sample_admissible_points(o.points, o.seed)) {
    const WeylReport w = weyl_report(frame, x, o.h);
    const double closed = weyl_c1(x);
    const auto first = cartan_first(frame, x, o.h);
    const double sr = structure_residual(frame(x), first.de, example_connection(x));
    c1_error = std::max(c1_error, std::abs(w.c1 - closed) / std::abs(closed));
    const double scale = std::max(1.0, std::abs(closed));
    other = std::max(other, w.other_components / scale);
    dotted_curv = std::max(dotted_curv, w.dotted_curvature / scale);
    dotted = std::max(dotted, w.dotted_norm);
    structure = std::max(structure, sr);
    csv.add_row({x[0], x[1], x[2], x[3], w.c1, 0.0, w.dotted_norm, sr});
  }
  const double tol = fd_tolerance(o.h);
  const bool passed =
      c1_error <= 1e-4 && other <= tol && dotted_curv <= tol && dotted <= tol && structure <= tol;
  Json summary{{"points", o.points},
               {"h", o.h},
               {"max_c1_relative_error", c1_error},
               {"max_other_weyl_components", other},
               {"max_dotted_curvature", dotted_curv},
               {"max_dotted_connection", dotted},
               {"max_structure_residual", structure},
               {"fd_tolerance", tol},
               {"passed", passed}};
  if (o.common.format == "json") return {dump(summary), "json", nullptr, passed};
  return {csv.str(), "csv", summary, passed};
}

struct ConvergeOptions {
  CommonOptions common;
  std::string n_list = "2,4,8,16,32";
  std::string grid_w = "1,1";
  std::string grid_z = "-1,1";
  double h = 0.25;
  int band_limit = 40;
  double exponent_tol = 0.3;
};

Result run_converge(const ConvergeOptions& o) {
  require_format(o.common.format);
  require_positive(o.h, "--h");
  const auto table = convergence_study(parse_int_list(o.n_list, "--n-list"),
                                       plane_grid(parse_range(o.grid_w, "--grid-w"), parse_range(o.grid_z, "--grid-z"), o.h),
                                       o.band_limit);
  const bool passed = table.strictly_decreasing && std::abs(table.fitted_exponent - kOrderTarget) <= o.exponent_tol;
  Json rows = Json::array();
  CsvWriter csv({"N", "d", "fitted_exponent"});
  for (const auto& r : table.rows) {
    csv.add_row({static_cast<double>(r.n), r.distance, table.fitted_exponent});
    rows.push_back({{"N", r.n}, {"d", r.distance}});
  }
  Json summary{{"rows", rows},
               {"fitted_exponent", table.fitted_exponent},
               {"strictly_decreasing", table.strictly_decreasing},
               {"passed", passed}};
  if (o.common.format == "json") return {dump(summary), "json", nullptr, passed};
  return {csv.str(), "csv", summary, passed};
}

struct BesselOptions {
  double z_max = 4.0;
  int terms = 30;
};

Result run_bessel_check(const BesselOptions& o) {
  const auto r = bessel_identity_check(o.z_max, o.terms);
  const bool passed = r.second_identity_deviation <= 1e-12 && r.n2_series <= 1e-9;
  Json j{{"z_max", r.z_max},
         {"terms", r.terms},
         {"truncation_bound", r.truncation_bound},
         {"second_identity_deviation", r.second_identity_deviation},
         {"first_printed_deviation", r.first_printed_deviation},
         {"first_standard_deviation", r.first_standard_deviation},
         {"first_printed_lhs_at_zero", r.first_printed_lhs_at_zero},
         {"first_printed_rhs_at_zero", r.first_printed_rhs_at_zero},
         {"n2_deviation_with_printed", r.n2_with_printed},
         {"n2_deviation_with_standard", r.n2_with_standard},
         {"n2_deviation_bessel_series", r.n2_series},
         {"required_variant", r.required_variant},
         {"passed", passed}};
  return {dump(j), "json", nullptr, passed};
}

// ---------------------------------------------------------------------------

/// key = value lines; '#' starts a comment line.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot read config file '{}'", path));
  std::vector<std::string> args;
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(fmt::format("{}:{}: expected key = value", path, number));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ValidationError(fmt::format("{}:{}: empty key", path, number));
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--out", c.out, "Output file");
  sub->add_option("--format", c.format, "csv or json");
}

int execute(std::vector<std::string> args) {
  // Pull out --config before parsing so its entries can precede explicit flags.
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }

  CLI::App app{"Star-product self-dual Yang-Mills reductions: algebra, solutions and checks"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string chosen;
  std::string out_path;
  std::function<Result()> action;

  StarOptions star;
  auto* s_star = app.add_subcommand("star", "Star product or brackets of two fields");
  s_star->set_help_flag("--help", "Print this help message and exit");
  s_star->add_option("--f", star.f, "First field as JSON")->required();
  s_star->add_option("--g", star.g, "Second field as JSON")->required();
  s_star->add_option("--op", star.op, "star, moyal or poisson");
  s_star->add_option("--hbar", star.hbar, "Deformation parameter");
  s_star->add_option("--prune", star.prune, "Prune threshold");
  s_star->add_option("--out", out_path, "Output file");
  s_star->callback([&] { action = [&] { return run_star(star); }; });

  BasisOptions basis;
  auto* s_basis = app.add_subcommand("basis", "Verify the trigonometric sl(N) basis");
  s_basis->set_help_flag("--help", "Print this help message and exit");
  s_basis->add_option("--n", basis.n, "Matrix dimension");
  s_basis->add_option("--tol", basis.tol, "Entrywise tolerance");
  s_basis->add_option("--det-tol", basis.det_tol, "Relative determinant tolerance");
  s_basis->add_option("--out", out_path, "Output file");
  s_basis->callback([&] { action = [&] { return run_basis(basis); }; });

  ProjectOptions project;
  auto* s_project = app.add_subcommand("project", "Fold a Fourier field onto sl(N)");
  s_project->set_help_flag("--help", "Print this help message and exit");
  s_project->add_option("--n", project.n, "Matrix dimension")->required();
  s_project->add_option("--modes", project.modes, "Modes as JSON [[m1,m2,re,im],...]")->required();
  s_project->add_option("--out", out_path, "Output file");
  s_project->callback([&] { action = [&] { return run_project(project); }; });

  SolveOptions solve;
  auto* s_solve = app.add_subcommand("solve", "Fourier modes of the example solution");
  s_solve->set_help_flag("--help", "Print this help message and exit");
  s_solve->add_option("--hbar", solve.hbar, "Deformation parameter");
  s_solve->add_option("--w", solve.w);
  s_solve->add_option("--z", solve.z);
  s_solve->add_option("--band-limit", solve.band_limit);
  s_solve->add_option("--torus", solve.torus, "Torus samples per axis");
  s_solve->add_option("--k", solve.k, "Power-series truncation order");
  s_solve->add_option("--tol", solve.tol, "Tolerance for the Bessel-expansion cross-check");
  s_solve->add_option("--out", out_path, "Output file");
  s_solve->callback([&] { action = [&] { return run_solve(solve); }; });

  VerifyMeOptions me;
  auto* s_me = app.add_subcommand("verify-me", "Residual of the reduced master equation for the example");
  s_me->set_help_flag("--help", "Print this help message and exit");
  s_me->add_option("--hbar", me.hbar);
  s_me->add_flag("--classical", me.classical, "Use the Poisson bracket and the classical solution");
  s_me->add_option("--h", me.h, "Grid step (the check also runs at h/2)");
  s_me->add_option("--extent", me.extent, "Grid covers [-extent, extent]^2");
  s_me->add_option("--band-limit", me.band_limit);
  s_me->add_option("--torus", me.torus);
  s_me->add_option("--order-tol", me.order_tol);
  add_common(s_me, me.common);
  s_me->callback([&] { action = [&] { return run_verify_me(me); }; });

  VerifyChiralOptions chiral;
  auto* s_chiral = app.add_subcommand("verify-chiral", "Chiral-field checks for su(N)");
  s_chiral->set_help_flag("--help", "Print this help message and exit");
  s_chiral->alias("chiral");
  s_chiral->add_option("--n", chiral.n);
  s_chiral->add_option("--h", chiral.h, "Grid step (the check also runs at h/2)");
  s_chiral->add_option("--grid-w", chiral.grid_w, "w range as lo,hi");
  s_chiral->add_option("--grid-z", chiral.grid_z, "z range as lo,hi");
  s_chiral->add_option("--band-limit", chiral.band_limit, "Band limit of the fold-project cross-check");
  s_chiral->add_option("--order-tol", chiral.order_tol);
  add_common(s_chiral, chiral.common);
  s_chiral->callback([&] { action = [&] { return run_verify_chiral(chiral); }; });

  CurvatureOptions curv;
  auto* s_curv = app.add_subcommand("curvature", "Connection and Weyl curvature of the example metric");
  s_curv->set_help_flag("--help", "Print this help message and exit");
  s_curv->add_option("--points", curv.points);
  s_curv->add_option("--seed", curv.seed);
  s_curv->add_option("--h", curv.h, "Finite-difference step");
  add_common(s_curv, curv.common);
  s_curv->callback([&] { action = [&] { return run_curvature(curv); }; });

  ConvergeOptions conv;
  auto* s_conv = app.add_subcommand("converge", "Distance to the classical limit as N grows");
  s_conv->set_help_flag("--help", "Print this help message and exit");
  s_conv->add_option("--n-list", conv.n_list, "Increasing N values, comma separated");
  s_conv->add_option("--grid-w", conv.grid_w, "w range as lo,hi");
  s_conv->add_option("--grid-z", conv.grid_z, "z range as lo,hi");
  s_conv->add_option("--h", conv.h);
  s_conv->add_option("--band-limit", conv.band_limit);
  s_conv->add_option("--exponent-tol", conv.exponent_tol);
  add_common(s_conv, conv.common);
  s_conv->callback([&] { action = [&] { return run_converge(conv); }; });

  BesselOptions bessel;
  auto* s_bessel = app.add_subcommand("bessel-check", "Bessel summation identities");
  s_bessel->set_help_flag("--help", "Print this help message and exit");
  s_bessel->add_option("--z-max", bessel.z_max);
  s_bessel->add_option("--terms", bessel.terms);
  s_bessel->add_option("--out", out_path, "Output file");
  s_bessel->callback([&] { action = [&] { return run_bessel_check(bessel); }; });

  for (auto* sub : app.get_subcommands({})) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    for (auto* opt : sub->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }

  if (!config_path.empty()) {
    const auto extra = read_config(config_path);
    auto it = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
      return !a.empty() && a[0] != '-';
    });
    if (it == args.end()) throw ValidationError("--config needs a subcommand");
    args.insert(it + 1, extra.begin(), extra.end());
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) chosen = sub->get_name();
  CommonOptions* common = nullptr;
  if (chosen == "verify-me") common = &me.common;
  if (chosen == "verify-chiral") common = &chiral.common;
  if (chosen == "curvature") common = &curv.common;
  if (chosen == "converge") common = &conv.common;
  if (common != nullptr) out_path = common->out;

  const Result result = action();
  std::string path = out_path;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirVariable); dir != nullptr && *dir != '\0') {
      path = fmt::format("{}/{}.{}", dir, chosen, result.extension);
    }
  }
  if (!path.empty()) {
    write_text_file(path, result.document);
    if (!result.summary.is_null()) std::cout << dump(result.summary);
  } else {
    std::cout << result.document;
    if (!result.summary.is_null()) std::cerr << dump(result.summary);
  }
  return result.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(std::vector<std::string> args) {
  try {
    return execute(std::move(args));
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args));
}

}  // namespace starsdym::cli
