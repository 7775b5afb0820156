#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bargkit/bargmann.hpp"
#include "bargkit/classify.hpp"
#include "bargkit/fracft.hpp"
#include "bargkit/norms.hpp"
#include "bargkit/serialization.hpp"
#include "bargkit/verification.hpp"
#include "bargkit/weights.hpp"

namespace {

using bargkit::Complex;
using nlohmann::json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& content, const std::string& output) {
  if (output.empty())
    std::cout << content;
  else
    bargkit::write_text_file(output, content);
}

bargkit::ParsedInput load_input(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--input is required");
  json j = json::parse(bargkit::read_text_file(path));
  return bargkit::parse_input_json(j);
}

// Spec inputs are analyzed at the requested cutoff; coefficient tables are
// used as stored.
bargkit::HermiteExpansion to_expansion(const bargkit::ParsedInput& input, int cutoff,
                                       int quad_order) {
  if (std::holds_alternative<bargkit::HermiteExpansion>(input))
    return std::get<bargkit::HermiteExpansion>(input);
  return bargkit::analyze(std::get<bargkit::FunctionSpec>(input),
                          bargkit::AnalyzeOptions{cutoff, quad_order})
      .expansion;
}

std::vector<double> parse_reals(const std::string& text, char sep) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) throw std::invalid_argument("empty numeric field in '" + text + "'");
    std::size_t used = 0;
    vals.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad numeric field '" + item + "'");
  }
  if (vals.empty()) throw std::invalid_argument("no values in '" + text + "'");
  return vals;
}

// "min:max:count" per axis, comma separated: first the d x-axes, then the d
// xi-axes.
bargkit::PlaneGridSpec parse_grid(const std::string& text, int dim) {
  std::vector<bargkit::AxisSpec> axes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::vector<double> t = parse_reals(part, ':');
    if (t.size() != 3) throw std::invalid_argument("grid axis '" + part + "' is not min:max:count");
    int count = static_cast<int>(t[2]);
    if (count < 2 || t[1] <= t[0])
      throw std::invalid_argument("grid axis '" + part + "' needs max > min and count >= 2");
    axes.push_back({t[0], (t[1] - t[0]) / (count - 1), count});
  }
  if (static_cast<int>(axes.size()) != 2 * dim)
    throw std::invalid_argument("--grid needs " + std::to_string(2 * dim) +
                                " axes for dimension " + std::to_string(dim));
  bargkit::PlaneGridSpec spec;
  spec.dim = dim;
  spec.x_axes.assign(axes.begin(), axes.begin() + dim);
  spec.xi_axes.assign(axes.begin() + dim, axes.end());
  return spec;
}

// Semicolon-separated points, each 2d comma-separated reals: the d first
// components, then the d second components.
std::vector<std::vector<double>> parse_points(const std::string& text, int dim) {
  std::vector<std::vector<double>> points;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<double> p = parse_reals(part, ',');
    if (static_cast<int>(p.size()) != 2 * dim)
      throw std::invalid_argument("point '" + part + "' needs " + std::to_string(2 * dim) +
                                  " coordinates for dimension " + std::to_string(dim));
    points.push_back(std::move(p));
  }
  if (points.empty()) throw std::invalid_argument("--points is empty");
  return points;
}

std::vector<std::vector<double>> grid_points(const bargkit::PlaneGridSpec& spec) {
  validate(spec);
  const int d = spec.dim;
  std::vector<std::vector<double>> points;
  std::vector<int> idx(2 * d, 0);
  while (true) {
    std::vector<double> p(2 * d);
    for (int j = 0; j < d; ++j) p[j] = spec.x_axes[j].min + spec.x_axes[j].step * idx[j];
    for (int j = 0; j < d; ++j)
      p[d + j] = spec.xi_axes[j].min + spec.xi_axes[j].step * idx[d + j];
    points.push_back(std::move(p));
    int ax = 2 * d - 1;
    while (ax >= 0) {
      int count = ax < d ? spec.x_axes[ax].count : spec.xi_axes[ax - d].count;
      if (++idx[ax] < count) break;
      idx[ax--] = 0;
    }
    if (ax < 0) break;
  }
  return points;
}

int input_dim(const bargkit::ParsedInput& input) {
  if (std::holds_alternative<bargkit::HermiteExpansion>(input))
    return std::get<bargkit::HermiteExpansion>(input).dim();
  return bargkit::spec_dim(std::get<bargkit::FunctionSpec>(input));
}

struct TransformArgs {
  std::string input;
  std::string output;
  std::string points;
  std::string grid;
  std::string order;
  int cutoff = 24;
  int quad_order = 0;
};

int run_transform_values(const TransformArgs& args, bool bargmann_side) {
  bargkit::ParsedInput input = load_input(args.input);
  const int d = input_dim(input);
  bargkit::HermiteExpansion e = to_expansion(input, args.cutoff, args.quad_order);

  std::vector<std::vector<double>> points;
  if (!args.points.empty())
    points = parse_points(args.points, d);
  else if (!args.grid.empty())
    points = grid_points(parse_grid(args.grid, d));
  else
    throw std::invalid_argument("need --points or --grid");

  std::ostringstream csv;
  for (int j = 0; j < d; ++j) csv << (bargmann_side ? "re_z_" : "x_") << j + 1 << ",";
  for (int j = 0; j < d; ++j) csv << (bargmann_side ? "im_z_" : "xi_") << j + 1 << ",";
  csv << "re,im\n";
  for (const auto& p : points) {
    Complex v;
    if (bargmann_side) {
      bargkit::ComplexVec z(d);
      for (int j = 0; j < d; ++j) z[j] = Complex(p[j], p[d + j]);
      v = bargkit::bargmann_series(e, z);
    } else {
      std::vector<double> x(p.begin(), p.begin() + d), xi(p.begin() + d, p.end());
      v = bargkit::stft_gaussian(e, x, xi);
    }
    for (double c : p) csv << fmt17(c) << ",";
    csv << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
  }
  emit(csv.str(), args.output);
  return 0;
}

int run_transform_fracft(const TransformArgs& args) {
  bargkit::ParsedInput input = load_input(args.input);
  bargkit::HermiteExpansion e = to_expansion(input, args.cutoff, args.quad_order);
  if (args.order.empty()) throw std::invalid_argument("--order is required for fracft");
  std::vector<double> r = parse_reals(args.order, ',');
  bargkit::HermiteExpansion out = bargkit::fractional_ft(e, r);
  emit(bargkit::to_json(out).dump(2) + "\n", args.output);
  return 0;
}

json weight_from_arg(const std::string& text) {
  if (text.empty()) return json{{"type", "poly"}, {"r", 0.0}};
  return json::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite-expansion / Bargmann-transform toolkit"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string input, output;

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Expand a function spec in the Hermite basis");
  int an_cutoff = 16, an_quad = 0;
  analyze_cmd->add_option("--input", input, "function spec JSON file")->required();
  analyze_cmd->add_option("--output", output, "output path (default stdout)");
  analyze_cmd->add_option("--cutoff", an_cutoff, "largest |alpha| retained (default 16)");
  analyze_cmd->add_option("--quad-order", an_quad,
                          "quadrature nodes per axis (default 2*cutoff+20)");

  auto* transform_cmd = app.add_subcommand("transform", "Evaluate a transform of the input");
  transform_cmd->require_subcommand(1);
  TransformArgs targs;
  auto add_transform_common = [&](CLI::App* sub, bool with_points) {
    sub->add_option("--input", targs.input, "expansion or spec JSON file")->required();
    sub->add_option("--output", targs.output, "output path (default stdout)");
    sub->add_option("--cutoff", targs.cutoff, "analysis cutoff for spec inputs (default 24)");
    sub->add_option("--quad-order", targs.quad_order,
                    "analysis quadrature order for spec inputs (default 2*cutoff+20)");
    if (with_points) {
      sub->add_option("--points", targs.points,
                      "semicolon-separated points, 2d comma-separated reals each");
      sub->add_option("--grid", targs.grid, "min:max:count per axis, comma separated (2d axes)");
    }
  };
  auto* tb = transform_cmd->add_subcommand("bargmann", "entire-series values at z points (CSV)");
  add_transform_common(tb, true);
  auto* ts = transform_cmd->add_subcommand(
      "stft", "Gaussian-window transform values at (x, xi) points (CSV)");
  add_transform_common(ts, true);
  auto* tf = transform_cmd->add_subcommand(
      "fracft", "fractional Fourier transform of the coefficients (JSON)");
  add_transform_common(tf, false);
  tf->add_option("--order", targs.order, "order parameter, one real per axis, comma separated");

  auto* classify_cmd =
      app.add_subcommand("classify", "Decay-ladder membership report for the input");
  int cl_cutoff = 40, cl_quad = 0;
  double cl_tol = 0.05;
  classify_cmd->add_option("--input", input, "expansion or spec JSON file")->required();
  classify_cmd->add_option("--output", output, "output path (default stdout)");
  classify_cmd->add_option("--cutoff", cl_cutoff, "analysis cutoff for spec inputs (default 40)");
  classify_cmd->add_option("--quad-order", cl_quad, "analysis quadrature order for spec inputs");
  classify_cmd->add_option("--tol", cl_tol, "slope tolerance of the verdict rules (default 0.05)");

  auto* norm_cmd = app.add_subcommand("norm", "Norms and seminorms of the input");
  norm_cmd->set_help_flag("--help", "print help");  // frees -h for the parameter below
  std::string norm_kind, norm_weight, norm_grid;
  int no_cutoff = 24, no_quad = 0;
  double no_p = 2.0, no_q = 2.0, no_h = 1.0, no_s = 0.5;
  norm_cmd->add_option("--input", input, "expansion or spec JSON file")->required();
  norm_cmd->add_option("--output", output, "output path (default stdout)");
  norm_cmd
      ->add_option("--kind", norm_kind,
                   "modulation | seminorm | a2-exponential (weighted entire-side norm)")
      ->required();
  norm_cmd->add_option("--weight", norm_weight,
                       "weight spec JSON string for modulation (default poly r=0)");
  norm_cmd->add_option("--grid", norm_grid,
                       "modulation grid, min:max:count per axis (default -8:8:65 each)");
  norm_cmd->add_option("--p", no_p, "first mixed-norm exponent (default 2)");
  norm_cmd->add_option("--q", no_q, "second mixed-norm exponent (default 2)");
  norm_cmd->add_option("--h", no_h, "seminorm / exponential-profile parameter (default 1)");
  norm_cmd->add_option("--s", no_s, "seminorm regularity parameter (default 0.5)");
  norm_cmd->add_option("--cutoff", no_cutoff, "analysis cutoff for spec inputs (default 24)");
  norm_cmd->add_option("--quad-order", no_quad, "analysis quadrature order for spec inputs");

  auto* verify_cmd = app.add_subcommand("verify", "Run a named invariant suite");
  std::string suite;
  std::uint64_t seed = 0;
  verify_cmd->add_option("suite", suite, "bridge | reproducing | weights | norms | equiv-lemma | fracft | classify")
      ->required();
  verify_cmd->add_option("--seed", seed, "random seed for the sampled checks")->required();
  verify_cmd->add_option("--output", output, "output path (default stdout)");

  auto* plot_cmd = app.add_subcommand("plotdata", "CSV tables for external plotting");
  std::string view, plot_grid;
  int pl_cutoff = 24, pl_quad = 0;
  double pl_s = 0.5;
  plot_cmd->add_option("--input", input, "expansion or spec JSON file")->required();
  plot_cmd->add_option("--output", output, "output path (default stdout)");
  plot_cmd->add_option("--view", view, "decay | heatmap")->required();
  plot_cmd->add_option("--s", pl_s, "abscissa power |alpha|^{1/(2s)} for decay (default 0.5)");
  plot_cmd->add_option("--grid", plot_grid, "heatmap grid (default -3:3:61 per axis)");
  plot_cmd->add_option("--cutoff", pl_cutoff, "analysis cutoff for spec inputs (default 24)");
  plot_cmd->add_option("--quad-order", pl_quad, "analysis quadrature order for spec inputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      json j = json::parse(bargkit::read_text_file(input));
      bargkit::FunctionSpec spec = bargkit::function_spec_from_json(j);
      bargkit::AnalysisResult res =
          bargkit::analyze(spec, bargkit::AnalyzeOptions{an_cutoff, an_quad});
      // Quadrature noise well under the representable signal is dropped so
      // finite expansions serialize as finite tables.
      double cmax = 0.0;
      for (const auto& [a, c] : res.expansion.coeffs()) cmax = std::max(cmax, std::abs(c));
      bargkit::HermiteExpansion cleaned(res.expansion.dim(), res.expansion.cutoff());
      for (const auto& [a, c] : res.expansion.coeffs())
        if (std::abs(c) > 1e-12 * cmax) cleaned.set(a, c);
      json out = bargkit::to_json(cleaned);
      if (!res.warnings.empty()) out["warnings"] = res.warnings;
      for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
      emit(out.dump(2) + "\n", output);
      return 0;
    }

    if (transform_cmd->parsed()) {
      if (tb->parsed()) return run_transform_values(targs, true);
      if (ts->parsed()) return run_transform_values(targs, false);
      return run_transform_fracft(targs);
    }

    if (classify_cmd->parsed()) {
      bargkit::ParsedInput parsed = load_input(input);
      bargkit::HermiteExpansion e = to_expansion(parsed, cl_cutoff, cl_quad);
      bargkit::ClassificationReport report = bargkit::classify(e, cl_tol);
      json out = bargkit::to_json(report);
      if (std::holds_alternative<bargkit::FunctionSpec>(parsed)) {
        const auto& spec = std::get<bargkit::FunctionSpec>(parsed);
        if (std::holds_alternative<bargkit::GaussianSpec>(spec)) {
          const auto& g = std::get<bargkit::GaussianSpec>(spec);
          bargkit::GaussianMembershipReport gm = bargkit::gaussian_membership(g.A, g.L);
          json eig = json::array();
          for (const Complex& ev : gm.eigenvalues)
            eig.push_back(json{{"re", ev.real()}, {"im", ev.imag()}});
          out["gaussian_criterion"] = json{{"member", gm.member}, {"eigenvalues", eig}};
        }
      }
      emit(out.dump(2) + "\n", output);
      return 0;
    }

    if (norm_cmd->parsed()) {
      bargkit::ParsedInput parsed = load_input(input);
      bargkit::HermiteExpansion e = to_expansion(parsed, no_cutoff, no_quad);
      json out{{"kind", norm_kind}};
      if (norm_kind == "modulation") {
        bargkit::WeightSpec w = bargkit::weight_spec_from_json(weight_from_arg(norm_weight));
        bargkit::PlaneGridSpec grid = norm_grid.empty()
                                          ? bargkit::default_isometry_grid(e.dim())
                                          : parse_grid(norm_grid, e.dim());
        out["value"] = bargkit::modulation_norm(e, w, no_p, no_q, grid);
        out["p"] = no_p;
        out["q"] = no_q;
      } else if (norm_kind == "seminorm") {
        bargkit::SeminormResult res = bargkit::pilipovic_seminorm(e, no_h, no_s);
        out["value"] = res.value;
        out["maximizer"] = res.maximizer;
        out["h"] = no_h;
        out["s"] = no_s;
      } else if (norm_kind == "a2-exponential") {
        out["value"] =
            bargkit::a2_weighted_norm_series(e, bargkit::make_theta_exponential(no_h, e.dim()));
        out["h"] = no_h;
      } else {
        throw std::invalid_argument("unknown --kind '" + norm_kind +
                                    "'; use modulation, seminorm or a2-exponential");
      }
      emit(out.dump(2) + "\n", output);
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<bargkit::CheckResult> results = bargkit::run_suite(suite, seed);
      json checks = json::array();
      bool all_pass = true;
      for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        json c{{"name", r.name},
               {"status", r.pass ? "pass" : "fail"},
               {"worst_err", r.worst_err},
               {"tolerance", r.tolerance}};
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(std::move(c));
      }
      json out{{"suite", suite}, {"seed", seed}, {"checks", checks}};
      emit(out.dump(2) + "\n", output);
      return all_pass ? 0 : 1;
    }

    if (plot_cmd->parsed()) {
      bargkit::ParsedInput parsed = load_input(input);
      bargkit::HermiteExpansion e = to_expansion(parsed, pl_cutoff, pl_quad);
      std::ostringstream csv;
      if (view == "decay") {
        csv << "abs_alpha,u,log_abs_c\n";
        for (const auto& [a, c] : e.coeffs()) {
          double mag = std::abs(c);
          if (mag == 0.0) continue;
          csv << a.order() << "," << fmt17(std::pow(a.order(), 1.0 / (2.0 * pl_s))) << ","
              << fmt17(std::log(mag)) << "\n";
        }
      } else if (view == "heatmap") {
        const int d = e.dim();
        std::string spec_text = plot_grid;
        if (spec_text.empty()) {
          for (int j = 0; j < 2 * d; ++j) spec_text += std::string(j ? "," : "") + "-3:3:61";
        }
        bargkit::PlaneGridSpec grid = parse_grid(spec_text, d);
        for (int j = 0; j < d; ++j) csv << "x_" << j + 1 << ",";
        for (int j = 0; j < d; ++j) csv << "xi_" << j + 1 << ",";
        csv << "abs_F,abs_F_damped\n";
        for (const auto& p : grid_points(grid)) {
          bargkit::ComplexVec z(d);
          double t = 0.0;
          for (int j = 0; j < d; ++j) {
            z[j] = Complex(p[j], p[d + j]);
            t += std::norm(z[j]);
          }
          double mag = std::abs(bargkit::bargmann_series(e, z));
          for (double c : p) csv << fmt17(c) << ",";
          csv << fmt17(mag) << "," << fmt17(mag * std::exp(-0.5 * t)) << "\n";
        }
      } else {
        throw std::invalid_argument("unknown --view '" + view + "'; use decay or heatmap");
      }
      emit(csv.str(), output);
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
