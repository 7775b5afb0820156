#include "bargkit/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bargkit {

namespace {

using nlohmann::json;

const json& require(const json& j, const std::string& field) {
  if (!j.is_object()) throw std::invalid_argument("expected an object holding field '" + field + "'");
  auto it = j.find(field);
  if (it == j.end()) throw std::invalid_argument("missing field '" + field + "'");
  return *it;
}

double as_double(const json& j, const std::string& field) {
  if (!j.is_number()) throw std::invalid_argument("field '" + field + "' must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw std::invalid_argument("field '" + field + "' must be an integer");
  return j.get<int>();
}

Complex as_complex(const json& j, const std::string& field) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  if (j.is_object())
    return Complex(as_double(require(j, "re"), field + ".re"),
                   as_double(require(j, "im"), field + ".im"));
  throw std::invalid_argument("field '" + field + "' must be a number, [re, im] pair or {re, im}");
}

json complex_to_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

MultiIndex alpha_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("field '" + field + "' must be a non-empty array of integers");
  std::vector<int> entries;
  for (const auto& v : j) entries.push_back(as_int(v, field));
  return MultiIndex(entries);
}

}  // namespace

json to_json(const HermiteExpansion& e) {
  json coeffs = json::array();
  for (const auto& [a, c] : e.coeffs()) {
    json entry;
    entry["alpha"] = a.entries();
    entry["re"] = c.real();
    entry["im"] = c.imag();
    coeffs.push_back(std::move(entry));
  }
  return json{{"dim", e.dim()}, {"cutoff", e.cutoff()}, {"coeffs", std::move(coeffs)}};
}

HermiteExpansion expansion_from_json(const json& j) {
  int dim = as_int(require(j, "dim"), "dim");
  int cutoff = as_int(require(j, "cutoff"), "cutoff");
  const json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("field 'coeffs' must be an array");
  HermiteExpansion e(dim, cutoff);
  for (const auto& entry : coeffs) {
    MultiIndex a = alpha_from_json(require(entry, "alpha"), "alpha");
    double re = as_double(require(entry, "re"), "re");
    double im = as_double(require(entry, "im"), "im");
    e.set(a, Complex(re, im));
  }
  return e;
}

json to_json(const FunctionSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianSpec>) {
          json A = json::array();
          for (Eigen::Index i = 0; i < s.A.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index k = 0; k < s.A.cols(); ++k) row.push_back(complex_to_json(s.A(i, k)));
            A.push_back(std::move(row));
          }
          json L = json::array();
          for (Eigen::Index i = 0; i < s.L.size(); ++i) L.push_back(complex_to_json(s.L(i)));
          return json{{"type", "gaussian"}, {"A", A}, {"L", L}, {"C", complex_to_json(s.C)}};
        } else if constexpr (std::is_same_v<T, HermiteComboSpec>) {
          json terms = json::array();
          for (const auto& [a, c] : s.terms) {
            json t;
            t["alpha"] = a.entries();
            t["re"] = c.real();
            t["im"] = c.imag();
            terms.push_back(std::move(t));
          }
          return json{{"type", "hermite_combo"}, {"dim", s.dim}, {"terms", std::move(terms)}};
        } else if constexpr (std::is_same_v<T, CoefficientRuleSpec>) {
          return json{{"type", "coefficient_rule"},
                      {"dim", s.dim},
                      {"rule", s.rule},
                      {"params", s.params}};
        } else {
          json axes = json::array();
          for (const auto& ax : s.axes)
            axes.push_back(json{{"min", ax.min}, {"step", ax.step}, {"count", ax.count}});
          json values = json::array();
          for (const auto& v : s.values) values.push_back(complex_to_json(v));
          return json{{"type", "sampled"}, {"axes", std::move(axes)}, {"values", std::move(values)}};
        }
      },
      spec);
}

FunctionSpec function_spec_from_json(const json& j) {
  const json& type = require(j, "type");
  if (!type.is_string()) throw std::invalid_argument("field 'type' must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "gaussian") {
    const json& A = require(j, "A");
    if (!A.is_array() || A.empty()) throw std::invalid_argument("field 'A' must be a non-empty matrix");
    const int d = static_cast<int>(A.size());
    GaussianSpec spec;
    spec.A.resize(d, d);
    for (int i = 0; i < d; ++i) {
      if (!A[i].is_array() || static_cast<int>(A[i].size()) != d)
        throw std::invalid_argument("field 'A' must be a square matrix");
      for (int k = 0; k < d; ++k) spec.A(i, k) = as_complex(A[i][k], "A");
    }
    const json& L = require(j, "L");
    if (!L.is_array() || static_cast<int>(L.size()) != d)
      throw std::invalid_argument("field 'L' must be a vector matching 'A'");
    spec.L.resize(d);
    for (int i = 0; i < d; ++i) spec.L(i) = as_complex(L[i], "L");
    spec.C = j.contains("C") ? as_complex(j["C"], "C") : Complex(1.0, 0.0);
    FunctionSpec out = spec;
    validate(out);
    return out;
  }
  if (kind == "hermite_combo") {
    HermiteComboSpec spec;
    spec.dim = as_int(require(j, "dim"), "dim");
    const json& terms = require(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("field 'terms' must be an array");
    for (const auto& t : terms) {
      MultiIndex a = alpha_from_json(require(t, "alpha"), "alpha");
      spec.terms.emplace_back(a, Complex(as_double(require(t, "re"), "re"),
                                         as_double(require(t, "im"), "im")));
    }
    FunctionSpec out = spec;
    validate(out);
    return out;
  }
  if (kind == "coefficient_rule") {
    CoefficientRuleSpec spec;
    spec.dim = as_int(require(j, "dim"), "dim");
    const json& rule = require(j, "rule");
    if (!rule.is_string()) throw std::invalid_argument("field 'rule' must be a string");
    spec.rule = rule.get<std::string>();
    const json& params = require(j, "params");
    if (!params.is_object()) throw std::invalid_argument("field 'params' must be an object");
    for (auto it = params.begin(); it != params.end(); ++it)
      spec.params[it.key()] = as_double(it.value(), "params." + it.key());
    FunctionSpec out = spec;
    validate(out);
    return out;
  }
  if (kind == "sampled") {
    SampledSpec spec;
    const json& axes = require(j, "axes");
    if (!axes.is_array() || axes.empty())
      throw std::invalid_argument("field 'axes' must be a non-empty array");
    for (const auto& ax : axes) {
      SampledAxis axis;
      axis.min = as_double(require(ax, "min"), "axes.min");
      axis.step = as_double(require(ax, "step"), "axes.step");
      axis.count = as_int(require(ax, "count"), "axes.count");
      spec.axes.push_back(axis);
    }
    const json& values = require(j, "values");
    if (!values.is_array()) throw std::invalid_argument("field 'values' must be an array");
    for (const auto& v : values) spec.values.push_back(as_complex(v, "values"));
    FunctionSpec out = spec;
    validate(out);
    return out;
  }
  throw std::invalid_argument("field 'type' has unknown value '" + kind + "'");
}

json to_json(const WeightSpec& w) {
  return std::visit(
      [](const auto& ww) -> json {
        using T = std::decay_t<decltype(ww)>;
        if constexpr (std::is_same_v<T, GSWeight>)
          return json{{"type", "gs"}, {"s", ww.s}, {"t", ww.t}, {"r", ww.r}};
        else if constexpr (std::is_same_v<T, QuadraticWeight>)
          return json{{"type", "quadratic"}, {"h", ww.h}};
        else if constexpr (std::is_same_v<T, FlatExpWeight>)
          return json{{"type", "flat_exp"}, {"R", ww.R}};
        else if constexpr (std::is_same_v<T, PolyWeight>)
          return json{{"type", "poly"}, {"r", ww.r}};
        else
          return json{{"type", "radial"}, {"description", ww.description}};
      },
      w);
}

WeightSpec weight_spec_from_json(const json& j) {
  const json& type = require(j, "type");
  if (!type.is_string()) throw std::invalid_argument("field 'type' must be a string");
  const std::string kind = type.get<std::string>();
  WeightSpec out;
  if (kind == "gs")
    out = GSWeight{as_double(require(j, "s"), "s"), as_double(require(j, "t"), "t"),
                   as_double(require(j, "r"), "r")};
  else if (kind == "quadratic")
    out = QuadraticWeight{as_double(require(j, "h"), "h")};
  else if (kind == "flat_exp")
    out = FlatExpWeight{as_double(require(j, "R"), "R")};
  else if (kind == "poly")
    out = PolyWeight{as_double(require(j, "r"), "r")};
  else if (kind == "radial_exponential") {
    double h = as_double(require(j, "h"), "h");
    if (h <= 0.0) throw std::invalid_argument("field 'h' must be positive");
    out = RadialWeight{[h](double t) { return -h * t; },
                       "exponential profile h=" + std::to_string(h)};
  } else if (kind == "radial_linear_exponential") {
    double R = as_double(require(j, "R"), "R");
    if (R <= 0.0) throw std::invalid_argument("field 'R' must be positive");
    out = RadialWeight{[R](double t) { return -R * std::sqrt(t); },
                       "linear exponential profile R=" + std::to_string(R)};
  } else {
    throw std::invalid_argument("field 'type' has unknown value '" + kind + "'");
  }
  validate(out);
  return out;
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    default: return "borderline";
  }
}

json to_json(const DecayFit& fit) {
  json out;
  switch (fit.model) {
    case DecayFit::Model::stretched_exp:
      out["model"] = "stretched_exp";
      out["s"] = fit.s;
      out["rate"] = fit.rate;
      break;
    case DecayFit::Model::factorial:
      out["model"] = "factorial";
      out["R"] = fit.R;
      break;
    case DecayFit::Model::factorial_growth:
      out["model"] = "factorial_growth";
      out["R"] = fit.R;
      break;
    case DecayFit::Model::finite:
      out["model"] = "finite";
      break;
  }
  if (fit.model != DecayFit::Model::finite) {
    out["logC"] = fit.logC;
    out["residual"] = fit.residual;
    out["window"] = json::array({fit.window_lo, fit.window_hi});
  }
  return out;
}

json to_json(const ClassificationReport& report) {
  json verdicts = json::array();
  for (const auto& [label, verdict] : report.verdicts)
    verdicts.push_back(json{{"space", label.name()}, {"verdict", membership_name(verdict)}});
  return json{{"verdicts", std::move(verdicts)},
              {"fit", to_json(report.fit)},
              {"cutoff", report.cutoff},
              {"last_significant_shell", report.last_significant_shell},
              {"finite_tail", report.finite_tail},
              {"tol", report.tol},
              {"caveat", report.caveat}};
}

ParsedInput parse_input_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("input must be a JSON object");
  if (j.contains("coeffs")) return expansion_from_json(j);
  if (j.contains("type")) return function_spec_from_json(j);
  throw std::invalid_argument("input needs either field 'coeffs' or field 'type'");
}

std::string expansion_to_csv(const HermiteExpansion& e) {
  std::ostringstream out;
  for (int j = 1; j <= e.dim(); ++j) out << "alpha_" << j << ",";
  out << "re,im\n";
  char buf[64];
  for (const auto& [a, c] : e.coeffs()) {
    for (int j = 0; j < a.dim(); ++j) out << a[j] << ",";
    std::snprintf(buf, sizeof(buf), "%.17g", c.real());
    out << buf << ",";
    std::snprintf(buf, sizeof(buf), "%.17g", c.imag());
    out << buf << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace bargkit
