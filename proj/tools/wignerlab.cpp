// wignerlab: scenario evaluations, classical-soundness fuzzing, parameter
// scans, and plot-data emission for the Bell-Wigner laboratory.
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 classical
// soundness breach detected by lhv-fuzz.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wignerlab/meson.hpp"
#include "wignerlab/qft.hpp"
#include "wignerlab/scan.hpp"
#include "wignerlab/spin.hpp"
#include "wignerlab/version.hpp"
#include "wignerlab/wigner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace wignerlab;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numeric = 2;
constexpr int exit_breach = 3;

constexpr double pi = std::numbers::pi;

// Shortest decimal representation that round-trips the double.
std::string fmt(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

struct CommonOpts {
  std::string out;
  std::string format;
  std::string config;
};

void add_common(CLI::App* cmd, CommonOpts& opts,
                const std::string& default_format) {
  opts.format = default_format;
  cmd->add_option("--out", opts.out, "Output file (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--config", opts.config,
                  "Flat JSON config merged under explicit flags")
      ->check(CLI::ExistingFile);
}

// Applies a flat JSON config to the subcommand's options. Explicit
// command-line flags win; unknown keys are rejected.
void apply_config(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config file: " + path);
  json doc;
  try {
    file >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("config must be a flat JSON object");
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* op = cmd->get_option_no_throw("--" + key);
    if (op == nullptr || key == "config")
      throw std::invalid_argument("unknown config key '" + key + "'");
    if (op->count() > 0) continue;
    std::string text;
    if (value.is_string())
      text = value.get<std::string>();
    else if (value.is_boolean())
      text = value.get<bool>() ? "true" : "false";
    else if (value.is_number())
      text = value.dump();
    else
      throw std::invalid_argument("config key '" + key +
                                  "' must be a scalar value");
    op->add_result(text);
    op->run_callback();
  }
}

void emit(const std::string& text, const CommonOpts& opts) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file)
    throw std::invalid_argument("cannot open output file: " + opts.out);
  file << text;
}

json base_report(const std::string& command, json config) {
  return json{{"schema_version", 1},
              {"version", wignerlab::version},
              {"command", command},
              {"config", std::move(config)}};
}

json report_json(const InequalityReport& r) {
  return json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"margin", r.margin},
              {"tolerance", r.tolerance},
              {"violated", r.violated}};
}

struct Range {
  double lo;
  double hi;
  std::size_t steps;
};

Range parse_range(const std::string& text) {
  std::istringstream in(text);
  Range r{};
  char c1 = 0, c2 = 0;
  long long steps = 0;
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> steps) || c1 != ':' || c2 != ':' ||
      !in.eof())
    throw std::invalid_argument("range must be lo:hi:steps, got '" + text +
                                "'");
  if (!(r.lo < r.hi) || steps < 2)
    throw std::invalid_argument("range '" + text +
                                "' is degenerate (need lo < hi, steps >= 2)");
  r.steps = static_cast<std::size_t>(steps);
  return r;
}

std::vector<double> parse_angles(const std::string& text, std::size_t n) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(field, &used));
    if (used != field.size())
      throw std::invalid_argument("bad angle '" + field + "'");
  }
  if (out.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " comma-separated angles, got '" + text + "'");
  return out;
}

// ---------------------------------------------------------------- spin-curve

int run_spin_curve(const CommonOpts& opts, const std::string& range_text) {
  const Range r = parse_range(range_text);
  const double root = spin::delta_threshold();
  std::vector<std::pair<double, double>> rows;
  rows.reserve(r.steps);
  for (std::size_t i = 0; i < r.steps; ++i) {
    const double d = r.lo + (r.hi - r.lo) * static_cast<double>(i) /
                                static_cast<double>(r.steps - 1);
    rows.emplace_back(d, spin::kappa(d));
  }
  if (opts.format == "csv") {
    std::string text = "delta,kappa\n";
    for (const auto& [d, k] : rows) text += fmt(d) + "," + fmt(k) + "\n";
    emit(text, opts);
    std::cerr << "delta_threshold = " << fmt(root) << "\n";
  } else {
    json j = base_report("spin-curve", {{"range", range_text}});
    j["delta_threshold"] = root;
    json points = json::array();
    for (const auto& [d, k] : rows)
      points.push_back({{"delta", d}, {"kappa", k}});
    j["points"] = std::move(points);
    emit(j.dump(2) + "\n", opts);
  }
  return exit_ok;
}

// ------------------------------------------------------------------ spin-max

int run_spin_max(const CommonOpts& opts, const std::string& family,
                 std::size_t steps, std::size_t refine) {
  std::vector<scan::AxisRange> ranges;
  scan::Evaluator target;
  if (family == "symmetric") {
    ranges = {{"theta", 0.0, pi / 2, steps}};
    target = [](std::span<const double> p) {
      return spin::model_inequality(spin::symmetric_family(p[0]));
    };
  } else {
    ranges = {{"theta_ba", 0.0, 2 * pi, steps},
              {"theta_ca", 0.0, 2 * pi, steps},
              {"theta_bc", 0.0, 2 * pi, steps},
              {"omega_t", 0.0, pi, steps}};
    target = [](std::span<const double> p) {
      return spin::model_inequality({p[0], p[1], p[2], p[3]});
    };
  }
  const auto result = scan::maximize_violation(target, ranges, refine);
  json j = base_report("spin-max", {{"family", family},
                                    {"steps", steps},
                                    {"refine", refine}});
  j["names"] = result.names;
  j["params"] = result.params;
  j["margin"] = result.margin;
  j["refinement_iterations"] = result.refinement_iterations;
  emit(j.dump(2) + "\n", opts);
  return exit_ok;
}

// --------------------------------------------------------------------- meson

struct MesonOpts {
  double gamma = 1.0;
  double dgamma = 0.1;
  double dm = 0.77;
  double alpha = 0.0;
  double t = 1.0;
  double tol = default_tolerance;
  bool degrees = false;
  std::string orientation = "bbar";
};

void add_meson_params(CLI::App* cmd, MesonOpts& m) {
  cmd->add_option("--gamma", m.gamma, "Mean width Gamma");
  cmd->add_option("--dgamma", m.dgamma, "Width difference Gamma_H - Gamma_L");
  cmd->add_option("--dm", m.dm, "Mass difference m_H - m_L");
  cmd->add_option("--alpha", m.alpha, "CP phase alpha (radians)");
  cmd->add_option("--tol", m.tol, "Violation tolerance");
  cmd->add_flag("--degrees", m.degrees, "Interpret angles in degrees");
}

meson::MesonParams resolve_meson(const MesonOpts& m) {
  const double ang = m.degrees ? pi / 180.0 : 1.0;
  return meson::MesonParams::symmetric(m.gamma, m.dgamma, m.dm,
                                       m.alpha * ang);
}

json meson_config(const MesonOpts& m, bool with_t) {
  const double ang = m.degrees ? pi / 180.0 : 1.0;
  json cfg{{"gamma", m.gamma},
           {"dgamma", m.dgamma},
           {"dm", m.dm},
           {"alpha", m.alpha * ang},
           {"tol", m.tol}};
  if (with_t) cfg["t"] = m.t;
  return cfg;
}

int run_meson_static(const CommonOpts& opts, const MesonOpts& m) {
  const auto mp = resolve_meson(m);
  const auto orientation = m.orientation == "bbar"
                               ? meson::Orientation::bbar_plus
                               : meson::Orientation::b_plus;
  const auto w = meson::static_probabilities(mp);
  const auto rep = meson::static_inequality(mp, orientation, m.tol);
  json cfg = meson_config(m, false);
  cfg["orientation"] = m.orientation;
  json j = base_report("meson-static", std::move(cfg));
  j["probabilities"] = {{"b1_bbar", w.b1_bbar}, {"b1_b", w.b1_b},
                        {"b1_bh", w.b1_bh},     {"b2_bh", w.b2_bh},
                        {"bh_bbar", w.bh_bbar}, {"bh_b", w.bh_b}};
  j["report"] = report_json(rep);
  emit(j.dump(2) + "\n", opts);
  return exit_ok;
}

int run_meson_dynamic(const CommonOpts& opts, const MesonOpts& m) {
  const auto mp = resolve_meson(m);
  const auto rep = meson::dynamic_inequality(m.t, mp, m.tol);
  json j = base_report("meson-dynamic", meson_config(m, true));
  j["report"] = report_json(rep);
  j["rhs_over_lhs"] = rep.rhs / rep.lhs;
  j["closed_form"] = meson::dynamic_rhs_over_lhs(m.t, mp);
  j["closed_form_diff"] =
      rep.rhs / rep.lhs - meson::dynamic_rhs_over_lhs(m.t, mp);
  emit(j.dump(2) + "\n", opts);
  return exit_ok;
}

// ----------------------------------------------------------------- qft-curve

int run_qft_curve(const CommonOpts& opts, double xmin, double xmax,
                  std::size_t points) {
  if (!(xmin > 0.0) || !(xmax > xmin) || points < 2)
    throw std::invalid_argument(
        "qft-curve needs 0 < xmin < xmax and points >= 2");
  std::vector<std::pair<double, double>> rows;
  rows.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = xmin * std::pow(xmax / xmin,
                                     static_cast<double>(i) /
                                         static_cast<double>(points - 1));
    rows.emplace_back(x, qft::rate_bracket(x));
  }
  if (opts.format == "csv") {
    std::string text = "x,bracket\n";
    for (const auto& [x, b] : rows) text += fmt(x) + "," + fmt(b) + "\n";
    emit(text, opts);
  } else {
    json j = base_report(
        "qft-curve", {{"xmin", xmin}, {"xmax", xmax}, {"points", points}});
    json pts = json::array();
    for (const auto& [x, b] : rows) pts.push_back({{"x", x}, {"bracket", b}});
    j["points"] = std::move(pts);
    emit(j.dump(2) + "\n", opts);
  }
  return exit_ok;
}

// ---------------------------------------------------------------- qft-region

int run_qft_region(const CommonOpts& opts, double ratio,
                   const std::string& angles_text, std::size_t samples,
                   std::uint64_t seed, double tol, bool degrees) {
  const double ang = degrees ? pi / 180.0 : 1.0;
  if (!angles_text.empty()) {
    const auto a = parse_angles(angles_text, 3);
    const auto rep = qft::ratio_inequality(ratio, a[0] * ang, a[1] * ang,
                                           a[2] * ang, tol);
    json j = base_report("qft-region",
                         {{"ratio", ratio},
                          {"angles", {a[0] * ang, a[1] * ang, a[2] * ang}},
                          {"tol", tol}});
    j["report"] = report_json(rep);
    emit(j.dump(2) + "\n", opts);
    return exit_ok;
  }
  const auto frac = qft::violation_region_fraction(ratio, samples, seed);
  json j = base_report(
      "qft-region",
      {{"ratio", ratio}, {"samples", samples}, {"seed", seed}, {"tol", tol}});
  j["fraction"] = frac.fraction;
  j["std_error"] = frac.std_error;
  j["violated"] = frac.violated;
  j["samples"] = frac.samples;
  emit(j.dump(2) + "\n", opts);
  return exit_ok;
}

// ------------------------------------------------------------------ lhv-fuzz

int run_lhv_fuzz(const CommonOpts& opts, std::size_t n, std::uint64_t seed,
                 double tol) {
  const auto summary = fuzz_lhv(n, seed, tol);
  json j = base_report("lhv-fuzz",
                       {{"n", n}, {"seed", seed}, {"tol", tol}});
  j["trials"] = summary.trials;
  j["max_margin"] = summary.max_margin;
  j["worst_trial"] = summary.worst_trial;
  j["any_violation"] = summary.any_violation;
  emit(j.dump(2) + "\n", opts);
  if (summary.any_violation) {
    std::cerr << "classical soundness breach: max margin "
              << fmt(summary.max_margin) << " at trial "
              << summary.worst_trial << "\n";
    return exit_breach;
  }
  return exit_ok;
}

// ---------------------------------------------------------------------- scan

const std::vector<std::string> scan_param_names = {"theta_ba", "theta_ca",
                                                   "theta_bc", "omega_t"};

std::size_t scan_param_slot(const std::string& name) {
  for (std::size_t i = 0; i < scan_param_names.size(); ++i)
    if (scan_param_names[i] == name) return i;
  throw std::invalid_argument(
      "unknown parameter '" + name +
      "' (expected theta_ba, theta_ca, theta_bc or omega_t)");
}

int run_scan(const CommonOpts& opts, const std::vector<std::string>& axes,
             const std::vector<std::string>& fixes, double tol,
             bool degrees) {
  if (axes.empty())
    throw std::invalid_argument("scan needs at least one --axis");
  const double ang = degrees ? pi / 180.0 : 1.0;

  std::array<double, 4> fixed{0.0, 0.0, 0.0, 0.0};
  std::array<bool, 4> used{false, false, false, false};
  std::vector<scan::AxisRange> ranges;
  std::vector<std::size_t> slots;
  for (const std::string& spec : axes) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("axis must be name=lo:hi:steps, got '" +
                                  spec + "'");
    const std::string name = spec.substr(0, eq);
    const std::size_t slot = scan_param_slot(name);
    if (used[slot])
      throw std::invalid_argument("parameter '" + name + "' given twice");
    used[slot] = true;
    const Range r = parse_range(spec.substr(eq + 1));
    ranges.push_back({name, r.lo * ang, r.hi * ang, r.steps});
    slots.push_back(slot);
  }
  for (const std::string& spec : fixes) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("fix must be name=value, got '" + spec +
                                  "'");
    const std::size_t slot = scan_param_slot(spec.substr(0, eq));
    if (used[slot])
      throw std::invalid_argument("parameter '" + spec.substr(0, eq) +
                                  "' given twice");
    used[slot] = true;
    fixed[slot] = std::stod(spec.substr(eq + 1)) * ang;
  }

  const scan::Evaluator target = [&](std::span<const double> p) {
    std::array<double, 4> v = fixed;
    for (std::size_t i = 0; i < slots.size(); ++i) v[slots[i]] = p[i];
    return spin::model_inequality({v[0], v[1], v[2], v[3]}, tol);
  };

  if (opts.format == "csv") {
    std::ofstream file;
    if (!opts.out.empty()) {
      file.open(opts.out, std::ios::binary);
      if (!file)
        throw std::invalid_argument("cannot open output file: " + opts.out);
    }
    std::ostream& os = opts.out.empty() ? std::cout : file;
    for (const auto& r : ranges) os << r.name << ",";
    os << "lhs,rhs,margin,violated\n";
    scan::grid_scan_stream(target, ranges, [&](const scan::ScanRecord& rec) {
      for (double v : rec.params) os << fmt(v) << ",";
      os << fmt(rec.lhs) << "," << fmt(rec.rhs) << "," << fmt(rec.margin)
         << "," << (rec.violated ? 1 : 0) << "\n";
    });
  } else {
    json cfg{{"axes", axes}, {"fixes", fixes}, {"tol", tol}};
    json j = base_report("scan", std::move(cfg));
    json records = json::array();
    scan::grid_scan_stream(target, ranges, [&](const scan::ScanRecord& rec) {
      records.push_back({{"params", rec.params},
                         {"lhs", rec.lhs},
                         {"rhs", rec.rhs},
                         {"margin", rec.margin},
                         {"violated", rec.violated}});
    });
    j["records"] = std::move(records);
    emit(j.dump(2) + "\n", opts);
  }
  return exit_ok;
}

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("WIGNERLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0)
      omp_set_num_threads(static_cast<int>(n));
  }
#endif
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"Time-dependent Bell inequalities in Wigner form"};
  app.set_version_flag("--version", wignerlab::version);
  app.require_subcommand(1);

  // spin-curve
  auto* spin_curve = app.add_subcommand(
      "spin-curve", "Violation rate K(delta) vs time resolution");
  CommonOpts spin_curve_opts;
  std::string spin_range = "0:2:401";
  add_common(spin_curve, spin_curve_opts, "csv");
  spin_curve->add_option("--range", spin_range, "delta range lo:hi:steps");

  // spin-max
  auto* spin_max =
      app.add_subcommand("spin-max", "Maximize the precession inequality");
  CommonOpts spin_max_opts;
  std::string family = "symmetric";
  std::size_t max_steps = 41, refine = 60;
  add_common(spin_max, spin_max_opts, "json");
  spin_max->add_option("--family", family, "Search family")
      ->check(CLI::IsMember({"symmetric", "full"}));
  spin_max->add_option("--steps", max_steps, "Grid steps per axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000}));
  spin_max->add_option("--refine", refine, "Refinement iterations");

  // meson-static
  auto* meson_static = app.add_subcommand(
      "meson-static", "Static inequality for oscillating mesons");
  CommonOpts meson_static_opts;
  MesonOpts meson_static_params;
  add_common(meson_static, meson_static_opts, "json");
  add_meson_params(meson_static, meson_static_params);
  meson_static
      ->add_option("--orientation", meson_static_params.orientation,
                   "Which flavour plays b+")
      ->check(CLI::IsMember({"bbar", "b"}));

  // meson-dynamic
  auto* meson_dynamic = app.add_subcommand(
      "meson-dynamic", "Dynamical inequality for oscillating mesons");
  CommonOpts meson_dynamic_opts;
  MesonOpts meson_dynamic_params;
  add_common(meson_dynamic, meson_dynamic_opts, "json");
  add_meson_params(meson_dynamic, meson_dynamic_params);
  meson_dynamic->add_option("--t", meson_dynamic_params.t,
                            "Measurement time (t0 = 0)");

  // qft-curve
  auto* qft_curve = app.add_subcommand(
      "qft-curve", "Finite-time decay-rate bracket vs x = M tau");
  CommonOpts qft_curve_opts;
  double xmin = 1e-2, xmax = 1e3;
  std::size_t qft_points = 301;
  add_common(qft_curve, qft_curve_opts, "csv");
  qft_curve->add_option("--xmin", xmin, "Lower end of the log grid");
  qft_curve->add_option("--xmax", xmax, "Upper end of the log grid");
  qft_curve->add_option("--points", qft_points, "Number of grid points");

  // qft-region
  auto* qft_region = app.add_subcommand(
      "qft-region", "Ratio inequality: point report or violating fraction");
  CommonOpts qft_region_opts;
  double ratio = 1.0, region_tol = default_tolerance;
  std::string angles_text;
  std::size_t region_samples = 1'000'000;
  std::uint64_t region_seed = 2024;
  bool region_degrees = false;
  add_common(qft_region, qft_region_opts, "json");
  qft_region->add_option("--ratio", ratio, "Time ratio t/t0 (>= 1)");
  qft_region->add_option("--angles", angles_text,
                         "theta_ba,theta_ca,theta_bc for a point report");
  qft_region->add_option("--samples", region_samples, "Monte Carlo samples");
  qft_region->add_option("--seed", region_seed, "Monte Carlo seed");
  qft_region->add_option("--tol", region_tol, "Violation tolerance");
  qft_region->add_flag("--degrees", region_degrees,
                       "Interpret angles in degrees");

  // lhv-fuzz
  auto* lhv = app.add_subcommand(
      "lhv-fuzz", "Certify classical non-violation over random models");
  CommonOpts lhv_opts;
  std::size_t fuzz_n = 100'000;
  std::uint64_t fuzz_seed = 7;
  double fuzz_tol = 1e-12;
  add_common(lhv, lhv_opts, "json");
  lhv->add_option("--n", fuzz_n, "Number of trials");
  lhv->add_option("--seed", fuzz_seed, "Trial seed");
  lhv->add_option("--tol", fuzz_tol, "Margin tolerance");

  // scan
  auto* scan_cmd = app.add_subcommand(
      "scan", "Lattice scan of the precession inequality");
  CommonOpts scan_opts;
  std::vector<std::string> scan_axes, scan_fixes;
  double scan_tol = default_tolerance;
  bool scan_degrees = false;
  add_common(scan_cmd, scan_opts, "csv");
  scan_cmd->add_option("--axis", scan_axes,
                       "Axis spec name=lo:hi:steps (repeatable, up to 4)");
  scan_cmd->add_option("--fix", scan_fixes,
                       "Fix a parameter: name=value (repeatable)");
  scan_cmd->add_option("--tol", scan_tol, "Violation tolerance");
  scan_cmd->add_flag("--degrees", scan_degrees,
                     "Interpret angles in degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    apply_config(spin_curve, spin_curve_opts.config);
    apply_config(spin_max, spin_max_opts.config);
    apply_config(meson_static, meson_static_opts.config);
    apply_config(meson_dynamic, meson_dynamic_opts.config);
    apply_config(qft_curve, qft_curve_opts.config);
    apply_config(qft_region, qft_region_opts.config);
    apply_config(lhv, lhv_opts.config);
    apply_config(scan_cmd, scan_opts.config);

    if (*spin_curve) return run_spin_curve(spin_curve_opts, spin_range);
    if (*spin_max)
      return run_spin_max(spin_max_opts, family, max_steps, refine);
    if (*meson_static)
      return run_meson_static(meson_static_opts, meson_static_params);
    if (*meson_dynamic)
      return run_meson_dynamic(meson_dynamic_opts, meson_dynamic_params);
    if (*qft_curve)
      return run_qft_curve(qft_curve_opts, xmin, xmax, qft_points);
    if (*qft_region)
      return run_qft_region(qft_region_opts, ratio, angles_text,
                            region_samples, region_seed, region_tol,
                            region_degrees);
    if (*lhv) return run_lhv_fuzz(lhv_opts, fuzz_n, fuzz_seed, fuzz_tol);
    if (*scan_cmd)
      return run_scan(scan_opts, scan_axes, scan_fixes, scan_tol,
                      scan_degrees);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  }
  return exit_usage;
}
