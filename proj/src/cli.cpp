#include "tomo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include "tomo/serialize.hpp"
#include "tomo/state_json.hpp"
#include "tomo/verify.hpp"

namespace tomo::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::domain:
    case ErrorKind::dimension:
      return 2;
    default:
      return 3;
  }
}

void print_error(std::ostream& err, const std::string& kind,
                 const std::string& message) {
  json doc;
  doc["error"] = json{{"kind", kind}, {"message", message}};
  err << doc.dump() << '\n';
}

struct CommonOpts {
  std::string state_spec;
  Index grid_n = 0;
  double grid_halfwidth = 0.0;
  bool strict = false;
  bool force_fft = false;
  std::string out_path;
  std::string format = "csv";
};

ComputeOptions compute_options(const CommonOpts& c) {
  ComputeOptions o;
  o.grid_n = c.grid_n;
  o.grid_half_width = c.grid_halfwidth;
  o.strict = c.strict;
  o.force_fft = c.force_fft;
  return o;
}

void add_common(CLI::App* sub, CommonOpts& c, bool with_state = true) {
  if (with_state)
    sub->add_option("--state", c.state_spec,
                    "State spec: shorthand, inline JSON, or @file.json")
        ->required();
  sub->add_option("--grid-n", c.grid_n, "Grid points (0 = default)");
  sub->add_option("--grid-halfwidth", c.grid_halfwidth,
                  "Minimum grid half-width (0 = auto)");
  sub->add_flag("--strict", c.strict,
                "Halve the grid step and tighten verdict tolerances");
  sub->add_flag("--force-fft", c.force_fft,
                "Route Gaussian states through the FFT path (test mode)");
  sub->add_option("--out", c.out_path, "Output path (default: stdout)");
  sub->add_option("--format", c.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

// Data goes to --out (binary mode, LF endings) or to stdout; informational
// lines go to stdout when a file is used, stderr otherwise.
struct Sink {
  std::ofstream file;
  std::ostream* data = nullptr;
  std::ostream* info = nullptr;
};

Sink make_sink(const std::string& path, std::ostream& out, std::ostream& err) {
  Sink sink;
  if (path.empty()) {
    sink.data = &out;
    sink.info = &err;
    return sink;
  }
  sink.file.open(path, std::ios::binary);
  if (!sink.file) fail(ErrorKind::parse, "cannot open output file '" + path + "'");
  sink.data = &sink.file;
  sink.info = &out;
  return sink;
}

std::ofstream open_data_file(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::parse, "cannot open output file '" + path + "'");
  return file;
}

State need_one_mode(const ParsedState& parsed) {
  if (const State* s = std::get_if<State>(&parsed)) return *s;
  fail(ErrorKind::domain, "this command takes a one-mode state");
}

std::vector<double> linspace(double lo, double hi, Index n, bool half_open) {
  if (n < 1) fail(ErrorKind::domain, "axis needs at least one point");
  std::vector<double> axis(static_cast<size_t>(n));
  const double denom = half_open ? double(n) : double(std::max<Index>(n - 1, 1));
  for (Index k = 0; k < n; ++k)
    axis[size_t(k)] = lo + (hi - lo) * double(k) / denom;
  return axis;
}

struct TomogramArgs {
  CommonOpts common;
  double mu = 0.0, nu = 0.0, t = 0.0;
  bool has_mu = false, has_nu = false, has_t = false, fresnel = false;
};

int run_tomogram(const TomogramArgs& a, std::ostream& out, std::ostream& err) {
  const State state = need_one_mode(parse_state_spec(a.common.state_spec));
  const ComputeOptions opts = compute_options(a.common);

  Tomogram tom = [&] {
    if (a.has_t) return optical_tomogram(state, a.t, opts);
    if (a.fresnel) {
      if (!a.has_nu)
        fail(ErrorKind::parse, "fresnel tomogram needs --nu");
      return fresnel_tomogram(state, a.nu, opts);
    }
    if (!a.has_mu || !a.has_nu)
      fail(ErrorKind::parse, "symplectic tomogram needs --mu and --nu");
    return symplectic_tomogram(state, a.mu, a.nu, opts);
  }();

  Sink sink = make_sink(a.common.out_path, out, err);
  if (a.common.format == "json")
    *sink.data << tomogram_json(tom).dump(2) << '\n';
  else
    write_tomogram_csv(tom, *sink.data);
  *sink.info << "normalization_defect = "
             << format_float(tom.normalization_defect) << '\n';
  return 0;
}

struct ScanArgs {
  CommonOpts common;
  Index t_points = 64;
  bool fresnel = false;
  double nu_max = 2.0;
};

int run_entropy_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const State state = need_one_mode(parse_state_spec(a.common.state_spec));
  const ComputeOptions opts = compute_options(a.common);

  const EntropyScan scan =
      a.fresnel
          ? fresnel_entropy_scan(
                state, linspace(0.0, a.nu_max, a.t_points, false), opts)
          : optical_entropy_scan(state,
                                 linspace(0.0, M_PI, a.t_points, true), opts);

  Sink sink = make_sink(a.common.out_path, out, err);
  if (a.common.format == "json")
    *sink.data << entropy_scan_json(scan).dump(2) << '\n';
  else
    write_entropy_scan_csv(scan, *sink.data);
  return 0;
}

struct UncertaintyArgs {
  CommonOpts common;
  double r = 1.0;
  Index t_points = 256;
};

int run_uncertainty(const UncertaintyArgs& a, std::ostream& out,
                    std::ostream& err) {
  const ParsedState parsed = parse_state_spec(a.common.state_spec);
  const ComputeOptions opts = compute_options(a.common);
  const std::vector<double> axis = default_t_axis(a.t_points);

  UncertaintyReport report;
  if (const State* one = std::get_if<State>(&parsed)) {
    report = uncertainty_function(*one, a.r, axis, opts);
  } else {
    // Product state: the uncertainty functions of the modes add.
    const auto& product = std::get<ProductState>(parsed);
    report.t_axis = axis;
    report.f_values.assign(axis.size(), 0.0);
    for (const auto& mode : product.modes()) {
      const State mode_state =
          std::visit([](const auto& m) -> State { return State(m); }, mode);
      const UncertaintyReport part =
          uncertainty_function(mode_state, a.r, axis, opts);
      for (size_t k = 0; k < axis.size(); ++k)
        report.f_values[k] += part.f_values[k];
    }
    report.inequality = "sum_k F_k(r,t) >= 0";
    report.tol = double(product.size()) *
                 (opts.strict ? kStrictFTol : kDefaultFTol);
    report.min_f = *std::min_element(report.f_values.begin(),
                                     report.f_values.end());
    report.margin = report.min_f;
    report.passed = report.min_f >= -report.tol;
  }

  Sink sink = make_sink(a.common.out_path, out, err);
  if (a.common.format == "json")
    *sink.data << uncertainty_json(report).dump(2) << '\n';
  else
    write_uncertainty_csv(report, *sink.data);
  *sink.info << "min_F = " << format_float(report.min_f)
             << (report.passed ? " passed" : " FAILED") << '\n';
  return report.passed ? 0 : 1;
}

struct FigArgs {
  CommonOpts common;
  Index t_points = 256;
};

int run_fig1(const FigArgs& a, std::ostream& out, std::ostream& err) {
  (void)err;
  ComputeOptions opts = compute_options(a.common);
  opts.force_fft = true;  // the numeric column must exercise the FFT path
  const std::vector<double> axis = default_t_axis(a.t_points);
  const std::string prefix =
      a.common.out_path.empty() ? "fig1" : a.common.out_path;

  for (double sigma : {2.0, 4.0}) {
    const State state{PureState(Waist{sigma})};
    const UncertaintyReport numeric =
        uncertainty_function(state, 1.0, axis, opts);
    double max_err = 0.0;
    const std::string path =
        prefix + "_sigma" + std::to_string(int(sigma)) + ".csv";
    std::ofstream file = open_data_file(path);
    file << "t,F_closed,F_numeric\n";
    for (size_t k = 0; k < axis.size(); ++k) {
      const double closed = waist_uncertainty_closed_form(sigma, axis[k]);
      max_err = std::max(max_err, std::abs(numeric.f_values[k] - closed));
      file << format_float(axis[k]) << ',' << format_float(closed) << ','
           << format_float(numeric.f_values[k]) << '\n';
    }
    out << "sigma=" << int(sigma)
        << " max_abs_discrepancy = " << format_float(max_err) << " -> " << path
        << '\n';
  }
  return 0;
}

int run_fig2(const FigArgs& a, std::ostream& out, std::ostream& err) {
  (void)err;
  ComputeOptions opts = compute_options(a.common);
  if (opts.grid_n == 0) opts.grid_n = 4096;  // soliton tails need the room
  const std::vector<double> axis = default_t_axis(a.t_points);
  const std::string prefix =
      a.common.out_path.empty() ? "fig2" : a.common.out_path;

  for (double lz : {2.0, 3.0, 4.0}) {
    const State state{PureState(Soliton{lz})};
    const UncertaintyReport report =
        uncertainty_function(state, 1.0, axis, opts);
    const std::string path = prefix + "_lz" + std::to_string(int(lz)) + ".csv";
    std::ofstream file = open_data_file(path);
    write_uncertainty_csv(report, file);
    const double max_f =
        *std::max_element(report.f_values.begin(), report.f_values.end());
    out << "lz=" << int(lz) << " min_F = " << format_float(report.min_f)
        << " max_F = " << format_float(max_f) << " -> " << path << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string out_path;
  bool strict = false;
  bool tamper = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.strict = a.strict;
  opts.tamper = a.tamper;
  const std::vector<CheckResult> results = run_verification(opts);

  Sink sink = make_sink(a.out_path, out, err);
  bool all_passed = true;
  json checks = json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    *sink.info << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
               << " margin=" << format_float(r.margin)
               << " tol=" << format_float(r.tol) << '\n';
    checks.push_back(json{{"check", r.name},
                          {"margin", r.margin},
                          {"tol", r.tol},
                          {"pass", r.passed}});
  }
  json summary;
  summary["checks"] = std::move(checks);
  summary["all_passed"] = all_passed;
  *sink.data << summary.dump(2) << '\n';
  return all_passed ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic, optical, and Fresnel tomograms with tomographic "
               "entropies and entropic uncertainty checks"};
  app.require_subcommand(1);
  // flags > config-file values > built-in defaults
  app.set_config("--config", "", "Read defaults from an INI/TOML file");

  TomogramArgs tomo_args;
  auto* tomo_cmd = app.add_subcommand(
      "tomogram", "Evaluate a tomographic probability density");
  add_common(tomo_cmd, tomo_args.common);
  auto* mu_opt = tomo_cmd->add_option("--mu", tomo_args.mu, "Symplectic mu");
  auto* nu_opt = tomo_cmd->add_option("--nu", tomo_args.nu, "Symplectic nu");
  auto* t_opt =
      tomo_cmd->add_option("--t", tomo_args.t, "Optical angle (overrides mu/nu)");
  tomo_cmd->add_flag("--fresnel", tomo_args.fresnel,
                     "Fresnel tomogram at --nu (mu = 1)");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand(
      "entropy-scan", "Sweep the tomographic entropy along an axis");
  add_common(scan_cmd, scan_args.common);
  scan_cmd->add_option("--t-points", scan_args.t_points,
                       "Axis resolution (default 64)");
  scan_cmd->add_flag("--fresnel", scan_args.fresnel,
                     "Scan the Fresnel parameter instead of the angle");
  scan_cmd->add_option("--nu-max", scan_args.nu_max,
                       "Fresnel axis endpoint (default 2)");

  UncertaintyArgs unc_args;
  auto* unc_cmd = app.add_subcommand(
      "uncertainty", "Entropic uncertainty function over the angle axis");
  add_common(unc_cmd, unc_args.common);
  unc_cmd->add_option("--r", unc_args.r, "Radial parameter (default 1)");
  unc_cmd->add_option("--t-points", unc_args.t_points,
                      "Axis resolution (default 256)");

  FigArgs fig1_args;
  auto* fig1_cmd = app.add_subcommand(
      "fig1", "Gaussian-waist uncertainty curves (closed form vs numeric)");
  add_common(fig1_cmd, fig1_args.common, /*with_state=*/false);
  fig1_cmd->add_option("--t-points", fig1_args.t_points,
                       "Axis resolution (default 256)");

  FigArgs fig2_args;
  auto* fig2_cmd =
      app.add_subcommand("fig2", "Soliton uncertainty curves (numeric)");
  add_common(fig2_cmd, fig2_args.common, /*with_state=*/false);
  fig2_cmd->add_option("--t-points", fig2_args.t_points,
                       "Axis resolution (default 256)");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the built-in relation suite");
  verify_cmd->add_option("--out", verify_args.out_path,
                         "Summary JSON path (default: stdout)");
  verify_cmd->add_flag("--strict", verify_args.strict,
                       "Halve grid steps and tighten tolerances");
  verify_cmd->add_flag("--tamper", verify_args.tamper,
                       "Negative control: inject a normalization violation");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "parse", e.what());
    return 2;
  }

  try {
    tomo_args.has_mu = mu_opt->count() > 0;
    tomo_args.has_nu = nu_opt->count() > 0;
    tomo_args.has_t = t_opt->count() > 0;
    if (*tomo_cmd) return run_tomogram(tomo_args, out, err);
    if (*scan_cmd) return run_entropy_scan(scan_args, out, err);
    if (*unc_cmd) return run_uncertainty(unc_args, out, err);
    if (*fig1_cmd) return run_fig1(fig1_args, out, err);
    if (*fig2_cmd) return run_fig2(fig2_args, out, err);
    if (*verify_cmd) return run_verify(verify_args, out, err);
    print_error(err, "parse", "no subcommand given");
    return 2;
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    print_error(err, "numeric", e.what());
    return 3;
  }
}

}  // namespace tomo::cli
