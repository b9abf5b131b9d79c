// Acceptance suite: one criterion per function, one pass/fail line each.
// Exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "tomo/cli.hpp"
#include "tomo/frft.hpp"
#include "tomo/uncertainty.hpp"
#include "tomo/verify.hpp"

using namespace tomo;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool passed,
            const std::string& detail) {
  std::printf("[%s] %d. %s (%s)\n", passed ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!passed) ++failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(const char* pattern, ...) {
  char buf[256];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

std::vector<State> acceptance_catalog() {
  return {
      State{PureState{Ground{}}},
      State{PureState{Waist{2.0}}},
      State{PureState{Waist{4.0}}},
      State{PureState{SqueezedCorrelated{0.5, -0.375, Complex(0.2, 0.1)}}},
      State{PureState{Soliton{2.0}}},
      State{PureState{Soliton{3.0}}},
      State{thermal_covariance(1.0)},
      State{squeezed_thermal_covariance(2.0, 1.0)},
      State{MixedState(
          {{0.6, PureState{Ground{}}}, {0.4, PureState{Waist{2.0}}}})},
  };
}

std::vector<std::pair<double, double>> eight_parameter_points() {
  std::vector<std::pair<double, double>> points;
  for (int k = 0; k < 8; ++k) {
    const double t = 0.19 + M_PI * double(k) / 8.0;
    const double r = (k % 2 == 0) ? 1.0 : 1.6;
    points.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  return points;
}

// 1. Numeric Gaussian uncertainty curves match the closed form.
void criterion_gaussian_closed_form() {
  const auto start = std::chrono::steady_clock::now();
  ComputeOptions opts;
  opts.force_fft = true;
  const std::vector<double> axis = default_t_axis(256);

  double max_err = 0.0;
  double quarter_err = -1.0;
  for (double sigma : {2.0, 4.0}) {
    const State state{PureState{Waist{sigma}}};
    const UncertaintyReport numeric =
        uncertainty_function(state, 1.0, axis, opts);
    for (size_t k = 0; k < axis.size(); ++k) {
      const double err = std::abs(
          numeric.f_values[k] - waist_uncertainty_closed_form(sigma, axis[k]));
      max_err = std::max(max_err, err);
    }
    if (sigma == 2.0)
      quarter_err =
          std::abs(numeric.f_values[64] - std::log(17.0 / 8.0));  // t = pi/4
  }
  const double elapsed = seconds_since(start);
  const bool passed =
      max_err < 1e-5 && quarter_err < 1e-6 && elapsed < 10.0;
  report(1, "gaussian closed-form reproduction", passed,
         fmt("max_err=%.2e quarter_err=%.2e time=%.1fs", max_err, quarter_err,
             elapsed));
}

// 2. The sigma = 1 waist has an identically vanishing uncertainty function.
void criterion_unit_waist_null() {
  ComputeOptions opts;
  opts.force_fft = true;
  const State state{PureState{Waist{1.0}}};
  const UncertaintyReport numeric =
      uncertainty_function(state, 1.0, default_t_axis(256), opts);
  double max_abs = 0.0;
  for (double f : numeric.f_values) max_abs = std::max(max_abs, std::abs(f));
  report(2, "unit-waist null case", max_abs < 1e-6,
         fmt("max|F|=%.2e", max_abs));
}

// 3. Ground state saturates the entropy bound.
void criterion_ground_equality() {
  const State ground{PureState{Ground{}}};
  const double closed = symplectic_entropy(ground, 1.0, 0.0).value +
                        symplectic_entropy(ground, 0.0, 1.0).value - kLnPiE;
  ComputeOptions fft;
  fft.force_fft = true;
  const double numeric = symplectic_entropy(ground, 1.0, 0.0, fft).value +
                         symplectic_entropy(ground, 0.0, 1.0, fft).value -
                         kLnPiE;
  const bool passed = std::abs(closed) < 1e-8 && std::abs(numeric) < 1e-8;
  report(3, "ground-state equality", passed,
         fmt("closed=%.2e numeric=%.2e", closed, numeric));
}

// 4. Soliton curves: nonnegative, pi/2-periodic, edge minima, sech entropy.
void criterion_soliton_suite() {
  const auto start = std::chrono::steady_clock::now();
  ComputeOptions opts;
  opts.grid_n = 4096;
  const std::vector<double> axis = default_t_axis(256);

  double min_f = std::numeric_limits<double>::infinity();
  double period_residual = 0.0;
  bool minima_ok = true;
  for (double lz : {2.0, 3.0, 4.0}) {
    const State state{PureState{Soliton{lz}}};
    const UncertaintyReport curve =
        uncertainty_function(state, 1.0, axis, opts);
    min_f = std::min(min_f, curve.min_f);
    size_t argmin = 0;
    for (size_t k = 0; k < axis.size(); ++k) {
      period_residual =
          std::max(period_residual, std::abs(curve.f_values[k] -
                                             curve.f_values[(k + 128) % 256]));
      if (curve.f_values[k] < curve.f_values[argmin]) argmin = k;
    }
    // minimum within one grid step of t = 0 or t = pi/2 (pi wraps to 0)
    const size_t distance = std::min(
        {argmin, size_t(256) - argmin,
         argmin > 128 ? argmin - 128 : 128 - argmin});
    minima_ok = minima_ok && distance <= 1;
  }

  const double sech_entropy =
      symplectic_entropy(State{PureState{Soliton{2.0}}}, 1.0, 0.0, opts).value;
  const double sech_err = std::abs(sech_entropy - 2.0);
  const double elapsed = seconds_since(start);
  const bool passed = min_f >= -1e-4 && period_residual < 1e-5 && minima_ok &&
                      sech_err < 1e-5 && elapsed < 60.0;
  report(4, "soliton uncertainty suite", passed,
         fmt("min_F=%.2e period_res=%.2e minima_ok=%d sech_err=%.2e "
             "time=%.1fs",
             min_f, period_residual, int(minima_ok), sech_err, elapsed));
}

// 5. Homogeneity and additivity across the catalog.
void criterion_scaling_properties() {
  const auto params = eight_parameter_points();
  double worst_homogeneity = 0.0;
  double worst_additivity = 0.0;
  for (const State& state : acceptance_catalog()) {
    for (const auto& [mu, nu] : params) {
      const Tomogram base = symplectic_tomogram(state, mu, nu);
      for (double lambda : {-2.0, 0.5, 3.0}) {
        const Tomogram rescaled = homogeneity_rescale(base, lambda);
        const Tomogram direct = symplectic_tomogram(
            state, lambda * mu, lambda * nu, rescaled.grid);
        const double l1 = (rescaled.density - direct.density).abs().sum() *
                          rescaled.grid.step;
        worst_homogeneity = std::max(worst_homogeneity, l1);
        worst_additivity = std::max(
            worst_additivity, additivity_residual(state, mu, nu, lambda));
      }
    }
  }
  const bool passed = worst_homogeneity < 1e-5 && worst_additivity < 1e-5;
  report(5, "homogeneity and additivity", passed,
         fmt("homogeneity=%.2e additivity=%.2e", worst_homogeneity,
             worst_additivity));
}

// 6. Correlated-state entropy sums.
void criterion_correlated_sum() {
  double worst = 0.0;
  ComputeOptions fft;
  fft.force_fft = true;
  for (double r : {0.3, 0.6, 0.9}) {
    const State state{PureState{squeezed_from_correlation(r)}};
    const double expected = kLnPiE - 0.5 * std::log1p(-r * r);
    const double closed = symplectic_entropy(state, 1.0, 0.0).value +
                          symplectic_entropy(state, 0.0, 1.0).value;
    const double numeric = symplectic_entropy(state, 1.0, 0.0, fft).value +
                           symplectic_entropy(state, 0.0, 1.0, fft).value;
    worst = std::max({worst, std::abs(closed - expected),
                      std::abs(numeric - expected)});
  }
  report(6, "correlated-state entropy sum", worst < 1e-5,
         fmt("worst=%.2e", worst));
}

// 7. Three-mode ground product saturates the multimode bound.
void criterion_multimode_equality() {
  const ProductState ground3(
      {PureState{Ground{}}, PureState{Ground{}}, PureState{Ground{}}});
  const std::vector<double> mu{1.0, 0.8, 1.6};
  const std::vector<double> nu{0.3, -1.1, 0.9};
  const std::vector<double> t{0.7, 1.9, 2.6};
  const double closed = check_multimode(ground3, mu, nu, t);
  ComputeOptions fft;
  fft.force_fft = true;
  const double numeric = check_multimode(ground3, mu, nu, t, fft);
  const bool passed = std::abs(closed) < 3e-8 && std::abs(numeric) < 1e-5;
  report(7, "multimode ground equality", passed,
         fmt("closed=%.2e numeric=%.2e", closed, numeric));
}

// 8. Chirp-FFT amplitudes against the dense quadrature oracle at n = 512.
void criterion_oracle_equivalence() {
  const std::vector<std::pair<std::string, PureState>> states = {
      {"ground", PureState{Ground{}}},
      {"waist2", PureState{Waist{2.0}}},
      {"soliton2", PureState{Soliton{2.0}}},
      {"squeezed", PureState{squeezed_from_correlation(0.6)}},
  };
  double worst = 0.0;
  for (const auto& [name, state] : states) {
    const SupportRadii radii = support_radii(state);
    // widen past the support so the trapezoid endpoints of the oracle are
    // negligible against the 1e-6 agreement target
    const Grid grid = Grid::centered(1.5 * std::max(radii.q, 12.0), 512);
    const ArrayXcd psi = evaluate_wavefunction(state, grid);
    for (int k = 0; k < 8; ++k) {
      const double t = M_PI * (double(k) + 0.5) / 8.0;
      const double mu = std::cos(t);
      const double nu = std::sin(t);
      const Grid out = Grid::centered(
          std::abs(mu) * radii.q + std::abs(nu) * radii.p, 512);
      const auto amp = chirp_tomogram_amplitude(
          psi, grid, ChirpKernelParams(mu, nu), out);
      const ArrayXcd dense =
          oracle::dense_chirp_amplitude(psi, grid, mu, nu, out);
      const double l1 =
          (amp.values.abs2() - dense.abs2()).abs().sum() * out.step;
      worst = std::max(worst, l1);
    }
  }
  report(8, "oracle equivalence", worst < 1e-6, fmt("worst_l1=%.2e", worst));
}

// 9. Thermal pairwise margins.
void criterion_thermal_margin() {
  double worst = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (double beta : {0.5, 1.0, 2.0}) {
    const State thermal{thermal_covariance(beta)};
    const double margin = check_pairwise(thermal, 0.4).margin;
    const double expected = std::log(1.0 / std::tanh(0.5 * beta));
    worst = std::max(worst, std::abs(margin - expected));
    monotone = monotone && margin < previous && margin > 0.0;
    previous = margin;
  }
  report(9, "thermal margins", worst < 1e-6 && monotone,
         fmt("worst=%.2e monotone=%d", worst, int(monotone)));
}

// 10. Negative control: tampering must fail the verification suite.
void criterion_negative_control() {
  std::ostringstream out, err;
  const int code = cli::run({"verify", "--tamper"}, out, err);
  int failed_checks = 0;
  try {
    const auto doc = nlohmann::json::parse(out.str());
    for (const auto& check : doc["checks"])
      if (!check["pass"].get<bool>()) ++failed_checks;
  } catch (...) {
    failed_checks = -1;
  }
  const bool passed = code == 1 && failed_checks >= 1;
  report(10, "negative control (tamper)", passed,
         fmt("exit=%d failed_checks=%d", code, failed_checks));
}

}  // namespace

int main() {
  criterion_gaussian_closed_form();
  criterion_unit_waist_null();
  criterion_ground_equality();
  criterion_soliton_suite();
  criterion_scaling_properties();
  criterion_correlated_sum();
  criterion_multimode_equality();
  criterion_oracle_equivalence();
  criterion_thermal_margin();
  criterion_negative_control();

  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
