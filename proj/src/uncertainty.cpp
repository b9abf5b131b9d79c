#include "tomo/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "tomo/frft.hpp"

namespace tomo {

std::vector<double> default_t_axis(Index n) {
  if (n < 1) fail(ErrorKind::domain, "t-axis needs at least one point");
  std::vector<double> axis(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) axis[size_t(k)] = M_PI * double(k) / double(n);
  return axis;
}

UncertaintyReport uncertainty_function(const State& state, double r,
                                       const std::vector<double>& t_axis,
                                       const ComputeOptions& opts) {
  if (!(r > 0.0)) fail(ErrorKind::domain, "radial parameter r must be positive");
  if (t_axis.empty()) fail(ErrorKind::domain, "empty t-axis");

  UncertaintyReport report;
  report.t_axis = t_axis;
  report.inequality = "F(r,t) >= 0";
  report.tol = opts.strict ? kStrictFTol : kDefaultFTol;
  report.f_values.reserve(t_axis.size());
  const double offset = 2.0 * std::log(r) + kLnPiE;
  for (double t : t_axis) {
    const double s0 = entropy_at_angle(state, r, t, opts).value;
    const double s1 = entropy_at_angle(state, r, t + 0.5 * M_PI, opts).value;
    report.f_values.push_back(s0 + s1 - offset);
  }
  report.min_f =
      *std::min_element(report.f_values.begin(), report.f_values.end());
  report.margin = report.min_f;
  report.passed = report.min_f >= -report.tol;
  return report;
}

PairwiseCheck check_pairwise(const State& state, double t,
                             const ComputeOptions& opts) {
  const double s0 = entropy_at_angle(state, 1.0, t, opts).value;
  const double s1 = entropy_at_angle(state, 1.0, t + 0.5 * M_PI, opts).value;
  const double lhs = s0 + s1;
  return {lhs, kLnPiE, lhs - kLnPiE};
}

double check_r_dressed(const State& state, double mu, double nu, double t,
                       const ComputeOptions& opts) {
  ChirpKernelParams validate(mu, nu);
  (void)validate;
  const double s = std::hypot(mu, nu);
  const double s0 = entropy_at_angle(state, s, t, opts).value;
  const double s1 = entropy_at_angle(state, s, t + 0.5 * M_PI, opts).value;
  return s0 + s1 - 2.0 * std::log(s) - kLnPiE;
}

double check_multimode(const ProductState& state,
                       const std::vector<double>& mu,
                       const std::vector<double>& nu,
                       const std::vector<double>& t,
                       const ComputeOptions& opts) {
  const size_t n = state.modes().size();
  if (mu.size() != n || nu.size() != n || t.size() != n)
    fail(ErrorKind::dimension,
         "per-mode parameter arrays must match mode count");
  double margin = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const State mode = std::visit(
        [](const auto& m) -> State { return State(m); }, state.modes()[k]);
    margin += check_r_dressed(mode, mu[k], nu[k], t[k], opts);
  }
  return margin;
}

double waist_uncertainty_closed_form(double sigma, double t) {
  if (!(sigma > 0.0)) fail(ErrorKind::domain, "sigma must be positive");
  const double s2 = sigma * sigma;
  const double d = (1.0 - s2 * s2) / (2.0 * s2);
  const double s2t = std::sin(2.0 * t);
  return 0.5 * std::log1p(d * d * s2t * s2t);
}

}  // namespace tomo
