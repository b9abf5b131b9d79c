#include "tomo/entropy.hpp"

#include <cmath>

#include "tomo/frft.hpp"

namespace tomo {

namespace {

constexpr double kEntropyDefectTol = 1e-4;
constexpr double kDensityFloor = 1e-300;

double xlnx(double w) { return w < kDensityFloor ? 0.0 : w * std::log(w); }

EntropyValue closed_form_gaussian(const GaussianShape& g, double mu,
                                  double nu) {
  const double var = mu * mu * g.qq + nu * nu * g.pp + 2.0 * mu * nu * g.qp;
  if (!(var > 0.0))
    fail(ErrorKind::numeric, "degenerate tomogram variance");
  return {0.5 + 0.5 * std::log(2.0 * M_PI * var), 0.0,
          EntropyMethod::closed_form};
}

}  // namespace

EntropyValue shannon_entropy(const Tomogram& tom) {
  if (tom.normalization_defect > kEntropyDefectTol)
    fail(ErrorKind::normalization,
         "tomogram defect too large for a meaningful entropy");
  const double h = tom.grid.step;
  const double full = -h * tom.density.unaryExpr([](double w) {
                             return xlnx(w);
                           }).sum();
  double coarse = 0.0;
  for (Index k = 0; k < tom.density.size(); k += 2)
    coarse += xlnx(tom.density[k]);
  coarse *= -2.0 * h;
  return {full, std::abs(full - coarse), EntropyMethod::quadrature};
}

EntropyValue symplectic_entropy(const State& state, double mu, double nu,
                                const ComputeOptions& opts) {
  ChirpKernelParams validate(mu, nu);
  (void)validate;
  if (!opts.force_fft) {
    if (const auto shape = gaussian_shape(state))
      return closed_form_gaussian(*shape, mu, nu);
  }
  return shannon_entropy(symplectic_tomogram(state, mu, nu, opts));
}

EntropyValue entropy_at_angle(const State& state, double r, double t,
                              const ComputeOptions& opts) {
  if (!(r > 0.0)) fail(ErrorKind::domain, "radial parameter r must be positive");
  const double ct = std::cos(t);
  const double st = std::sin(t);
  if (!opts.force_fft) {
    if (const auto shape = gaussian_shape(state))
      return closed_form_gaussian(*shape, r * ct, r * st);
  }
  double mu = r * ct;
  double nu = r * st;
  if (std::abs(st) < kAngleGuard)
    nu = 0.0;
  else if (std::abs(ct) < kAngleGuard)
    mu = 0.0;
  return shannon_entropy(symplectic_tomogram(state, mu, nu, opts));
}

EntropyValue optical_entropy(const State& state, double t,
                             const ComputeOptions& opts) {
  return entropy_at_angle(state, 1.0, t, opts);
}

EntropyValue fresnel_entropy(const State& state, double nu,
                             const ComputeOptions& opts) {
  return symplectic_entropy(state, 1.0, nu, opts);
}

double additivity_residual(const State& state, double mu, double nu,
                           double lambda, const ComputeOptions& opts) {
  if (lambda == 0.0 || !std::isfinite(lambda))
    fail(ErrorKind::domain, "lambda must be nonzero and finite");
  const EntropyValue scaled =
      symplectic_entropy(state, lambda * mu, lambda * nu, opts);
  const EntropyValue base = symplectic_entropy(state, mu, nu, opts);
  return std::abs(scaled.value - base.value - std::log(std::abs(lambda)));
}

EntropyScan optical_entropy_scan(const State& state,
                                 const std::vector<double>& t_values,
                                 const ComputeOptions& opts) {
  EntropyScan scan;
  scan.axis = EntropyScan::Axis::optical;
  scan.param = t_values;
  scan.entropies.reserve(t_values.size());
  for (double t : t_values)
    scan.entropies.push_back(optical_entropy(state, t, opts));
  return scan;
}

EntropyScan fresnel_entropy_scan(const State& state,
                                 const std::vector<double>& nu_values,
                                 const ComputeOptions& opts) {
  EntropyScan scan;
  scan.axis = EntropyScan::Axis::fresnel;
  scan.param = nu_values;
  scan.entropies.reserve(nu_values.size());
  for (double nu : nu_values)
    scan.entropies.push_back(fresnel_entropy(state, nu, opts));
  return scan;
}

EntropyScan symplectic_entropy_scan(
    const State& state, const std::vector<std::pair<double, double>>& pairs,
    const ComputeOptions& opts) {
  EntropyScan scan;
  scan.axis = EntropyScan::Axis::symplectic;
  scan.pairs = pairs;
  scan.entropies.reserve(pairs.size());
  for (const auto& [mu, nu] : pairs)
    scan.entropies.push_back(symplectic_entropy(state, mu, nu, opts));
  return scan;
}

}  // namespace tomo
