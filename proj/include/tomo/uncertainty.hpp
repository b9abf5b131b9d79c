#pragma once

#include <string>
#include <vector>

#include "tomo/entropy.hpp"

namespace tomo {

/// Verdict tolerance for inequality margins (quadrature headroom).
inline constexpr double kDefaultFTol = 1e-4;
inline constexpr double kStrictFTol = 1e-5;

/// ln(pi e), the one-mode entropic bound.
inline const double kLnPiE = std::log(M_PI) + 1.0;

/// Entropic uncertainty function F(r, t) over an angle axis, with the
/// nonnegativity verdict.
struct UncertaintyReport {
  std::vector<double> t_axis;
  std::vector<double> f_values;
  double min_f = 0.0;
  std::string inequality;
  double tol = kDefaultFTol;
  bool passed = false;
  double margin = 0.0;  ///< min_f
};

/// n uniform angles on [0, pi); every tomogram is pi-periodic in t.
std::vector<double> default_t_axis(Index n = 256);

/// F(r, t) = S(r, t) + S(r, t + pi/2) - ln r^2 - ln(pi e); independent of r
/// and nonnegative for every state.
UncertaintyReport uncertainty_function(const State& state, double r,
                                       const std::vector<double>& t_axis,
                                       const ComputeOptions& opts = {});

struct PairwiseCheck {
  double lhs;
  double rhs;
  double margin;
};

/// S(t) + S(t + pi/2) >= ln(pi e).
PairwiseCheck check_pairwise(const State& state, double t,
                             const ComputeOptions& opts = {});

/// Margin of the dressed inequality
/// S(s cos t, s sin t) + S(-s sin t, s cos t) - ln s^2 >= ln(pi e),
/// s^2 = mu^2 + nu^2.
double check_r_dressed(const State& state, double mu, double nu, double t,
                       const ComputeOptions& opts = {});

/// Multimode margin: per-mode dressed sums minus sum ln(mu_k^2 + nu_k^2)
/// minus N ln(pi e); factorized product states.
double check_multimode(const ProductState& state,
                       const std::vector<double>& mu,
                       const std::vector<double>& nu,
                       const std::vector<double>& t,
                       const ComputeOptions& opts = {});

/// Closed-form F_G(t) = ln sqrt(1 + ((1 - sigma^4)/(2 sigma^2))^2 sin^2 2t)
/// for the Gaussian waist profile.
double waist_uncertainty_closed_form(double sigma, double t);

}  // namespace tomo
