#pragma once

#include <utility>
#include <vector>

#include "tomo/tomogram.hpp"

namespace tomo {

enum class EntropyMethod { closed_form, quadrature };

/// Shannon entropy in nats.
struct EntropyValue {
  double value;
  double quadrature_error_estimate;  ///< 0 for closed forms
  EntropyMethod method;
};

/// -sum w ln w * step with the 0 ln 0 = 0 convention; the error estimate is
/// the difference against the half-resolution sum. Refuses densities whose
/// normalization defect exceeds 1e-4.
EntropyValue shannon_entropy(const Tomogram& tom);

/// S(mu, nu). Closed form 1/2 + (1/2) ln(2 pi sigma_XX) for Gaussian-shaped
/// states (unless force_fft), tail-aware quadrature otherwise.
EntropyValue symplectic_entropy(const State& state, double mu, double nu,
                                const ComputeOptions& opts = {});

/// S(t) = S(cos t, sin t), with the marginal limits inside the guard bands.
EntropyValue optical_entropy(const State& state, double t,
                             const ComputeOptions& opts = {});

/// S_F(nu) = S(1, nu).
EntropyValue fresnel_entropy(const State& state, double nu,
                             const ComputeOptions& opts = {});

/// S evaluated at (r cos t, r sin t) through the guard-aware optical path.
EntropyValue entropy_at_angle(const State& state, double r, double t,
                              const ComputeOptions& opts = {});

/// |S(lambda mu, lambda nu) - S(mu, nu) - ln|lambda||.
double additivity_residual(const State& state, double mu, double nu,
                           double lambda, const ComputeOptions& opts = {});

/// Entropy sweep along one tomographic parameter axis.
struct EntropyScan {
  enum class Axis { optical, fresnel, symplectic };
  Axis axis;
  std::vector<double> param;  ///< t or nu values; empty for symplectic scans
  std::vector<std::pair<double, double>> pairs;  ///< symplectic (mu, nu) axis
  std::vector<EntropyValue> entropies;
};

EntropyScan optical_entropy_scan(const State& state,
                                 const std::vector<double>& t_values,
                                 const ComputeOptions& opts = {});
EntropyScan fresnel_entropy_scan(const State& state,
                                 const std::vector<double>& nu_values,
                                 const ComputeOptions& opts = {});
EntropyScan symplectic_entropy_scan(
    const State& state, const std::vector<std::pair<double, double>>& pairs,
    const ComputeOptions& opts = {});

}  // namespace tomo
