#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tomo/grid.hpp"

namespace tomo {

// One-mode quantum states / analytic signals, hbar = m = omega = 1.
// All state objects are immutable after construction.

/// psi(x) = pi^{-1/4} exp(-x^2/2), the oscillator ground state.
struct Ground {};

/// psi(x) = exp(-x^2 / (2 sigma^2)) / (pi^{1/4} sigma^{1/2}), sigma > 0.
struct Waist {
  double sigma;
};

/// psi(x) = N exp(-a x^2 + b x) with a = a1 + i a2, a1 > 0, b complex.
/// N is the (real, positive) analytic normalizing constant.
struct SqueezedCorrelated {
  double a1;
  double a2;
  Complex b;
};

/// psi(x) = (2 lz)^{-1/2} sech(x/lz), lz > 0.
struct Soliton {
  double lz;
};

/// Complex amplitudes carried on their own lattice. No resampling is done;
/// callers regrid externally.
struct Sampled {
  Grid grid;
  ArrayXcd amplitudes;
};

using PureVariant =
    std::variant<Ground, Waist, SqueezedCorrelated, Soliton, Sampled>;

class PureState {
 public:
  PureState(Ground g);
  PureState(Waist w);
  PureState(SqueezedCorrelated s);
  PureState(Soliton s);
  /// Validates normalization of the samples within norm_tol.
  PureState(Sampled s, double norm_tol = 1e-6);

  const PureVariant& variant() const { return v_; }

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const {
    return std::visit(std::forward<Visitor>(visitor), v_);
  }

 private:
  PureVariant v_;
};

/// a1/a2 pair whose position-momentum correlation coefficient equals r,
/// |r| < 1 (b = 0, position variance 1/(4 a1)).
SqueezedCorrelated squeezed_from_correlation(double r, double a1 = 0.5);

struct MixedComponent {
  double weight;
  PureState state;
};

/// Convex combination of pure states (spectral decomposition); weights are
/// nonnegative and sum to 1 within 1e-12.
class MixedState {
 public:
  explicit MixedState(std::vector<MixedComponent> components);

  const std::vector<MixedComponent>& components() const { return components_; }

 private:
  std::vector<MixedComponent> components_;
};

/// Gaussian state given by its quadrature second moments; admits the closed
/// tomogram for every (mu, nu). Construction enforces
/// sigma_qq * sigma_pp - sigma_qp^2 >= 1/4.
class GaussianCovariance {
 public:
  GaussianCovariance(double sigma_qq, double sigma_pp, double sigma_qp);

  double sigma_qq() const { return qq_; }
  double sigma_pp() const { return pp_; }
  double sigma_qp() const { return qp_; }

 private:
  double qq_, pp_, qp_;
};

/// Oscillator thermal state at inverse temperature beta:
/// sigma_qq = sigma_pp = (1/2) coth(beta/2), sigma_qp = 0.
GaussianCovariance thermal_covariance(double beta);

/// Squeezed thermal state: sigma_qq = (lambda/2) coth(1/(2 beta)),
/// sigma_pp = coth(1/(2 beta)) / (2 lambda), sigma_qp = 0; any lambda > 0.
GaussianCovariance squeezed_thermal_covariance(double lambda, double beta);

using State = std::variant<PureState, GaussianCovariance, MixedState>;
using ModeState = std::variant<PureState, GaussianCovariance>;

/// Tensor product of one-mode states; tomograms and entropies factorize.
class ProductState {
 public:
  explicit ProductState(std::vector<ModeState> modes);

  const std::vector<ModeState>& modes() const { return modes_; }
  Index size() const { return Index(modes_.size()); }

 private:
  std::vector<ModeState> modes_;
};

// --- Operations -----------------------------------------------------------

/// Samples psi(x_k) on the grid. Sampled states require the same lattice
/// they were constructed on.
ArrayXcd evaluate_wavefunction(const PureState& state, const Grid& grid);

/// Momentum-space wavefunction psi~(p_k): analytic closed forms for the
/// analytic variants, Fourier transform for sampled states.
ArrayXcd evaluate_momentum_wavefunction(const PureState& state, const Grid& grid);

/// Pointwise evaluation on an arbitrary uniform lattice (possibly scaled or
/// reversed); sampled states accept only their own lattice or its mirror.
ArrayXcd evaluate_wavefunction_at(const PureState& state, const ArrayXd& points);
ArrayXcd evaluate_momentum_wavefunction_at(const PureState& state,
                                           const ArrayXd& points);

// Second moments (pure states and Gaussian-covariance states).
double position_variance(const State& state);
double momentum_variance(const State& state);
/// Normalized position-momentum covariance R, |R| < 1.
double correlation_coefficient(const State& state);

double position_mean(const State& state);
double momentum_mean(const State& state);

/// Tomogram shape of states whose tomograms are Gaussian for every (mu, nu):
/// variance mu^2 qq + nu^2 pp + 2 mu nu qp, mean mu*q + nu*p.
struct GaussianShape {
  double qq, pp, qp;
  double mean_q, mean_p;
};
std::optional<GaussianShape> gaussian_shape(const State& state);
std::optional<GaussianShape> gaussian_shape(const PureState& state);

/// Half-widths of the essential support in position and momentum, used to
/// auto-size grids (tails beyond them carry < ~1e-9 of the mass).
struct SupportRadii {
  double q;
  double p;
};
SupportRadii support_radii(const State& state);
SupportRadii support_radii(const PureState& state);

}  // namespace tomo
