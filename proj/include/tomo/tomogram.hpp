#pragma once

#include <variant>
#include <vector>

#include "tomo/state.hpp"

namespace tomo {

struct SymplecticParams {
  double mu, nu;
};
struct OpticalParams {
  double t;
};
struct FresnelParams {
  double nu;
};
using TomogramParams =
    std::variant<SymplecticParams, OpticalParams, FresnelParams>;

/// Normalized tomographic probability density on an X lattice.
struct Tomogram {
  Grid grid;
  ArrayXd density;
  TomogramParams params;
  double normalization_defect = 0.0;
};

struct ComputeOptions {
  Index grid_n = 0;             ///< 0 -> 1024 (doubled in strict mode)
  double grid_half_width = 0.0; ///< 0 -> auto from the state's support
  bool force_fft = false;       ///< route Gaussian pure states through the FFT
  bool strict = false;          ///< halve grid step, escalate coverage to error
};

/// Coverage threshold: tomograms missing more than this much tail mass are
/// flagged (error in strict mode).
inline constexpr double kCoverageTol = 1e-4;

/// X lattice sized so that |mu| q-support + |nu| p-support is covered.
Grid auto_grid(const State& state, double mu, double nu,
               const ComputeOptions& opts = {});

Tomogram symplectic_tomogram(const State& state, double mu, double nu,
                             const Grid& grid, const ComputeOptions& opts = {});
Tomogram symplectic_tomogram(const State& state, double mu, double nu,
                             const ComputeOptions& opts = {});

/// w(X, t) = w(X, cos t, sin t); exact marginal limits inside the angle
/// guard bands around sin t = 0 and cos t = 0.
Tomogram optical_tomogram(const State& state, double t, const Grid& grid,
                          const ComputeOptions& opts = {});
Tomogram optical_tomogram(const State& state, double t,
                          const ComputeOptions& opts = {});

/// w_F(X, nu) = w(X, 1, nu); nu = 0 returns the position density.
Tomogram fresnel_tomogram(const State& state, double nu, const Grid& grid,
                          const ComputeOptions& opts = {});
Tomogram fresnel_tomogram(const State& state, double nu,
                          const ComputeOptions& opts = {});

/// Pure rescaling (X, mu, nu) -> (lambda X, lambda mu, lambda nu),
/// density / |lambda|; no recomputation.
Tomogram homogeneity_rescale(const Tomogram& tom, double lambda);

/// Per-mode tomograms of a product state; the joint density is their product.
/// Empty `grids` auto-sizes each mode.
std::vector<Tomogram> product_tomogram(const ProductState& state,
                                       const std::vector<double>& mu,
                                       const std::vector<double>& nu,
                                       const std::vector<Grid>& grids = {},
                                       const ComputeOptions& opts = {});

}  // namespace tomo
