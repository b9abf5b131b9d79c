#include "tomo/tomogram.hpp"

#include <cmath>

#include "tomo/frft.hpp"

namespace tomo {

namespace {

constexpr Index kDefaultGridN = 1024;
constexpr Index kMinChirpN = 1 << 10;
constexpr Index kMaxChirpN = 1 << 21;
constexpr double kNegativeClamp = -1e-14;

Index effective_n(const ComputeOptions& opts) {
  Index n = opts.grid_n > 0 ? opts.grid_n : kDefaultGridN;
  if (opts.strict) n *= 2;
  return n;
}

Index next_pow2(double x) {
  Index n = 1;
  while (double(n) < x && n < (Index(1) << 62)) n <<= 1;
  return n;
}

ArrayXd gaussian_density(const GaussianShape& g, double mu, double nu,
                         const Grid& grid) {
  const double var =
      mu * mu * g.qq + nu * nu * g.pp + 2.0 * mu * nu * g.qp;
  if (!(var > 0.0))
    fail(ErrorKind::numeric, "degenerate tomogram variance");
  const double mean = mu * g.mean_q + nu * g.mean_p;
  const ArrayXd x = grid.points();
  return (1.0 / std::sqrt(2.0 * M_PI * var)) *
         (-0.5 * (x - mean).square() / var).exp();
}

// Input lattice for the chirp path: wide enough for the state's support,
// fine enough that the chirped integrand stays within the Nyquist band of
// every requested output frequency.
Grid chirp_input_grid(const PureState& pure, double mu, double nu,
                      const Grid& xgrid) {
  if (const auto* s = std::get_if<Sampled>(&pure.variant())) return s->grid;
  const SupportRadii r = support_radii(pure);
  const double y_half = std::max(r.q, 1.0);
  const double x_extent =
      std::max(std::abs(xgrid.x_min), std::abs(xgrid.x_max()));
  const double band =
      (std::abs(mu) * y_half + x_extent) / std::abs(nu) + r.p;
  const double h_req = M_PI / band;
  Index n = next_pow2(2.0 * y_half / h_req);
  n = std::clamp(n, kMinChirpN, kMaxChirpN);
  return Grid::centered(y_half, n);
}

ArrayXd chirp_density(const PureState& pure, double mu, double nu,
                      const Grid& xgrid) {
  const Grid ygrid = chirp_input_grid(pure, mu, nu, xgrid);
  const ArrayXcd psi = evaluate_wavefunction(pure, ygrid);
  const auto amp =
      chirp_tomogram_amplitude(psi, ygrid, ChirpKernelParams(mu, nu), xgrid);
  return amp.values.abs2();
}

ArrayXd pure_density(const PureState& pure, double mu, double nu,
                     const Grid& grid, const ComputeOptions& opts) {
  if (!opts.force_fft) {
    if (const auto shape = gaussian_shape(pure))
      return gaussian_density(*shape, mu, nu, grid);
  }
  if (std::abs(nu) < kNuGuard) {
    // w(X, mu, 0) = |psi(X/mu)|^2 / |mu|
    const ArrayXcd psi = evaluate_wavefunction_at(pure, grid.points() / mu);
    return psi.abs2() / std::abs(mu);
  }
  if (std::abs(mu) < kNuGuard) {
    // w(X, 0, nu) = |psi~(X/nu)|^2 / |nu|
    const ArrayXcd psi =
        evaluate_momentum_wavefunction_at(pure, grid.points() / nu);
    return psi.abs2() / std::abs(nu);
  }
  return chirp_density(pure, mu, nu, grid);
}

ArrayXd density_dispatch(const State& state, double mu, double nu,
                         const Grid& grid, const ComputeOptions& opts) {
  if (const auto* pure = std::get_if<PureState>(&state))
    return pure_density(*pure, mu, nu, grid, opts);
  if (const auto* cov = std::get_if<GaussianCovariance>(&state)) {
    const GaussianShape shape{cov->sigma_qq(), cov->sigma_pp(),
                              cov->sigma_qp(), 0.0, 0.0};
    return gaussian_density(shape, mu, nu, grid);
  }
  const auto& mixed = std::get<MixedState>(state);
  ArrayXd w = ArrayXd::Zero(grid.n_points);
  for (const auto& c : mixed.components())
    w += c.weight * pure_density(c.state, mu, nu, grid, opts);
  return w;
}

Tomogram finalize(ArrayXd w, const Grid& grid, TomogramParams params,
                  const ComputeOptions& opts) {
  const double lowest = w.minCoeff();
  if (lowest < kNegativeClamp)
    fail(ErrorKind::numeric, "tomogram density below the round-off clamp");
  if (lowest < 0.0) w = w.max(0.0);
  const double defect = norm_defect(w, grid);
  if (opts.strict && defect > kCoverageTol)
    fail(ErrorKind::coverage,
         "tomogram grid too narrow: tail mass above threshold");
  return Tomogram{grid, std::move(w), params, defect};
}

}  // namespace

namespace {

// At marginal parameters (|nu| below the guard) a sampled state can only be
// evaluated on the scaled image of its own lattice; align the grid with it.
std::optional<Grid> marginal_aligned_grid(const State& state, double mu) {
  const Grid* lattice = nullptr;
  const auto inspect = [&](const PureState& pure) -> bool {
    const auto* samp = std::get_if<Sampled>(&pure.variant());
    if (samp == nullptr) return true;
    if (lattice != nullptr && !lattice->same_lattice(samp->grid))
      return false;  // distinct lattices cannot share one X grid
    lattice = &samp->grid;
    return true;
  };
  if (const auto* pure = std::get_if<PureState>(&state)) {
    inspect(*pure);
  } else if (const auto* mixed = std::get_if<MixedState>(&state)) {
    for (const auto& c : mixed->components())
      if (!inspect(c.state)) return std::nullopt;
  }
  if (lattice == nullptr) return std::nullopt;
  if (mu > 0.0)
    return Grid(mu * lattice->x_min, mu * lattice->step, lattice->n_points);
  return Grid(mu * lattice->x_max(), -mu * lattice->step, lattice->n_points);
}

// The chirp output on a fixed sample lattice is 2 pi |nu| / step periodic
// in X; windows wider than half a period pick up alias images of the main
// lobe. Returns the cap for states carrying samples.
std::optional<double> sampled_alias_cap(const State& state, double nu) {
  std::optional<double> cap;
  const auto inspect = [&](const PureState& pure) {
    const auto* samp = std::get_if<Sampled>(&pure.variant());
    if (samp == nullptr) return;
    const double limit = 0.999 * std::abs(nu) * M_PI / samp->grid.step;
    cap = cap ? std::min(*cap, limit) : limit;
  };
  if (const auto* pure = std::get_if<PureState>(&state)) {
    inspect(*pure);
  } else if (const auto* mixed = std::get_if<MixedState>(&state)) {
    for (const auto& c : mixed->components()) inspect(c.state);
  }
  return cap;
}

}  // namespace

Grid auto_grid(const State& state, double mu, double nu,
               const ComputeOptions& opts) {
  ChirpKernelParams validate(mu, nu);
  (void)validate;
  if (std::abs(nu) < kNuGuard) {
    if (const auto aligned = marginal_aligned_grid(state, mu))
      return *aligned;
  }
  const SupportRadii r = support_radii(state);
  double half = std::abs(mu) * r.q + std::abs(nu) * r.p;
  half = std::max(half, opts.grid_half_width);
  if (std::abs(nu) >= kNuGuard) {
    if (const auto cap = sampled_alias_cap(state, nu))
      half = std::min(half, *cap);
  }
  half = std::max(half, 1e-3);
  return Grid::centered(half, effective_n(opts));
}

Tomogram symplectic_tomogram(const State& state, double mu, double nu,
                             const Grid& grid, const ComputeOptions& opts) {
  ChirpKernelParams validate(mu, nu);
  (void)validate;
  ArrayXd w = density_dispatch(state, mu, nu, grid, opts);
  return finalize(std::move(w), grid, SymplecticParams{mu, nu}, opts);
}

Tomogram symplectic_tomogram(const State& state, double mu, double nu,
                             const ComputeOptions& opts) {
  return symplectic_tomogram(state, mu, nu, auto_grid(state, mu, nu, opts),
                             opts);
}

namespace {

SymplecticParams optical_effective(double t) {
  const double ct = std::cos(t);
  const double st = std::sin(t);
  if (std::abs(st) < kAngleGuard) return {ct, 0.0};
  if (std::abs(ct) < kAngleGuard) return {0.0, st};
  return {ct, st};
}

}  // namespace

Tomogram optical_tomogram(const State& state, double t, const Grid& grid,
                          const ComputeOptions& opts) {
  const SymplecticParams eff = optical_effective(t);
  Tomogram tom = symplectic_tomogram(state, eff.mu, eff.nu, grid, opts);
  tom.params = OpticalParams{t};
  return tom;
}

Tomogram optical_tomogram(const State& state, double t,
                          const ComputeOptions& opts) {
  const SymplecticParams eff = optical_effective(t);
  return optical_tomogram(state, t, auto_grid(state, eff.mu, eff.nu, opts),
                          opts);
}

Tomogram fresnel_tomogram(const State& state, double nu, const Grid& grid,
                          const ComputeOptions& opts) {
  Tomogram tom = symplectic_tomogram(state, 1.0, nu, grid, opts);
  tom.params = FresnelParams{nu};
  return tom;
}

Tomogram fresnel_tomogram(const State& state, double nu,
                          const ComputeOptions& opts) {
  return fresnel_tomogram(state, nu, auto_grid(state, 1.0, nu, opts), opts);
}

Tomogram homogeneity_rescale(const Tomogram& tom, double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda))
    fail(ErrorKind::domain, "rescaling factor must be nonzero and finite");

  SymplecticParams sp = std::visit(
      [](const auto& p) -> SymplecticParams {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SymplecticParams>) {
          return p;
        } else if constexpr (std::is_same_v<T, OpticalParams>) {
          return {std::cos(p.t), std::sin(p.t)};
        } else {
          static_assert(std::is_same_v<T, FresnelParams>);
          return {1.0, p.nu};
        }
      },
      tom.params);
  sp.mu *= lambda;
  sp.nu *= lambda;

  const double mag = std::abs(lambda);
  Grid grid = lambda > 0.0
                  ? Grid(lambda * tom.grid.x_min, mag * tom.grid.step,
                         tom.grid.n_points)
                  : Grid(lambda * tom.grid.x_max(), mag * tom.grid.step,
                         tom.grid.n_points);
  ArrayXd density =
      lambda > 0.0 ? (tom.density / mag).eval()
                   : (tom.density.reverse() / mag).eval();
  return Tomogram{grid, std::move(density), sp, tom.normalization_defect};
}

std::vector<Tomogram> product_tomogram(const ProductState& state,
                                       const std::vector<double>& mu,
                                       const std::vector<double>& nu,
                                       const std::vector<Grid>& grids,
                                       const ComputeOptions& opts) {
  const size_t n = state.modes().size();
  if (mu.size() != n || nu.size() != n)
    fail(ErrorKind::dimension, "per-mode parameter arrays must match mode count");
  if (!grids.empty() && grids.size() != n)
    fail(ErrorKind::dimension, "per-mode grid list must match mode count");

  std::vector<Tomogram> out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    const State mode = std::visit(
        [](const auto& m) -> State { return State(m); }, state.modes()[k]);
    if (grids.empty())
      out.push_back(symplectic_tomogram(mode, mu[k], nu[k], opts));
    else
      out.push_back(symplectic_tomogram(mode, mu[k], nu[k], grids[k], opts));
  }
  return out;
}

}  // namespace tomo
