#include "tomo/state.hpp"

#include <cmath>

#include "tomo/frft.hpp"

namespace tomo {

namespace {

// Gaussian tail beyond 8 sigma and sech^2 tail beyond 12 width units both
// carry < 1e-9 of the mass.
constexpr double kGaussianTailSigmas = 8.0;
constexpr double kSechTailWidths = 12.0;

double squeezed_norm(const SqueezedCorrelated& s) {
  const double beta = s.b.real();
  return std::pow(2.0 * s.a1 / M_PI, 0.25) *
         std::exp(-beta * beta / (4.0 * s.a1));
}

}  // namespace

PureState::PureState(Ground g) : v_(g) {}

PureState::PureState(Waist w) : v_(w) {
  if (!(w.sigma > 0.0) || !std::isfinite(w.sigma))
    fail(ErrorKind::domain, "waist sigma must be positive");
}

PureState::PureState(SqueezedCorrelated s) : v_(s) {
  if (!(s.a1 > 0.0) || !std::isfinite(s.a1) || !std::isfinite(s.a2))
    fail(ErrorKind::domain, "squeezed-correlated state requires a1 > 0");
  if (!std::isfinite(s.b.real()) || !std::isfinite(s.b.imag()))
    fail(ErrorKind::domain, "squeezed-correlated b must be finite");
}

PureState::PureState(Soliton s) : v_(s) {
  if (!(s.lz > 0.0) || !std::isfinite(s.lz))
    fail(ErrorKind::domain, "soliton width lz must be positive");
}

PureState::PureState(Sampled s, double norm_tol) : v_(std::move(s)) {
  const auto& samp = std::get<Sampled>(v_);
  if (samp.amplitudes.size() != samp.grid.n_points)
    fail(ErrorKind::dimension, "sampled amplitudes do not match their grid");
  const double defect = norm_defect(samp.amplitudes, samp.grid);
  if (defect > norm_tol)
    fail(ErrorKind::normalization,
         "sampled state is not normalized within tolerance");
}

SqueezedCorrelated squeezed_from_correlation(double r, double a1) {
  if (!(std::abs(r) < 1.0))
    fail(ErrorKind::domain, "correlation coefficient must satisfy |r| < 1");
  if (!(a1 > 0.0)) fail(ErrorKind::domain, "a1 must be positive");
  return {a1, -a1 * r / std::sqrt(1.0 - r * r), Complex(0.0, 0.0)};
}

MixedState::MixedState(std::vector<MixedComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    fail(ErrorKind::domain, "mixed state needs at least one component");
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.weight >= 0.0))
      fail(ErrorKind::domain, "mixed-state weights must be nonnegative");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    fail(ErrorKind::domain, "mixed-state weights must sum to 1");
}

GaussianCovariance::GaussianCovariance(double sigma_qq, double sigma_pp,
                                       double sigma_qp)
    : qq_(sigma_qq), pp_(sigma_pp), qp_(sigma_qp) {
  if (!(qq_ > 0.0) || !(pp_ > 0.0))
    fail(ErrorKind::domain, "covariance diagonal must be positive");
  if (qq_ * pp_ - qp_ * qp_ < 0.25 * (1.0 - 1e-12))
    fail(ErrorKind::domain,
         "covariance violates sigma_qq sigma_pp - sigma_qp^2 >= 1/4");
}

GaussianCovariance thermal_covariance(double beta) {
  if (!(beta > 0.0)) fail(ErrorKind::domain, "beta must be positive");
  const double s = 0.5 / std::tanh(0.5 * beta);
  return GaussianCovariance(s, s, 0.0);
}

GaussianCovariance squeezed_thermal_covariance(double lambda, double beta) {
  if (!(lambda > 0.0)) fail(ErrorKind::domain, "lambda must be positive");
  if (!(beta > 0.0)) fail(ErrorKind::domain, "beta must be positive");
  const double c = 1.0 / std::tanh(0.5 / beta);
  return GaussianCovariance(0.5 * lambda * c, 0.5 * c / lambda, 0.0);
}

ProductState::ProductState(std::vector<ModeState> modes)
    : modes_(std::move(modes)) {
  if (modes_.empty())
    fail(ErrorKind::domain, "product state needs at least one mode");
}

namespace {

enum class LatticeMatch { none, forward, reversed };

LatticeMatch match_lattice(const ArrayXd& pts, const Grid& g) {
  if (pts.size() != g.n_points || pts.size() < 2) return LatticeMatch::none;
  const double scale = std::abs(g.step) + std::abs(g.x_min) + 1.0;
  const auto near = [&](double a, double b) {
    return std::abs(a - b) <= 1e-9 * scale;
  };
  const double d = pts[1] - pts[0];
  if (near(pts[0], g.x_min) && near(d, g.step)) return LatticeMatch::forward;
  if (near(pts[pts.size() - 1], g.x_min) && near(-d, g.step))
    return LatticeMatch::reversed;
  return LatticeMatch::none;
}

}  // namespace

ArrayXcd evaluate_wavefunction_at(const PureState& state, const ArrayXd& x) {
  return state.visit(
      [&](const auto& s) -> ArrayXcd {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ground>) {
          return (std::pow(M_PI, -0.25) * (-0.5 * x.square()).exp())
              .template cast<Complex>();
        } else if constexpr (std::is_same_v<T, Waist>) {
          const double norm = std::pow(M_PI, -0.25) / std::sqrt(s.sigma);
          return (norm * (-0.5 * x.square() / (s.sigma * s.sigma)).exp())
              .template cast<Complex>();
        } else if constexpr (std::is_same_v<T, SqueezedCorrelated>) {
          const double norm = squeezed_norm(s);
          const Complex a(s.a1, s.a2);
          ArrayXcd out(x.size());
          for (Index k = 0; k < x.size(); ++k)
            out[k] = norm * std::exp(-a * (x[k] * x[k]) + s.b * x[k]);
          return out;
        } else if constexpr (std::is_same_v<T, Soliton>) {
          const double norm = 1.0 / std::sqrt(2.0 * s.lz);
          return (norm / (x / s.lz).cosh()).template cast<Complex>();
        } else {
          static_assert(std::is_same_v<T, Sampled>);
          switch (match_lattice(x, s.grid)) {
            case LatticeMatch::forward:
              return s.amplitudes;
            case LatticeMatch::reversed:
              return s.amplitudes.reverse();
            case LatticeMatch::none:
              break;
          }
          fail(ErrorKind::dimension,
               "sampled state evaluated off its own lattice");
        }
      });
}

ArrayXcd evaluate_wavefunction(const PureState& state, const Grid& grid) {
  return evaluate_wavefunction_at(state, grid.points());
}

ArrayXcd evaluate_momentum_wavefunction_at(const PureState& state,
                                           const ArrayXd& p) {
  return state.visit(
      [&](const auto& s) -> ArrayXcd {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ground>) {
          return (std::pow(M_PI, -0.25) * (-0.5 * p.square()).exp())
              .template cast<Complex>();
        } else if constexpr (std::is_same_v<T, Waist>) {
          const double norm = std::pow(M_PI, -0.25) * std::sqrt(s.sigma);
          return (norm * (-0.5 * s.sigma * s.sigma * p.square()).exp())
              .template cast<Complex>();
        } else if constexpr (std::is_same_v<T, SqueezedCorrelated>) {
          const Complex a(s.a1, s.a2);
          const Complex pref = squeezed_norm(s) / std::sqrt(2.0 * a);
          ArrayXcd out(p.size());
          for (Index k = 0; k < p.size(); ++k) {
            const Complex z = s.b - Complex(0.0, p[k]);
            out[k] = pref * std::exp(z * z / (4.0 * a));
          }
          return out;
        } else if constexpr (std::is_same_v<T, Soliton>) {
          const double norm = 0.5 * std::sqrt(M_PI * s.lz);
          return (norm / (0.5 * M_PI * s.lz * p).cosh()).template cast<Complex>();
        } else {
          static_assert(std::is_same_v<T, Sampled>);
          if (p.size() < 2)
            fail(ErrorKind::dimension, "momentum lattice needs >= 2 points");
          const double dw = p[1] - p[0];
          ArrayXcd out = detail::chirp_z(s.amplitudes, s.grid.x_min,
                                         s.grid.step, p[0], dw, p.size());
          out *= s.grid.step / std::sqrt(2.0 * M_PI);
          return out;
        }
      });
}

ArrayXcd evaluate_momentum_wavefunction(const PureState& state,
                                        const Grid& grid) {
  return evaluate_momentum_wavefunction_at(state, grid.points());
}

namespace {

struct Moments {
  double mean_q, mean_p;
  double var_q, var_p;
  double cov_qp;
};

Moments sampled_moments(const Sampled& s) {
  Moments m{};
  const ArrayXd x = s.grid.points();
  const ArrayXd rho = s.amplitudes.abs2();
  const double h = s.grid.step;
  m.mean_q = (x * rho).sum() * h;
  m.var_q = ((x - m.mean_q).square() * rho).sum() * h;

  const auto ft = fourier_transform(s.amplitudes, s.grid);
  const ArrayXd p = ft.grid.points();
  const ArrayXd rho_p = ft.values.abs2();
  const double dp = ft.grid.step;
  m.mean_p = (p * rho_p).sum() * dp;
  m.var_p = ((p - m.mean_p).square() * rho_p).sum() * dp;

  // p-hat psi via the inverse transform of p * psi~(p).
  const ArrayXcd weighted = ft.values * p.template cast<Complex>();
  ArrayXcd p_psi =
      detail::chirp_z(weighted, ft.grid.x_min, ft.grid.step, -s.grid.x_min,
                      -s.grid.step, s.grid.n_points);
  p_psi *= ft.grid.step / std::sqrt(2.0 * M_PI);
  const double xp =
      (x * (s.amplitudes.conjugate() * p_psi).real()).sum() * h;
  m.cov_qp = xp - m.mean_q * m.mean_p;
  return m;
}

Moments pure_moments(const PureState& state) {
  return state.visit([&](const auto& s) -> Moments {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Ground>) {
      return {0.0, 0.0, 0.5, 0.5, 0.0};
    } else if constexpr (std::is_same_v<T, Waist>) {
      const double s2 = s.sigma * s.sigma;
      return {0.0, 0.0, 0.5 * s2, 0.5 / s2, 0.0};
    } else if constexpr (std::is_same_v<T, SqueezedCorrelated>) {
      const double mod2 = s.a1 * s.a1 + s.a2 * s.a2;
      const double mean_q = s.b.real() / (2.0 * s.a1);
      const double mean_p = s.b.imag() - s.a2 * s.b.real() / s.a1;
      return {mean_q, mean_p, 1.0 / (4.0 * s.a1), mod2 / s.a1,
              -s.a2 / (2.0 * s.a1)};
    } else if constexpr (std::is_same_v<T, Soliton>) {
      return {0.0, 0.0, M_PI * M_PI * s.lz * s.lz / 12.0,
              1.0 / (3.0 * s.lz * s.lz), 0.0};
    } else {
      static_assert(std::is_same_v<T, Sampled>);
      return sampled_moments(s);
    }
  });
}

Moments state_moments(const State& state) {
  if (const auto* pure = std::get_if<PureState>(&state))
    return pure_moments(*pure);
  if (const auto* cov = std::get_if<GaussianCovariance>(&state))
    return {0.0, 0.0, cov->sigma_qq(), cov->sigma_pp(), cov->sigma_qp()};
  fail(ErrorKind::domain,
       "second moments are defined for pure and Gaussian-covariance states");
}

}  // namespace

double position_variance(const State& state) { return state_moments(state).var_q; }

double momentum_variance(const State& state) { return state_moments(state).var_p; }

double correlation_coefficient(const State& state) {
  const Moments m = state_moments(state);
  const double r = m.cov_qp / std::sqrt(m.var_q * m.var_p);
  if (!(std::abs(r) < 1.0))
    fail(ErrorKind::domain, "correlation coefficient |R| >= 1");
  return r;
}

double position_mean(const State& state) {
  if (std::holds_alternative<MixedState>(state)) {
    const auto& mixed = std::get<MixedState>(state);
    double mean = 0.0;
    for (const auto& c : mixed.components())
      mean += c.weight * pure_moments(c.state).mean_q;
    return mean;
  }
  return state_moments(state).mean_q;
}

double momentum_mean(const State& state) {
  if (std::holds_alternative<MixedState>(state)) {
    const auto& mixed = std::get<MixedState>(state);
    double mean = 0.0;
    for (const auto& c : mixed.components())
      mean += c.weight * pure_moments(c.state).mean_p;
    return mean;
  }
  return state_moments(state).mean_p;
}

std::optional<GaussianShape> gaussian_shape(const PureState& pure) {
  return pure.visit([&](const auto& s) -> std::optional<GaussianShape> {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Ground> || std::is_same_v<T, Waist> ||
                  std::is_same_v<T, SqueezedCorrelated>) {
      const Moments m = pure_moments(pure);
      return GaussianShape{m.var_q, m.var_p, m.cov_qp, m.mean_q, m.mean_p};
    } else {
      (void)s;
      return std::nullopt;
    }
  });
}

std::optional<GaussianShape> gaussian_shape(const State& state) {
  if (const auto* cov = std::get_if<GaussianCovariance>(&state))
    return GaussianShape{cov->sigma_qq(), cov->sigma_pp(), cov->sigma_qp(),
                         0.0, 0.0};
  if (const auto* pure = std::get_if<PureState>(&state))
    return gaussian_shape(*pure);
  return std::nullopt;
}

SupportRadii support_radii(const PureState& state) {
  return state.visit([&](const auto& s) -> SupportRadii {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Soliton>) {
      return {kSechTailWidths * s.lz, kSechTailWidths * 2.0 / (M_PI * s.lz)};
    } else if constexpr (std::is_same_v<T, Sampled>) {
      const double extent =
          std::max(std::abs(s.grid.x_min), std::abs(s.grid.x_max()));
      return {extent, M_PI / s.grid.step};
    } else {
      (void)s;
      const Moments m = pure_moments(state);
      return {std::abs(m.mean_q) + kGaussianTailSigmas * std::sqrt(m.var_q),
              std::abs(m.mean_p) + kGaussianTailSigmas * std::sqrt(m.var_p)};
    }
  });
}

SupportRadii support_radii(const State& state) {
  if (const auto* pure = std::get_if<PureState>(&state))
    return support_radii(*pure);
  if (const auto* cov = std::get_if<GaussianCovariance>(&state))
    return {kGaussianTailSigmas * std::sqrt(cov->sigma_qq()),
            kGaussianTailSigmas * std::sqrt(cov->sigma_pp())};
  const auto& mixed = std::get<MixedState>(state);
  SupportRadii radii{0.0, 0.0};
  for (const auto& c : mixed.components()) {
    const SupportRadii r = support_radii(c.state);
    radii.q = std::max(radii.q, r.q);
    radii.p = std::max(radii.p, r.p);
  }
  return radii;
}

}  // namespace tomo
