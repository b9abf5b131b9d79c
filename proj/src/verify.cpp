#include "tomo/verify.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "tomo/frft.hpp"
#include "tomo/uncertainty.hpp"

namespace tomo {

namespace {

struct NamedState {
  std::string name;
  State state;
};

std::vector<NamedState> catalog() {
  std::vector<NamedState> states;
  states.push_back({"ground", State(PureState(Ground{}))});
  states.push_back({"waist2", State(PureState(Waist{2.0}))});
  states.push_back({"waist4", State(PureState(Waist{4.0}))});
  states.push_back({"squeezed_r0.6",
                    State(PureState(SqueezedCorrelated{0.5, -0.375,
                                                       Complex(0.2, 0.1)}))});
  states.push_back({"soliton2", State(PureState(Soliton{2.0}))});
  states.push_back({"soliton3", State(PureState(Soliton{3.0}))});
  states.push_back({"thermal_beta1", State(thermal_covariance(1.0))});
  states.push_back(
      {"squeezed_thermal", State(squeezed_thermal_covariance(2.0, 1.0))});
  states.push_back({"mixed",
                    State(MixedState({{0.6, PureState(Ground{})},
                                      {0.4, PureState(Waist{2.0})}}))});
  return states;
}

// Directions clear of the singular guard bands, two radii.
std::vector<std::pair<double, double>> param_sample() {
  std::vector<std::pair<double, double>> params;
  for (int k = 0; k < 4; ++k) {
    const double t = 0.19 + double(k) * M_PI / 4.5;
    const double r = (k % 2 == 0) ? 1.0 : 1.6;
    params.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  return params;
}

double l1_distance(const Tomogram& a, const Tomogram& b) {
  return ((a.density - b.density).abs().sum()) * a.grid.step;
}

double waist_product_defect(double sigma) {
  const State state{PureState(Waist{sigma})};
  return std::abs(position_variance(state) * momentum_variance(state) - 0.25);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  ComputeOptions copts;
  copts.strict = opts.strict;
  const double tol_f = opts.strict ? kStrictFTol : kDefaultFTol;

  const auto states = catalog();
  const auto params = param_sample();
  const std::array<double, 3> lambdas{-2.0, 0.5, 3.0};
  const std::array<double, 8> angles{0.13, 0.55, 0.97, 1.39,
                                     1.81, 2.23, 2.65, 3.07};

  std::vector<CheckResult> results;
  const auto add = [&](const std::string& name, double margin, double tol,
                       bool passed) {
    results.push_back({name, margin, tol, passed});
  };

  // Normalization of every produced tomogram (negative control hooks in
  // here: tamper scales the first density by 0.9).
  {
    double worst = 0.0;
    bool first = true;
    for (const auto& ns : states) {
      for (const auto& [mu, nu] : params) {
        const Tomogram tom = symplectic_tomogram(ns.state, mu, nu, copts);
        double defect = tom.normalization_defect;
        if (opts.tamper && first) {
          defect = norm_defect(ArrayXd(0.9 * tom.density), tom.grid);
          first = false;
        }
        worst = std::max(worst, defect);
      }
    }
    add("tomogram-normalization", worst, 1e-6, worst <= 1e-6);
  }

  // Homogeneity: rescaled tomogram vs direct evaluation at scaled params.
  {
    double worst = 0.0;
    for (const auto& ns : states) {
      for (const auto& [mu, nu] : params) {
        const Tomogram base = symplectic_tomogram(ns.state, mu, nu, copts);
        for (double lambda : lambdas) {
          const Tomogram rescaled = homogeneity_rescale(base, lambda);
          const Tomogram direct = symplectic_tomogram(
              ns.state, lambda * mu, lambda * nu, rescaled.grid, copts);
          worst = std::max(worst, l1_distance(rescaled, direct));
        }
      }
    }
    add("homogeneity-scaling", worst, 1e-6, worst <= 1e-6);
  }

  // Fresnel tomogram vs scaled symplectic tomogram at mu=2, nu=0.7.
  {
    const double mu = 2.0, nu = 0.7;
    double worst = 0.0;
    for (const auto& ns : states) {
      const Grid grid = auto_grid(ns.state, mu, nu, copts);
      const Tomogram sym = symplectic_tomogram(ns.state, mu, nu, grid, copts);
      const Grid scaled(grid.x_min / mu, grid.step / mu, grid.n_points);
      const Tomogram fre = fresnel_tomogram(ns.state, nu / mu, scaled, copts);
      const double dist =
          ((fre.density - mu * sym.density).abs().sum()) * grid.step;
      worst = std::max(worst, dist);
    }
    add("fresnel-optical-scaling", worst, 1e-6, worst <= 1e-6);
  }

  // Entropy additivity under parameter scaling.
  {
    double worst = 0.0;
    for (const auto& ns : states) {
      for (const auto& [mu, nu] : params) {
        for (double lambda : lambdas) {
          worst = std::max(
              worst, additivity_residual(ns.state, mu, nu, lambda, copts));
        }
      }
    }
    add("entropy-additivity", worst, 1e-5, worst <= 1e-5);
  }

  // Position-momentum entropy bound.
  {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& ns : states)
      worst = std::min(worst, check_pairwise(ns.state, 0.0, copts).margin);
    add("position-momentum-entropy-bound", worst, tol_f, worst >= -tol_f);
  }

  // Pairwise bound across the optical angle sweep.
  {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& ns : states)
      for (double t : angles)
        worst = std::min(worst, check_pairwise(ns.state, t, copts).margin);
    add("optical-pairwise-bound", worst, tol_f, worst >= -tol_f);
  }

  // Optical entropy equals symplectic entropy on the unit circle.
  {
    double worst = 0.0;
    for (const auto& ns : states) {
      for (double t : angles) {
        const double a = optical_entropy(ns.state, t, copts).value;
        const double b =
            symplectic_entropy(ns.state, std::cos(t), std::sin(t), copts)
                .value;
        worst = std::max(worst, std::abs(a - b));
      }
    }
    add("optical-symplectic-consistency", worst, 1e-12, worst <= 1e-12);
  }

  // The uncertainty function does not depend on the radial parameter.
  {
    const std::array<double, 3> radii{0.5, 2.0, 5.0};
    double worst = 0.0;
    for (const auto& ns : states) {
      for (double t : {0.31, 1.07, 1.83, 2.59}) {
        const double f1 = check_r_dressed(ns.state, std::cos(t), std::sin(t),
                                          t, copts);
        for (double r : radii) {
          const double fr = check_r_dressed(ns.state, r * std::cos(t),
                                            r * std::sin(t), t, copts);
          worst = std::max(worst, std::abs(fr - f1));
        }
      }
    }
    add("radial-independence", worst, 1e-5, worst <= 1e-5);
  }

  // Dressed margin equals the pairwise margin at the same angle.
  {
    double worst = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& ns : states) {
      for (double t : {0.45, 1.31, 2.17}) {
        const double pairwise = check_pairwise(ns.state, t, copts).margin;
        const double dressed =
            check_r_dressed(ns.state, 1.2 * std::cos(t), 1.2 * std::sin(t), t,
                            copts);
        worst = std::max(worst, std::abs(dressed - pairwise));
        worst_margin = std::min(worst_margin, dressed);
      }
    }
    add("dressed-pairwise-consistency", worst, 1e-6, worst <= 1e-6);
    add("dressed-bound", worst_margin, tol_f, worst_margin >= -tol_f);
  }

  // Multimode bound on a heterogeneous product state.
  {
    const ProductState product({PureState(Waist{2.0}), PureState(Soliton{2.0}),
                                PureState(Ground{})});
    const double margin =
        check_multimode(product, {1.0, 0.7, 1.3}, {0.4, 1.1, -0.5},
                        {0.6, 1.2, 2.1}, copts);
    add("multimode-bound", margin, 3.0 * tol_f, margin >= -3.0 * tol_f);
  }

  // Ground-state product saturates the multimode bound.
  {
    const ProductState product(
        {PureState(Ground{}), PureState(Ground{}), PureState(Ground{})});
    const double margin =
        check_multimode(product, {1.0, 0.8, 1.6}, {0.3, -1.1, 0.9},
                        {0.7, 1.9, 2.6}, copts);
    add("multimode-ground-equality", std::abs(margin), 3e-8,
        std::abs(margin) <= 3e-8);
  }

  // Ground state saturates the one-mode bound.
  {
    const State ground{PureState(Ground{})};
    const double sum = symplectic_entropy(ground, 1.0, 0.0, copts).value +
                       symplectic_entropy(ground, 0.0, 1.0, copts).value;
    const double residual = std::abs(sum - kLnPiE);
    add("ground-entropy-sum", residual, 1e-8, residual <= 1e-8);
  }

  // Minimum-uncertainty product for every waist.
  {
    double worst = 0.0;
    for (double sigma : {0.5, 1.0, 2.0, 4.0})
      worst = std::max(worst, waist_product_defect(sigma));
    add("minimum-uncertainty-product", worst, 1e-10, worst <= 1e-10);
  }

  // Correlated-state entropy sum exceeds the bound by -ln sqrt(1 - R^2).
  {
    double worst = 0.0;
    for (double r : {0.3, 0.6, 0.9}) {
      const State state{PureState(squeezed_from_correlation(r))};
      const double sum = symplectic_entropy(state, 1.0, 0.0, copts).value +
                         symplectic_entropy(state, 0.0, 1.0, copts).value;
      const double expected = kLnPiE - 0.5 * std::log1p(-r * r);
      worst = std::max(worst, std::abs(sum - expected));
    }
    add("correlated-entropy-sum", worst, 1e-5, worst <= 1e-5);
  }

  return results;
}

}  // namespace tomo
