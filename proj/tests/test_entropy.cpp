#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tomo/entropy.hpp"

using namespace tomo;

namespace {

const double kHalfLnPiE = 0.5 * (std::log(M_PI) + 1.0);

const State kGround{PureState{Ground{}}};
const State kSoliton2{PureState{Soliton{2.0}}};

}  // namespace

TEST_CASE("ground-state entropies equal half ln(pi e) on every axis") {
  const EntropyValue sx = symplectic_entropy(kGround, 1.0, 0.0);
  const EntropyValue sp = symplectic_entropy(kGround, 0.0, 1.0);
  CHECK(sx.method == EntropyMethod::closed_form);
  CHECK(sx.value == doctest::Approx(kHalfLnPiE).epsilon(1e-14));
  CHECK(sp.value == doctest::Approx(kHalfLnPiE).epsilon(1e-14));

  ComputeOptions fft;
  fft.force_fft = true;
  const EntropyValue numeric = symplectic_entropy(kGround, 1.0, 0.0, fft);
  CHECK(numeric.method == EntropyMethod::quadrature);
  CHECK(numeric.value == doctest::Approx(kHalfLnPiE).epsilon(1e-10));
}

TEST_CASE("waist position entropy matches the squeezed closed form") {
  for (double sigma : {0.5, 2.0, 4.0}) {
    const State state{PureState{Waist{sigma}}};
    const EntropyValue sx = symplectic_entropy(state, 1.0, 0.0);
    const double expected = 0.5 * std::log(2.0 * M_PI * M_E * 0.5 * sigma * sigma);
    CHECK(sx.value == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("soliton position entropy equals ln(lz/2) + 2") {
  for (double lz : {2.0, 3.0, 4.0}) {
    const State state{PureState{Soliton{lz}}};
    const EntropyValue sx = symplectic_entropy(state, 1.0, 0.0);
    const double analytic = std::log(0.5 * lz) + 2.0;
    CHECK(sx.value == doctest::Approx(analytic).epsilon(1e-8));

    // independent continuum oracle for the same integral
    const double reference = oracle::integrate(
        [&](double x) {
          const double sech = 1.0 / std::cosh(x / lz);
          const double w = sech * sech / (2.0 * lz);
          return w > 0.0 ? -w * std::log(w) : 0.0;
        },
        -45.0 * lz, 45.0 * lz, 1e-13);
    CHECK(analytic == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("soliton momentum entropy equals 2 - ln(pi lz)") {
  const double lz = 2.0;
  const EntropyValue sp = symplectic_entropy(kSoliton2, 0.0, 1.0);
  CHECK(sp.value == doctest::Approx(2.0 - std::log(M_PI * lz)).epsilon(1e-8));
}

TEST_CASE("entropy refuses unnormalized densities") {
  Tomogram tom = symplectic_tomogram(kGround, 1.0, 0.0);
  tom.density *= 0.9;
  tom.normalization_defect = norm_defect(tom.density, tom.grid);
  CHECK_THROWS_AS(shannon_entropy(tom), Error);
}

TEST_CASE("zero-valued bins contribute nothing to the entropy") {
  // box density over half the grid; exact zeros elsewhere
  const Grid grid(0.0, 0.01, 200);
  ArrayXd density = ArrayXd::Zero(200);
  density.head(100) = 1.0;  // integrates to 1 over [0, 1)
  const Tomogram box{grid, density, SymplecticParams{1.0, 0.0}, 0.0};
  const EntropyValue entropy = shannon_entropy(box);
  CHECK(entropy.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isfinite(entropy.value));
}

TEST_CASE("entropy additivity under parameter scaling") {
  CHECK(additivity_residual(kGround, 1.0, 0.0, 1.0) == 0.0);
  CHECK(additivity_residual(kGround, 1.0, 0.0, 3.0) < 1e-8);
  const State soliton3{PureState{Soliton{3.0}}};
  CHECK(additivity_residual(soliton3, std::cos(1.0), std::sin(1.0), 2.0) <
        1e-5);
  CHECK_THROWS_AS(additivity_residual(kGround, 1.0, 0.0, 0.0), Error);
}

TEST_CASE("closed-form and FFT-path entropies agree for Gaussian waists") {
  ComputeOptions fft;
  fft.force_fft = true;
  for (double sigma : {0.5, 1.0, 2.0, 4.0}) {
    const State state{PureState{Waist{sigma}}};
    for (int k = 0; k < 16; ++k) {
      const double t = 0.05 + M_PI * double(k) / 16.0;
      const double closed = entropy_at_angle(state, 1.0, t).value;
      const double numeric = entropy_at_angle(state, 1.0, t, fft).value;
      CHECK(std::abs(closed - numeric) < 1e-5);
    }
  }
}

TEST_CASE("optical entropy relates to the dressed symplectic entropy") {
  for (double t : {0.35, 1.2, 2.6}) {
    for (double r : {0.7, 1.7}) {
      const double lhs = optical_entropy(kSoliton2, t).value;
      const double rhs =
          entropy_at_angle(kSoliton2, r, t).value - std::log(r);
      CHECK(std::abs(lhs - rhs) < 1e-6);
    }
  }
}

TEST_CASE("fresnel entropy limits") {
  const State squeezed{PureState{squeezed_from_correlation(0.6)}};
  const EntropyValue sf0 = fresnel_entropy(squeezed, 0.0);
  const EntropyValue sx = symplectic_entropy(squeezed, 1.0, 0.0);
  CHECK(sf0.value == doctest::Approx(sx.value).epsilon(1e-14));

  // S_F(nu) = S(1, nu)
  const EntropyValue sf = fresnel_entropy(kSoliton2, 0.8);
  const EntropyValue s = symplectic_entropy(kSoliton2, 1.0, 0.8);
  CHECK(sf.value == doctest::Approx(s.value).epsilon(1e-14));
}

TEST_CASE("optical entropy endpoints are the position/momentum entropies") {
  const State squeezed{PureState{squeezed_from_correlation(0.6)}};
  const double sx = optical_entropy(squeezed, 0.0).value;
  const double sp = optical_entropy(squeezed, M_PI / 2).value;
  CHECK(sx == doctest::Approx(symplectic_entropy(squeezed, 1.0, 0.0).value));
  CHECK(sp == doctest::Approx(symplectic_entropy(squeezed, 0.0, 1.0).value));
  CHECK(sx != doctest::Approx(sp));  // squeezed: the two entropies differ
}

TEST_CASE("multimode ground entropy sums the per-mode closed forms") {
  const std::vector<double> mu{1.0, 0.8, 1.6};
  const std::vector<double> nu{0.3, -1.1, 0.9};
  double total = 0.0;
  for (size_t k = 0; k < mu.size(); ++k)
    total += symplectic_entropy(kGround, mu[k], nu[k]).value;
  const double n_modes = 3.0;
  double expected = 0.5 * n_modes * std::log(M_PI) + 0.5 * n_modes;
  for (size_t k = 0; k < mu.size(); ++k)
    expected += 0.5 * std::log(mu[k] * mu[k] + nu[k] * nu[k]);
  CHECK(total == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("entropy scans expose the axis they swept") {
  std::vector<double> axis;
  for (int k = 0; k < 64; ++k) axis.push_back(M_PI * double(k) / 64.0);
  const EntropyScan scan = optical_entropy_scan(kGround, axis);
  REQUIRE(scan.entropies.size() == axis.size());
  for (const auto& e : scan.entropies)
    CHECK(std::abs(e.value - kHalfLnPiE) < 1e-8);

  const EntropyScan fresnel =
      fresnel_entropy_scan(kSoliton2, {0.0, 0.5, 1.0});
  CHECK(fresnel.entropies[0].value ==
        doctest::Approx(symplectic_entropy(kSoliton2, 1.0, 0.0).value));

  const EntropyScan pairs = symplectic_entropy_scan(
      kGround, {{1.0, 0.0}, {0.0, 1.0}});
  CHECK(pairs.entropies[0].value == doctest::Approx(kHalfLnPiE));
}

TEST_CASE("quadrature error estimate reflects the half-resolution check") {
  const EntropyValue e = symplectic_entropy(kSoliton2, std::cos(0.6),
                                            std::sin(0.6));
  CHECK(e.method == EntropyMethod::quadrature);
  CHECK(e.quadrature_error_estimate >= 0.0);
  CHECK(e.quadrature_error_estimate < 1e-6);
}
