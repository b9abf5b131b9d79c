#pragma once

#include "tomo/grid.hpp"

namespace tomo {

/// Below this |sin t| the fractional kernel is unresolvable on any fixed grid;
/// callers must use the exact marginal limits instead.
inline constexpr double kAngleGuard = 1e-3;

/// Same role for |nu| in the symplectic kernel.
inline constexpr double kNuGuard = 1e-6;

/// Symplectic kernel parameters; (mu, nu) = (0, 0) is rejected.
struct ChirpKernelParams {
  double mu;
  double nu;

  ChirpKernelParams(double mu_, double nu_);
};

struct TransformResult {
  Grid grid;  ///< output axis
  ArrayXcd values;
  double normalization_defect = 0.0;
};

/// psi~(p) = (2 pi)^{-1/2} int psi(x) e^{-i p x} dx, sampled on the conjugate
/// lattice of `grid` (or on `out` when given). Unitary on the conjugate
/// lattice; arbitrary n_points are supported.
TransformResult fourier_transform(const ArrayXcd& psi, const Grid& grid);
TransformResult fourier_transform(const ArrayXcd& psi, const Grid& grid,
                                  const Grid& out);

/// Fractional Fourier transform of order t:
///   psi(X, t) = (2 pi i sin t)^{-1/2}
///               int exp[(i/2)(cot t (y^2 + X^2) - 2 X y / sin t)] psi(y) dy,
/// the harmonic-oscillator Green function applied for time t. Principal
/// branch of the square root (Fresnel convention). |sin t| < kAngleGuard is
/// rejected as near-singular.
TransformResult fractional_fourier(const ArrayXcd& psi, const Grid& grid,
                                   double t);
TransformResult fractional_fourier(const ArrayXcd& psi, const Grid& grid,
                                   double t, const Grid& out);

/// Tomogram amplitude
///   A(X) = (2 pi |nu|)^{-1/2} int psi(y) exp(i mu y^2 / (2 nu) - i X y / nu) dy
/// evaluated on the requested X lattice, so that w(X, mu, nu) = |A(X)|^2.
/// Computed as chirp multiply + Bluestein convolution; |nu| < kNuGuard is
/// rejected as near-singular.
TransformResult chirp_tomogram_amplitude(const ArrayXcd& psi, const Grid& grid,
                                         const ChirpKernelParams& k,
                                         const Grid& out);

namespace detail {

/// G_m = sum_j c_j exp(-i (w0 + m dw)(y0 + j h)), m = 0..m_count-1.
/// Bluestein chirp factorization; exact up to roundoff for any real w0, dw
/// and any sizes.
ArrayXcd chirp_z(const ArrayXcd& coeff, double y0, double h, double w0,
                 double dw, Index m_count);

/// In-place power-of-two FFT (forward: e^{-2 pi i jk/n}).
void fft_pow2(ArrayXcd& a, bool inverse);

/// a*s reduced modulo 2*pi; accurate even when |a*s| is large.
double reduced_angle(double a, double s);

}  // namespace detail

}  // namespace tomo
