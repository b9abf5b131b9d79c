#include "tomo/frft.hpp"

#include <cmath>
#include <unordered_map>
#include <vector>

namespace tomo {

namespace detail {

namespace {

constexpr double kTwoPiHi = 6.283185307179586476925286766559;
constexpr double kTwoPiLo = 2.4492935982947063545e-16;

// Forward twiddles e^{-2 pi i k/n}, k < n/2. Grow-only per-thread cache;
// chirp sweeps reuse a handful of sizes thousands of times.
const std::vector<Complex>& twiddles(Index n) {
  thread_local std::unordered_map<Index, std::vector<Complex>> cache;
  auto& t = cache[n];
  if (t.empty()) {
    t.resize(size_t(std::max<Index>(n / 2, 1)));
    for (Index k = 0; k < Index(t.size()); ++k)
      t[size_t(k)] = std::polar(1.0, -kTwoPiHi * double(k) / double(n));
  }
  return t;
}

}  // namespace

double reduced_angle(double a, double s) {
  const double p_hi = a * s;
  const double p_lo = std::fma(a, s, -p_hi);
  const double q = std::nearbyint(p_hi / kTwoPiHi);
  double r = std::fma(-q, kTwoPiHi, p_hi);
  r = std::fma(-q, kTwoPiLo, r);
  return r + p_lo;
}

void fft_pow2(ArrayXcd& a, bool inverse) {
  const Index n = a.size();
  if (n < 2 || (n & (n - 1)) != 0)
    fail(ErrorKind::numeric, "fft_pow2 requires a power-of-two size");

  for (Index i = 1, j = 0; i < n; ++i) {
    Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& tw = twiddles(n);
  for (Index len = 2; len <= n; len <<= 1) {
    const Index half = len / 2;
    const Index stride = n / len;
    for (Index i = 0; i < n; i += len) {
      for (Index k = 0; k < half; ++k) {
        Complex w = tw[size_t(k * stride)];
        if (inverse) w = std::conj(w);
        const Complex u = a[i + k];
        const Complex v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
  if (inverse) a /= double(n);
}

ArrayXcd chirp_z(const ArrayXcd& coeff, double y0, double h, double w0,
                 double dw, Index m_count) {
  const Index n = coeff.size();
  if (n < 1 || m_count < 1)
    fail(ErrorKind::dimension, "chirp_z needs nonempty input and output");

  const double alpha = 0.5 * dw * h;

  Index len = 1;
  while (len < n + m_count - 1) len <<= 1;
  len = std::max<Index>(len, 2);

  ArrayXcd a = ArrayXcd::Zero(len);
  ArrayXcd b = ArrayXcd::Zero(len);
  for (Index j = 0; j < n; ++j) {
    const double jj = double(j);
    const double ang = reduced_angle(w0 * h, jj) + reduced_angle(alpha, jj * jj);
    a[j] = coeff[j] * std::polar(1.0, -ang);
  }
  for (Index k = 0; k < m_count; ++k) {
    const double kk = double(k);
    b[k] = std::polar(1.0, reduced_angle(alpha, kk * kk));
  }
  for (Index k = 1; k < n; ++k) {
    const double kk = double(k);
    b[len - k] = std::polar(1.0, reduced_angle(alpha, kk * kk));
  }

  fft_pow2(a, false);
  fft_pow2(b, false);
  a *= b;
  fft_pow2(a, true);

  ArrayXcd out(m_count);
  const double base = reduced_angle(w0, y0);
  for (Index m = 0; m < m_count; ++m) {
    const double mm = double(m);
    const double ang =
        base + reduced_angle(dw * y0, mm) + reduced_angle(alpha, mm * mm);
    out[m] = a[m] * std::polar(1.0, -ang);
  }
  return out;
}

}  // namespace detail

namespace {

void check_sizes(const ArrayXcd& psi, const Grid& grid) {
  if (psi.size() != grid.n_points)
    fail(ErrorKind::dimension, "wavefunction length does not match its grid");
}

void check_normalized(const ArrayXcd& psi, const Grid& grid) {
  if (norm_defect(psi, grid) > 1e-3)
    fail(ErrorKind::normalization, "input wavefunction is not normalized");
}

}  // namespace

ChirpKernelParams::ChirpKernelParams(double mu_, double nu_) : mu(mu_), nu(nu_) {
  if (!std::isfinite(mu) || !std::isfinite(nu))
    fail(ErrorKind::domain, "(mu, nu) must be finite");
  if (mu == 0.0 && nu == 0.0)
    fail(ErrorKind::domain, "(mu, nu) = (0, 0) is not a tomographic direction");
}

TransformResult fourier_transform(const ArrayXcd& psi, const Grid& grid) {
  return fourier_transform(psi, grid, grid.conjugate());
}

TransformResult fourier_transform(const ArrayXcd& psi, const Grid& grid,
                                  const Grid& out) {
  check_sizes(psi, grid);
  check_normalized(psi, grid);
  ArrayXcd values = detail::chirp_z(psi, grid.x_min, grid.step, out.x_min,
                                    out.step, out.n_points);
  values *= grid.step / std::sqrt(2.0 * M_PI);
  const double defect = norm_defect(values, out);
  return {out, std::move(values), defect};
}

TransformResult fractional_fourier(const ArrayXcd& psi, const Grid& grid,
                                   double t) {
  return fractional_fourier(psi, grid, t, grid);
}

TransformResult fractional_fourier(const ArrayXcd& psi, const Grid& grid,
                                   double t, const Grid& out) {
  check_sizes(psi, grid);
  const double st = std::sin(t);
  if (std::abs(st) < kAngleGuard)
    fail(ErrorKind::near_singular,
         "|sin t| below the angle guard; use the marginal limit instead");
  check_normalized(psi, grid);

  const double half_cot = 0.5 * std::cos(t) / st;
  ArrayXcd chirped(psi.size());
  for (Index j = 0; j < psi.size(); ++j) {
    const double y = grid[j];
    chirped[j] = psi[j] * std::polar(1.0, detail::reduced_angle(half_cot, y * y));
  }
  ArrayXcd values = detail::chirp_z(chirped, grid.x_min, grid.step,
                                    out.x_min / st, out.step / st, out.n_points);
  const Complex prefactor =
      grid.step / std::sqrt(Complex(0.0, 2.0 * M_PI * st));
  for (Index m = 0; m < out.n_points; ++m) {
    const double x = out[m];
    values[m] *= prefactor * std::polar(1.0, detail::reduced_angle(half_cot, x * x));
  }
  const double defect = norm_defect(values, out);
  return {out, std::move(values), defect};
}

TransformResult chirp_tomogram_amplitude(const ArrayXcd& psi, const Grid& grid,
                                         const ChirpKernelParams& k,
                                         const Grid& out) {
  check_sizes(psi, grid);
  if (std::abs(k.nu) < kNuGuard)
    fail(ErrorKind::near_singular,
         "|nu| below the guard; use the homogeneity/marginal limit instead");
  check_normalized(psi, grid);

  const double half_chirp = 0.5 * k.mu / k.nu;
  ArrayXcd chirped(psi.size());
  for (Index j = 0; j < psi.size(); ++j) {
    const double y = grid[j];
    chirped[j] = psi[j] * std::polar(1.0, detail::reduced_angle(half_chirp, y * y));
  }
  ArrayXcd values =
      detail::chirp_z(chirped, grid.x_min, grid.step, out.x_min / k.nu,
                      out.step / k.nu, out.n_points);
  values *= grid.step / std::sqrt(2.0 * M_PI * std::abs(k.nu));
  const double defect = norm_defect(values, out);
  return {out, std::move(values), defect};
}

}  // namespace tomo
