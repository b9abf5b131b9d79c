#pragma once

#include <Eigen/Core>
#include <complex>

#include "tomo/error.hpp"

namespace tomo {

using Real = double;
using Complex = std::complex<double>;
using Eigen::ArrayXcd;
using Eigen::ArrayXd;
using Eigen::Index;

/// Uniform lattice x_k = x_min + k*step, k = 0..n_points-1.
struct Grid {
  double x_min = 0.0;
  double step = 1.0;
  Index n_points = 0;

  Grid() = default;
  Grid(double x_min_, double step_, Index n_points_);

  /// Symmetric lattice about 0 covering [-half_width, half_width).
  static Grid centered(double half_width, Index n_points);

  double operator[](Index k) const { return x_min + step * double(k); }
  double x_max() const { return (*this)[n_points - 1]; }
  ArrayXd points() const;

  /// Conjugate (frequency) lattice: step 2*pi/(n*step), centered about 0.
  Grid conjugate() const;

  bool same_lattice(const Grid& other, double rel_tol = 1e-12) const;
};

/// |sum |psi_k|^2 step - 1|
double norm_defect(const ArrayXcd& psi, const Grid& grid);
double norm_defect(const ArrayXd& density, const Grid& grid);

}  // namespace tomo
