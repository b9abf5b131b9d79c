#include "tomo/grid.hpp"

#include <cmath>

namespace tomo {

Grid::Grid(double x_min_, double step_, Index n_points_)
    : x_min(x_min_), step(step_), n_points(n_points_) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(x_min))
    fail(ErrorKind::domain, "grid step must be positive and finite");
  if (n_points < 2) fail(ErrorKind::domain, "grid needs at least 2 points");
}

Grid Grid::centered(double half_width, Index n_points) {
  if (!(half_width > 0.0))
    fail(ErrorKind::domain, "grid half-width must be positive");
  const double step = 2.0 * half_width / double(n_points);
  return Grid(-double(n_points / 2) * step, step, n_points);
}

ArrayXd Grid::points() const {
  return x_min + step * ArrayXd::LinSpaced(n_points, 0.0, double(n_points - 1));
}

Grid Grid::conjugate() const {
  const double dp = 2.0 * M_PI / (double(n_points) * step);
  return Grid(-double(n_points / 2) * dp, dp, n_points);
}

bool Grid::same_lattice(const Grid& other, double rel_tol) const {
  if (n_points != other.n_points) return false;
  const double scale = std::abs(step) + std::abs(x_min) + 1.0;
  return std::abs(step - other.step) <= rel_tol * scale &&
         std::abs(x_min - other.x_min) <= rel_tol * scale;
}

double norm_defect(const ArrayXcd& psi, const Grid& grid) {
  return std::abs(psi.abs2().sum() * grid.step - 1.0);
}

double norm_defect(const ArrayXd& density, const Grid& grid) {
  return std::abs(density.sum() * grid.step - 1.0);
}

}  // namespace tomo
