#include "tomo/serialize.hpp"

#include <cstdio>
#include <ostream>

namespace tomo {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_tomogram_csv(const Tomogram& tom, std::ostream& os) {
  os << "X,w\n";
  for (Index k = 0; k < tom.grid.n_points; ++k)
    os << format_float(tom.grid[k]) << ',' << format_float(tom.density[k])
       << '\n';
}

void write_entropy_scan_csv(const EntropyScan& scan, std::ostream& os) {
  os << "param,S,err_est\n";
  for (size_t k = 0; k < scan.entropies.size(); ++k) {
    const double param = scan.param.empty() ? double(k) : scan.param[k];
    os << format_float(param) << ',' << format_float(scan.entropies[k].value)
       << ','
       << format_float(scan.entropies[k].quadrature_error_estimate) << '\n';
  }
}

void write_uncertainty_csv(const UncertaintyReport& report, std::ostream& os) {
  os << "t,F\n";
  for (size_t k = 0; k < report.t_axis.size(); ++k)
    os << format_float(report.t_axis[k]) << ','
       << format_float(report.f_values[k]) << '\n';
}

json grid_json(const Grid& grid) {
  return json{{"x_min", grid.x_min},
              {"step", grid.step},
              {"n_points", grid.n_points}};
}

namespace {

json params_json(const TomogramParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SymplecticParams>) {
          return json{{"kind", "symplectic"}, {"mu", p.mu}, {"nu", p.nu}};
        } else if constexpr (std::is_same_v<T, OpticalParams>) {
          return json{{"kind", "optical"}, {"t", p.t}};
        } else {
          static_assert(std::is_same_v<T, FresnelParams>);
          return json{{"kind", "fresnel"}, {"nu", p.nu}};
        }
      },
      params);
}

}  // namespace

json tomogram_json(const Tomogram& tom) {
  json doc;
  doc["params"] = params_json(tom.params);
  doc["grid"] = grid_json(tom.grid);
  doc["density"] = std::vector<double>(tom.density.data(),
                                       tom.density.data() + tom.density.size());
  doc["normalization_defect"] = tom.normalization_defect;
  return doc;
}

json entropy_scan_json(const EntropyScan& scan) {
  json doc;
  switch (scan.axis) {
    case EntropyScan::Axis::optical:
      doc["axis"] = "t";
      break;
    case EntropyScan::Axis::fresnel:
      doc["axis"] = "nu";
      break;
    case EntropyScan::Axis::symplectic:
      doc["axis"] = "mu,nu";
      break;
  }
  if (!scan.param.empty()) doc["param"] = scan.param;
  if (!scan.pairs.empty()) {
    json pairs = json::array();
    for (const auto& [mu, nu] : scan.pairs) pairs.push_back({mu, nu});
    doc["pairs"] = std::move(pairs);
  }
  std::vector<double> values, errors;
  values.reserve(scan.entropies.size());
  errors.reserve(scan.entropies.size());
  for (const auto& e : scan.entropies) {
    values.push_back(e.value);
    errors.push_back(e.quadrature_error_estimate);
  }
  doc["S"] = std::move(values);
  doc["err_est"] = std::move(errors);
  return doc;
}

json uncertainty_json(const UncertaintyReport& report) {
  json doc;
  doc["inequality"] = report.inequality;
  doc["t_axis"] = report.t_axis;
  doc["F"] = report.f_values;
  doc["min_F"] = report.min_f;
  doc["margin"] = report.margin;
  doc["tol"] = report.tol;
  doc["passed"] = report.passed;
  return doc;
}

}  // namespace tomo
