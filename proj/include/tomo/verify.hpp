#pragma once

#include <string>
#include <vector>

namespace tomo {

struct CheckResult {
  std::string name;
  double margin;  ///< worst inequality margin, or worst identity residual
  double tol;
  bool passed;
};

struct VerifyOptions {
  bool strict = false;  ///< halve grid steps, tighten verdicts to 1e-5
  bool tamper = false;  ///< negative control: corrupt one density by 0.9
};

/// Runs the built-in relation suite over the shipped state catalog:
/// normalization, homogeneity, Fresnel scaling, additivity, the pairwise and
/// dressed entropic inequalities, radial independence, multimode bounds, the
/// ground-state equalities, minimum-uncertainty products, and correlated
/// entropy sums.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace tomo
