#pragma once

#include <string>
#include <vector>

namespace glogis::cli {

struct VerifyOptions {
  // Test hook: conjugates the phase inside the shift-identity check so the
  // suite demonstrably catches a wrong sign.
  bool flip_shift_sign = false;
};

struct CheckResult {
  std::string name;
  double max_residual;
  double threshold;
  bool pass;
};

/// Runs the identity/oracle residual suite: the sech^2 reduction, closed
/// form vs direct quadrature, the u-substitution chain, shift identity,
/// polynomial relation, Gamma recurrence/reflection, the tabulated-integral
/// spot check and DC normalization.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace glogis::cli
