#include <cmath>
#include <limits>

#include "tcdyn/adiabatic.hpp"
#include "tcdyn/harness.hpp"

namespace tcdyn::harness {

const char* to_string(Region r) {
  switch (r) {
    case Region::Region1: return "Region1";
    case Region::Region2: return "Region2";
    case Region::Region3: return "Region3";
    case Region::None: return "None";
  }
  return "?";
}

ValidityReport classify_validity(const ModelParams& params, double alpha_abs, bool strict) {
  ValidityReport r;
  const double w0 = params.omega0_ratio();
  const double b = std::abs(params.beta());

  r.omega0_ratio = {w0, 0.25, w0 <= 0.25, false};
  r.alpha_large = {alpha_abs, 2.0, alpha_abs >= 2.0, false};
  r.beta_bound = {b, 0.2, b <= 0.2, false};
  r.alphabeta_small = {alpha_abs * b, 0.3, alpha_abs * b <= 0.3, true};

  const int n_bar = static_cast<int>(std::lround(alpha_abs * alpha_abs));
  const double ratio = params.beta_squared() > 0.0 ? std::abs(rabi_frequency(n_bar, params)) / params.beta_squared()
                                                   : std::numeric_limits<double>::infinity();
  r.rabi_over_beta2 = {ratio, 10.0, ratio >= 10.0, true};

  const bool hard = r.omega0_ratio.ok && r.alpha_large.ok && r.beta_bound.ok;
  const bool soft = r.rabi_over_beta2.ok && r.alphabeta_small.ok;
  r.region1 = hard && (!strict || soft);
  r.region2 = w0 <= 0.25 && b <= 0.25;
  const double d = std::abs(w0 - 1.0);
  r.region3 = d <= 0.25 && b <= 0.2 * (1.0 - d / 0.25);

  if (r.region1) r.region = Region::Region1;
  else if (r.region2) r.region = Region::Region2;
  else if (r.region3) r.region = Region::Region3;

  if (!r.rabi_over_beta2.ok)
    r.warnings.push_back("Omega_nbar/beta^2 = " + format_number(ratio) + " is below 10");
  if (!r.alphabeta_small.ok)
    r.warnings.push_back("|alpha beta| = " + format_number(alpha_abs * b) + " exceeds 0.3");
  return r;
}

}  // namespace tcdyn::harness
