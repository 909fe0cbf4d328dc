#include "tcdyn/revival.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tcdyn/errors.hpp"
#include "tcdyn/special.hpp"

namespace tcdyn {

namespace {
constexpr double kPi = std::numbers::pi;
}

RevivalParams RevivalParams::make(double alpha_abs, const ModelParams& params, double omega0_eff) {
  if (params.beta() == 0.0) throw InvalidArgument("revival analytics need beta != 0");
  if (!(omega0_eff > 0.0)) throw InvalidArgument("revival analytics need omega0 > 0");
  if (!(alpha_abs >= 0.0)) throw InvalidArgument("|alpha| must be >= 0");
  RevivalParams rp;
  rp.x = params.beta_squared();
  rp.alpha_abs = alpha_abs;
  rp.f = alpha_abs * alpha_abs * rp.x;
  rp.omega0_eff = omega0_eff;
  return rp;
}

double RevivalParams::tau(double t) const { return omega0_eff * t * std::exp(-0.5 * x); }
double RevivalParams::time_of(double tau_value) const { return tau_value / (omega0_eff * std::exp(-0.5 * x)); }
double RevivalParams::tau_k(int k) const { return 2.0 * kPi * k * (1.0 + 0.5 * f) / x; }

double RevivalParams::height(int k) const {
  const double p = kPi * k * f;
  return std::pow(1.0 + p * p, -0.25);
}

double RevivalParams::width0() const { return 1.0 / (alpha_abs * x); }

double RevivalParams::width(int k) const {
  const double p = kPi * k * f;
  return width0() * std::sqrt(1.0 + p * p);
}

double RevivalParams::theta(int k, ThetaConvention conv) const {
  const double p = kPi * k * f;
  return conv == ThetaConvention::HalfAngle ? std::atan(p) : std::atan(p * p);
}

double revival_gaussian(const RevivalParams& rp, int k, double tau) {
  const double p = kPi * k * rp.f;
  const double d = tau - rp.tau_k(k);
  return std::exp(-d * d * rp.alpha_abs * rp.alpha_abs * rp.x * rp.x / (2.0 * (1.0 + p * p)));
}

double phi_re_simplified(const RevivalParams& rp, int k, double tau) {
  const double y = tau * rp.x;
  const double p = kPi * k * rp.f;
  const double d = y - 2.0 * kPi * k * (1.0 + 0.5 * rp.f);
  return -rp.alpha_abs * rp.alpha_abs * d * d / (2.0 * (1.0 + p * p));
}

double phi_re_full(const RevivalParams& rp, int k, double tau) {
  const double a2 = rp.alpha_abs * rp.alpha_abs;
  const double y = tau * rp.x;
  const double u = y + y * rp.x / 4.0 - 2.0 * kPi * k;
  const double q = 0.5 * y * rp.f;
  return a2 / (2.0 * (1.0 + q * q)) * (1.0 - u * u + y * rp.f * u) - 0.5 * a2;
}

double phi_im(const RevivalParams& rp, int k, double tau, ThetaConvention conv) {
  const double y = tau * rp.x;
  return -0.5 * rp.theta(k, conv) + (y * (1.0 + rp.f) - 2.0 * kPi * k * rp.f) / rp.x;
}

namespace {

std::complex<double> s_bar_term(const RevivalParams& rp, int k, double tau, ThetaConvention conv) {
  return rp.height(k) * revival_gaussian(rp, k, tau) * std::polar(1.0, phi_im(rp, k, tau, conv));
}

}  // namespace

std::complex<double> s_bar_k(int k, double t, double omega0_eff, double alpha_abs, const ModelParams& params,
                             ThetaConvention conv) {
  if (k < 0) throw InvalidArgument("revival index must be >= 0");
  const RevivalParams rp = RevivalParams::make(alpha_abs, params, omega0_eff);
  return s_bar_term(rp, k, rp.tau(t), conv);
}

int default_k_max(const RevivalParams& rp, double t_horizon) {
  const double tau_h = rp.tau(t_horizon);
  int k = 0;
  while (rp.tau_k(k) <= tau_h) ++k;
  return k + 2;
}

double s_analytic(double t, double omega0_eff, double alpha_abs, const ModelParams& params, int k_max,
                  ThetaConvention conv) {
  const RevivalParams rp = RevivalParams::make(alpha_abs, params, omega0_eff);
  const int km = k_max < 0 ? default_k_max(rp, t) : k_max;
  const double tau = rp.tau(t);
  double s = 0.0;
  for (int k = 0; k <= km; ++k) s += s_bar_term(rp, k, tau, conv).real();
  return s;
}

std::vector<double> s_analytic(const TimeGrid& grid, double omega0_eff, double alpha_abs, const ModelParams& params,
                               int k_max, ThetaConvention conv) {
  const RevivalParams rp = RevivalParams::make(alpha_abs, params, omega0_eff);
  const int km = k_max < 0 ? default_k_max(rp, grid.stop()) : k_max;
  std::vector<double> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double tau = rp.tau(grid.at(i));
    double s = 0.0;
    for (int k = 0; k <= km; ++k) s += s_bar_term(rp, k, tau, conv).real();
    out[i] = s;
  }
  return out;
}

double s_analytic_envelope(double t, double omega0_eff, double alpha_abs, const ModelParams& params, int k_max) {
  const RevivalParams rp = RevivalParams::make(alpha_abs, params, omega0_eff);
  const int km = k_max < 0 ? default_k_max(rp, t) : k_max;
  const double tau = rp.tau(t);
  double s = 0.0;
  for (int k = 0; k <= km; ++k) s += rp.height(k) * revival_gaussian(rp, k, tau);
  return s;
}

RevivalSchedule revival_schedule(double alpha_abs, const ModelParams& params, int k_max, bool strict) {
  if (k_max < 0) throw InvalidArgument("k_max must be >= 0");
  const RevivalParams rp = RevivalParams::make(alpha_abs, params, params.omega0_ratio());
  RevivalSchedule out;
  out.alpha_beta = alpha_abs * std::abs(params.beta());
  out.constraint_ok = out.alpha_beta <= 0.3;
  if (strict && !out.constraint_ok)
    throw GuardViolation("revival schedule needs |alpha beta| <= 0.3, got " + std::to_string(out.alpha_beta));
  for (int k = 0; k <= k_max; ++k) {
    RevivalSignal s;
    s.k = k;
    s.height = rp.height(k);
    s.tau_center = rp.tau_k(k);
    s.t_center = 2.0 * kPi * k * (1.0 + 0.5 * rp.f) / (params.omega0_ratio() * rp.x);
    s.width_tau = rp.width(k);
    out.signals.push_back(s);
  }
  return out;
}

AsymptoticRevival revival_time_asymptotic(double alpha_abs, const ModelParams& params, AsymptoticForm form,
                                          double min_rate) {
  if (alpha_abs < 5.0) throw GuardViolation("asymptotic revival time needs |alpha| >= 5");
  if (params.beta() == 0.0) throw InvalidArgument("asymptotic revival time needs beta != 0");
  const double a = alpha_abs;
  const double b = std::abs(params.beta());
  const double phase = 2.0 * a * b - 0.25 * kPi;
  const double cos_coeff = form == AsymptoticForm::Printed ? 1.0 : 0.25;
  AsymptoticRevival r;
  r.rate = std::abs(cos_coeff * std::cos(phase) / std::sqrt(kPi * std::pow(a, 5) * b) +
                    std::sqrt(b / (kPi * a * a * a)) * std::sin(phase));
  if (r.rate < min_rate) {
    r.beyond_horizon = true;
    r.t_rev = std::numeric_limits<double>::infinity();
    return r;
  }
  r.t_rev = 2.0 * kPi / (params.omega0_ratio() * r.rate);
  return r;
}

double rabi_difference(int n_bar, const ModelParams& params) {
  if (n_bar < 0) throw InvalidArgument("n_bar must be >= 0");
  const double x = params.beta_squared();
  return params.omega0_ratio() * std::exp(-0.5 * x) * std::abs(laguerre(n_bar + 1, x) - laguerre(n_bar, x));
}

}  // namespace tcdyn
