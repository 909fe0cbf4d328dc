#pragma once

#include <complex>
#include <vector>

#include "tcdyn/model.hpp"

namespace tcdyn {

/// Phase term theta_k of a revival signal. HalfAngle is arctan(pi k f), the
/// argument of the complex Gaussian prefactor (1 + i pi k f)^{-1/2} up to the
/// factor -1/2; Literal is arctan((pi k f)^2).
enum class ThetaConvention { HalfAngle, Literal };

/// Dimensionless revival parameters for one carrier frequency omega0_eff
/// (omega0 for S(t, omega0), 2 omega0 for S(t, 2 omega0)).
struct RevivalParams {
  double x = 0.0;          // beta^2
  double f = 0.0;          // |alpha|^2 x
  double alpha_abs = 0.0;  // |alpha|
  double omega0_eff = 0.0;

  /// Throws InvalidArgument when beta == 0 or omega0_eff <= 0.
  static RevivalParams make(double alpha_abs, const ModelParams& params, double omega0_eff);

  /// tau = omega0_eff t e^{-x/2}.
  double tau(double t) const;
  /// Inverse of tau().
  double time_of(double tau) const;
  /// tau_k = 2 pi k (1 + f/2) / x.
  double tau_k(int k) const;
  /// h_k = (1 + (pi k f)^2)^{-1/4}.
  double height(int k) const;
  /// delta tau_0 = 1 / (|alpha| x).
  double width0() const;
  /// delta tau_k = delta tau_0 sqrt(1 + (pi k f)^2).
  double width(int k) const;
  double theta(int k, ThetaConvention conv = ThetaConvention::HalfAngle) const;
};

/// Gaussian envelope of the k-th term at scaled time tau (peak value 1).
double revival_gaussian(const RevivalParams& rp, int k, double tau);

/// Simplified log-amplitude -A (y - 2 pi k (1+f/2))^2 / (2 (1 + (pi k f)^2)), y = tau x.
double phi_re_simplified(const RevivalParams& rp, int k, double tau);
/// Unsimplified log-amplitude
///   A/(2(1+(yf/2)^2)) (1 - u^2 + y f u) - A/2,  u = y + y x/4 - 2 pi k.
double phi_re_full(const RevivalParams& rp, int k, double tau);
/// Phi_Im = -theta/2 + (y (1+f) - 2 pi k f) / x.
double phi_im(const RevivalParams& rp, int k, double tau, ThetaConvention conv = ThetaConvention::HalfAngle);

/// S-bar_k(t, omega0_eff) in its simplified form.
std::complex<double> s_bar_k(int k, double t, double omega0_eff, double alpha_abs, const ModelParams& params,
                             ThetaConvention conv = ThetaConvention::HalfAngle);

/// Smallest k with tau_k beyond the horizon, plus two guard terms.
int default_k_max(const RevivalParams& rp, double t_horizon);

/// Re sum_{k=0}^{k_max} S-bar_k. k_max < 0 selects default_k_max(t).
double s_analytic(double t, double omega0_eff, double alpha_abs, const ModelParams& params, int k_max = -1,
                  ThetaConvention conv = ThetaConvention::HalfAngle);
std::vector<double> s_analytic(const TimeGrid& grid, double omega0_eff, double alpha_abs, const ModelParams& params,
                               int k_max = -1, ThetaConvention conv = ThetaConvention::HalfAngle);

/// sum_k h_k gaussian_k(tau): the analytic envelope of S(t, omega0_eff).
double s_analytic_envelope(double t, double omega0_eff, double alpha_abs, const ModelParams& params, int k_max = -1);

struct RevivalSignal {
  int k = 0;
  double height = 1.0;
  double tau_center = 0.0;
  double t_center = 0.0;  // in 1/omega
  double width_tau = 0.0;
};

struct RevivalSchedule {
  std::vector<RevivalSignal> signals;
  double alpha_beta = 0.0;
  bool constraint_ok = true;  // |alpha beta| <= 0.3
};

/// Revival centers t_k = 2 pi k (1 + |alpha beta|^2/2) / (omega0 beta^2), heights and
/// widths for k = 0..k_max. The |alpha beta| <= 0.3 constraint is reported in
/// the result; with strict it throws GuardViolation instead.
RevivalSchedule revival_schedule(double alpha_abs, const ModelParams& params, int k_max, bool strict = false);

enum class AsymptoticForm { Printed, Derivative };

struct AsymptoticRevival {
  double t_rev = 0.0;        // in 1/omega; +inf when beyond_horizon
  double rate = 0.0;         // (omega0 t_rev / 2 pi)^{-1}
  bool beyond_horizon = false;
};

/// Large-|alpha| first-revival time from the asymptotic Laguerre form.
///   Printed:    rate = |cos(2|ab| - pi/4)/sqrt(pi |a^5 b|) + sqrt(|b|/(pi |a|^3)) sin(2|ab| - pi/4)|
///   Derivative: the cos term carries an extra 1/4, the exact n-derivative of the asymptotic L_n.
/// Throws GuardViolation when |alpha| < 5.
AsymptoticRevival revival_time_asymptotic(double alpha_abs, const ModelParams& params,
                                          AsymptoticForm form = AsymptoticForm::Printed,
                                          double min_rate = 1e-12);

/// delta Omega(nbar) omega = omega0 e^{-beta^2/2} |L_{nbar+1}(beta^2) - L_{nbar}(beta^2)|.
double rabi_difference(int n_bar, const ModelParams& params);

}  // namespace tcdyn
