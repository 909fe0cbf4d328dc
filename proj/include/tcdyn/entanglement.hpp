#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tcdyn/exact.hpp"
#include "tcdyn/model.hpp"
#include "tcdyn/state.hpp"

namespace tcdyn {

/// Two-qubit density matrix in the z basis ordered (|ee>, |eg>, |ge>, |gg>),
/// with sigma_z|e> = |e> and sigma_z|g> = -|g>.
class TwoQubitDensity {
 public:
  /// Throws InvalidArgument unless Hermitian to 1e-12 and of unit trace to
  /// 1e-10; throws NotPositiveSemidefinite when an eigenvalue is below -1e-10.
  explicit TwoQubitDensity(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }
  double purity() const;
  /// Eigenvalues clipped at 0, ascending.
  Eigen::Vector4d eigenvalues() const;

 private:
  Eigen::Matrix4cd m_;
};

/// Columns are the z-basis components of |1,1>, |1,0>, |1,-1>, |0,0>, built
/// from |+-> = (|e> +- |g>)/sqrt2 on each qubit.
Eigen::Matrix4cd spin_to_z_basis();

/// (|1,1> + |1,-1>)/sqrt2 (x) |alpha>. Requires K = 2.
JointState bell_coherent_initial(double alpha_abs, const ModelParams& params, const FockTruncation& trunc);

/// Partial trace over the oscillator, mapped to the z basis.
TwoQubitDensity reduce_to_qubits(const JointState& state);
TwoQubitDensity reduce_to_qubits(const Eigen::VectorXcd& amplitudes, int fock_dim);

/// Wootters concurrence from the spectrum of sqrt(rho) rho~ sqrt(rho),
/// rho~ = (sy x sy) rho* (sy x sy).
double concurrence_exact(const TwoQubitDensity& rho);

/// True when every entry off the diagonal and anti-diagonal is <= tol in modulus.
bool is_x_shaped(const TwoQubitDensity& rho, double tol = 1e-8);

/// 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)). Throws NotXShaped.
double concurrence_x(const TwoQubitDensity& rho);

/// sum_k h_k exp(-(2 tau - tau_k)^2 |alpha beta^2|^2 / (2 (1 + (pi k f)^2))),
/// i.e. the S(t, 2 omega0) revival envelope.
double concurrence_analytic_envelope(double t, double alpha_abs, const ModelParams& params, int k_max = -1);

/// Reduced state when |N_0> is identified with |N_{+-1}>:
///   rho = (|ee><ee| + |gg><gg|)/2 + (c |ee><gg| + h.c.)/2,
///   c = sum_N P(N) e^{-i (E+_N - E-_N) t},  E+ - E- = 2 omega0 e^{-x/2} L_N(x).
TwoQubitDensity small_beta_density(double t, double alpha_abs, const ModelParams& params);

/// |c| of small_beta_density on a grid (phasor kernel).
std::vector<double> small_beta_concurrence(const TimeGrid& grid, double alpha_abs, const ModelParams& params);

struct ConcurrenceSeries {
  std::vector<double> times;
  std::vector<double> exact;
  std::vector<double> x_shortcut;  // concurrence_x of small_beta_density
  std::vector<double> analytic_envelope;
  std::vector<double> purity;
};

/// Exact evolution of bell_coherent_initial on `grid`, with the small-beta and
/// envelope predictions on the same grid.
ConcurrenceSeries concurrence_series(const Propagator& prop, double alpha_abs, const TimeGrid& grid);

}  // namespace tcdyn
