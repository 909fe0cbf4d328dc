#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tcdyn/model.hpp"

namespace tcdyn {

/// Adiabatic blocks of one collective-spin sector: for every manifold N in
/// [n_first, n_last] a (2j+1)x(2j+1) real symmetric matrix over |j,m>|N_m>
/// (descending m) with diagonal N - m^2 beta^2 and, for |m - m'| = 1,
/// off-diagonal omega0 <N_m|N_m'> <j,m|S_z|j,m'>.
struct SpinSectorModel {
  int n_qubits = 0;
  int two_j = 0;
  int multiplicity = 1;
  int n_first = 0;
  std::vector<Eigen::MatrixXd> blocks;
  std::vector<Eigen::VectorXd> energies;
  std::vector<Eigen::MatrixXd> vectors;

  int dim() const { return two_j + 1; }
  int n_last() const { return n_first + static_cast<int>(blocks.size()) - 1; }
  const Eigen::MatrixXd& block(int n) const;
};

/// Builds blocks for N in [n_first, n_last]. Throws GuardViolation unless
/// (K/2)^2 beta^2 <= 0.1, InvalidArgument for an unreachable j.
SpinSectorModel sector_blocks(int n_qubits, int two_j, int n_first, int n_last, const ModelParams& params);

/// Coefficients c(N - n_first, m_index) evolved to time t block by block.
/// Throws BasisMismatch when the coefficient shape does not match the sector.
Eigen::MatrixXcd evolve_adiabatic(const Eigen::MatrixXcd& coeffs, const SpinSectorModel& sector, double t);

/// Coefficients of |j,m> (x) D(-m beta)|alpha> in the displaced basis
/// |j,m>|N_m>: Poisson amplitudes placed in column m_index.
Eigen::MatrixXcd coherent_sector_coefficients(const SpinSectorModel& sector, int two_m, double alpha_abs);

/// Population of |j, two_m/2> in coefficient matrix form.
double sector_population(const Eigen::MatrixXcd& coeffs, const SpinSectorModel& sector, int two_m);

struct AdiabaticReport {
  int n_qubits = 0;
  int joint_dim = 0;
  double max_error = 0.0;
  double rms_error = 0.0;
  bool regime_valid = false;  // omega0 <= 0.25, |beta| <= 0.2, (K/2)^2 beta^2 <= 0.1
  std::vector<double> times;
  std::vector<double> exact;
  std::vector<double> adiabatic;
};

/// Population of |K/2, -K/2> for the initial state |K/2, -K/2> (x) D(K beta/2)|alpha>,
/// from exact diagonalization and from the adiabatic blocks, over [0, horizon].
/// Throws InvalidArgument for K > 4.
AdiabaticReport exact_vs_adiabatic_report(int n_qubits, const ModelParams& params, double alpha_abs, double horizon,
                                          std::size_t samples = 2001);

}  // namespace tcdyn
