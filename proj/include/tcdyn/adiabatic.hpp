#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "tcdyn/model.hpp"

namespace tcdyn {

/// Omega_N = (omega0/omega) e^{-beta^2/2} L_N(beta^2) / sqrt(2), the
/// intra-manifold coupling of the two-qubit j=1 block.
double rabi_frequency(int n, const ModelParams& params);

enum class ManifoldMode { ExactDiag, SimplifiedClosedForm };

/// 3x3 block H_N over (|1,1>, |1,0>, |1,-1>) x |N_m> and its eigensystem.
/// Eigenvalues are ordered (E^-, E^0, E^+); column i of `vectors` belongs to
/// energies(i).
struct ManifoldSystem {
  int n = 0;
  double rabi = 0.0;
  Eigen::Matrix3d h;
  Eigen::Vector3d energies;
  Eigen::Matrix3d vectors;
  ManifoldMode mode = ManifoldMode::ExactDiag;

  /// max_i |H v_i - E_i v_i|.
  double residual() const;
};

/// Closed-form E^0 = N - beta^2, E^+- = (2N - beta^2 +- sqrt(8 Omega^2 + beta^4)) / 2.
Eigen::Vector3d manifold_energies_closed_form(int n, const ModelParams& params);

/// SimplifiedClosedForm drops beta^4 against Omega_N: E^+- = N - beta^2/2 +- sqrt2 |Omega_N|,
/// vectors (1, +-sqrt2 sgn Omega, 1)/2 and (1, 0, -1)/sqrt2. It throws GuardViolation
/// unless |Omega_N| >= 10 beta^2.
ManifoldSystem manifold(int n, const ModelParams& params, ManifoldMode mode = ManifoldMode::ExactDiag);

/// True when the simplified eigensystem is admissible for manifold N.
bool simplified_regime(int n, const ModelParams& params);

enum class InitialSpin { MPlus1, MMinus1, MZero };

/// Probability of staying in the initial |1,m>|N_m> state, printed closed forms:
///   P_{1,+-1} = 3/8 + cos(sqrt2 Omega t)/2 + cos(2 sqrt2 Omega t)/8
///   P_{1,0}   = 1/2 + cos(4 sqrt2 Omega t)/2
/// Throws GuardViolation outside simplified_regime().
double prob_number_state(InitialSpin initial, int n, const ModelParams& params, double t);

/// Same survival probability from the exactly diagonalized 3x3 block.
double prob_number_state_manifold(InitialSpin initial, int n, const ModelParams& params, double t);

/// Poisson weights P(N) = e^{-A} A^N / N!, A = |alpha|^2, kept from N = 0 up to
/// the first N where the cumulative mass reaches 1 - 1e-12.
class PoissonWeights {
 public:
  explicit PoissonWeights(double alpha_abs2, double tail = 1e-12);

  double alpha_abs2() const { return alpha_abs2_; }
  const std::vector<double>& weights() const { return weights_; }
  int n_last() const { return static_cast<int>(weights_.size()) - 1; }
  double total() const;

 private:
  double alpha_abs2_;
  std::vector<double> weights_;
};

/// Survival-probability decomposition sum_j w_j cos(f_j t), the form every
/// Poisson-summed engine reduces to; evaluated by the phasor kernel.
struct CosineSeries {
  std::vector<double> weights;
  std::vector<double> freqs;

  void add(double weight, double freq);
  double at(double t) const;
  std::vector<double> on_grid(const TimeGrid& grid) const;
};

/// Terms of S(t, omega0_eff) = sum_N P(N) cos(omega0_eff <N_1|N_0> t).
/// Throws TruncationTooSmall when `trunc` is given and cannot hold the
/// Poisson support.
CosineSeries s_sum_series(double omega0_eff, double alpha_abs, const ModelParams& params,
                          std::optional<FockTruncation> trunc = std::nullopt);

double s_sum_exact(double t, double omega0_eff, double alpha_abs, const ModelParams& params,
                   std::optional<FockTruncation> trunc = std::nullopt);
std::vector<double> s_sum_exact(const TimeGrid& grid, double omega0_eff, double alpha_abs,
                                 const ModelParams& params, std::optional<FockTruncation> trunc = std::nullopt);

/// P_{1,-1}(alpha, t) for |1,-1> D(beta)|alpha>. SimplifiedClosedForm is
/// 3/8 + S(t,w0)/2 + S(t,2w0)/8; ExactDiag sums the exact 3x3 manifold
/// survival probabilities over P(N).
CosineSeries prob_coherent_two_qubit_series(double alpha_abs, const ModelParams& params,
                                            ManifoldMode mode = ManifoldMode::SimplifiedClosedForm);
double prob_coherent_two_qubit(double t, double alpha_abs, const ModelParams& params,
                               ManifoldMode mode = ManifoldMode::SimplifiedClosedForm);
std::vector<double> prob_coherent_two_qubit(const TimeGrid& grid, double alpha_abs, const ModelParams& params,
                                            ManifoldMode mode = ManifoldMode::SimplifiedClosedForm);

/// P_{1/2,-1/2}(alpha, t) = (1 + S(t, w0)) / 2 for |1/2,-1/2> D(beta/2)|alpha>.
/// The 2x2 manifold is solved exactly by this form, so there is no mode.
CosineSeries prob_coherent_single_qubit_series(double alpha_abs, const ModelParams& params);
double prob_coherent_single_qubit(double t, double alpha_abs, const ModelParams& params);
std::vector<double> prob_coherent_single_qubit(const TimeGrid& grid, double alpha_abs, const ModelParams& params);

}  // namespace tcdyn
