#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tcdyn/hamiltonian.hpp"
#include "tcdyn/state.hpp"

namespace tcdyn {

/// Eigendecomposition H = V diag(E) V^dag of a joint-space Hamiltonian, used
/// to propagate states to arbitrary times without step integration.
class Propagator {
 public:
  Propagator(const OperatorMatrix& hamiltonian, std::shared_ptr<const SpinBasis> basis, ModelParams params,
             FockTruncation truncation);

  static Propagator build(const ModelParams& params, const FockTruncation& trunc, HamiltonianVariant variant,
                          std::shared_ptr<const SpinBasis> basis);
  static Propagator build(const ModelParams& params, const FockTruncation& trunc,
                          HamiltonianVariant variant = HamiltonianVariant::Full);

  const Eigen::VectorXd& eigenvalues() const { return energies_; }
  Eigen::MatrixXcd eigenvectors() const;
  bool real_eigenvectors() const { return vec_im_.size() == 0; }

  const SpinBasis& basis() const { return *basis_; }
  const std::shared_ptr<const SpinBasis>& basis_ptr() const { return basis_; }
  const ModelParams& params() const { return params_; }
  const FockTruncation& truncation() const { return truncation_; }

  /// max |H - V diag(E) V^dag|.
  double reconstruction_residual(const OperatorMatrix& hamiltonian) const;
  /// max |V^dag V - 1|.
  double unitarity_residual() const;

  /// Coefficients V^dag psi in the eigenbasis. Throws BasisMismatch when the
  /// state's basis, truncation or parameters differ from the propagator's.
  Eigen::VectorXcd to_eigenbasis(const JointState& state) const;

  /// psi(t) amplitudes from eigenbasis coefficients; `out` is resized.
  void amplitudes_at(const Eigen::VectorXcd& coeffs, double t, Eigen::VectorXcd& out) const;

  JointState evolve(const JointState& state0, double t) const;
  std::vector<JointState> evolve(const JointState& state0, std::span<const double> times) const;

  /// Calls fn(i, amplitudes of psi(times[i])) for every sample; samples are
  /// distributed over the worker pool, so fn must be safe to call
  /// concurrently for distinct i.
  void for_each_sample(const JointState& state0, std::span<const double> times,
                       const std::function<void(std::size_t, const Eigen::VectorXcd&)>& fn) const;

 private:
  std::shared_ptr<const SpinBasis> basis_;
  ModelParams params_;
  FockTruncation truncation_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vec_re_;
  Eigen::MatrixXd vec_im_;  // empty when H is real symmetric
};

enum class TimeUnit { Raw, ScaledTau };

/// Sampled observables sharing one time axis.
struct TimeSeries {
  std::vector<double> times;
  TimeUnit unit = TimeUnit::Raw;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> columns;

  explicit TimeSeries(std::vector<double> t, TimeUnit u = TimeUnit::Raw);
  /// Throws InvalidArgument when the column length differs from times.
  void add(std::string label, std::vector<double> values);
  const std::vector<double>& column(const std::string& label) const;
};

struct Observables {
  std::vector<double> populations;  // per spin label of the basis
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  std::complex<double> a;
  double number = 0.0;
  double quadrature_sz = 0.0;  // <(a + a^dag) S_z>
  double quadrature_sy = 0.0;  // <(a + a^dag) S_y>
};

/// Expectation values of a normalized state. Build one ObservableSet per basis
/// and reuse it; the joint operators are dense.
class ObservableSet {
 public:
  ObservableSet(const SpinBasis& basis, const FockTruncation& trunc);
  Observables measure(const JointState& state) const;
  Observables measure(const Eigen::VectorXcd& amplitudes) const;

 private:
  int spin_dim_;
  int fock_dim_;
  JointOperators ops_;
};

Observables observables(const JointState& state);

/// Population of spin label `spin_index`, summed over the oscillator.
double spin_population(const Eigen::VectorXcd& amplitudes, int spin_index, int fock_dim);

struct EhrenfestResiduals {
  double sx = 0.0;  // max |d<S_x>/dt + w0 <S_y>|
  double sy = 0.0;  // max |d<S_y>/dt - w0 <S_x> + beta <(a+a^dag) S_z>|
  double sz = 0.0;  // max |d<S_z>/dt - beta <(a+a^dag) S_y>|
};

/// Central-difference residuals of the three Bloch-type equations on a
/// uniform grid. Throws GridTooCoarse when omega*dt > 0.01 or the grid is not
/// uniform.
EhrenfestResiduals ehrenfest_residuals(std::span<const Observables> series, std::span<const double> times,
                                       const ModelParams& params);

/// |<target|state>|^2.
double probability_in(const JointState& state, const JointState& target);

}  // namespace tcdyn
