#pragma once

#include <complex>
#include <memory>

#include <Eigen/Dense>

#include "tcdyn/model.hpp"
#include "tcdyn/spin.hpp"

namespace tcdyn {

using cplx = std::complex<double>;

/// Oscillator amplitudes on a truncated basis plus the norm lost to truncation
/// before renormalization.
struct FockVector {
  Eigen::VectorXcd amplitudes;
  double norm_deficit = 0.0;
};

/// Closed-form coherent amplitudes e^{-|a|^2/2} a^N / sqrt(N!), N <= n_max,
/// evaluated in log space; not renormalized.
Eigen::VectorXcd coherent_amplitudes(cplx alpha, const FockTruncation& trunc);

/// D(displacement)|alpha> on the truncated basis: coherent amplitudes, then
/// the exact displacement matrix, then renormalization. Throws
/// TruncationTooSmall when the pre-normalization deficit exceeds 1e-6.
FockVector coherent_state(cplx alpha, double displacement, const FockTruncation& trunc);

/// Normalized amplitude vector over (spin label) x (Fock index); the joint
/// index is spin_index * (n_max + 1) + n.
class JointState {
 public:
  /// Throws InvalidArgument on a dimension mismatch or when |norm - 1| > 1e-10.
  JointState(Eigen::VectorXcd amplitudes, std::shared_ptr<const SpinBasis> basis, ModelParams params,
             FockTruncation truncation);

  /// |spin> (x) |fock>; both factors are used as given, then the product is
  /// checked for unit norm.
  static JointState product(const Eigen::VectorXcd& spin, const Eigen::VectorXcd& fock,
                            std::shared_ptr<const SpinBasis> basis, const ModelParams& params,
                            const FockTruncation& truncation);

  /// |j,m> (x) |fock>.
  static JointState product(int two_j, int two_m, const Eigen::VectorXcd& fock,
                            std::shared_ptr<const SpinBasis> basis, const ModelParams& params,
                            const FockTruncation& truncation);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  const SpinBasis& basis() const { return *basis_; }
  const std::shared_ptr<const SpinBasis>& basis_ptr() const { return basis_; }
  const ModelParams& params() const { return params_; }
  const FockTruncation& truncation() const { return truncation_; }

  Eigen::Index dim() const { return amplitudes_.size(); }
  Eigen::Index index(int spin_index, int n) const { return spin_index * truncation_.dim() + n; }
  /// Oscillator amplitudes attached to one spin label.
  Eigen::VectorXcd fock_block(int spin_index) const;

 private:
  Eigen::VectorXcd amplitudes_;
  std::shared_ptr<const SpinBasis> basis_;
  ModelParams params_;
  FockTruncation truncation_;
};

struct TruncationReport {
  double tail_mass = 0.0;  // sum_{N > n_max - 10} |amplitude|^2
  bool flagged = false;    // tail_mass > threshold
  double threshold = 1e-10;
};

TruncationReport check_truncation(const JointState& state, double threshold = 1e-10);
TruncationReport check_truncation(const Eigen::VectorXcd& fock, double threshold = 1e-10);

}  // namespace tcdyn
