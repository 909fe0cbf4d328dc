#pragma once

#include <Eigen/Dense>

namespace tcdyn {

/// Dense complex matrix over a joint (spin x Fock) or spin-only basis.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  bool hermitian = false;

  /// max |H - H^dag| entrywise.
  double hermiticity_error() const;
  /// True when every imaginary part is exactly zero.
  bool is_real() const;
  Eigen::Index dim() const { return entries.rows(); }
};

}  // namespace tcdyn
