#include "tcdyn/hamiltonian.hpp"

#include <cmath>

namespace tcdyn {

namespace {

using Eigen::MatrixXcd;

// spin (x) fock with joint index s * fock_dim + n.
MatrixXcd kron(const MatrixXcd& spin, const MatrixXcd& fock) {
  const Eigen::Index fs = fock.rows();
  MatrixXcd out = MatrixXcd::Zero(spin.rows() * fs, spin.cols() * fs);
  for (Eigen::Index j = 0; j < spin.cols(); ++j)
    for (Eigen::Index i = 0; i < spin.rows(); ++i)
      if (spin(i, j) != 0.0) out.block(i * fs, j * fs, fs, fs) = spin(i, j) * fock;
  return out;
}

MatrixXcd annihilation(const FockTruncation& trunc) {
  MatrixXcd a = MatrixXcd::Zero(trunc.dim(), trunc.dim());
  for (int n = 1; n < trunc.dim(); ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

const char* to_string(HamiltonianVariant v) {
  switch (v) {
    case HamiltonianVariant::Full: return "Full";
    case HamiltonianVariant::RWA: return "RWA";
    case HamiltonianVariant::Degenerate: return "Degenerate";
  }
  return "?";
}

JointOperators joint_operators(const SpinBasis& basis, const FockTruncation& trunc) {
  const auto spin = spin_operators(basis);
  const MatrixXcd a = annihilation(trunc);
  const MatrixXcd x = a + a.adjoint();
  const MatrixXcd id_f = MatrixXcd::Identity(trunc.dim(), trunc.dim());
  const MatrixXcd id_s = MatrixXcd::Identity(basis.dim(), basis.dim());
  JointOperators ops;
  ops.a = OperatorMatrix{kron(id_s, a), false};
  ops.number = OperatorMatrix{kron(id_s, a.adjoint() * a), true};
  ops.sx = OperatorMatrix{kron(spin.sx.entries, id_f), true};
  ops.sy = OperatorMatrix{kron(spin.sy.entries, id_f), true};
  ops.sz = OperatorMatrix{kron(spin.sz.entries, id_f), true};
  ops.quadrature_sz = OperatorMatrix{kron(spin.sz.entries, x), true};
  ops.quadrature_sy = OperatorMatrix{kron(spin.sy.entries, x), true};
  return ops;
}

OperatorMatrix build_hamiltonian(const ModelParams& params, const FockTruncation& trunc,
                                 HamiltonianVariant variant, const SpinBasis& basis) {
  const auto spin = spin_operators(basis);
  const MatrixXcd a = annihilation(trunc);
  const MatrixXcd id_f = MatrixXcd::Identity(trunc.dim(), trunc.dim());
  const MatrixXcd id_s = MatrixXcd::Identity(basis.dim(), basis.dim());
  const double w0 = variant == HamiltonianVariant::Degenerate ? 0.0 : params.omega0_ratio();
  const double beta = params.beta();

  MatrixXcd h = kron(id_s, a.adjoint() * a);
  if (w0 != 0.0) h += w0 * kron(spin.sz.entries, id_f);
  if (variant == HamiltonianVariant::RWA) {
    // S_+ = S_x + i S_y raises S_z; keep (beta/2)(a S_+ + a^dag S_-).
    const std::complex<double> i_unit(0.0, 1.0);
    const MatrixXcd s_plus = spin.sx.entries + i_unit * spin.sy.entries;
    const MatrixXcd s_minus = s_plus.adjoint();
    h += 0.5 * beta * (kron(s_plus, a) + kron(s_minus, a.adjoint()));
  } else {
    h += beta * kron(spin.sx.entries, a + a.adjoint());
  }
  // Symmetrize away roundoff from S_y so the Hermitian flag is exact.
  h = 0.5 * (h + h.adjoint()).eval();
  return OperatorMatrix{std::move(h), true};
}

OperatorMatrix build_hamiltonian(const ModelParams& params, const FockTruncation& trunc,
                                 HamiltonianVariant variant) {
  return build_hamiltonian(params, trunc, variant, SpinBasis::collective(params.n_qubits()));
}

OperatorMatrix excitation_number(const SpinBasis& basis, const FockTruncation& trunc) {
  const auto spin = spin_operators(basis);
  const MatrixXcd a = annihilation(trunc);
  return OperatorMatrix{kron(spin.sz.entries, MatrixXcd::Identity(trunc.dim(), trunc.dim())) +
                            kron(MatrixXcd::Identity(basis.dim(), basis.dim()), a.adjoint() * a),
                        true};
}

}  // namespace tcdyn
