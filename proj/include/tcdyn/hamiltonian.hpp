#pragma once

#include "tcdyn/model.hpp"
#include "tcdyn/operator.hpp"
#include "tcdyn/spin.hpp"

namespace tcdyn {

enum class HamiltonianVariant {
  Full,        // omega0 S_z + a^dag a + beta (a + a^dag) S_x
  RWA,         // counter-rotating a^dag S_+ and a S_- dropped
  Degenerate,  // Full with omega0 = 0
};

const char* to_string(HamiltonianVariant v);

/// Joint-space operators used by the Hamiltonian builders and observables,
/// all lifted to the (spin x Fock) basis.
struct JointOperators {
  OperatorMatrix a;
  OperatorMatrix number;
  OperatorMatrix sx;
  OperatorMatrix sy;
  OperatorMatrix sz;
  OperatorMatrix quadrature_sz;  // (a + a^dag) S_z
  OperatorMatrix quadrature_sy;  // (a + a^dag) S_y
};

JointOperators joint_operators(const SpinBasis& basis, const FockTruncation& trunc);

/// Hamiltonian in units of hbar*omega over basis x {|0>..|n_max>}.
OperatorMatrix build_hamiltonian(const ModelParams& params, const FockTruncation& trunc,
                                 HamiltonianVariant variant, const SpinBasis& basis);

/// Same, over SpinBasis::collective(params.n_qubits()).
OperatorMatrix build_hamiltonian(const ModelParams& params, const FockTruncation& trunc,
                                 HamiltonianVariant variant);

/// S_z + a^dag a, the quantity the RWA Hamiltonian conserves.
OperatorMatrix excitation_number(const SpinBasis& basis, const FockTruncation& trunc);

}  // namespace tcdyn
