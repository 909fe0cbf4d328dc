#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tcdyn/operator.hpp"

namespace tcdyn {

enum class SpinAxis { X, Z };

/// |j, m> label of a collective-spin basis state. Spins are stored doubled
/// (two_j, two_m) so half-integer values for odd K stay exact.
struct SpinBasisLabel {
  int two_j = 0;
  int two_m = 0;
  SpinAxis axis = SpinAxis::X;
  int degeneracy_index = 0;

  double j() const { return 0.5 * two_j; }
  double m() const { return 0.5 * two_m; }

  bool operator==(const SpinBasisLabel&) const = default;
};

/// One simulated j-multiplet. `multiplicity` counts how many identical copies
/// of this multiplet the K-qubit space contains.
struct SpinSector {
  int two_j = 0;
  int multiplicity = 1;
  int offset = 0;

  int dim() const { return two_j + 1; }

  bool operator==(const SpinSector&) const = default;
};

/// Number of spin-j multiplets in the coupling of K spin-1/2 particles.
int spin_multiplicity(int n_qubits, int two_j);

/// Collective-spin basis in the S_x eigenbasis. Sectors are ordered by
/// descending j and states within a sector by descending m, so K=2 gives
/// |1,1>, |1,0>, |1,-1>, |0,0>.
class SpinBasis {
 public:
  /// All j sectors of K qubits, one representative per degenerate multiplet.
  static SpinBasis collective(int n_qubits);
  /// A single j sector.
  static SpinBasis sector(int n_qubits, int two_j);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  std::span<const SpinSector> sectors() const { return sectors_; }
  std::span<const SpinBasisLabel> labels() const { return labels_; }
  const SpinBasisLabel& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }

  /// Index of |j, m>, or -1 when the basis has no such state.
  int index_of(int two_j, int two_m) const;
  /// Sector slot containing `index`.
  const SpinSector& sector_of(int index) const;

  bool operator==(const SpinBasis&) const = default;

 private:
  SpinBasis(int n_qubits, std::vector<SpinSector> sectors);

  int n_qubits_ = 0;
  std::vector<SpinSector> sectors_;
  std::vector<SpinBasisLabel> labels_;
};

struct CollectiveSpinMatrices {
  OperatorMatrix sx;
  OperatorMatrix sy;
  OperatorMatrix sz;
};

/// S_x, S_y, S_z of one spin-j multiplet in the |j,m>_x basis (descending m).
/// S_x = diag(m); S_z is real tridiagonal with
///   <m+1|S_z|m> = <m|S_z|m+1> = sqrt((j-m)(j+m+1)) / 2;
/// S_y = -i [S_z, S_x]. Throws InvalidArgument if j is not reachable with K qubits.
CollectiveSpinMatrices collective_spin_matrices(int n_qubits, int two_j);

/// Block-diagonal spin operators over every sector of `basis`.
CollectiveSpinMatrices spin_operators(const SpinBasis& basis);

}  // namespace tcdyn
