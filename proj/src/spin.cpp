#include "tcdyn/spin.hpp"

#include <cmath>
#include <string>

#include "tcdyn/errors.hpp"

namespace tcdyn {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool valid_two_j(int n_qubits, int two_j) {
  return two_j >= 0 && two_j <= n_qubits && (n_qubits - two_j) % 2 == 0;
}

}  // namespace

int spin_multiplicity(int n_qubits, int two_j) {
  if (!valid_two_j(n_qubits, two_j)) return 0;
  const int k = (n_qubits - two_j) / 2;
  return static_cast<int>(binomial(n_qubits, k) - binomial(n_qubits, k - 1));
}

SpinBasis::SpinBasis(int n_qubits, std::vector<SpinSector> sectors)
    : n_qubits_(n_qubits), sectors_(std::move(sectors)) {
  int offset = 0;
  for (auto& s : sectors_) {
    s.offset = offset;
    for (int two_m = s.two_j; two_m >= -s.two_j; two_m -= 2)
      labels_.push_back(SpinBasisLabel{s.two_j, two_m, SpinAxis::X, 0});
    offset += s.dim();
  }
}

SpinBasis SpinBasis::collective(int n_qubits) {
  if (n_qubits < 1) throw InvalidArgument("n_qubits must be >= 1");
  std::vector<SpinSector> sectors;
  for (int two_j = n_qubits; two_j >= 0; two_j -= 2)
    sectors.push_back(SpinSector{two_j, spin_multiplicity(n_qubits, two_j), 0});
  return SpinBasis(n_qubits, std::move(sectors));
}

SpinBasis SpinBasis::sector(int n_qubits, int two_j) {
  if (n_qubits < 1 || !valid_two_j(n_qubits, two_j))
    throw InvalidArgument("2j=" + std::to_string(two_j) + " is not a collective spin of " +
                          std::to_string(n_qubits) + " qubits");
  return SpinBasis(n_qubits, {SpinSector{two_j, spin_multiplicity(n_qubits, two_j), 0}});
}

int SpinBasis::index_of(int two_j, int two_m) const {
  for (const auto& s : sectors_) {
    if (s.two_j != two_j) continue;
    if (two_m > two_j || two_m < -two_j || (two_j - two_m) % 2 != 0) return -1;
    return s.offset + (two_j - two_m) / 2;
  }
  return -1;
}

const SpinSector& SpinBasis::sector_of(int index) const {
  for (const auto& s : sectors_)
    if (index >= s.offset && index < s.offset + s.dim()) return s;
  throw InvalidArgument("spin index out of range");
}

CollectiveSpinMatrices collective_spin_matrices(int n_qubits, int two_j) {
  if (n_qubits < 1 || !valid_two_j(n_qubits, two_j))
    throw InvalidArgument("2j=" + std::to_string(two_j) + " is not a collective spin of " +
                          std::to_string(n_qubits) + " qubits");
  const int dim = two_j + 1;
  const double j = 0.5 * two_j;
  Eigen::MatrixXd sx = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = j - i;
    sx(i, i) = m;
    if (i + 1 < dim) {
      // Row i holds m, row i+1 holds m-1: element sqrt((j-m')(j+m'+1))/2 with m' = m-1.
      const double mp = m - 1.0;
      const double v = 0.5 * std::sqrt((j - mp) * (j + mp + 1.0));
      sz(i, i + 1) = v;
      sz(i + 1, i) = v;
    }
  }
  const std::complex<double> i_unit(0.0, 1.0);
  CollectiveSpinMatrices out;
  out.sx = OperatorMatrix{sx.cast<std::complex<double>>(), true};
  out.sz = OperatorMatrix{sz.cast<std::complex<double>>(), true};
  const Eigen::MatrixXcd comm = out.sz.entries * out.sx.entries - out.sx.entries * out.sz.entries;
  out.sy = OperatorMatrix{-i_unit * comm, true};
  return out;
}

CollectiveSpinMatrices spin_operators(const SpinBasis& basis) {
  const int dim = basis.dim();
  CollectiveSpinMatrices out;
  out.sx = OperatorMatrix{Eigen::MatrixXcd::Zero(dim, dim), true};
  out.sy = OperatorMatrix{Eigen::MatrixXcd::Zero(dim, dim), true};
  out.sz = OperatorMatrix{Eigen::MatrixXcd::Zero(dim, dim), true};
  for (const auto& s : basis.sectors()) {
    const auto block = collective_spin_matrices(basis.n_qubits(), s.two_j);
    out.sx.entries.block(s.offset, s.offset, s.dim(), s.dim()) = block.sx.entries;
    out.sy.entries.block(s.offset, s.offset, s.dim(), s.dim()) = block.sy.entries;
    out.sz.entries.block(s.offset, s.offset, s.dim(), s.dim()) = block.sz.entries;
  }
  return out;
}

}  // namespace tcdyn
