#include "tcdyn/multiqubit.hpp"

#include <cmath>
#include <string>

#include "tcdyn/adiabatic.hpp"
#include "tcdyn/errors.hpp"
#include "tcdyn/exact.hpp"
#include "tcdyn/special.hpp"
#include "tcdyn/spin.hpp"
#include "tcdyn/state.hpp"

namespace tcdyn {

const Eigen::MatrixXd& SpinSectorModel::block(int n) const {
  if (n < n_first || n > n_last()) throw InvalidArgument("manifold " + std::to_string(n) + " outside the sector model");
  return blocks[static_cast<std::size_t>(n - n_first)];
}

SpinSectorModel sector_blocks(int n_qubits, int two_j, int n_first, int n_last, const ModelParams& params) {
  const double half_k = 0.5 * n_qubits;
  if (half_k * half_k * params.beta_squared() > 0.1)
    throw GuardViolation("adiabatic blocks need (K/2)^2 beta^2 <= 0.1, got " +
                         std::to_string(half_k * half_k * params.beta_squared()));
  if (n_first < 0 || n_last < n_first) throw InvalidArgument("invalid manifold range");

  const CollectiveSpinMatrices spin = collective_spin_matrices(n_qubits, two_j);
  const Eigen::MatrixXd sz = spin.sz.entries.real();
  const int d = two_j + 1;

  SpinSectorModel model;
  model.n_qubits = n_qubits;
  model.two_j = two_j;
  model.multiplicity = spin_multiplicity(n_qubits, two_j);
  model.n_first = n_first;
  for (int n = n_first; n <= n_last; ++n) {
    const double overlap = displaced_fock_overlap(n, n, params.beta());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      const double m = 0.5 * (two_j - 2 * i);
      h(i, i) = n - m * m * params.beta_squared();
      if (i + 1 < d) {
        h(i, i + 1) = params.omega0_ratio() * overlap * sz(i, i + 1);
        h(i + 1, i) = h(i, i + 1);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    model.blocks.push_back(std::move(h));
    model.energies.push_back(es.eigenvalues());
    model.vectors.push_back(es.eigenvectors());
  }
  return model;
}

Eigen::MatrixXcd evolve_adiabatic(const Eigen::MatrixXcd& coeffs, const SpinSectorModel& sector, double t) {
  if (coeffs.rows() != static_cast<Eigen::Index>(sector.blocks.size()) || coeffs.cols() != sector.dim())
    throw BasisMismatch("coefficients do not match the sector's (N, m) shape");
  Eigen::MatrixXcd out(coeffs.rows(), coeffs.cols());
  for (Eigen::Index r = 0; r < coeffs.rows(); ++r) {
    const auto& v = sector.vectors[static_cast<std::size_t>(r)];
    const auto& e = sector.energies[static_cast<std::size_t>(r)];
    Eigen::VectorXcd z = v.transpose().cast<std::complex<double>>() * coeffs.row(r).transpose();
    for (Eigen::Index k = 0; k < z.size(); ++k) z(k) *= std::polar(1.0, -e(k) * t);
    out.row(r) = (v.cast<std::complex<double>>() * z).transpose();
  }
  return out;
}

namespace {

int m_index(const SpinSectorModel& sector, int two_m) {
  if (std::abs(two_m) > sector.two_j || (sector.two_j - two_m) % 2 != 0)
    throw InvalidArgument("m is not in the sector");
  return (sector.two_j - two_m) / 2;
}

}  // namespace

Eigen::MatrixXcd coherent_sector_coefficients(const SpinSectorModel& sector, int two_m, double alpha_abs) {
  const int col = m_index(sector, two_m);
  const PoissonWeights p(alpha_abs * alpha_abs);
  if (p.n_last() > sector.n_last() || sector.n_first != 0)
    throw TruncationTooSmall("sector model does not cover the Poisson support up to N=" + std::to_string(p.n_last()));
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(sector.blocks.size()), sector.dim());
  for (int n = 0; n <= p.n_last(); ++n) c(n, col) = std::sqrt(p.weights()[static_cast<std::size_t>(n)]);
  return c;
}

double sector_population(const Eigen::MatrixXcd& coeffs, const SpinSectorModel& sector, int two_m) {
  return coeffs.col(m_index(sector, two_m)).squaredNorm();
}

AdiabaticReport exact_vs_adiabatic_report(int n_qubits, const ModelParams& params, double alpha_abs, double horizon,
                                          std::size_t samples) {
  if (n_qubits < 1 || n_qubits > 4) throw InvalidArgument("exact comparison is limited to 1 <= K <= 4");
  if (params.n_qubits() != n_qubits) throw InvalidArgument("params and K disagree");
  const int two_j = n_qubits;
  const double j = 0.5 * n_qubits;
  const double shift = j * params.beta();

  AdiabaticReport r;
  r.n_qubits = n_qubits;
  r.regime_valid = params.omega0_ratio() <= 0.25 && std::abs(params.beta()) <= 0.2 &&
                   j * j * params.beta_squared() <= 0.1;
  const TimeGrid grid = TimeGrid::linspace(0.0, horizon, samples);
  r.times = grid.values();

  const FockTruncation trunc = FockTruncation::for_coherent(alpha_abs + std::abs(shift));
  auto basis = std::make_shared<const SpinBasis>(SpinBasis::collective(n_qubits));
  const Propagator prop = Propagator::build(params, trunc, HamiltonianVariant::Full, basis);
  r.joint_dim = basis->dim() * trunc.dim();
  const FockVector fock = coherent_state(alpha_abs, shift, trunc);
  const JointState psi0 = JointState::product(two_j, -two_j, fock.amplitudes, basis, params, trunc);
  const int spin_index = basis->index_of(two_j, -two_j);
  r.exact.resize(samples);
  prop.for_each_sample(psi0, r.times, [&](std::size_t i, const Eigen::VectorXcd& amps) {
    r.exact[i] = spin_population(amps, spin_index, trunc.dim());
  });

  const PoissonWeights p(alpha_abs * alpha_abs);
  const SpinSectorModel sector = sector_blocks(n_qubits, two_j, 0, p.n_last(), params);
  const Eigen::MatrixXcd c0 = coherent_sector_coefficients(sector, -two_j, alpha_abs);
  r.adiabatic.resize(samples);
  double sq = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    r.adiabatic[i] = sector_population(evolve_adiabatic(c0, sector, r.times[i]), sector, -two_j);
    const double d = std::abs(r.adiabatic[i] - r.exact[i]);
    r.max_error = std::max(r.max_error, d);
    sq += d * d;
  }
  r.rms_error = std::sqrt(sq / static_cast<double>(samples));
  return r;
}

}  // namespace tcdyn
