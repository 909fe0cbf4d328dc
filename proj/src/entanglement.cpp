#include "tcdyn/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tcdyn/adiabatic.hpp"
#include "tcdyn/errors.hpp"
#include "tcdyn/kernels.hpp"
#include "tcdyn/revival.hpp"
#include "tcdyn/special.hpp"

namespace tcdyn {

namespace {

constexpr double kPsdTol = 1e-10;

Eigen::Vector4d clipped_eigenvalues(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  Eigen::Vector4d ev = es.eigenvalues();
  if (ev.minCoeff() < -kPsdTol) throw NotPositiveSemidefinite("density matrix has eigenvalue " + std::to_string(ev.minCoeff()));
  return ev.cwiseMax(0.0);
}

Eigen::Matrix4cd psd_sqrt(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
  const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.cast<std::complex<double>>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TwoQubitDensity::TwoQubitDensity(const Eigen::Matrix4cd& m) : m_(m) {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw InvalidArgument("density matrix is not Hermitian");
  if (std::abs(m_.trace() - 1.0) > 1e-10) throw InvalidArgument("density matrix trace differs from 1");
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
  clipped_eigenvalues(m_);
}

double TwoQubitDensity::purity() const { return (m_ * m_).trace().real(); }

Eigen::Vector4d TwoQubitDensity::eigenvalues() const { return clipped_eigenvalues(m_); }

Eigen::Matrix4cd spin_to_z_basis() {
  // Single-qubit |+> and |-> in (|e>, |g>).
  const double r = std::numbers::sqrt2 / 2.0;
  const Eigen::Vector2d plus(r, r), minus(r, -r);
  auto kron = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    Eigen::Vector4d v;
    v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return v;
  };
  const Eigen::Vector4d pp = kron(plus, plus), pm = kron(plus, minus), mp = kron(minus, plus), mm = kron(minus, minus);
  Eigen::Matrix4d u;
  u.col(0) = pp;
  u.col(1) = r * (pm + mp);
  u.col(2) = mm;
  u.col(3) = r * (pm - mp);
  return u.cast<std::complex<double>>();
}

JointState bell_coherent_initial(double alpha_abs, const ModelParams& params, const FockTruncation& trunc) {
  if (params.n_qubits() != 2) throw InvalidArgument("Bell initial state needs K = 2");
  auto basis = std::make_shared<const SpinBasis>(SpinBasis::collective(2));
  Eigen::VectorXcd spin = Eigen::VectorXcd::Zero(basis->dim());
  spin(basis->index_of(2, 2)) = std::numbers::sqrt2 / 2.0;
  spin(basis->index_of(2, -2)) = std::numbers::sqrt2 / 2.0;
  const FockVector fock = coherent_state(alpha_abs, 0.0, trunc);
  return JointState::product(spin, fock.amplitudes, std::move(basis), params, trunc);
}

TwoQubitDensity reduce_to_qubits(const Eigen::VectorXcd& amplitudes, int fock_dim) {
  if (amplitudes.size() != 4 * static_cast<Eigen::Index>(fock_dim))
    throw BasisMismatch("reduction to qubits needs the four K = 2 spin labels");
  const Eigen::Map<const Eigen::MatrixXcd> psi(amplitudes.data(), fock_dim, 4);  // column s = Fock block of label s
  const Eigen::Matrix4cd rho_spin = (psi.adjoint() * psi).transpose();
  const Eigen::Matrix4cd u = spin_to_z_basis();
  return TwoQubitDensity(u * rho_spin * u.adjoint());
}

TwoQubitDensity reduce_to_qubits(const JointState& state) {
  if (state.basis().n_qubits() != 2 || state.basis().dim() != 4)
    throw BasisMismatch("reduction to qubits needs the full K = 2 collective basis");
  return reduce_to_qubits(state.amplitudes(), state.truncation().dim());
}

double concurrence_exact(const TwoQubitDensity& rho) {
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  // sigma_y (x) sigma_y in (ee, eg, ge, gg).
  flip(0, 3) = -1.0;
  flip(3, 0) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  const Eigen::Matrix4cd tilde = flip * rho.matrix().conjugate() * flip;
  const Eigen::Matrix4cd s = psd_sqrt(rho.matrix());
  const Eigen::Matrix4cd m = s * tilde * s;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  Eigen::Vector4d lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + 4, std::greater<>());
  return std::clamp(lam(0) - lam(1) - lam(2) - lam(3), 0.0, 1.0);
}

bool is_x_shaped(const TwoQubitDensity& rho, double tol) {
  const auto& m = rho.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(m(i, j)) > tol) return false;
  return true;
}

double concurrence_x(const TwoQubitDensity& rho) {
  if (!is_x_shaped(rho)) throw NotXShaped("density matrix has weight off the diagonal and anti-diagonal");
  const auto& m = rho.matrix();
  const double d0 = m(0, 0).real(), d1 = m(1, 1).real(), d2 = m(2, 2).real(), d3 = m(3, 3).real();
  const double a = std::abs(m(0, 3)) - std::sqrt(std::max(0.0, d1 * d2));
  const double b = std::abs(m(1, 2)) - std::sqrt(std::max(0.0, d0 * d3));
  return std::min(1.0, 2.0 * std::max({0.0, a, b}));
}

double concurrence_analytic_envelope(double t, double alpha_abs, const ModelParams& params, int k_max) {
  return s_analytic_envelope(t, 2.0 * params.omega0_ratio(), alpha_abs, params, k_max);
}

TwoQubitDensity small_beta_density(double t, double alpha_abs, const ModelParams& params) {
  const PoissonWeights p(alpha_abs * alpha_abs);
  const double w = 2.0 * params.omega0_ratio();
  std::complex<double> c = 0.0;
  for (int n = 0; n <= p.n_last(); ++n)
    c += p.weights()[static_cast<std::size_t>(n)] * std::polar(1.0, -w * displaced_fock_overlap(n, n, params.beta()) * t);
  c /= p.total();
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(0, 3) = 0.5 * c;
  m(3, 0) = 0.5 * std::conj(c);
  return TwoQubitDensity(m);
}

std::vector<double> small_beta_concurrence(const TimeGrid& grid, double alpha_abs, const ModelParams& params) {
  const CosineSeries s = s_sum_series(2.0 * params.omega0_ratio(), alpha_abs, params);
  std::vector<double> re(grid.count), im(grid.count);
  kernels::active().phasor_sum(s.weights, s.freqs, grid.start, grid.step, re, im);
  std::vector<double> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) out[i] = std::min(1.0, std::hypot(re[i], im[i]));
  return out;
}

ConcurrenceSeries concurrence_series(const Propagator& prop, double alpha_abs, const TimeGrid& grid) {
  const JointState psi0 = bell_coherent_initial(alpha_abs, prop.params(), prop.truncation());
  ConcurrenceSeries out;
  out.times = grid.values();
  out.exact.resize(grid.count);
  out.purity.resize(grid.count);
  const int fock_dim = prop.truncation().dim();
  prop.for_each_sample(psi0, out.times, [&](std::size_t i, const Eigen::VectorXcd& amps) {
    const TwoQubitDensity rho = reduce_to_qubits(amps, fock_dim);
    out.exact[i] = concurrence_exact(rho);
    out.purity[i] = rho.purity();
  });
  out.x_shortcut = small_beta_concurrence(grid, alpha_abs, prop.params());
  out.analytic_envelope.resize(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i)
    out.analytic_envelope[i] = concurrence_analytic_envelope(out.times[i], alpha_abs, prop.params());
  return out;
}

}  // namespace tcdyn
