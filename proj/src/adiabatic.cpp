#include "tcdyn/adiabatic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tcdyn/errors.hpp"
#include "tcdyn/kernels.hpp"
#include "tcdyn/special.hpp"

namespace tcdyn {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

int spin_row(InitialSpin s) {
  switch (s) {
    case InitialSpin::MPlus1: return 0;
    case InitialSpin::MZero: return 1;
    case InitialSpin::MMinus1: return 2;
  }
  return 0;
}

Eigen::Matrix3d manifold_matrix(int n, double rabi, double x) {
  Eigen::Matrix3d h;
  h << n - x, rabi, 0.0,
       rabi, n, rabi,
       0.0, rabi, n - x;
  return h;
}

// Adds |sum_k a_k e^{-i E_k t}|^2 with weight w as cosine terms.
void add_survival(CosineSeries& s, double w, const Eigen::Vector3d& energies, const Eigen::Vector3d& a) {
  double constant = 0.0;
  for (int k = 0; k < 3; ++k) constant += a(k) * a(k);
  s.add(w * constant, 0.0);
  for (int k = 0; k < 3; ++k)
    for (int l = k + 1; l < 3; ++l) s.add(2.0 * w * a(k) * a(l), energies(l) - energies(k));
}

}  // namespace

double rabi_frequency(int n, const ModelParams& params) {
  if (n < 0) throw InvalidArgument("manifold index must be >= 0");
  return params.omega0_ratio() * displaced_fock_overlap(n, n, params.beta()) / kSqrt2;
}

double ManifoldSystem::residual() const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, (h * vectors.col(i) - energies(i) * vectors.col(i)).cwiseAbs().maxCoeff());
  return r;
}

Eigen::Vector3d manifold_energies_closed_form(int n, const ModelParams& params) {
  const double x = params.beta_squared();
  const double rabi = rabi_frequency(n, params);
  const double root = std::sqrt(8.0 * rabi * rabi + x * x);
  return {0.5 * (2.0 * n - x - root), n - x, 0.5 * (2.0 * n - x + root)};
}

bool simplified_regime(int n, const ModelParams& params) {
  return std::abs(rabi_frequency(n, params)) >= 10.0 * params.beta_squared();
}

ManifoldSystem manifold(int n, const ModelParams& params, ManifoldMode mode) {
  ManifoldSystem m;
  m.n = n;
  m.mode = mode;
  m.rabi = rabi_frequency(n, params);
  const double x = params.beta_squared();
  m.h = manifold_matrix(n, m.rabi, x);

  if (mode == ManifoldMode::ExactDiag) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m.h);
    m.energies = es.eigenvalues();
    m.vectors = es.eigenvectors();
    return m;
  }

  if (!simplified_regime(n, params))
    throw GuardViolation("simplified manifold needs |Omega_N| >= 10 beta^2; N=" + std::to_string(n) +
                         " has Omega_N/beta^2 = " + std::to_string(m.rabi / x));
  const double sgn = m.rabi < 0.0 ? -1.0 : 1.0;
  const double split = kSqrt2 * std::abs(m.rabi);
  m.energies = {n - 0.5 * x - split, n - x, n - 0.5 * x + split};
  m.vectors.col(0) = Eigen::Vector3d(0.5, -0.5 * kSqrt2 * sgn, 0.5);
  m.vectors.col(1) = Eigen::Vector3d(1.0, 0.0, -1.0) / kSqrt2;
  m.vectors.col(2) = Eigen::Vector3d(0.5, 0.5 * kSqrt2 * sgn, 0.5);
  return m;
}

double prob_number_state(InitialSpin initial, int n, const ModelParams& params, double t) {
  if (!simplified_regime(n, params))
    throw GuardViolation("closed-form number-state dynamics need |Omega_N| >= 10 beta^2");
  const double w = kSqrt2 * rabi_frequency(n, params) * t;
  if (initial == InitialSpin::MZero) return 0.5 + 0.5 * std::cos(4.0 * w);
  return 0.375 + 0.5 * std::cos(w) + 0.125 * std::cos(2.0 * w);
}

double prob_number_state_manifold(InitialSpin initial, int n, const ModelParams& params, double t) {
  const ManifoldSystem m = manifold(n, params, ManifoldMode::ExactDiag);
  const Eigen::Vector3d a = m.vectors.row(spin_row(initial)).transpose().cwiseAbs2();
  std::complex<double> amp = 0.0;
  for (int k = 0; k < 3; ++k) amp += a(k) * std::polar(1.0, -m.energies(k) * t);
  return std::norm(amp);
}

PoissonWeights::PoissonWeights(double alpha_abs2, double tail) : alpha_abs2_(alpha_abs2) {
  if (!(alpha_abs2 >= 0.0) || !std::isfinite(alpha_abs2)) throw InvalidArgument("|alpha|^2 must be finite and >= 0");
  if (alpha_abs2 == 0.0) {
    weights_ = {1.0};
    return;
  }
  const double log_a = std::log(alpha_abs2);
  double cumulative = 0.0;
  for (int n = 0;; ++n) {
    const double w = std::exp(-alpha_abs2 + n * log_a - std::lgamma(n + 1.0));
    weights_.push_back(w);
    cumulative += w;
    if (cumulative >= 1.0 - tail && n >= alpha_abs2) break;
  }
}

double PoissonWeights::total() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

void CosineSeries::add(double weight, double freq) {
  weights.push_back(weight);
  freqs.push_back(freq);
}

double CosineSeries::at(double t) const {
  double s = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) s += weights[k] * std::cos(freqs[k] * t);
  return s;
}

std::vector<double> CosineSeries::on_grid(const TimeGrid& grid) const {
  std::vector<double> out(grid.count);
  kernels::active().phasor_sum(weights, freqs, grid.start, grid.step, out, {});
  return out;
}

CosineSeries s_sum_series(double omega0_eff, double alpha_abs, const ModelParams& params,
                          std::optional<FockTruncation> trunc) {
  const PoissonWeights p(alpha_abs * alpha_abs);
  if (trunc && p.n_last() > trunc->n_max())
    throw TruncationTooSmall("Poisson support reaches N=" + std::to_string(p.n_last()) + " beyond n_max=" +
                             std::to_string(trunc->n_max()));
  CosineSeries s;
  const double beta = params.beta();
  for (int n = 0; n <= p.n_last(); ++n)
    s.add(p.weights()[static_cast<std::size_t>(n)], omega0_eff * displaced_fock_overlap(n, n, beta));
  return s;
}

double s_sum_exact(double t, double omega0_eff, double alpha_abs, const ModelParams& params,
                   std::optional<FockTruncation> trunc) {
  return s_sum_series(omega0_eff, alpha_abs, params, trunc).at(t);
}

std::vector<double> s_sum_exact(const TimeGrid& grid, double omega0_eff, double alpha_abs, const ModelParams& params,
                                std::optional<FockTruncation> trunc) {
  return s_sum_series(omega0_eff, alpha_abs, params, trunc).on_grid(grid);
}

CosineSeries prob_coherent_two_qubit_series(double alpha_abs, const ModelParams& params, ManifoldMode mode) {
  const double w0 = params.omega0_ratio();
  if (mode == ManifoldMode::SimplifiedClosedForm) {
    CosineSeries out;
    out.add(0.375, 0.0);
    const CosineSeries s1 = s_sum_series(w0, alpha_abs, params);
    const CosineSeries s2 = s_sum_series(2.0 * w0, alpha_abs, params);
    for (std::size_t k = 0; k < s1.weights.size(); ++k) out.add(0.5 * s1.weights[k], s1.freqs[k]);
    for (std::size_t k = 0; k < s2.weights.size(); ++k) out.add(0.125 * s2.weights[k], s2.freqs[k]);
    return out;
  }
  const PoissonWeights p(alpha_abs * alpha_abs);
  CosineSeries out;
  for (int n = 0; n <= p.n_last(); ++n) {
    const ManifoldSystem m = manifold(n, params, ManifoldMode::ExactDiag);
    const Eigen::Vector3d a = m.vectors.row(spin_row(InitialSpin::MMinus1)).transpose().cwiseAbs2();
    add_survival(out, p.weights()[static_cast<std::size_t>(n)], m.energies, a);
  }
  return out;
}

double prob_coherent_two_qubit(double t, double alpha_abs, const ModelParams& params, ManifoldMode mode) {
  return prob_coherent_two_qubit_series(alpha_abs, params, mode).at(t);
}

std::vector<double> prob_coherent_two_qubit(const TimeGrid& grid, double alpha_abs, const ModelParams& params,
                                            ManifoldMode mode) {
  return prob_coherent_two_qubit_series(alpha_abs, params, mode).on_grid(grid);
}

CosineSeries prob_coherent_single_qubit_series(double alpha_abs, const ModelParams& params) {
  CosineSeries out;
  out.add(0.5, 0.0);
  const CosineSeries s = s_sum_series(params.omega0_ratio(), alpha_abs, params);
  for (std::size_t k = 0; k < s.weights.size(); ++k) out.add(0.5 * s.weights[k], s.freqs[k]);
  return out;
}

double prob_coherent_single_qubit(double t, double alpha_abs, const ModelParams& params) {
  return prob_coherent_single_qubit_series(alpha_abs, params).at(t);
}

std::vector<double> prob_coherent_single_qubit(const TimeGrid& grid, double alpha_abs, const ModelParams& params) {
  return prob_coherent_single_qubit_series(alpha_abs, params).on_grid(grid);
}

}  // namespace tcdyn
