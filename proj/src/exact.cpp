#include "tcdyn/exact.hpp"

#include <cmath>
#include <string>

#include "tcdyn/errors.hpp"
#include "tcdyn/kernels.hpp"
#include "tcdyn/parallel.hpp"

namespace tcdyn {

namespace {

struct Workspace {
  std::vector<double> z_re, z_im, y_re, y_im;
  explicit Workspace(std::size_t n) : z_re(n), z_im(n), y_re(n), y_im(n) {}
};

}  // namespace

Propagator::Propagator(const OperatorMatrix& hamiltonian, std::shared_ptr<const SpinBasis> basis, ModelParams params,
                       FockTruncation truncation)
    : basis_(std::move(basis)), params_(params), truncation_(truncation) {
  if (!basis_) throw InvalidArgument("propagator needs a spin basis");
  if (hamiltonian.dim() != static_cast<Eigen::Index>(basis_->dim()) * truncation_.dim())
    throw BasisMismatch("Hamiltonian dimension does not match spin x Fock basis");
  if (hamiltonian.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian.entries.real());
    if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
    energies_ = es.eigenvalues();
    vec_re_ = es.eigenvectors();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hamiltonian.entries);
    if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
    energies_ = es.eigenvalues();
    vec_re_ = es.eigenvectors().real();
    vec_im_ = es.eigenvectors().imag();
  }
}

Propagator Propagator::build(const ModelParams& params, const FockTruncation& trunc, HamiltonianVariant variant,
                             std::shared_ptr<const SpinBasis> basis) {
  const auto h = build_hamiltonian(params, trunc, variant, *basis);
  return Propagator(h, std::move(basis), params, trunc);
}

Propagator Propagator::build(const ModelParams& params, const FockTruncation& trunc, HamiltonianVariant variant) {
  return build(params, trunc, variant, std::make_shared<const SpinBasis>(SpinBasis::collective(params.n_qubits())));
}

Eigen::MatrixXcd Propagator::eigenvectors() const {
  if (real_eigenvectors()) return vec_re_.cast<std::complex<double>>();
  Eigen::MatrixXcd v(vec_re_.rows(), vec_re_.cols());
  v.real() = vec_re_;
  v.imag() = vec_im_;
  return v;
}

double Propagator::reconstruction_residual(const OperatorMatrix& hamiltonian) const {
  const Eigen::MatrixXcd v = eigenvectors();
  const Eigen::MatrixXcd rebuilt = v * energies_.cast<std::complex<double>>().asDiagonal() * v.adjoint();
  return (hamiltonian.entries - rebuilt).cwiseAbs().maxCoeff();
}

double Propagator::unitarity_residual() const {
  const Eigen::MatrixXcd v = eigenvectors();
  const Eigen::MatrixXcd g = v.adjoint() * v;
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd Propagator::to_eigenbasis(const JointState& state) const {
  if (!(state.basis() == *basis_) || !(state.truncation() == truncation_))
    throw BasisMismatch("state basis does not match the propagator");
  return eigenvectors().adjoint() * state.amplitudes();
}

void Propagator::amplitudes_at(const Eigen::VectorXcd& coeffs, double t, Eigen::VectorXcd& out) const {
  const auto n = static_cast<std::size_t>(coeffs.size());
  Workspace ws(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::complex<double> z = coeffs(static_cast<Eigen::Index>(k)) *
                                   std::polar(1.0, -energies_(static_cast<Eigen::Index>(k)) * t);
    ws.z_re[k] = z.real();
    ws.z_im[k] = z.imag();
  }
  const kernels::SplitMatrixView view{
      std::span<const double>(vec_re_.data(), static_cast<std::size_t>(vec_re_.size())),
      std::span<const double>(vec_im_.data(), static_cast<std::size_t>(vec_im_.size())), n, n};
  kernels::active().cgemv(view, ws.z_re, ws.z_im, ws.y_re, ws.y_im);
  out.resize(coeffs.size());
  for (std::size_t i = 0; i < n; ++i) out(static_cast<Eigen::Index>(i)) = {ws.y_re[i], ws.y_im[i]};
}

JointState Propagator::evolve(const JointState& state0, double t) const {
  Eigen::VectorXcd amps;
  amplitudes_at(to_eigenbasis(state0), t, amps);
  return JointState(std::move(amps), basis_, state0.params(), truncation_);
}

std::vector<JointState> Propagator::evolve(const JointState& state0, std::span<const double> times) const {
  const Eigen::VectorXcd coeffs = to_eigenbasis(state0);
  std::vector<Eigen::VectorXcd> amps(times.size());
  parallel_for(times.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) amplitudes_at(coeffs, times[i], amps[i]);
  });
  std::vector<JointState> out;
  out.reserve(times.size());
  for (auto& a : amps) out.emplace_back(std::move(a), basis_, state0.params(), truncation_);
  return out;
}

void Propagator::for_each_sample(const JointState& state0, std::span<const double> times,
                                 const std::function<void(std::size_t, const Eigen::VectorXcd&)>& fn) const {
  const Eigen::VectorXcd coeffs = to_eigenbasis(state0);
  parallel_for(times.size(), [&](std::size_t begin, std::size_t end) {
    Eigen::VectorXcd amps;
    for (std::size_t i = begin; i < end; ++i) {
      amplitudes_at(coeffs, times[i], amps);
      fn(i, amps);
    }
  });
}

TimeSeries::TimeSeries(std::vector<double> t, TimeUnit u) : times(std::move(t)), unit(u) {
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw InvalidArgument("time series times must be strictly increasing");
}

void TimeSeries::add(std::string label, std::vector<double> values) {
  if (values.size() != times.size()) throw InvalidArgument("column '" + label + "' length differs from time axis");
  labels.push_back(std::move(label));
  columns.push_back(std::move(values));
}

const std::vector<double>& TimeSeries::column(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return columns[i];
  throw InvalidArgument("no column '" + label + "'");
}

ObservableSet::ObservableSet(const SpinBasis& basis, const FockTruncation& trunc)
    : spin_dim_(basis.dim()), fock_dim_(trunc.dim()), ops_(joint_operators(basis, trunc)) {}

Observables ObservableSet::measure(const JointState& state) const { return measure(state.amplitudes()); }

Observables ObservableSet::measure(const Eigen::VectorXcd& psi) const {
  auto expect = [&](const OperatorMatrix& op) { return psi.dot(op.entries * psi); };
  Observables o;
  o.populations.resize(static_cast<std::size_t>(spin_dim_));
  for (int s = 0; s < spin_dim_; ++s) o.populations[static_cast<std::size_t>(s)] = spin_population(psi, s, fock_dim_);
  o.sx = expect(ops_.sx).real();
  o.sy = expect(ops_.sy).real();
  o.sz = expect(ops_.sz).real();
  o.a = expect(ops_.a);
  o.number = expect(ops_.number).real();
  o.quadrature_sz = expect(ops_.quadrature_sz).real();
  o.quadrature_sy = expect(ops_.quadrature_sy).real();
  return o;
}

Observables observables(const JointState& state) {
  return ObservableSet(state.basis(), state.truncation()).measure(state);
}

double spin_population(const Eigen::VectorXcd& amplitudes, int spin_index, int fock_dim) {
  return amplitudes.segment(static_cast<Eigen::Index>(spin_index) * fock_dim, fock_dim).squaredNorm();
}

EhrenfestResiduals ehrenfest_residuals(std::span<const Observables> series, std::span<const double> times,
                                       const ModelParams& params) {
  if (series.size() != times.size() || times.size() < 3)
    throw InvalidArgument("Ehrenfest residuals need >= 3 matching samples");
  const double dt = times[1] - times[0];
  for (std::size_t i = 2; i < times.size(); ++i)
    if (std::abs((times[i] - times[i - 1]) - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
      throw GridTooCoarse("Ehrenfest residuals need a uniform grid");
  if (!(dt > 0.0) || dt > 0.01) throw GridTooCoarse("omega*dt must be <= 0.01, got " + std::to_string(dt));

  const double w0 = params.omega0_ratio();
  const double beta = params.beta();
  EhrenfestResiduals r;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    const auto& prev = series[i - 1];
    const auto& cur = series[i];
    const auto& next = series[i + 1];
    const double dsx = (next.sx - prev.sx) / (2.0 * dt);
    const double dsy = (next.sy - prev.sy) / (2.0 * dt);
    const double dsz = (next.sz - prev.sz) / (2.0 * dt);
    r.sx = std::max(r.sx, std::abs(dsx + w0 * cur.sy));
    r.sy = std::max(r.sy, std::abs(dsy - w0 * cur.sx + beta * cur.quadrature_sz));
    r.sz = std::max(r.sz, std::abs(dsz - beta * cur.quadrature_sy));
  }
  return r;
}

double probability_in(const JointState& state, const JointState& target) {
  if (!(state.basis() == target.basis()) || !(state.truncation() == target.truncation()))
    throw BasisMismatch("states live in different bases");
  return std::norm(target.amplitudes().dot(state.amplitudes()));
}

}  // namespace tcdyn
