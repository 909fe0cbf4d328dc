#include <doctest.h>

#include <cmath>

#include "tcdyn/hamiltonian.hpp"

using namespace tcdyn;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("every variant is Hermitian") {
  const ModelParams p(0.15, 0.16);
  const FockTruncation tr(30);
  for (auto v : {HamiltonianVariant::Full, HamiltonianVariant::RWA, HamiltonianVariant::Degenerate}) {
    const OperatorMatrix h = build_hamiltonian(p, tr, v);
    CHECK(h.dim() == 4 * 31);
    CHECK(h.hermitian);
    CHECK(h.hermiticity_error() <= 1e-14);
  }
}

TEST_CASE("K = 1 full Hamiltonian matches the explicit 2x2 (x) Fock construction") {
  const double w0 = 0.3, beta = 0.2;
  const FockTruncation tr(6);
  const int d = tr.dim();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(n);
  // x basis (+, -): S_z = sigma_x / 2, S_x = diag(1/2, -1/2)
  Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  const Eigen::MatrixXd num = a.transpose() * a, q = a + a.transpose(), id = Eigen::MatrixXd::Identity(d, d);
  ref.topLeftCorner(d, d) = num + 0.5 * beta * q;
  ref.bottomRightCorner(d, d) = num - 0.5 * beta * q;
  ref.topRightCorner(d, d) = 0.5 * w0 * id;
  ref.bottomLeftCorner(d, d) = 0.5 * w0 * id;
  const OperatorMatrix h = build_hamiltonian(ModelParams(w0, beta, 1), tr, HamiltonianVariant::Full);
  CHECK(max_abs(h.entries - ref.cast<std::complex<double>>()) <= 1e-15);
  CHECK(h.is_real());
}

TEST_CASE("|0,0> (x) |N> is stationary with energy N") {
  const ModelParams p(0.15, 0.16);
  const FockTruncation tr(25);
  const OperatorMatrix h = build_hamiltonian(p, tr, HamiltonianVariant::Full);
  const SpinBasis b = SpinBasis::collective(2);
  const int s = b.index_of(0, 0);
  for (int n : {0, 3, 9}) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(h.dim());
    v(s * tr.dim() + n) = 1.0;
    CHECK(max_abs(h.entries * v - static_cast<double>(n) * v) <= 1e-15);
  }
}

TEST_CASE("degenerate spectrum is N - m^2 beta^2") {
  const ModelParams p(0.0, 0.2);
  const FockTruncation tr(60);
  const OperatorMatrix h = build_hamiltonian(p.with_omega0(0.5), tr, HamiltonianVariant::Degenerate);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.entries);
  std::vector<double> expect;
  for (int n = 0; n < 5; ++n)
    for (double m2 : {1.0, 0.0, 1.0, 0.0}) expect.push_back(n - m2 * 0.04);
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < 12; ++i) CHECK(es.eigenvalues()(static_cast<Eigen::Index>(i)) == doctest::Approx(expect[i]).epsilon(1e-10));
}

TEST_CASE("RWA commutes with the excitation number") {
  const SpinBasis b = SpinBasis::collective(2);
  const FockTruncation tr(20);
  const OperatorMatrix h = build_hamiltonian(ModelParams(0.9, 0.1), tr, HamiltonianVariant::RWA, b);
  const OperatorMatrix ne = excitation_number(b, tr);
  CHECK(max_abs(h.entries * ne.entries - ne.entries * h.entries) <= 1e-13);
  const OperatorMatrix full = build_hamiltonian(ModelParams(0.9, 0.1), tr, HamiltonianVariant::Full, b);
  CHECK(max_abs(full.entries * ne.entries - ne.entries * full.entries) > 1e-3);
}

TEST_CASE("RWA and full coupling differ by the counter-rotating terms only") {
  const SpinBasis b = SpinBasis::collective(1);
  const FockTruncation tr(10);
  const ModelParams p(1.0, 0.1, 1);
  const auto full = build_hamiltonian(p, tr, HamiltonianVariant::Full, b).entries;
  const auto rwa = build_hamiltonian(p, tr, HamiltonianVariant::RWA, b).entries;
  const auto ops = joint_operators(b, tr);
  const Eigen::MatrixXcd i_sy = std::complex<double>(0, 1) * ops.sy.entries;
  const Eigen::MatrixXcd sp = ops.sx.entries + i_sy, sm = ops.sx.entries - i_sy;
  const Eigen::MatrixXcd counter = 0.05 * (ops.a.entries.adjoint() * sp + ops.a.entries * sm);
  CHECK(max_abs(full - rwa - counter) <= 1e-14);
}

TEST_CASE("joint operators respect the spin-major index") {
  const SpinBasis b = SpinBasis::collective(2);
  const FockTruncation tr(5);
  const auto ops = joint_operators(b, tr);
  CHECK(ops.number.entries(2 * 6 + 4, 2 * 6 + 4).real() == 4.0);
  CHECK(ops.a.entries(3, 4).real() == doctest::Approx(2.0));
  CHECK(ops.sx.entries(0, 0).real() == 1.0);
  CHECK(ops.sx.entries(2 * 6, 2 * 6).real() == -1.0);
  CHECK(ops.quadrature_sz.hermiticity_error() <= 1e-15);
}
