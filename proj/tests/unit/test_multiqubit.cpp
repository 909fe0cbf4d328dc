#include <doctest.h>

#include <cmath>
#include <memory>

#include "tcdyn/adiabatic.hpp"
#include "tcdyn/errors.hpp"
#include "tcdyn/exact.hpp"
#include "tcdyn/multiqubit.hpp"

using namespace tcdyn;

namespace {

const ModelParams kFig4(0.15, 0.16);

double sector_path(int k, int two_j, int two_m, double alpha, const ModelParams& p, double t) {
  const SpinSectorModel s = sector_blocks(k, two_j, 0, 80, p);
  return sector_population(evolve_adiabatic(coherent_sector_coefficients(s, two_m, alpha), s, t), s, two_m);
}

}  // namespace

TEST_CASE("K = 2, j = 1 blocks are the three-level manifold Hamiltonians") {
  const SpinSectorModel s = sector_blocks(2, 2, 0, 20, kFig4);
  CHECK(s.dim() == 3);
  CHECK(s.n_last() == 20);
  for (int n = 0; n <= 20; ++n) CHECK((s.block(n) - manifold(n, kFig4).h).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("K = 2 sector path equals the two-qubit manifold path") {
  double worst = 0.0;
  for (double t : {0.0, 50.0, 912.0, 1824.0, 3000.0})
    worst = std::max(worst, std::abs(sector_path(2, 2, -2, 3.0, kFig4, t) -
                                     prob_coherent_two_qubit(t, 3.0, kFig4, ManifoldMode::ExactDiag)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("K = 1 sector path equals the single-qubit closed form") {
  const ModelParams p = kFig4.with_qubits(1);
  double worst = 0.0;
  for (double t : {0.0, 50.0, 1824.0, 3000.0})
    worst = std::max(worst, std::abs(sector_path(1, 1, -1, 3.0, p, t) - prob_coherent_single_qubit(t, 3.0, p)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("exact evolution conserves every j-sector weight for K <= 4") {
  for (int k = 1; k <= 4; ++k) {
    const ModelParams p(0.15, 0.1, k);
    const FockTruncation tr(25);
    auto basis = std::make_shared<const SpinBasis>(SpinBasis::collective(k));
    const Propagator prop = Propagator::build(p, tr, HamiltonianVariant::Full, basis);
    Eigen::VectorXcd spin = Eigen::VectorXcd::Zero(basis->dim());
    for (const SpinSector& sec : basis->sectors()) spin(sec.offset) = 1.0;
    spin /= spin.norm();
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(tr.dim());
    f(2) = 1.0;
    const JointState s0 = JointState::product(spin, f, basis, p, tr);
    auto weights = [&](const Eigen::VectorXcd& a) {
      std::vector<double> w;
      for (const SpinSector& sec : basis->sectors())
        w.push_back(a.segment(sec.offset * tr.dim(), sec.dim() * tr.dim()).squaredNorm());
      return w;
    };
    const auto w0 = weights(s0.amplitudes());
    double worst = 0.0;
    for (double t : {1.0, 77.0, 900.0}) {
      const auto w = weights(prop.evolve(s0, t).amplitudes());
      for (std::size_t i = 0; i < w.size(); ++i) worst = std::max(worst, std::abs(w[i] - w0[i]));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("sector blocks are guarded and shape-checked") {
  CHECK_THROWS_AS(sector_blocks(4, 4, 0, 10, ModelParams(0.15, 0.2, 4)), GuardViolation);
  CHECK_NOTHROW(sector_blocks(4, 4, 0, 10, ModelParams(0.15, 0.15, 4)));
  CHECK_THROWS_AS(sector_blocks(3, 2, 0, 10, ModelParams(0.15, 0.1, 3)), InvalidArgument);
  const SpinSectorModel s = sector_blocks(3, 3, 0, 10, ModelParams(0.15, 0.1, 3));
  CHECK(s.dim() == 4);
  CHECK_THROWS_AS(evolve_adiabatic(Eigen::MatrixXcd::Zero(5, 4), s, 1.0), BasisMismatch);
  CHECK_THROWS_AS(coherent_sector_coefficients(sector_blocks(3, 3, 2, 10, ModelParams(0.15, 0.1, 3)), -3, 1.0),
                  TruncationTooSmall);
}

TEST_CASE("K = 3 adiabatic blocks follow exact dynamics in the valid regime") {
  const AdiabaticReport r = exact_vs_adiabatic_report(3, ModelParams(0.15, 0.1, 3), 2.0, 400.0, 401);
  CHECK(r.regime_valid);
  CHECK(r.joint_dim > 0);
  CHECK(r.times.size() == 401);
  CHECK(r.exact[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.adiabatic[0] == doctest::Approx(1.0).epsilon(1e-10));
  MESSAGE("K=3 max error " << r.max_error << ", rms " << r.rms_error);
  CHECK(r.max_error <= 0.05);
  CHECK_THROWS_AS(exact_vs_adiabatic_report(5, ModelParams(0.15, 0.1, 5), 2.0, 10.0), InvalidArgument);
}
