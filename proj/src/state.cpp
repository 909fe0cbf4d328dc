#include "tcdyn/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tcdyn/errors.hpp"
#include "tcdyn/special.hpp"

namespace tcdyn {

Eigen::VectorXcd coherent_amplitudes(cplx alpha, const FockTruncation& trunc) {
  const int dim = trunc.dim();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  const double r = std::abs(alpha);
  if (r == 0.0) {
    out(0) = 1.0;
    return out;
  }
  const double phase = std::arg(alpha);
  const double log_r = std::log(r);
  for (int n = 0; n < dim; ++n) {
    const double log_mag = -0.5 * r * r + n * log_r - 0.5 * std::lgamma(n + 1.0);
    out(n) = std::polar(std::exp(log_mag), n * phase);
  }
  return out;
}

FockVector coherent_state(cplx alpha, double displacement, const FockTruncation& trunc) {
  Eigen::VectorXcd amps = coherent_amplitudes(alpha, trunc);
  if (displacement != 0.0) amps = displacement_matrix(displacement, trunc.n_max()).cast<cplx>() * amps;
  const double norm = amps.norm();
  FockVector out;
  out.norm_deficit = std::abs(1.0 - norm * norm);
  if (out.norm_deficit > 1e-6)
    throw TruncationTooSmall("coherent state loses " + std::to_string(out.norm_deficit) +
                             " of its norm at n_max=" + std::to_string(trunc.n_max()));
  out.amplitudes = amps / norm;
  return out;
}

JointState::JointState(Eigen::VectorXcd amplitudes, std::shared_ptr<const SpinBasis> basis, ModelParams params,
                       FockTruncation truncation)
    : amplitudes_(std::move(amplitudes)),
      basis_(std::move(basis)),
      params_(params),
      truncation_(truncation) {
  if (!basis_) throw InvalidArgument("joint state needs a spin basis");
  if (amplitudes_.size() != static_cast<Eigen::Index>(basis_->dim()) * truncation_.dim())
    throw InvalidArgument("amplitude vector does not match spin x Fock dimension");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-10)
    throw InvalidArgument("joint state is not normalized (norm=" + std::to_string(norm) + ")");
}

JointState JointState::product(const Eigen::VectorXcd& spin, const Eigen::VectorXcd& fock,
                               std::shared_ptr<const SpinBasis> basis, const ModelParams& params,
                               const FockTruncation& truncation) {
  if (spin.size() != basis->dim() || fock.size() != truncation.dim())
    throw InvalidArgument("product state factor has the wrong dimension");
  Eigen::VectorXcd amps(spin.size() * fock.size());
  for (Eigen::Index s = 0; s < spin.size(); ++s) amps.segment(s * fock.size(), fock.size()) = spin(s) * fock;
  return JointState(std::move(amps), std::move(basis), params, truncation);
}

JointState JointState::product(int two_j, int two_m, const Eigen::VectorXcd& fock,
                               std::shared_ptr<const SpinBasis> basis, const ModelParams& params,
                               const FockTruncation& truncation) {
  const int idx = basis->index_of(two_j, two_m);
  if (idx < 0) throw InvalidArgument("spin label not present in basis");
  Eigen::VectorXcd spin = Eigen::VectorXcd::Zero(basis->dim());
  spin(idx) = 1.0;
  return product(spin, fock, std::move(basis), params, truncation);
}

Eigen::VectorXcd JointState::fock_block(int spin_index) const {
  return amplitudes_.segment(static_cast<Eigen::Index>(spin_index) * truncation_.dim(), truncation_.dim());
}

TruncationReport check_truncation(const Eigen::VectorXcd& fock, double threshold) {
  TruncationReport r;
  r.threshold = threshold;
  const Eigen::Index n_max = fock.size() - 1;
  for (Eigen::Index n = std::max<Eigen::Index>(0, n_max - 9); n <= n_max; ++n) r.tail_mass += std::norm(fock(n));
  r.flagged = r.tail_mass > threshold;
  return r;
}

TruncationReport check_truncation(const JointState& state, double threshold) {
  TruncationReport r;
  r.threshold = threshold;
  for (int s = 0; s < state.basis().dim(); ++s) r.tail_mass += check_truncation(state.fock_block(s), threshold).tail_mass;
  r.flagged = r.tail_mass > threshold;
  return r;
}

}  // namespace tcdyn
