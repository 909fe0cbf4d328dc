#include "tcdyn/model.hpp"

#include <cmath>
#include <string>

#include "tcdyn/errors.hpp"

namespace tcdyn {

ModelParams::ModelParams(double omega0, double beta, int n_qubits, double omega, double bias)
    : omega_(omega), omega0_(omega0), beta_(beta), n_qubits_(n_qubits), bias_(bias) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be positive and finite");
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw InvalidArgument("omega0 must be >= 0 and finite");
  if (!std::isfinite(beta)) throw InvalidArgument("beta must be finite");
  if (n_qubits < 1) throw InvalidArgument("n_qubits must be >= 1");
  if (bias != 0.0) throw InvalidArgument("static bias is not supported (must be 0)");
}

ModelParams ModelParams::with_omega0(double omega0) const {
  return ModelParams(omega0, beta_, n_qubits_, omega_, bias_);
}

ModelParams ModelParams::with_beta(double beta) const {
  return ModelParams(omega0_, beta, n_qubits_, omega_, bias_);
}

ModelParams ModelParams::with_qubits(int n_qubits) const {
  return ModelParams(omega0_, beta_, n_qubits, omega_, bias_);
}

FockTruncation::FockTruncation(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1, got " + std::to_string(n_max));
}

FockTruncation FockTruncation::for_coherent(double alpha_abs) {
  const double a = std::abs(alpha_abs);
  return FockTruncation(static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0)));
}

TimeGrid TimeGrid::linspace(double start, double stop, std::size_t samples) {
  if (samples < 2) throw InvalidArgument("time grid needs at least 2 samples");
  if (!(stop > start)) throw InvalidArgument("time grid stop must exceed start");
  return TimeGrid{start, (stop - start) / static_cast<double>(samples - 1), samples};
}

std::vector<double> TimeGrid::values() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = at(i);
  return out;
}

}  // namespace tcdyn
