#pragma once

#include <cstddef>
#include <vector>

namespace tcdyn {

/// Physical constants of the qubit-oscillator model.
///
/// All quantities are expressed in units of the oscillator frequency: the
/// library works with hbar = omega = 1 internally, so only the ratio
/// omega0/omega enters the dynamics and times are measured in 1/omega.
/// Instances are immutable and validated on construction.
class ModelParams {
 public:
  /// Throws InvalidArgument if omega <= 0, omega0 < 0, n_qubits < 1 or
  /// bias != 0 (static bias is not modelled).
  ModelParams(double omega0, double beta, int n_qubits = 2, double omega = 1.0, double bias = 0.0);

  double omega() const { return omega_; }
  double omega0() const { return omega0_; }
  double beta() const { return beta_; }
  int n_qubits() const { return n_qubits_; }
  double bias() const { return bias_; }

  /// omega0 / omega, the qubit splitting in oscillator units.
  double omega0_ratio() const { return omega0_ / omega_; }
  double beta_squared() const { return beta_ * beta_; }

  ModelParams with_omega0(double omega0) const;
  ModelParams with_beta(double beta) const;
  ModelParams with_qubits(int n_qubits) const;

 private:
  double omega_;
  double omega0_;
  double beta_;
  int n_qubits_;
  double bias_;
};

/// Size of the truncated oscillator basis {|0>, ..., |n_max>}.
class FockTruncation {
 public:
  explicit FockTruncation(int n_max);

  /// ceil(|alpha|^2 + 10|alpha| + 20): keeps the Poisson tail below 1e-10.
  static FockTruncation for_coherent(double alpha_abs);

  int n_max() const { return n_max_; }
  int dim() const { return n_max_ + 1; }

  bool operator==(const FockTruncation&) const = default;

 private:
  int n_max_;
};

/// Uniform sampling grid t_i = start + i * step, i = 0..count-1.
struct TimeGrid {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  static TimeGrid linspace(double start, double stop, std::size_t samples);

  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double stop() const { return count == 0 ? start : at(count - 1); }
  std::vector<double> values() const;
};

}  // namespace tcdyn
