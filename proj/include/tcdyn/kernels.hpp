#pragma once

#include <cstddef>
#include <span>

// Inner loops shared by the propagator and the Poisson-sum engines. Each
// kernel has a portable scalar reference and an AVX2/FMA variant; the variant
// is chosen once at runtime from CPUID and can be pinned to the scalar path
// with TCDYN_SIMD=scalar.

namespace tcdyn::kernels {

enum class Isa { Scalar, Avx2 };

/// Column-major complex matrix stored as separate real and imaginary planes.
/// `im` may be empty for a purely real matrix.
struct SplitMatrixView {
  std::span<const double> re;
  std::span<const double> im;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct KernelTable {
  Isa isa;
  const char* name;

  /// y = A x for split-complex A, x, y. y must not alias x.
  void (*cgemv)(const SplitMatrixView& a, std::span<const double> x_re, std::span<const double> x_im,
                std::span<double> y_re, std::span<double> y_im);

  /// out_re[i] = sum_k w_k cos(f_k t_i), out_im[i] = sum_k w_k sin(f_k t_i),
  /// t_i = t0 + i*dt. out_im may be empty.
  void (*phasor_sum)(std::span<const double> weights, std::span<const double> freqs, double t0, double dt,
                     std::span<double> out_re, std::span<double> out_im);

  /// sum_i re_i^2 + im_i^2; `im` may be empty.
  double (*sum_abs2)(std::span<const double> re, std::span<const double> im);
};

const KernelTable& scalar_table();
/// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_table();
/// True when the running CPU reports AVX2 and FMA.
bool cpu_has_avx2();

/// Table selected for this process.
const KernelTable& active();

}  // namespace tcdyn::kernels
