#include <cmath>

#include "tcdyn/kernels.hpp"

namespace tcdyn::kernels {

namespace {

void cgemv_scalar(const SplitMatrixView& a, std::span<const double> x_re, std::span<const double> x_im,
                  std::span<double> y_re, std::span<double> y_im) {
  const std::size_t rows = a.rows;
  for (std::size_t i = 0; i < rows; ++i) {
    y_re[i] = 0.0;
    y_im[i] = 0.0;
  }
  const bool has_im = !a.im.empty();
  for (std::size_t j = 0; j < a.cols; ++j) {
    const double xr = x_re[j];
    const double xi = x_im[j];
    const double* ar = a.re.data() + j * rows;
    if (has_im) {
      const double* ai = a.im.data() + j * rows;
      for (std::size_t i = 0; i < rows; ++i) {
        y_re[i] += ar[i] * xr - ai[i] * xi;
        y_im[i] += ar[i] * xi + ai[i] * xr;
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        y_re[i] += ar[i] * xr;
        y_im[i] += ar[i] * xi;
      }
    }
  }
}

void phasor_sum_scalar(std::span<const double> weights, std::span<const double> freqs, double t0, double dt,
                       std::span<double> out_re, std::span<double> out_im) {
  const bool want_im = !out_im.empty();
  for (std::size_t i = 0; i < out_re.size(); ++i) {
    const double t = t0 + static_cast<double>(i) * dt;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      re += weights[k] * std::cos(freqs[k] * t);
      if (want_im) im += weights[k] * std::sin(freqs[k] * t);
    }
    out_re[i] = re;
    if (want_im) out_im[i] = im;
  }
}

double sum_abs2_scalar(std::span<const double> re, std::span<const double> im) {
  double s = 0.0;
  if (im.empty()) {
    for (double r : re) s += r * r;
    return s;
  }
  for (std::size_t i = 0; i < re.size(); ++i) s += re[i] * re[i] + im[i] * im[i];
  return s;
}

constexpr KernelTable kScalar{Isa::Scalar, "scalar", &cgemv_scalar, &phasor_sum_scalar, &sum_abs2_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace tcdyn::kernels
