// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a
// CPUID check, so nothing here may run at static-initialization time.

#include <immintrin.h>

#include <cmath>
#include <vector>

#include "tcdyn/kernels.hpp"

namespace tcdyn::kernels {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void cgemv_avx2(const SplitMatrixView& a, std::span<const double> x_re, std::span<const double> x_im,
                std::span<double> y_re, std::span<double> y_im) {
  const std::size_t rows = a.rows;
  const std::size_t vec_rows = rows & ~std::size_t{3};
  double* yr = y_re.data();
  double* yi = y_im.data();
  for (std::size_t i = 0; i < rows; ++i) {
    yr[i] = 0.0;
    yi[i] = 0.0;
  }
  const bool has_im = !a.im.empty();

  for (std::size_t j = 0; j < a.cols; ++j) {
    const double xr = x_re[j];
    const double xi = x_im[j];
    if (xr == 0.0 && xi == 0.0) continue;
    const __m256d vxr = _mm256_set1_pd(xr);
    const __m256d vxi = _mm256_set1_pd(xi);
    const double* ar = a.re.data() + j * rows;
    if (has_im) {
      const double* ai = a.im.data() + j * rows;
      std::size_t i = 0;
      for (; i < vec_rows; i += 4) {
        const __m256d vr = _mm256_loadu_pd(ar + i);
        const __m256d vi = _mm256_loadu_pd(ai + i);
        __m256d accr = _mm256_loadu_pd(yr + i);
        __m256d acci = _mm256_loadu_pd(yi + i);
        accr = _mm256_fmadd_pd(vr, vxr, accr);
        accr = _mm256_fnmadd_pd(vi, vxi, accr);
        acci = _mm256_fmadd_pd(vr, vxi, acci);
        acci = _mm256_fmadd_pd(vi, vxr, acci);
        _mm256_storeu_pd(yr + i, accr);
        _mm256_storeu_pd(yi + i, acci);
      }
      for (; i < rows; ++i) {
        yr[i] += ar[i] * xr - ai[i] * xi;
        yi[i] += ar[i] * xi + ai[i] * xr;
      }
    } else {
      std::size_t i = 0;
      for (; i < vec_rows; i += 4) {
        const __m256d vr = _mm256_loadu_pd(ar + i);
        _mm256_storeu_pd(yr + i, _mm256_fmadd_pd(vr, vxr, _mm256_loadu_pd(yr + i)));
        _mm256_storeu_pd(yi + i, _mm256_fmadd_pd(vr, vxi, _mm256_loadu_pd(yi + i)));
      }
      for (; i < rows; ++i) {
        yr[i] += ar[i] * xr;
        yi[i] += ar[i] * xi;
      }
    }
  }
}

// Rotates each phasor (cos f_k t, sin f_k t) by f_k dt per sample instead of
// calling cos/sin per term; the phasors are re-seeded from libm every
// kReseed samples so rotation roundoff never accumulates past ~1e-14.
constexpr std::size_t kReseed = 64;

void phasor_sum_avx2(std::span<const double> weights, std::span<const double> freqs, double t0, double dt,
                     std::span<double> out_re, std::span<double> out_im) {
  const std::size_t n = weights.size();
  const std::size_t padded = (n + 3) & ~std::size_t{3};
  std::vector<double> w(padded, 0.0), f(padded, 0.0), c(padded, 1.0), s(padded, 0.0), cr(padded, 1.0),
      sr(padded, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = weights[k];
    f[k] = freqs[k];
    cr[k] = std::cos(freqs[k] * dt);
    sr[k] = std::sin(freqs[k] * dt);
  }
  const bool want_im = !out_im.empty();

  for (std::size_t i = 0; i < out_re.size(); ++i) {
    if (i % kReseed == 0) {
      const double t = t0 + static_cast<double>(i) * dt;
      for (std::size_t k = 0; k < n; ++k) {
        c[k] = std::cos(f[k] * t);
        s[k] = std::sin(f[k] * t);
      }
    }
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t k = 0; k < padded; k += 4) {
      const __m256d vw = _mm256_loadu_pd(w.data() + k);
      const __m256d vc = _mm256_loadu_pd(c.data() + k);
      const __m256d vs = _mm256_loadu_pd(s.data() + k);
      const __m256d vcr = _mm256_loadu_pd(cr.data() + k);
      const __m256d vsr = _mm256_loadu_pd(sr.data() + k);
      acc_re = _mm256_fmadd_pd(vw, vc, acc_re);
      acc_im = _mm256_fmadd_pd(vw, vs, acc_im);
      _mm256_storeu_pd(c.data() + k, _mm256_fmsub_pd(vc, vcr, _mm256_mul_pd(vs, vsr)));
      _mm256_storeu_pd(s.data() + k, _mm256_fmadd_pd(vs, vcr, _mm256_mul_pd(vc, vsr)));
    }
    out_re[i] = hsum(acc_re);
    if (want_im) out_im[i] = hsum(acc_im);
  }
}

double sum_abs2_avx2(std::span<const double> re, std::span<const double> im) {
  const std::size_t n = re.size();
  const std::size_t vec_n = n & ~std::size_t{3};
  const bool has_im = !im.empty();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < vec_n; i += 4) {
    const __m256d r = _mm256_loadu_pd(re.data() + i);
    const __m256d m = has_im ? _mm256_loadu_pd(im.data() + i) : _mm256_setzero_pd();
    acc = _mm256_fmadd_pd(r, r, acc);
    acc = _mm256_fmadd_pd(m, m, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += re[i] * re[i] + (has_im ? im[i] * im[i] : 0.0);
  return s;
}

constexpr KernelTable kAvx2{Isa::Avx2, "avx2", &cgemv_avx2, &phasor_sum_avx2, &sum_abs2_avx2};

}  // namespace

const KernelTable* avx2_table_impl() { return &kAvx2; }

}  // namespace tcdyn::kernels
