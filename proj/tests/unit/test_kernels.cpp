#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tcdyn/kernels.hpp"

using namespace tcdyn::kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (const KernelTable* t = avx2_table(); t && cpu_has_avx2()) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("TCDYN_SIMD=scalar pins the scalar table") {
  const char* env = std::getenv("TCDYN_SIMD");
  if (env && std::string_view(env) == "scalar") CHECK(active().isa == Isa::Scalar);
  else if (avx2_table() && cpu_has_avx2()) CHECK(active().isa == Isa::Avx2);
  MESSAGE("active kernel: " << std::string(active().name));
}

TEST_CASE("cgemv agrees with a naive complex product for every size and table") {
  std::mt19937_64 rng(7);
  for (std::size_t rows : {1u, 3u, 4u, 7u, 17u, 64u})
    for (std::size_t cols : {1u, 2u, 5u, 33u}) {
      const auto are = random_vec(rng, rows * cols), aim = random_vec(rng, rows * cols);
      const auto xre = random_vec(rng, cols), xim = random_vec(rng, cols);
      std::vector<double> ref_re(rows, 0.0), ref_im(rows, 0.0);
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) {
          const double r = are[j * rows + i], m = aim[j * rows + i];
          ref_re[i] += r * xre[j] - m * xim[j];
          ref_im[i] += r * xim[j] + m * xre[j];
        }
      for (const KernelTable* t : tables()) {
        std::vector<double> yre(rows), yim(rows);
        t->cgemv({are, aim, rows, cols}, xre, xim, yre, yim);
        for (std::size_t i = 0; i < rows; ++i) {
          CHECK(std::abs(yre[i] - ref_re[i]) <= 1e-13);
          CHECK(std::abs(yim[i] - ref_im[i]) <= 1e-13);
        }
        // Real-only matrix: empty imaginary plane.
        t->cgemv({are, {}, rows, cols}, xre, xim, yre, yim);
        double worst = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          double sr = 0.0, si = 0.0;
          for (std::size_t j = 0; j < cols; ++j) {
            sr += are[j * rows + i] * xre[j];
            si += are[j * rows + i] * xim[j];
          }
          worst = std::max({worst, std::abs(sr - yre[i]), std::abs(si - yim[i])});
        }
        CHECK(worst <= 1e-13);
      }
    }
}

TEST_CASE("phasor_sum agrees across tables and with std::cos/std::sin") {
  std::mt19937_64 rng(11);
  for (std::size_t k : {1u, 5u, 40u})
    for (std::size_t n : {1u, 3u, 4u, 9u, 1001u}) {
      auto w = random_vec(rng, k);
      auto f = random_vec(rng, k);
      for (double& x : f) x *= 0.2;
      const double t0 = 3.0, dt = 0.7;
      std::vector<double> ref_re(n, 0.0), ref_im(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const double ph = f[j] * (t0 + static_cast<double>(i) * dt);
          ref_re[i] += w[j] * std::cos(ph);
          ref_im[i] += w[j] * std::sin(ph);
        }
      for (const KernelTable* t : tables()) {
        std::vector<double> re(n), im(n);
        t->phasor_sum(w, f, t0, dt, re, im);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          worst = std::max({worst, std::abs(re[i] - ref_re[i]), std::abs(im[i] - ref_im[i])});
        CHECK(worst <= 1e-11);
        std::vector<double> re_only(n);
        t->phasor_sum(w, f, t0, dt, re_only, {});
        double gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(re_only[i] - re[i]));
        CHECK(gap <= 1e-13);
      }
    }
}

TEST_CASE("scalar and AVX2 tables are equivalent on the same input") {
  const KernelTable* v = avx2_table();
  if (!v || !cpu_has_avx2()) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(3);
  const auto re = random_vec(rng, 1237), im = random_vec(rng, 1237);
  CHECK(std::abs(scalar_table().sum_abs2(re, im) - v->sum_abs2(re, im)) <= 1e-12);
  auto w = random_vec(rng, 200), f = random_vec(rng, 200);
  std::vector<double> a(5000), b(5000);
  scalar_table().phasor_sum(w, f, 0.0, 0.5, a, {});
  v->phasor_sum(w, f, 0.0, 0.5, b, {});
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  CHECK(worst <= 1e-11);
}

TEST_CASE("sum_abs2 handles tails and empty imaginary planes") {
  for (const KernelTable* t : tables()) {
    const std::vector<double> re{1, 2, 3, 4, 5}, im{1, 1, 1, 1, 1};
    CHECK(t->sum_abs2(re, im) == doctest::Approx(60.0));
    CHECK(t->sum_abs2(re, {}) == doctest::Approx(55.0));
    CHECK(t->sum_abs2({}, {}) == 0.0);
  }
}
