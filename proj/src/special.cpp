#include "tcdyn/special.hpp"

#include <cmath>
#include <utility>

#include "tcdyn/errors.hpp"

namespace tcdyn {

double laguerre(int n, double x) { return assoc_laguerre(n, 0.0, x); }

double assoc_laguerre(int n, double a, double x) {
  if (n < 0) throw InvalidArgument("Laguerre degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double displaced_fock_overlap(int n, int n_prime, double gamma) {
  if (n < 0 || n_prime < 0) throw InvalidArgument("Fock indices must be >= 0");
  double sign = 1.0;
  if (n < n_prime) {
    // <n|D(g)|n'> = <n'|D(-g)|n> for real g.
    std::swap(n, n_prime);
    gamma = -gamma;
  }
  const int d = n - n_prime;
  const double g2 = gamma * gamma;
  if (d == 0) return std::exp(-0.5 * g2) * laguerre(n, g2);
  if (gamma == 0.0) return 0.0;
  if (gamma < 0.0 && (d % 2 == 1)) sign = -1.0;
  const double log_mag = 0.5 * (std::lgamma(n_prime + 1.0) - std::lgamma(n + 1.0)) +
                         d * std::log(std::abs(gamma)) - 0.5 * g2;
  return sign * std::exp(log_mag) * assoc_laguerre(n_prime, d, g2);
}

Eigen::MatrixXd displacement_matrix(double gamma, int n_max) {
  const int dim = n_max + 1;
  Eigen::MatrixXd d(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) d(i, j) = displaced_fock_overlap(i, j, gamma);
  return d;
}

}  // namespace tcdyn
