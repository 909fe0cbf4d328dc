#pragma once

#include <Eigen/Dense>

namespace tcdyn {

/// Laguerre polynomial L_n(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
double laguerre(int n, double x);

/// Generalized Laguerre polynomial L_n^{(a)}(x), a > -1.
double assoc_laguerre(int n, double a, double x);

/// Matrix element <n| D(gamma) |n'> of the real displacement
/// D(gamma) = exp(gamma (a^dag - a)).
///
/// For n >= n':  sqrt(n'!/n!) gamma^(n-n') e^{-gamma^2/2} L_{n'}^{(n-n')}(gamma^2)
/// For n <  n':  the same with (n, n') swapped and gamma -> -gamma.
///
/// With |N_m> = D(-m beta)|N>, the overlap <N_m|N'_{m'}> equals
/// displaced_fock_overlap(N, N', (m - m') beta).
double displaced_fock_overlap(int n, int n_prime, double gamma);

/// Dense (n_max+1)^2 matrix of exact displacement elements on the truncated
/// basis. Not unitary once gamma moves weight past n_max.
Eigen::MatrixXd displacement_matrix(double gamma, int n_max);

}  // namespace tcdyn
