// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_SPECFUN_HPP
#define ISSP_SPECFUN_HPP

#include <vector>

#include "issp/errors.hpp"
#include "issp/types.hpp"

namespace issp::specfun {

// Hard cap on Bessel/Hankel orders and spherical-harmonic degrees; exceeding
// it raises CapError instead of silently losing accuracy.
inline constexpr int kDefaultOrderMax = 256;

// J_0, Y_0, J_1, Y_1 evaluated together (they share the series machinery and
// all higher orders recur from them).
struct Bessel01 {
  double j0;
  double y0;
  double j1;
  double y1;
};

// Full-double-accuracy base values for x > 0. Series for x <= 16 (long double
// accumulation above x = 6 where the alternating terms start to cancel),
// Hankel asymptotic expansion beyond.
Bessel01 bessel01(double x);

// Cylindrical J_n(x), Y_n(x) for integer n >= 0, x > 0. J_n uses upward
// recurrence for n < x and Miller's normalized downward recurrence for
// n >= x; Y_n always recurs upward (Y is the dominant solution).
double bessel_j(int order, double x, int order_max = kDefaultOrderMax);
double bessel_y(int order, double x, int order_max = kDefaultOrderMax);

// H_n^{(1)}(x) = J_n(x) + i Y_n(x).
Complex hankel1(int order, double x, int order_max = kDefaultOrderMax);

// H_n^{(1)'}(x) / H_n^{(1)}(x) via H'_n = H_{n-1} - (n/x) H_n. The batch
// variant returns orders 0..max_order and keeps the recurrence rescaled, so
// it stays finite in regimes where H_n itself would overflow.
Complex hankel1_dtn_ratio(int order, double x, int order_max = kDefaultOrderMax);
std::vector<Complex> hankel1_dtn_ratios(int max_order, double x);

// Spherical Hankel functions of the first kind, h_n^{(1)}, via the closed
// forms h_0 = -i e^{ix}/x, h_1 = -e^{ix}(x+i)/x^2 and upward recurrence.
Complex sph_hankel1(int order, double x, int order_max = kDefaultOrderMax);

// h_n^{(1)'}(x) / h_n^{(1)}(x) via h'_n = h_{n-1} - ((n+1)/x) h_n.
Complex sph_hankel1_dtn_ratio(int order, double x, int order_max = kDefaultOrderMax);
std::vector<Complex> sph_hankel1_dtn_ratios(int max_order, double x);

// Orthonormal complex spherical harmonics with the Condon-Shortley phase:
//   integral over S^2 of Y_n^m conj(Y_n'^m') dOmega = delta delta.
Complex sph_harmonic(int degree, int order, double theta, double phi,
                     int degree_max = kDefaultOrderMax);

// All Y_n^m for n <= max_degree at one point, indexed by sph_index(n, m).
std::vector<Complex> sph_harmonic_all(int max_degree, double theta, double phi);

// Orthonormal associated Legendre block Pbar_n^m(cos theta) for m >= 0 with
// the Condon-Shortley phase and the 1/sqrt(4 pi) factor folded in, so
// Y_n^m = Pbar_n^m e^{i m phi}. Indexed by legendre_index(n, m).
std::vector<double> legendre_normalized_all(int max_degree, double cos_theta,
                                            double sin_theta);

inline std::size_t legendre_index(int n, int m) {
  return static_cast<std::size_t>(n) * (n + 1) / 2 + m;
}

inline std::size_t sph_index(int n, int m) {
  return static_cast<std::size_t>(n) * n + n + m;
}

inline std::size_t sph_count(int max_degree) {
  return static_cast<std::size_t>(max_degree + 1) * (max_degree + 1);
}

}  // namespace issp::specfun

#endif  // ISSP_SPECFUN_HPP
