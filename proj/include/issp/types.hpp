// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_TYPES_HPP
#define ISSP_TYPES_HPP

#include <array>
#include <cmath>
#include <complex>

namespace issp {

// All complex scalars (field values, source values, kernel values, Fourier
// data) are std::complex<double>.
using Complex = std::complex<double>;

// Points and directions live in R^3 with the z component fixed to zero in
// two dimensions; the ambient dimension is carried by the grids.
using Point = std::array<double, 3>;

inline double dot(const Point& a, const Point& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point operator-(const Point& a, const Point& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Point operator+(const Point& a, const Point& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Point operator*(double s, const Point& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline double distance(const Point& a, const Point& b) { return norm(a - b); }

}  // namespace issp

#endif  // ISSP_TYPES_HPP
