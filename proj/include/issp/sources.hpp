// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_SOURCES_HPP
#define ISSP_SOURCES_HPP

#include <string>
#include <vector>

#include "issp/errors.hpp"
#include "issp/geometry.hpp"
#include "issp/types.hpp"

namespace issp::sources {

enum class SourceFamily { kGaussianSum, kBumpPoly, kFourierBessel };

SourceFamily family_from_string(const std::string& name);
std::string family_to_string(SourceFamily family);

// One radial atom a * G(|y - c|^2). The profile G depends on the family:
//   gaussian_sum:    G(z) = exp(-z / (2 sigma^2))
//   bump_poly:       G(z) = (1 - z / sigma^2)_+^p
//   fourier_bessel:  G(z) = J_0(alpha sqrt(z)) on z < sigma^2, alpha chosen so
//                    the q-th zero of the profile lands on |y - c| = sigma
//                    (d = 2; the 3-d analogue uses sin(alpha rho)/(alpha rho)).
struct SourceAtom {
  Point center{0.0, 0.0, 0.0};
  double width = 0.1;    // sigma
  Complex amplitude = 1.0;
  int power = 4;         // bump_poly exponent p
  int mode = 1;          // fourier_bessel radial mode q >= 1
};

struct SourceField {
  int dimension = 2;
  SourceFamily family = SourceFamily::kGaussianSum;
  std::vector<SourceAtom> atoms;
  double support_radius = 0.0;  // r
};

// Validates the numerical-compact-support invariant: |f| sampled just inside
// |y| = r must stay below 1e-12 of the peak magnitude.
SourceField make_source(int dimension, SourceFamily family,
                        std::vector<SourceAtom> atoms, double support_radius);

// f(y); exactly zero for |y| >= support_radius.
Complex evaluate(const SourceField& source, const Point& y);

// fhat(xi) = integral of e^{-i xi . y} f(y) dy. Closed form for gaussian
// sums; other families fall back to an oracle-quality 1-d radial quadrature
// of the profile's Hankel/sine transform.
Complex analytic_fourier(const SourceField& source, const Point& xi);

// Radial part of the transform of a single centred atom (no phase factor).
double radial_fourier(const SourceField& source, const SourceAtom& atom, double k);

struct SobolevEstimate {
  int order = 0;
  double value = 0.0;
};

// Discrete H^order norm on the grid, with the Bessel-potential weights
//   ||f||^2 = sum_{j<=order} C(order,j) sum_{|a|=j} (j!/a!) ||d^a f||^2_L2,
// whose Fourier-side multiplier is exactly (1 + |xi|^2)^order. Derivatives
// come from closed-form differentiation of the radial profiles.
SobolevEstimate sobolev_norm(const SourceField& source, int order,
                             const geometry::BallGrid& grid);

// Scaled difference a - b (atom-wise concatenation); used for the f1 - f2
// pairs of the stability experiments.
SourceField source_difference(const SourceField& a, const SourceField& b);

}  // namespace issp::sources

#endif  // ISSP_SOURCES_HPP
