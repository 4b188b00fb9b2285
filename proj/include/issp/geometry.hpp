// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_GEOMETRY_HPP
#define ISSP_GEOMETRY_HPP

#include <vector>

#include "issp/errors.hpp"
#include "issp/types.hpp"

namespace issp::geometry {

// Quadrature nodes on the boundary of B_R. Circles use the uniform-angle
// trapezoid rule (node j at theta = 2 pi j / n); spheres use Gauss-Legendre
// in cos(theta) times a uniform azimuth, so spherical-harmonic analysis up to
// degree n_theta - 1 is an exact projection.
struct BoundaryGrid {
  int dimension = 2;
  double radius = 0.0;
  std::vector<Point> nodes;
  std::vector<Point> normals;
  std::vector<double> weights;
  // Sphere structure (d = 3): node index = i_theta * n_phi + i_phi.
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> thetas;
  std::vector<double> phis;

  std::size_t size() const { return nodes.size(); }
};

// Volume quadrature covering B_r: tensor-product cells clipped to the ball.
// Cells cut by the sphere keep their nodes but get rescaled weights so the
// total reproduces vol(B_r) exactly; sources vanish there, so integrals of
// interest are unaffected.
struct BallGrid {
  int dimension = 2;
  double radius = 0.0;
  int resolution = 0;
  std::vector<Point> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// Frequency quadrature on [kappa_min, K]: uniform nodes with fourth-order
// Gregory (endpoint-corrected trapezoid) weights. Exact on cubics, and any
// prefix of the nodes is again a valid grid with the same spacing.
struct FreqGrid {
  double kappa_min = 0.0;
  double K = 0.0;
  double spacing = 0.0;
  std::vector<double> kappas;
  std::vector<double> weights;

  std::size_t size() const { return kappas.size(); }
};

// Unit directions with quadrature weights summing to |S^{d-1}|.
struct DirectionSet {
  int dimension = 2;
  std::vector<Point> dirs;
  std::vector<double> weights;

  std::size_t size() const { return dirs.size(); }
};

// Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

BoundaryGrid make_circle_grid(double R, int n_theta);
BoundaryGrid make_sphere_grid(double R, int n_theta, int n_phi);
BallGrid make_ball_grid(int dimension, double r, int resolution);
FreqGrid make_freq_grid(double kappa_min, double K, int n_freq);

// Leading sub-grid of `grid` covering [kappa_min, s]; s must lie on a node.
FreqGrid prefix_freq_grid(const FreqGrid& grid, double s);

DirectionSet make_circle_directions(int n);
DirectionSet make_sphere_directions(int n_theta, int n_phi);

double ball_volume(int dimension, double r);

}  // namespace issp::geometry

#endif  // ISSP_GEOMETRY_HPP
