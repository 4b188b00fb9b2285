// SPDX-License-Identifier: Apache-2.0

#include "issp/geometry.hpp"

#include <cmath>
#include <numbers>

namespace issp::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dimension(int d, const char* what) {
  if (d != 2 && d != 3) throw ConfigError(std::string(what) + ": dimension must be 2 or 3");
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw ConfigError("gauss_legendre: needs n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root of P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

BoundaryGrid make_circle_grid(double R, int n_theta) {
  if (!(R > 0.0)) throw ConfigError("make_circle_grid: R must be positive");
  if (n_theta < 8) throw ConfigError("make_circle_grid: needs n_theta >= 8");
  BoundaryGrid g;
  g.dimension = 2;
  g.radius = R;
  g.nodes.resize(n_theta);
  g.normals.resize(n_theta);
  g.weights.assign(n_theta, 2.0 * kPi * R / n_theta);
  for (int j = 0; j < n_theta; ++j) {
    const double th = 2.0 * kPi * j / n_theta;
    const double c = std::cos(th), s = std::sin(th);
    g.nodes[j] = {R * c, R * s, 0.0};
    g.normals[j] = {c, s, 0.0};
  }
  return g;
}

BoundaryGrid make_sphere_grid(double R, int n_theta, int n_phi) {
  if (!(R > 0.0)) throw ConfigError("make_sphere_grid: R must be positive");
  if (n_theta < 4 || n_phi < 8) {
    throw ConfigError("make_sphere_grid: needs n_theta >= 4 and n_phi >= 8");
  }
  BoundaryGrid g;
  g.dimension = 3;
  g.radius = R;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  std::vector<double> ct, w;
  gauss_legendre(n_theta, ct, w);
  g.thetas.resize(n_theta);
  g.phis.resize(n_phi);
  for (int k = 0; k < n_phi; ++k) g.phis[k] = 2.0 * kPi * k / n_phi;
  const double wphi = 2.0 * kPi / n_phi;
  g.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  g.normals.reserve(g.nodes.capacity());
  g.weights.reserve(g.nodes.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(ct[i]);
    g.thetas[i] = theta;
    const double st = std::sin(theta);
    for (int k = 0; k < n_phi; ++k) {
      const double cp = std::cos(g.phis[k]), sp = std::sin(g.phis[k]);
      const Point n{st * cp, st * sp, ct[i]};
      g.nodes.push_back({R * n[0], R * n[1], R * n[2]});
      g.normals.push_back(n);
      g.weights.push_back(R * R * w[i] * wphi);
    }
  }
  return g;
}

double ball_volume(int dimension, double r) {
  check_dimension(dimension, "ball_volume");
  return dimension == 2 ? kPi * r * r : 4.0 / 3.0 * kPi * r * r * r;
}

BallGrid make_ball_grid(int dimension, double r, int resolution) {
  check_dimension(dimension, "make_ball_grid");
  if (!(r > 0.0)) throw ConfigError("make_ball_grid: r must be positive");
  if (resolution < 16) throw ConfigError("make_ball_grid: needs resolution >= 16 per axis");
  BallGrid g;
  g.dimension = dimension;
  g.radius = r;
  g.resolution = resolution;
  const double h = 2.0 * r / resolution;
  const double cell = dimension == 2 ? h * h : h * h * h;
  const double half_diag = 0.5 * h * std::sqrt(static_cast<double>(dimension));
  const int nz = dimension == 2 ? 1 : resolution;
  std::vector<char> interior;
  for (int i = 0; i < resolution; ++i) {
    const double x = -r + (i + 0.5) * h;
    for (int j = 0; j < resolution; ++j) {
      const double y = -r + (j + 0.5) * h;
      for (int k = 0; k < nz; ++k) {
        const double z = dimension == 2 ? 0.0 : -r + (k + 0.5) * h;
        const double rho = std::sqrt(x * x + y * y + z * z);
        if (rho >= r) continue;
        g.nodes.push_back({x, y, z});
        g.weights.push_back(cell);
        interior.push_back(rho + half_diag <= r ? 1 : 0);
      }
    }
  }
  // Rescale cut cells so the total weight reproduces vol(B_r) exactly.
  double vol_in = 0.0;
  std::size_t n_cut = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (interior[i]) vol_in += g.weights[i];
    else ++n_cut;
  }
  if (n_cut > 0) {
    const double scale = (ball_volume(dimension, r) - vol_in) / (cell * n_cut);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      if (!interior[i]) g.weights[i] *= scale;
    }
  }
  return g;
}

FreqGrid make_freq_grid(double kappa_min, double K, int n_freq) {
  if (!(kappa_min > 0.0) || !(K > kappa_min)) {
    throw ConfigError("make_freq_grid: needs 0 < kappa_min < K");
  }
  if (n_freq < 16) throw ConfigError("make_freq_grid: needs n_freq >= 16");
  FreqGrid g;
  g.kappa_min = kappa_min;
  g.K = K;
  g.spacing = (K - kappa_min) / (n_freq - 1);
  g.kappas.resize(n_freq);
  for (int i = 0; i < n_freq; ++i) g.kappas[i] = kappa_min + i * g.spacing;
  g.kappas.back() = K;
  g.weights.assign(n_freq, g.spacing);
  // Fourth-order Gregory endpoint corrections (3/8, 7/6, 23/24).
  const double h = g.spacing;
  g.weights[0] = 3.0 / 8.0 * h;
  g.weights[1] = 7.0 / 6.0 * h;
  g.weights[2] = 23.0 / 24.0 * h;
  g.weights[n_freq - 1] = 3.0 / 8.0 * h;
  g.weights[n_freq - 2] = 7.0 / 6.0 * h;
  g.weights[n_freq - 3] = 23.0 / 24.0 * h;
  return g;
}

FreqGrid prefix_freq_grid(const FreqGrid& grid, double s) {
  const double h = grid.spacing;
  if (s > grid.K + 1e-9 * grid.K) {
    throw RangeError("prefix_freq_grid: s beyond grid range");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.kappas[i] <= s + 1e-9 * h) count = i + 1;
  }
  if (count < 16) throw RangeError("prefix_freq_grid: prefix shorter than 16 nodes");
  if (std::abs(grid.kappas[count - 1] - s) > 1e-6 * h) {
    throw RangeError("prefix_freq_grid: s does not lie on a grid node");
  }
  return make_freq_grid(grid.kappa_min, grid.kappas[count - 1], static_cast<int>(count));
}

DirectionSet make_circle_directions(int n) {
  if (n < 4) throw ConfigError("make_circle_directions: needs n >= 4");
  DirectionSet d;
  d.dimension = 2;
  d.dirs.resize(n);
  d.weights.assign(n, 2.0 * kPi / n);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    d.dirs[j] = {std::cos(th), std::sin(th), 0.0};
  }
  return d;
}

DirectionSet make_sphere_directions(int n_theta, int n_phi) {
  const BoundaryGrid s = make_sphere_grid(1.0, n_theta, n_phi);
  DirectionSet d;
  d.dimension = 3;
  d.dirs = s.normals;
  d.weights = s.weights;
  return d;
}

}  // namespace issp::geometry
