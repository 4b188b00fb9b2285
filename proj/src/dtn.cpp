// SPDX-License-Identifier: Apache-2.0

#include "issp/dtn.hpp"

#include <cmath>
#include <numbers>

#include "issp/errors.hpp"
#include "issp/specfun.hpp"

namespace issp::dtn {

namespace {

constexpr double kPi = std::numbers::pi;

void check_sizes(const geometry::BoundaryGrid& grid, const std::vector<Complex>& values,
                 const char* what) {
  if (values.size() != grid.size()) {
    throw ShapeError(std::string(what) + ": trace length does not match grid");
  }
}

void check_truncation(const geometry::BoundaryGrid& grid, int N, const char* what) {
  if (N < 0) throw CapError(std::string(what) + ": negative truncation");
  if (grid.dimension == 2) {
    if (N > static_cast<int>(grid.size()) / 2 - 1) {
      throw CapError(std::string(what) + ": truncation exceeds node_count/2 - 1");
    }
  } else {
    if (N > grid.n_theta - 1) {
      throw CapError(std::string(what) + ": truncation exceeds polar node count - 1");
    }
  }
}

// Azimuthal moments G_{i,m} = (2 pi / n_phi) sum_k u_{i,k} e^{-i m phi_k},
// m in [-N, N] at index m + N.
std::vector<Complex> azimuthal_moments(const geometry::BoundaryGrid& grid,
                                       const std::vector<Complex>& values, int N) {
  const int rows = grid.n_theta, cols = grid.n_phi;
  std::vector<Complex> g(static_cast<std::size_t>(rows) * (2 * N + 1), 0.0);
  const double wphi = 2.0 * kPi / cols;
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const Complex u = wphi * values[static_cast<std::size_t>(i) * cols + k];
      const Complex step = std::polar(1.0, -grid.phis[k]);
      Complex p = std::polar(1.0, N * grid.phis[k]);  // e^{-i(-N)phi}
      for (int m = -N; m <= N; ++m) {
        g[static_cast<std::size_t>(i) * (2 * N + 1) + (m + N)] += u * p;
        p *= step;
      }
    }
  }
  return g;
}

}  // namespace

int default_truncation(double kappa, double R) {
  return static_cast<int>(std::ceil(kappa * R)) + 32;
}

SpectralTrace analyze(const geometry::BoundaryGrid& grid,
                      const std::vector<Complex>& values, int truncation) {
  check_sizes(grid, values, "analyze");
  check_truncation(grid, truncation, "analyze");
  SpectralTrace t;
  t.dimension = grid.dimension;
  t.truncation = truncation;
  t.radius = grid.radius;
  const int N = truncation;

  if (grid.dimension == 2) {
    const int n = static_cast<int>(grid.size());
    t.coeff.assign(2 * N + 1, 0.0);
    for (int j = 0; j < n; ++j) {
      const double theta = 2.0 * kPi * j / n;
      const Complex u = values[j] / static_cast<double>(n);
      const Complex step = std::polar(1.0, -theta);
      Complex p = std::polar(1.0, N * theta);
      for (int m = -N; m <= N; ++m) {
        t.coeff[m + N] += u * p;
        p *= step;
      }
    }
    return t;
  }

  // d = 3: Gauss-Legendre exactness makes this a true projection up to
  // degree n_theta - 1.
  t.coeff.assign(specfun::sph_count(N), 0.0);
  const std::vector<Complex> g = azimuthal_moments(grid, values, N);
  std::vector<double> glw(grid.n_theta);
  {
    std::vector<double> nodes, w;
    geometry::gauss_legendre(grid.n_theta, nodes, w);
    glw = w;
  }
  for (int i = 0; i < grid.n_theta; ++i) {
    const double ct = std::cos(grid.thetas[i]);
    const double st = std::sin(grid.thetas[i]);
    const std::vector<double> p = specfun::legendre_normalized_all(N, ct, st);
    for (int n = 0; n <= N; ++n) {
      for (int m = -n; m <= n; ++m) {
        const int am = std::abs(m);
        double pv = p[specfun::legendre_index(n, am)];
        if (m < 0 && am % 2 != 0) pv = -pv;
        t.coeff[specfun::sph_index(n, m)] +=
            glw[i] * pv * g[static_cast<std::size_t>(i) * (2 * N + 1) + (m + N)];
      }
    }
  }
  return t;
}

std::vector<Complex> synthesize(const geometry::BoundaryGrid& grid,
                                const SpectralTrace& trace) {
  check_truncation(grid, trace.truncation, "synthesize");
  if (grid.dimension != trace.dimension) {
    throw ShapeError("synthesize: grid dimension does not match trace");
  }
  const int N = trace.truncation;
  std::vector<Complex> out(grid.size(), 0.0);

  if (grid.dimension == 2) {
    const int n = static_cast<int>(grid.size());
    for (int j = 0; j < n; ++j) {
      const double theta = 2.0 * kPi * j / n;
      const Complex step = std::polar(1.0, theta);
      Complex p = std::polar(1.0, -N * theta);
      Complex acc = 0.0;
      for (int m = -N; m <= N; ++m) {
        acc += trace.coeff[m + N] * p;
        p *= step;
      }
      out[j] = acc;
    }
    return out;
  }

  for (int i = 0; i < grid.n_theta; ++i) {
    const double ct = std::cos(grid.thetas[i]);
    const double st = std::sin(grid.thetas[i]);
    const std::vector<double> p = specfun::legendre_normalized_all(N, ct, st);
    // Row coefficients A_m = sum_n coeff_{n,m} Pbar_n^{|m|}.
    std::vector<Complex> a(2 * N + 1, 0.0);
    for (int n = 0; n <= N; ++n) {
      for (int m = -n; m <= n; ++m) {
        const int am = std::abs(m);
        double pv = p[specfun::legendre_index(n, am)];
        if (m < 0 && am % 2 != 0) pv = -pv;
        a[m + N] += trace.coeff[specfun::sph_index(n, m)] * pv;
      }
    }
    for (int k = 0; k < grid.n_phi; ++k) {
      const Complex step = std::polar(1.0, grid.phis[k]);
      Complex ph = std::polar(1.0, -N * grid.phis[k]);
      Complex acc = 0.0;
      for (int m = -N; m <= N; ++m) {
        acc += a[m + N] * ph;
        ph *= step;
      }
      out[static_cast<std::size_t>(i) * grid.n_phi + k] = acc;
    }
  }
  return out;
}

std::vector<Complex> apply_dtn(const geometry::BoundaryGrid& grid,
                               const std::vector<Complex>& values, double kappa,
                               int truncation) {
  if (!(kappa > 0.0)) throw DomainError("apply_dtn: kappa must be positive");
  SpectralTrace t = analyze(grid, values, truncation);
  t.kappa = kappa;
  const int N = truncation;
  const double x = kappa * grid.radius;
  if (grid.dimension == 2) {
    const std::vector<Complex> ratio = specfun::hankel1_dtn_ratios(N, x);
    for (int m = -N; m <= N; ++m) {
      t.coeff[m + N] *= kappa * ratio[std::abs(m)];
    }
  } else {
    const std::vector<Complex> ratio = specfun::sph_hankel1_dtn_ratios(N, x);
    for (int n = 0; n <= N; ++n) {
      for (int m = -n; m <= n; ++m) {
        t.coeff[specfun::sph_index(n, m)] *= kappa * ratio[n];
      }
    }
  }
  return synthesize(grid, t);
}

forward::BoundaryData neumann_from_dirichlet(const forward::BoundaryData& data,
                                             int truncation) {
  if (!data.grid) throw StateError("neumann_from_dirichlet: data has no grid");
  forward::BoundaryData out;
  out.kappa = data.kappa;
  out.grid = data.grid;
  out.dirichlet = data.dirichlet;
  out.neumann = apply_dtn(*data.grid, data.dirichlet, data.kappa, truncation);
  return out;
}

double grid_l2_sq(const geometry::BoundaryGrid& grid, const std::vector<Complex>& values) {
  check_sizes(grid, values, "grid_l2_sq");
  double s = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) s += grid.weights[j] * std::norm(values[j]);
  return s;
}

}  // namespace issp::dtn
