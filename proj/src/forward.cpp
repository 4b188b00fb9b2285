// SPDX-License-Identifier: Apache-2.0

#include "issp/forward.hpp"

#include <cmath>
#include <numbers>

#include "issp/errors.hpp"
#include "issp/parallel.hpp"
#include "issp/specfun.hpp"

namespace issp::forward {

namespace {

constexpr double kPi = std::numbers::pi;

double separation(const Point& x, const Point& y, int, const char* what) {
  const double rho = distance(x, y);
  if (!(rho > 0.0)) throw DomainError(std::string(what) + ": coincident points");
  return rho;
}

// Piecewise-Chebyshev table of (J0, Y0, J1, Y1)(t) over the argument range a
// single frequency sweeps, t = kappa |x - y|. Cells are an eighth of the
// oscillation period, degree 12, which keeps the interpolation error near
// machine precision; arguments below t_lo fall back to the series path.
class KernelTable {
 public:
  static constexpr int kCoef = 13;

  KernelTable(double t_lo, double t_hi) {
    t_lo_ = std::max(2.0, 0.9999 * t_lo);
    t_hi_ = 1.0001 * t_hi;
    if (t_hi_ <= t_lo_) {
      n_cells_ = 0;
      return;
    }
    n_cells_ = static_cast<int>(std::ceil((t_hi_ - t_lo_) / (kPi / 4.0)));
    cell_ = (t_hi_ - t_lo_) / n_cells_;
    coef_.resize(static_cast<std::size_t>(n_cells_) * 4 * kCoef);
    std::vector<double> fx(4 * kCoef);
    for (int c = 0; c < n_cells_; ++c) {
      const double a = t_lo_ + c * cell_;
      for (int k = 0; k < kCoef; ++k) {
        const double xk = std::cos((k + 0.5) * kPi / kCoef);
        const specfun::Bessel01 b = specfun::bessel01(a + 0.5 * cell_ * (xk + 1.0));
        fx[0 * kCoef + k] = b.j0;
        fx[1 * kCoef + k] = b.y0;
        fx[2 * kCoef + k] = b.j1;
        fx[3 * kCoef + k] = b.y1;
      }
      for (int comp = 0; comp < 4; ++comp) {
        double* out = &coef_[(static_cast<std::size_t>(c) * 4 + comp) * kCoef];
        for (int j = 0; j < kCoef; ++j) {
          double s = 0.0;
          for (int k = 0; k < kCoef; ++k) {
            s += fx[comp * kCoef + k] * std::cos(j * (k + 0.5) * kPi / kCoef);
          }
          out[j] = 2.0 * s / kCoef;
        }
        out[0] *= 0.5;
      }
    }
  }

  bool covers(double t) const { return n_cells_ > 0 && t >= t_lo_ && t <= t_hi_; }

  specfun::Bessel01 eval(double t) const {
    int c = static_cast<int>((t - t_lo_) / cell_);
    if (c >= n_cells_) c = n_cells_ - 1;
    const double a = t_lo_ + c * cell_;
    const double u = 2.0 * (t - a) / cell_ - 1.0;
    const double u2 = 2.0 * u;
    double vals[4];
    const double* base = &coef_[static_cast<std::size_t>(c) * 4 * kCoef];
    for (int comp = 0; comp < 4; ++comp) {
      const double* cf = base + comp * kCoef;
      double b1 = 0.0, b2 = 0.0;
      for (int j = kCoef - 1; j >= 1; --j) {
        const double b0 = cf[j] + u2 * b1 - b2;
        b2 = b1;
        b1 = b0;
      }
      vals[comp] = cf[0] + u * b1 - b2;
    }
    return {vals[0], vals[1], vals[2], vals[3]};
  }

 private:
  double t_lo_ = 0.0;
  double t_hi_ = 0.0;
  double cell_ = 1.0;
  int n_cells_ = 0;
  std::vector<double> coef_;
};

BoundaryData solve_one(const sources::SourceField& source, double kappa,
                       const std::shared_ptr<const geometry::BoundaryGrid>& boundary,
                       const geometry::BallGrid& ball,
                       const std::vector<Complex>& fw) {
  BoundaryData out;
  out.kappa = kappa;
  out.grid = boundary;
  const std::size_t nb = boundary->size();
  const std::size_t nv = ball.size();
  out.dirichlet.assign(nb, 0.0);
  out.neumann.assign(nb, 0.0);

  if (source.dimension == 2) {
    double rho_max = 0.0;
    for (const auto& y : ball.nodes) rho_max = std::max(rho_max, norm(y));
    const double t_lo = kappa * (boundary->radius - rho_max);
    const double t_hi = kappa * (boundary->radius + rho_max);
    const KernelTable table(t_lo, t_hi);
    for (std::size_t j = 0; j < nb; ++j) {
      const Point& x = boundary->nodes[j];
      const Point& nu = boundary->normals[j];
      Complex dir = 0.0, neu = 0.0;
      for (std::size_t k = 0; k < nv; ++k) {
        const Complex f = fw[k];
        if (f == Complex(0.0)) continue;
        const Point dxy = x - ball.nodes[k];
        const double rho = std::sqrt(dot(dxy, dxy));
        const double t = kappa * rho;
        const specfun::Bessel01 b = table.covers(t) ? table.eval(t) : specfun::bessel01(t);
        // Phi = (i/4) H_0 = (-y0 + i j0) / 4
        dir += f * Complex(-b.y0, b.j0);
        // dPhi/dnu = -(i kappa / 4) H_1 * cosang
        const double ca = dot(dxy, nu) / rho;
        neu += (kappa * ca) * f * Complex(b.y1, -b.j1);
      }
      out.dirichlet[j] = -0.25 * dir;
      out.neumann[j] = -0.25 * neu;
    }
  } else {
    for (std::size_t j = 0; j < nb; ++j) {
      const Point& x = boundary->nodes[j];
      const Point& nu = boundary->normals[j];
      Complex dir = 0.0, neu = 0.0;
      for (std::size_t k = 0; k < nv; ++k) {
        const Complex f = fw[k];
        if (f == Complex(0.0)) continue;
        const Point dxy = x - ball.nodes[k];
        const double rho = std::sqrt(dot(dxy, dxy));
        const double t = kappa * rho;
        const Complex eikr(std::cos(t), std::sin(t));
        const Complex phi = eikr / rho;
        dir += f * phi;
        const double ca = dot(dxy, nu) / (rho * rho);
        neu += f * phi * Complex(-ca, kappa * ca * rho);
      }
      out.dirichlet[j] = -dir / (4.0 * kPi);
      out.neumann[j] = -neu / (4.0 * kPi);
    }
  }
  return out;
}

std::vector<Complex> weighted_source_values(const sources::SourceField& source,
                                            const geometry::BallGrid& ball) {
  if (ball.dimension != source.dimension) {
    throw ShapeError("solve_forward: ball grid dimension mismatch");
  }
  std::vector<Complex> fw(ball.size());
  for (std::size_t k = 0; k < ball.size(); ++k) {
    fw[k] = ball.weights[k] * sources::evaluate(source, ball.nodes[k]);
  }
  return fw;
}

}  // namespace

Complex green_kernel(int dimension, double kappa, const Point& x, const Point& y) {
  if (!(kappa > 0.0)) throw DomainError("green_kernel: kappa must be positive");
  const double rho = separation(x, y, dimension, "green_kernel");
  if (dimension == 2) {
    const Complex h = specfun::hankel1(0, kappa * rho);
    return Complex(0.0, 0.25) * h;
  }
  if (dimension == 3) {
    const double t = kappa * rho;
    return Complex(std::cos(t), std::sin(t)) / (4.0 * kPi * rho);
  }
  throw DomainError("green_kernel: dimension must be 2 or 3");
}

Complex green_kernel_normal_deriv(int dimension, double kappa, const Point& x,
                                  const Point& normal, const Point& y) {
  if (!(kappa > 0.0)) throw DomainError("green_kernel_normal_deriv: kappa must be positive");
  const double rho = separation(x, y, dimension, "green_kernel_normal_deriv");
  const Point dxy = x - y;
  const double ca = dot(dxy, normal) / rho;
  if (dimension == 2) {
    // d/drho (i/4) H_0(kappa rho) = -(i kappa / 4) H_1(kappa rho)
    const Complex h1 = specfun::hankel1(1, kappa * rho);
    return Complex(0.0, -0.25 * kappa) * h1 * ca;
  }
  if (dimension == 3) {
    const double t = kappa * rho;
    const Complex eikr(std::cos(t), std::sin(t));
    return eikr * Complex(-1.0, t) / (4.0 * kPi * rho * rho) * ca;
  }
  throw DomainError("green_kernel_normal_deriv: dimension must be 2 or 3");
}

BoundaryData solve_forward(const sources::SourceField& source, double kappa,
                           std::shared_ptr<const geometry::BoundaryGrid> boundary,
                           const geometry::BallGrid& ball) {
  if (!(kappa > 0.0)) throw DomainError("solve_forward: kappa must be positive");
  if (boundary->dimension != source.dimension) {
    throw ShapeError("solve_forward: boundary grid dimension mismatch");
  }
  const std::vector<Complex> fw = weighted_source_values(source, ball);
  return solve_one(source, kappa, boundary, ball, fw);
}

FrequencyDataset solve_forward_band(const sources::SourceField& source,
                                    std::shared_ptr<const geometry::BoundaryGrid> boundary,
                                    const geometry::BallGrid& ball,
                                    const geometry::FreqGrid& freqs, int jobs) {
  FrequencyDataset ds;
  ds.dimension = source.dimension;
  ds.grid = boundary;
  ds.freqs = freqs;
  ds.per_freq.resize(freqs.size());
  const std::vector<Complex> fw = weighted_source_values(source, ball);
  parallel_for(freqs.size(), jobs, [&](std::size_t i) {
    ds.per_freq[i] = solve_one(source, freqs.kappas[i], boundary, ball, fw);
  });
  return ds;
}

}  // namespace issp::forward
