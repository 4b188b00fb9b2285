// SPDX-License-Identifier: Apache-2.0

#include "issp/sources.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "issp/specfun.hpp"

namespace issp::sources {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSobolevCap = 8;

// First zeros of J_0.
constexpr double kJ0Zeros[] = {2.404825557695773,  5.520078110286311,
                               8.653727912911013,  11.791534439014281,
                               14.930917708487787, 18.071063967910924,
                               21.21163662987926,  24.352471530749302};

double bessel_alpha(const SourceAtom& atom, int dimension) {
  const int q = atom.mode;
  if (q < 1 || q > 8) throw ConfigError("fourier_bessel: mode must be in [1, 8]");
  if (dimension == 2) return kJ0Zeros[q - 1] / atom.width;
  return kPi * q / atom.width;
}

// Profile value G(z) with z = |y - c|^2.
double profile(const SourceField& s, const SourceAtom& atom, double z) {
  switch (s.family) {
    case SourceFamily::kGaussianSum:
      return std::exp(-z / (2.0 * atom.width * atom.width));
    case SourceFamily::kBumpPoly: {
      const double w = 1.0 - z / (atom.width * atom.width);
      if (w <= 0.0) return 0.0;
      return std::pow(w, atom.power);
    }
    case SourceFamily::kFourierBessel: {
      if (z >= atom.width * atom.width) return 0.0;
      const double alpha = bessel_alpha(atom, s.dimension);
      const double t = alpha * std::sqrt(z);
      if (s.dimension == 2) return specfun::bessel_j(0, std::max(t, 1e-300));
      return t < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
    }
  }
  return 0.0;
}

// j-th derivative of the profile with respect to z.
double profile_deriv(const SourceField& s, const SourceAtom& atom, double z, int j) {
  const double sig2 = atom.width * atom.width;
  switch (s.family) {
    case SourceFamily::kGaussianSum: {
      const double beta = 1.0 / (2.0 * sig2);
      double c = 1.0;
      for (int i = 0; i < j; ++i) c *= -beta;
      return c * std::exp(-beta * z);
    }
    case SourceFamily::kBumpPoly: {
      if (z >= sig2) return 0.0;
      if (j > atom.power) return 0.0;
      double c = 1.0;
      for (int i = 0; i < j; ++i) c *= -(atom.power - i) / sig2;
      return c * std::pow(1.0 - z / sig2, atom.power - j);
    }
    case SourceFamily::kFourierBessel: {
      if (z >= sig2) return 0.0;
      const double alpha = bessel_alpha(atom, s.dimension);
      const double a2 = alpha * alpha;
      // d=2: G(z) = sum (-1)^k (a2/4)^k z^k / (k!)^2
      // d=3: G(z) = sum (-1)^k a2^k z^k / (2k+1)!
      double sum = 0.0;
      double term;  // k = j term
      if (s.dimension == 2) {
        // term_j = (-1)^j (a2/4)^j / j!   (z^0 factor, 1/(k-j)! = 1)
        term = 1.0;
        for (int i = 1; i <= j; ++i) term *= -(a2 / 4.0) / i;
      } else {
        term = 1.0;
        double fact = 1.0;  // (2k+1)!/k! accumulator handled incrementally below
        for (int i = 1; i <= j; ++i) term *= -a2;
        // divide by (2j+1)!/j!
        for (int i = 1; i <= 2 * j + 1; ++i) fact *= i;
        double jf = 1.0;
        for (int i = 1; i <= j; ++i) jf *= i;
        term *= jf / fact;
      }
      for (int k = j; k < j + 400; ++k) {
        sum += term;
        // advance k -> k+1
        double ratio;
        if (s.dimension == 2) {
          ratio = -(a2 / 4.0) * z / (static_cast<double>(k + 1 - j) * (k + 1));
        } else {
          ratio = -a2 * z * (k + 1) /
                  (static_cast<double>(k + 1 - j) * (2.0 * k + 2) * (2.0 * k + 3));
        }
        term *= ratio;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30) && k > j + 4) break;
      }
      return sum;
    }
  }
  return 0.0;
}

// Symbolic Cartesian derivative of G(|t|^2): a sum of coeff * t^m * G^{(j)}.
struct TermKey {
  std::array<int, 3> mono;
  int deriv;
  bool operator<(const TermKey& o) const {
    if (mono != o.mono) return mono < o.mono;
    return deriv < o.deriv;
  }
};
using TermMap = std::map<TermKey, double>;

TermMap differentiate(const TermMap& in, int axis) {
  TermMap out;
  for (const auto& [key, c] : in) {
    if (key.mono[axis] > 0) {
      TermKey k = key;
      k.mono[axis] -= 1;
      out[k] += c * key.mono[axis];
    }
    TermKey k2 = key;
    k2.mono[axis] += 1;
    k2.deriv += 1;
    out[k2] += 2.0 * c;
  }
  return out;
}

TermMap derivative_terms(const std::array<int, 3>& alpha) {
  TermMap terms;
  terms[TermKey{{0, 0, 0}, 0}] = 1.0;
  for (int axis = 0; axis < 3; ++axis) {
    for (int k = 0; k < alpha[axis]; ++k) terms = differentiate(terms, axis);
  }
  return terms;
}

double peak_probe(const SourceField& s) {
  // Peak magnitude estimate: atom centres plus a coarse polar sweep.
  double peak = 0.0;
  for (const auto& atom : s.atoms) peak = std::max(peak, std::abs(evaluate(s, atom.center)));
  const int nr = 24, na = 16;
  for (int i = 1; i <= nr; ++i) {
    const double rho = s.support_radius * i / (nr + 1);
    for (int a = 0; a < na; ++a) {
      const double th = 2.0 * kPi * a / na;
      for (int b = 0; b < (s.dimension == 3 ? na / 2 : 1); ++b) {
        Point y;
        if (s.dimension == 2) {
          y = {rho * std::cos(th), rho * std::sin(th), 0.0};
        } else {
          const double ph = kPi * (b + 0.5) / (na / 2);
          y = {rho * std::sin(ph) * std::cos(th), rho * std::sin(ph) * std::sin(th),
               rho * std::cos(ph)};
        }
        peak = std::max(peak, std::abs(evaluate(s, y)));
      }
    }
  }
  return peak;
}

}  // namespace

SourceFamily family_from_string(const std::string& name) {
  if (name == "gaussian_sum") return SourceFamily::kGaussianSum;
  if (name == "bump_poly") return SourceFamily::kBumpPoly;
  if (name == "fourier_bessel") return SourceFamily::kFourierBessel;
  throw ConfigError("unknown source family: " + name);
}

std::string family_to_string(SourceFamily family) {
  switch (family) {
    case SourceFamily::kGaussianSum: return "gaussian_sum";
    case SourceFamily::kBumpPoly: return "bump_poly";
    case SourceFamily::kFourierBessel: return "fourier_bessel";
  }
  return "?";
}

Complex evaluate(const SourceField& source, const Point& y) {
  if (norm(y) >= source.support_radius) return 0.0;
  Complex v = 0.0;
  for (const auto& atom : source.atoms) {
    const Point t = y - atom.center;
    v += atom.amplitude * profile(source, atom, dot(t, t));
  }
  return v;
}

SourceField make_source(int dimension, SourceFamily family,
                        std::vector<SourceAtom> atoms, double support_radius) {
  if (dimension != 2 && dimension != 3) {
    throw ConfigError("make_source: dimension must be 2 or 3");
  }
  if (atoms.empty()) throw ConfigError("make_source: needs at least one atom");
  if (!(support_radius > 0.0)) throw ConfigError("make_source: support radius must be positive");
  SourceField s;
  s.dimension = dimension;
  s.family = family;
  s.atoms = std::move(atoms);
  s.support_radius = support_radius;
  for (const auto& atom : s.atoms) {
    if (!(atom.width > 0.0)) throw ConfigError("make_source: atom width must be positive");
    if (dimension == 2 && atom.center[2] != 0.0) {
      throw ConfigError("make_source: 2-d centre must have zero third component");
    }
    if (family != SourceFamily::kGaussianSum &&
        norm(atom.center) + atom.width > support_radius + 1e-12) {
      throw ConfigError("make_source: atom support sticks out of B_r");
    }
  }
  // Numerical compact support: boundary magnitude below 1e-12 * peak.
  const double peak = peak_probe(s);
  const double rr = s.support_radius * (1.0 - 1e-9);
  double worst = 0.0;
  const int na = 64;
  for (int a = 0; a < na; ++a) {
    const double th = 2.0 * kPi * a / na;
    for (int b = 0; b < (dimension == 3 ? na / 2 : 1); ++b) {
      Point y;
      if (dimension == 2) {
        y = {rr * std::cos(th), rr * std::sin(th), 0.0};
      } else {
        const double ph = kPi * (b + 0.5) / (na / 2);
        y = {rr * std::sin(ph) * std::cos(th), rr * std::sin(ph) * std::sin(th),
             rr * std::cos(ph)};
      }
      worst = std::max(worst, std::abs(evaluate(s, y)));
    }
  }
  if (worst > 1e-12 * peak) {
    throw ConfigError("make_source: |f| at |y| = r exceeds 1e-12 of the peak (support too tight)");
  }
  return s;
}

double radial_fourier(const SourceField& source, const SourceAtom& atom, double k) {
  if (source.family == SourceFamily::kGaussianSum) {
    const double s2 = atom.width * atom.width;
    const double d = source.dimension;
    return std::pow(2.0 * kPi * s2, d / 2.0) * std::exp(-s2 * k * k / 2.0);
  }
  // 1-d quadrature of the radial transform over [0, sigma]:
  //   d=2: 2 pi  int G(rho^2) J_0(k rho) rho  d rho
  //   d=3: 4 pi  int G(rho^2) sinc(k rho) rho^2 d rho
  const double sig = atom.width;
  const int panels = 24 + 2 * static_cast<int>(std::ceil(k * sig / kPi));
  static const auto gl = [] {
    std::vector<double> x, w;
    geometry::gauss_legendre(16, x, w);
    return std::pair(x, w);
  }();
  const auto& [gl_x, gl_w] = gl;
  double total = 0.0;
  const double hp = sig / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * hp;
    for (int i = 0; i < 16; ++i) {
      const double rho = a + 0.5 * hp * (gl_x[i] + 1.0);
      const double g = profile(source, atom, rho * rho);
      const double t = k * rho;
      double kernel;
      if (source.dimension == 2) {
        kernel = 2.0 * kPi * (t > 0.0 ? specfun::bessel_j(0, t) : 1.0) * rho;
      } else {
        const double sinc = t < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
        kernel = 4.0 * kPi * sinc * rho * rho;
      }
      total += 0.5 * hp * gl_w[i] * g * kernel;
    }
  }
  return total;
}

Complex analytic_fourier(const SourceField& source, const Point& xi) {
  const double k = norm(xi);
  Complex v = 0.0;
  for (const auto& atom : source.atoms) {
    const double radial = radial_fourier(source, atom, k);
    const double phase = -dot(xi, atom.center);
    v += atom.amplitude * radial * Complex(std::cos(phase), std::sin(phase));
  }
  return v;
}

SobolevEstimate sobolev_norm(const SourceField& source, int order,
                             const geometry::BallGrid& grid) {
  if (order < 0) throw DomainError("sobolev_norm: negative order");
  if (order > kSobolevCap) {
    throw CapError("sobolev_norm: order exceeds cap " + std::to_string(kSobolevCap));
  }
  if (grid.dimension != source.dimension) {
    throw ShapeError("sobolev_norm: grid dimension mismatch");
  }
  const std::size_t n_nodes = grid.size();
  const std::size_t n_atoms = source.atoms.size();

  // Profile derivatives G^{(j)}(z) per (node, atom), j = 0..order.
  std::vector<double> gd(n_nodes * n_atoms * (order + 1));
  for (std::size_t in = 0; in < n_nodes; ++in) {
    const bool inside = norm(grid.nodes[in]) < source.support_radius;
    for (std::size_t ia = 0; ia < n_atoms; ++ia) {
      const Point t = grid.nodes[in] - source.atoms[ia].center;
      const double z = dot(t, t);
      for (int j = 0; j <= order; ++j) {
        gd[(in * n_atoms + ia) * (order + 1) + j] =
            inside ? profile_deriv(source, source.atoms[ia], z, j) : 0.0;
      }
    }
  }

  // binomials C(order, j)
  std::vector<double> binom(order + 1, 1.0);
  for (int j = 1; j <= order; ++j) binom[j] = binom[j - 1] * (order - j + 1) / j;

  double total = 0.0;
  std::array<int, 3> alpha{0, 0, 0};
  const int a3max = source.dimension == 3 ? order : 0;
  for (int a1 = 0; a1 <= order; ++a1) {
    for (int a2 = 0; a2 + a1 <= order; ++a2) {
      for (int a3 = 0; a3 + a2 + a1 <= std::min(order, a1 + a2 + a3max); ++a3) {
        if (source.dimension == 2 && a3 > 0) continue;
        alpha = {a1, a2, a3};
        const int aa = a1 + a2 + a3;
        // multinomial weight: C(order, |a|) * |a|! / (a1! a2! a3!)
        double mult = binom[aa];
        double fact = 1.0;
        for (int i = 1; i <= aa; ++i) fact *= i;
        double df = 1.0;
        for (int i = 1; i <= a1; ++i) df *= i;
        for (int i = 1; i <= a2; ++i) df *= i;
        for (int i = 1; i <= a3; ++i) df *= i;
        mult *= fact / df;

        const TermMap terms = derivative_terms(alpha);
        double norm_sq = 0.0;
        for (std::size_t in = 0; in < n_nodes; ++in) {
          Complex val = 0.0;
          for (std::size_t ia = 0; ia < n_atoms; ++ia) {
            const Point t = grid.nodes[in] - source.atoms[ia].center;
            double part = 0.0;
            for (const auto& [key, c] : terms) {
              double mono = c;
              for (int ax = 0; ax < 3; ++ax) {
                for (int e = 0; e < key.mono[ax]; ++e) mono *= t[ax];
              }
              part += mono * gd[(in * n_atoms + ia) * (order + 1) + key.deriv];
            }
            val += source.atoms[ia].amplitude * part;
          }
          norm_sq += grid.weights[in] * std::norm(val);
        }
        total += mult * norm_sq;
      }
    }
  }
  return SobolevEstimate{order, std::sqrt(total)};
}

SourceField source_difference(const SourceField& a, const SourceField& b) {
  if (a.dimension != b.dimension || a.family != b.family) {
    throw ShapeError("source_difference: incompatible sources");
  }
  SourceField d = a;
  d.support_radius = std::max(a.support_radius, b.support_radius);
  for (SourceAtom atom : b.atoms) {
    atom.amplitude = -atom.amplitude;
    d.atoms.push_back(atom);
  }
  return d;
}

}  // namespace issp::sources
