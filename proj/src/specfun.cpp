// SPDX-License-Identifier: Apache-2.0

#include "issp/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace issp::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

void check_order(int order, int order_max, const char* what) {
  if (order < 0) throw DomainError(std::string(what) + ": negative order");
  if (order > order_max) {
    throw CapError(std::string(what) + ": order " + std::to_string(order) +
                   " exceeds order_max " + std::to_string(order_max));
  }
}

void check_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + ": requires x > 0");
}

template <typename T>
struct Base01 {
  T j0, y0, j1, y1;
};

// Power series for J_0, Y_0, J_1, Y_1 (Abramowitz & Stegun 9.1.10-9.1.11).
// Valid for small and moderate x; the caller picks T = long double once the
// alternating terms grow enough to cancel in double.
template <typename T>
Base01<T> series01(T x) {
  const T q = x * x / T(4);
  const T pi = std::numbers::pi_v<T>;

  T t0 = T(1);       // (-1)^k q^k / (k!)^2
  T j0 = T(1);
  T s0 = T(0);       // sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2
  T u = T(1);        // (-1)^k q^k / (k! (k+1)!)
  T j1s = T(1);
  T s1 = T(-2) * T(kEulerGamma) + T(1);  // u_k (psi(k+1) + psi(k+2)), k = 0
  T hk = T(0);       // harmonic number H_k

  for (int k = 1; k < 400; ++k) {
    t0 *= -q / (T(k) * T(k));
    hk += T(1) / T(k);
    j0 += t0;
    s0 -= t0 * hk;
    u *= -q / (T(k) * T(k + 1));
    j1s += u;
    const T psis = T(-2) * T(kEulerGamma) + hk + hk + T(1) / T(k + 1);
    s1 += u * psis;
    if (std::abs(t0) < std::numeric_limits<T>::epsilon() * T(0.01) &&
        std::abs(u) < std::numeric_limits<T>::epsilon() * T(0.01)) {
      break;
    }
  }

  const T lg = std::log(x / T(2)) + T(kEulerGamma);
  Base01<T> r;
  r.j0 = j0;
  r.j1 = (x / T(2)) * j1s;
  r.y0 = (T(2) / pi) * (lg * j0 + s0);
  r.y1 = (T(2) / pi) * std::log(x / T(2)) * r.j1 - T(2) / (pi * x) -
         (x / (T(2) * pi)) * s1;
  return r;
}

// Hankel asymptotic expansion (A&S 9.2.5-9.2.10) for orders 0 and 1.
// Optimal-truncation error is O(e^{-2x}); used only for x > 16.
template <typename T>
void asymptotic_pq(int n, T x, T& p, T& q) {
  const T mu = T(4) * T(n) * T(n);
  p = T(1);
  q = T(0);
  T term = T(1);
  T prev = std::numeric_limits<T>::max();
  for (int m = 1; m < 60; ++m) {
    const T f = (mu - T(2 * m - 1) * T(2 * m - 1)) / (T(8 * m) * x);
    term *= f;
    if (std::abs(term) >= prev) break;  // divergence onset
    prev = std::abs(term);
    const int r = m % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
    if (std::abs(term) < T(1e-22)) break;
  }
}

template <typename T>
Base01<T> asymptotic01(T x) {
  const T pi = std::numbers::pi_v<T>;
  const T amp = std::sqrt(T(2) / (pi * x));
  Base01<T> r;
  T p0, q0, p1, q1;
  asymptotic_pq<T>(0, x, p0, q0);
  asymptotic_pq<T>(1, x, p1, q1);
  const T chi0 = x - pi / T(4);
  const T chi1 = x - T(3) * pi / T(4);
  const T c0 = std::cos(chi0), s0 = std::sin(chi0);
  const T c1 = std::cos(chi1), s1 = std::sin(chi1);
  r.j0 = amp * (p0 * c0 - q0 * s0);
  r.y0 = amp * (p0 * s0 + q0 * c0);
  r.j1 = amp * (p1 * c1 - q1 * s1);
  r.y1 = amp * (p1 * s1 + q1 * c1);
  return r;
}

void ensure_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + ": value overflow (non-finite result)");
  }
}

void ensure_finite(const Complex& v, const char* what) {
  ensure_finite(v.real(), what);
  ensure_finite(v.imag(), what);
}

}  // namespace

Bessel01 bessel01(double x) {
  check_positive(x, "bessel01");
  if (x <= 6.0) {
    const Base01<double> r = series01<double>(x);
    return {r.j0, r.y0, r.j1, r.y1};
  }
  if (x <= 16.0) {
    const Base01<long double> r = series01<long double>(static_cast<long double>(x));
    return {static_cast<double>(r.j0), static_cast<double>(r.y0),
            static_cast<double>(r.j1), static_cast<double>(r.y1)};
  }
  const Base01<long double> r = asymptotic01<long double>(static_cast<long double>(x));
  return {static_cast<double>(r.j0), static_cast<double>(r.y0),
          static_cast<double>(r.j1), static_cast<double>(r.y1)};
}

double bessel_j(int order, double x, int order_max) {
  check_order(order, order_max, "bessel_j");
  check_positive(x, "bessel_j");
  const Bessel01 b = bessel01(x);
  if (order == 0) return b.j0;
  if (order == 1) return b.j1;

  if (static_cast<double>(order) < x) {
    // Stable upward in the oscillatory regime n < x.
    double jm = b.j0, jc = b.j1;
    for (int n = 1; n < order; ++n) {
      const double jn = (2.0 * n / x) * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }

  // Miller's downward recurrence, normalized by J_0 + 2 sum J_{2k} = 1.
  const int start = order + static_cast<int>(std::ceil(std::sqrt(160.0 * order))) + 16;
  double jp = 0.0, jc = 1e-300;
  double sum = 0.0, target = 0.0;
  for (int n = start; n >= 1; --n) {
    const double jm = (2.0 * n / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (n - 1 == order) target = jc;
    if ((n - 1) % 2 == 0 && n - 1 > 0) sum += 2.0 * jc;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      sum *= 1e-250;
      target *= 1e-250;
    }
  }
  sum += jc;  // J_0 contribution
  return target / sum;
}

double bessel_y(int order, double x, int order_max) {
  check_order(order, order_max, "bessel_y");
  check_positive(x, "bessel_y");
  const Bessel01 b = bessel01(x);
  if (order == 0) return b.y0;
  if (order == 1) return b.y1;
  double ym = b.y0, yc = b.y1;
  for (int n = 1; n < order; ++n) {
    const double yn = (2.0 * n / x) * yc - ym;
    ym = yc;
    yc = yn;
    ensure_finite(yc, "bessel_y");
  }
  return yc;
}

Complex hankel1(int order, double x, int order_max) {
  check_order(order, order_max, "hankel1");
  check_positive(x, "hankel1");
  const Complex h(bessel_j(order, x, order_max), bessel_y(order, x, order_max));
  ensure_finite(h, "hankel1");
  return h;
}

std::vector<Complex> hankel1_dtn_ratios(int max_order, double x) {
  check_order(max_order, std::numeric_limits<int>::max(), "hankel1_dtn_ratios");
  check_positive(x, "hankel1_dtn_ratios");
  std::vector<Complex> out(static_cast<std::size_t>(max_order) + 1);
  const Bessel01 b = bessel01(x);
  Complex hp(b.j0, b.y0);  // H_{n-1}
  Complex hc(b.j1, b.y1);  // H_n
  out[0] = -hc / hp;       // H_0' = -H_1
  for (int n = 1; n <= max_order; ++n) {
    out[n] = hp / hc - static_cast<double>(n) / x;
    ensure_finite(out[n], "hankel1_dtn_ratios");
    const Complex hn = (2.0 * n / x) * hc - hp;
    hp = hc;
    hc = hn;
    const double mag = std::max(std::abs(hp.real()), std::abs(hc.real()));
    const double magi = std::max(std::abs(hp.imag()), std::abs(hc.imag()));
    if (std::max(mag, magi) > 1e250) {
      hp *= 1e-250;
      hc *= 1e-250;
    }
  }
  return out;
}

Complex hankel1_dtn_ratio(int order, double x, int order_max) {
  check_order(order, order_max, "hankel1_dtn_ratio");
  check_positive(x, "hankel1_dtn_ratio");
  return hankel1_dtn_ratios(order, x)[static_cast<std::size_t>(order)];
}

Complex sph_hankel1(int order, double x, int order_max) {
  check_order(order, order_max, "sph_hankel1");
  check_positive(x, "sph_hankel1");
  const Complex eix = std::polar(1.0, x);
  Complex hm = Complex(0.0, -1.0) * eix / x;
  if (order == 0) return hm;
  Complex hc = -eix * Complex(x, 1.0) / (x * x);
  for (int n = 1; n < order; ++n) {
    const Complex hn = ((2.0 * n + 1.0) / x) * hc - hm;
    hm = hc;
    hc = hn;
    ensure_finite(hc, "sph_hankel1");
  }
  return hc;
}

std::vector<Complex> sph_hankel1_dtn_ratios(int max_order, double x) {
  check_positive(x, "sph_hankel1_dtn_ratios");
  std::vector<Complex> out(static_cast<std::size_t>(max_order) + 1);
  const Complex eix = std::polar(1.0, x);
  Complex hp = eix / x;                       // h_{-1}
  Complex hc = Complex(0.0, -1.0) * eix / x;  // h_0
  for (int n = 0; n <= max_order; ++n) {
    out[n] = hp / hc - static_cast<double>(n + 1) / x;
    ensure_finite(out[n], "sph_hankel1_dtn_ratios");
    const Complex hn = ((2.0 * n + 1.0) / x) * hc - hp;
    hp = hc;
    hc = hn;
    const double m =
        std::max({std::abs(hp.real()), std::abs(hp.imag()), std::abs(hc.real()),
                  std::abs(hc.imag())});
    if (m > 1e250) {
      hp *= 1e-250;
      hc *= 1e-250;
    }
  }
  return out;
}

Complex sph_hankel1_dtn_ratio(int order, double x, int order_max) {
  check_order(order, order_max, "sph_hankel1_dtn_ratio");
  check_positive(x, "sph_hankel1_dtn_ratio");
  return sph_hankel1_dtn_ratios(order, x)[static_cast<std::size_t>(order)];
}

namespace {

// Orthonormal associated Legendre values Pbar_n^m(cos theta) for m >= 0,
// Condon-Shortley phase included, 1/sqrt(4 pi) normalization built in.
// Index n (n + 1) / 2 + m.
std::vector<double> legendre_all(int max_degree, double ct, double st) {
  const std::size_t count =
      static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2;
  std::vector<double> p(count);
  auto idx = [](int n, int m) {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + m;
  };
  p[idx(0, 0)] = 0.28209479177387814347;  // 1/sqrt(4 pi)
  for (int m = 1; m <= max_degree; ++m) {
    p[idx(m, m)] = -std::sqrt(1.0 + 0.5 / m) * st * p[idx(m - 1, m - 1)];
  }
  for (int m = 0; m < max_degree; ++m) {
    p[idx(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * ct * p[idx(m, m)];
  }
  for (int m = 0; m <= max_degree; ++m) {
    for (int n = m + 2; n <= max_degree; ++n) {
      const double a = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - static_cast<double>(m) * m));
      const double b = std::sqrt(
          ((static_cast<double>(n - 1) * (n - 1)) - static_cast<double>(m) * m) /
          (4.0 * static_cast<double>(n - 1) * (n - 1) - 1.0));
      p[idx(n, m)] = a * (ct * p[idx(n - 1, m)] - b * p[idx(n - 2, m)]);
    }
  }
  return p;
}

}  // namespace

std::vector<double> legendre_normalized_all(int max_degree, double cos_theta,
                                            double sin_theta) {
  if (max_degree < 0) throw DomainError("legendre_normalized_all: negative degree");
  return legendre_all(max_degree, cos_theta, sin_theta);
}

Complex sph_harmonic(int degree, int order, double theta, double phi,
                     int degree_max) {
  if (degree < 0 || std::abs(order) > degree) {
    throw DomainError("sph_harmonic: requires |m| <= n, n >= 0");
  }
  if (degree > degree_max) {
    throw CapError("sph_harmonic: degree exceeds degree_max");
  }
  const int am = std::abs(order);
  const std::vector<double> p = legendre_all(degree, std::cos(theta), std::sin(theta));
  const double pv = p[static_cast<std::size_t>(degree) * (degree + 1) / 2 + am];
  const Complex e = std::polar(1.0, order * phi);
  if (order >= 0) return pv * e;
  return (am % 2 == 0 ? 1.0 : -1.0) * pv * e;
}

std::vector<Complex> sph_harmonic_all(int max_degree, double theta, double phi) {
  if (max_degree < 0) throw DomainError("sph_harmonic_all: negative degree");
  const double ct = std::cos(theta), st = std::sin(theta);
  const std::vector<double> p = legendre_all(max_degree, ct, st);
  std::vector<Complex> y(sph_count(max_degree));
  // e^{i m phi} by recurrence over m.
  std::vector<Complex> em(static_cast<std::size_t>(max_degree) + 1);
  em[0] = 1.0;
  const Complex step = std::polar(1.0, phi);
  for (int m = 1; m <= max_degree; ++m) em[m] = em[m - 1] * step;
  for (int n = 0; n <= max_degree; ++n) {
    for (int m = 0; m <= n; ++m) {
      const double pv = p[static_cast<std::size_t>(n) * (n + 1) / 2 + m];
      y[sph_index(n, m)] = pv * em[m];
      if (m > 0) {
        y[sph_index(n, -m)] =
            (m % 2 == 0 ? 1.0 : -1.0) * pv * std::conj(em[m]);
      }
    }
  }
  return y;
}

}  // namespace issp::specfun
