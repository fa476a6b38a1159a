#pragma once

// Body-independent universal functions and scalar integrals:
//   h_k  — the kernels multiplying c_k^2 in the master integral formula
//   g_k  — the level-set kernels, with the cosine-sum forms of g_k/sin^2
//   f_m  — the Hurwitz functions isolating a single harmonic energy
//   V_{r,j} = int_0^pi w^r cos(jw) dw
//   I_{m,k} = int_0^pi sin^m(w) cos(kw) dw
// h is evaluated through the four-cosine rewriting (the raw trigonometric
// polynomial form cancels badly near pi and is kept only for cross-tests).

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "visang/special_functions.hpp"

namespace visang::kernels {

namespace detail {
inline double sq(double x) { return x * x; }

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace detail

/// h_k(w), four-cosine form. h_1 is identically zero.
inline double h(int k, double w) {
  if (k < 1) throw std::domain_error("h: requires k >= 1");
  if (k == 1) return 0.0;
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  const double kd = k;
  return sgn * 0.25 *
             (detail::sq(kd + 1.0) * std::cos((kd - 2.0) * w) +
              detail::sq(kd - 1.0) * std::cos((kd + 2.0) * w) -
              2.0 * (kd * kd - 3.0) * std::cos(kd * w)) +
         2.0 * std::cos(w);
}

/// h_k(w) in its unreduced trigonometric-polynomial form; cross-check use only.
inline double h_raw(int k, double w) {
  if (k < 1) throw std::domain_error("h_raw: requires k >= 1");
  const double c = std::cos(w), s = std::sin(w);
  const double ck = std::cos(k * w), sk = std::sin(k * w);
  const double sgn = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  return 2.0 * c + sgn * (-ck * (1.0 + c * c) - 2.0 * k * sk * s * c +
                          double(k) * k * ck * s * s);
}

/// (1+cos w)^2 / sin^3 w = cos(w/2) / (2 sin^3(w/2)); the weight multiplying
/// L^2/(2pi) in the master formula. Bounded only against f = O(w^3) factors.
inline double length_kernel(double w) {
  const double sh = std::sin(0.5 * w);
  return std::cos(0.5 * w) / (2.0 * sh * sh * sh);
}

/// h_k(w)/sin^3(w) through the differentiated cosine sums. No cancellation at
/// either endpoint; this is the evaluation path the series formulas use.
inline double h_over_sin3(int k, double w) {
  if (k < 1) throw std::domain_error("h_over_sin3: requires k >= 1");
  if (k == 1) return 0.0;
  if (k % 2 == 0) {
    double acc = length_kernel(w);
    for (int j = 1; j <= k - 1; j += 2) acc += 2.0 * j * j * std::sin(j * w);
    return acc;
  }
  double acc = 0.0;
  for (int j = 2; j <= k - 1; j += 2) acc -= 2.0 * j * j * std::sin(j * w);
  return acc;
}

/// g_k(w) = 1 + ((-1)^k/2)((k+1)cos((k-1)w) - (k-1)cos((k+1)w)), k >= 2.
inline double g(int k, double w) {
  if (k < 2) throw std::domain_error("g: requires k >= 2");
  const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
  return 1.0 + sgn * 0.5 * ((k + 1.0) * std::cos((k - 1.0) * w) -
                            (k - 1.0) * std::cos((k + 1.0) * w));
}

/// g_k(w)/sin^2(w) via the finite cosine sums (even k isolates the
/// 1/(1-cos w) singularity; odd k is a plain cosine polynomial).
inline double g_over_sin2(int k, double w) {
  if (k < 2) throw std::domain_error("g_over_sin2: requires k >= 2");
  if (k % 2 == 0) {
    double acc = 1.0 / (2.0 * detail::sq(std::sin(0.5 * w)));
    for (int j = 1; j <= k - 1; j += 2) acc += 2.0 * j * std::cos(j * w);
    return acc;
  }
  double acc = 0.0;
  for (int j = 2; j <= k - 1; j += 2) acc -= 2.0 * j * std::cos(j * w);
  return acc;
}

/// Hurwitz function f_m, m >= 2. A Taylor branch keeps full relative accuracy
/// through the triple cancellation near w = 0 (f_m ~ m^2 w^3 / 3).
inline double f_hurwitz(int m, double w) {
  if (m < 2) throw std::domain_error("f_hurwitz: requires m >= 2");
  const double md = m;
  if ((md + 1.0) * std::abs(w) < 0.5) {
    // f_m = sum_{j>=1} (-1)^j C_j w^{2j+1}/(2j+1)!,
    // C_j = -2 + (m+1)(m-1)^{2j} - (m-1)(m+1)^{2j}
    double apow = detail::sq(md - 1.0);  // (m-1)^{2j}
    double bpow = detail::sq(md + 1.0);  // (m+1)^{2j}
    double wpow = -w * w * w / 6.0;      // (-1)^j w^{2j+1}/(2j+1)!
    double acc = 0.0;
    for (int j = 1; j <= 12; ++j) {
      acc += wpow * (-2.0 + (md + 1.0) * apow - (md - 1.0) * bpow);
      apow *= detail::sq(md - 1.0);
      bpow *= detail::sq(md + 1.0);
      wpow *= -w * w / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
    }
    return acc;
  }
  return -2.0 * std::sin(w) + (md + 1.0) / (md - 1.0) * std::sin((md - 1.0) * w) -
         (md - 1.0) / (md + 1.0) * std::sin((md + 1.0) * w);
}

/// f_m'(w) = 2(1-cos w)(1 + 2 sum_{j=1}^{m-1} j cos(jw) + (m-1)cos(mw)).
/// The product form is stable everywhere on [0, pi].
inline double f_hurwitz_deriv(int m, double w) {
  if (m < 2) throw std::domain_error("f_hurwitz_deriv: requires m >= 2");
  double d = 1.0 + (m - 1.0) * std::cos(m * w);
  for (int j = 1; j <= m - 1; ++j) d += 2.0 * j * std::cos(j * w);
  return 4.0 * detail::sq(std::sin(0.5 * w)) * d;
}

/// V_{r,j} = int_0^pi w^r cos(jw) dw. Explicit bases at r = 0, 1; the
/// two-step integration-by-parts recurrence applies only from r = 2 up.
inline double V(int r, int j) {
  if (r < 0 || j < 1) throw std::domain_error("V: requires r >= 0, j >= 1");
  const double sj = (j % 2 == 0) ? 1.0 : -1.0;
  if (r == 0) return 0.0;
  if (r == 1) return (sj - 1.0) / (double(j) * j);
  return (double(r) / (double(j) * j)) *
         (sj * std::pow(std::numbers::pi, r - 1) - (r - 1.0) * V(r - 2, j));
}

/// I_{m,k} = int_0^pi sin^m(w) cos(kw) dw for even k, closed form
///   (-1)^{k/2} 2^{-m} m! pi / (Gamma(1+(m-k)/2) Gamma(1+(m+k)/2)).
/// Gamma poles (m even, k > m) make the value an exact zero.
inline double I(int m, int k) {
  if (m < 0 || k < 0) throw std::domain_error("I: requires m, k >= 0");
  if (k % 2 != 0) throw std::domain_error("I: closed form stated for even k only");
  const double ga = sf::gamma(1.0 + 0.5 * (m - k));
  if (std::isinf(ga)) return 0.0;
  const double gb = sf::gamma(1.0 + 0.5 * (m + k));
  const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
  return sgn * std::ldexp(1.0, -m) * detail::factorial(m) * std::numbers::pi /
         (ga * gb);
}

}  // namespace visang::kernels
