#pragma once

// Closed forms and series evaluators for integrals of functions of the
// visual angle:
//   - the master series route (universal kernel h_k against c_k^2),
//   - the functional route (boundary term, M(f) and beta_k(f)),
//   - dedicated closed forms: Crofton, Masotti, Hurwitz f_m, sin^m,
//     omega^m - sin^m with its analytic beta_k, and the level-set area.
// Three independent evaluation paths exist for most quantities and are
// cross-asserted by the test suite.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "visang/convex_body.hpp"
#include "visang/kernels.hpp"
#include "visang/quadrature.hpp"
#include "visang/special_functions.hpp"
#include "visang/visual_function.hpp"

namespace visang::formulas {

using quad::IntegralResult;
using quad::Method;
using quad::QuadratureSpec;

/// Body-independent series data: total = L2_coeff * L^2/(2pi)
/// + pi * sum_k ck_coeffs[k-2] * c_k^2 + boundary_term.
struct SeriesTerms {
  double L2_coeff = 0.0;
  std::vector<double> ck_coeffs;  // index 0 holds k = 2
  double boundary_term = 0.0;
};

/// M(f) = int_0^pi f'(w) / (1 - cos w) dw.
inline double M_of(const VisualFunction& f, const QuadratureSpec& spec) {
  const auto integrand = [&](double w) {
    const double s = std::sin(0.5 * w);
    return f.deriv(w) / (2.0 * s * s);
  };
  const IntegralResult r = quad::integrate_1d(integrand, 0.0, std::numbers::pi,
                                              spec, 8);
  if (!r.converged)
    throw std::runtime_error("M_of: quadrature did not converge");
  return r.value;
}

namespace detail {

inline double factorial(double n) {
  double f = 1.0;
  for (int i = 2; i <= int(n); ++i) f *= i;
  return f;
}

// int_0^pi f'(w) cos(jw) dw
inline double fprime_cos_moment(const VisualFunction& f, int j,
                                const QuadratureSpec& spec) {
  const auto integrand = [&](double w) { return f.deriv(w) * std::cos(j * w); };
  return quad::integrate_1d(integrand, 0.0, std::numbers::pi, spec,
                            std::max(8, j))
      .value;
}

}  // namespace detail

/// beta_k(f) through the cosine-sum split: even k combines M(f) with the odd
/// moments below k; odd k uses the even moments alone.
inline double beta_k_of(const VisualFunction& f, int k,
                        const QuadratureSpec& spec) {
  if (k < 2) throw std::domain_error("beta_k_of: requires k >= 2");
  if (k % 2 == 0) {
    double acc = M_of(f, spec);
    for (int j = 1; j <= k - 1; j += 2)
      acc += 2.0 * j * detail::fprime_cos_moment(f, j, spec);
    return acc;
  }
  double acc = 0.0;
  for (int j = 2; j <= k - 1; j += 2)
    acc -= 2.0 * j * detail::fprime_cos_moment(f, j, spec);
  return acc;
}

/// beta_k(f) = int_0^pi f'(w) g_k(w)/sin^2(w) dw quadrated as written; the
/// independent cross-check of beta_k_of.
inline double beta_k_direct(const VisualFunction& f, int k,
                            const QuadratureSpec& spec) {
  if (k < 2) throw std::domain_error("beta_k_direct: requires k >= 2");
  const auto integrand = [&](double w) {
    return f.deriv(w) * kernels::g_over_sin2(k, w);
  };
  return quad::integrate_1d(integrand, 0.0, std::numbers::pi, spec,
                            std::max(8, k))
      .value;
}

/// Coefficient integrals of the master formula for harmonics 2..K.
inline SeriesTerms master_series_terms(const VisualFunction& f, int K,
                                       const QuadratureSpec& spec) {
  SeriesTerms terms;
  const auto base = [&](double w) { return f(w) * kernels::length_kernel(w); };
  terms.L2_coeff =
      quad::integrate_1d(base, 0.0, std::numbers::pi, spec, 8).value;
  terms.ck_coeffs.resize(K >= 2 ? K - 1 : 0);
  for (int k = 2; k <= K; ++k) {
    const auto ker = [&](double w) {
      return f(w) * kernels::h_over_sin3(k, w);
    };
    terms.ck_coeffs[k - 2] =
        quad::integrate_1d(ker, 0.0, std::numbers::pi, spec, std::max(8, k))
            .value;
  }
  return terms;
}

/// Master route: int f dP = (int f (1+cos)^2/sin^3) L^2/(2pi)
/// + pi sum_k (int f h_k/sin^3) c_k^2, truncated at the body's K.
inline IntegralResult master_series(const ConvexBody& body,
                                    const VisualFunction& f,
                                    const QuadratureSpec& spec) {
  const GrowthGate gate = check_cubic_gate(f);
  if (!gate.pass)
    throw std::domain_error(
        "master_series: f fails the O(w^3) growth gate (measured exponent " +
        std::to_string(gate.exponent) + ")");
  const ConvexBody b = body.recentered();
  const double L = b.length();

  const auto base = [&](double w) { return f(w) * kernels::length_kernel(w); };
  const IntegralResult r0 =
      quad::integrate_1d(base, 0.0, std::numbers::pi, spec, 8);
  quad::KahanAccumulator val, err;
  val.add(r0.value * L * L / (2.0 * std::numbers::pi));
  err.add(r0.error_estimate * L * L / (2.0 * std::numbers::pi));
  bool converged = r0.converged;
  for (int k = 2; k <= b.truncation(); ++k) {
    const double c2 = b.ck2(k);
    if (c2 == 0.0) continue;
    const auto ker = [&](double w) {
      return f(w) * kernels::h_over_sin3(k, w);
    };
    const IntegralResult rk =
        quad::integrate_1d(ker, 0.0, std::numbers::pi, spec, std::max(8, k));
    val.add(std::numbers::pi * rk.value * c2);
    err.add(std::numbers::pi * rk.error_estimate * c2);
    converged = converged && rk.converged;
  }
  return {val.value(), Method::series, err.value(), b.truncation(), converged};
}

/// Functional route: -[f F]_0^pi + M(f) L^2/(2pi) + pi sum beta_k(f) c_k^2.
/// The omega -> 0 boundary term vanishes under the O(w^3) gate.
inline IntegralResult functional_route(const ConvexBody& body,
                                       const VisualFunction& f,
                                       const QuadratureSpec& spec) {
  const GrowthGate gate = check_cubic_gate(f);
  if (!gate.pass)
    throw std::domain_error(
        "functional_route: f fails the O(w^3) growth gate (measured exponent " +
        std::to_string(gate.exponent) + ")");
  const ConvexBody b = body.recentered();
  const double L = b.length();
  const double M = M_of(f, spec);

  quad::KahanAccumulator val;
  val.add(-f(std::numbers::pi) * b.area());
  val.add(M * L * L / (2.0 * std::numbers::pi));

  // moments are shared by every k; compute each j once
  std::vector<double> moment(std::max(0, b.truncation()), 0.0);
  for (int j = 1; j <= b.truncation() - 1; ++j)
    moment[j] = detail::fprime_cos_moment(f, j, spec);
  for (int k = 2; k <= b.truncation(); ++k) {
    const double c2 = b.ck2(k);
    if (c2 == 0.0) continue;
    double beta;
    if (k % 2 == 0) {
      beta = M;
      for (int j = 1; j <= k - 1; j += 2) beta += 2.0 * j * moment[j];
    } else {
      beta = 0.0;
      for (int j = 2; j <= k - 1; j += 2) beta -= 2.0 * j * moment[j];
    }
    val.add(std::numbers::pi * beta * c2);
  }
  return {val.value(), Method::functional, 0.0, b.truncation(), true};
}

/// Area enclosed by the level set C_omega, from the closed-form series
/// F(w) sin^2 w = L^2/(2pi) (1 + cos w) + pi sum c_k^2 g_k(w).
inline double level_set_area(const ConvexBody& body, double omega) {
  if (!(omega > 0.0) || !(omega < std::numbers::pi))
    throw std::domain_error("level_set_area: omega must lie in (0, pi)");
  const double L = body.length();
  const double ch = std::cos(0.5 * omega);
  quad::KahanAccumulator acc;
  acc.add(L * L / (2.0 * std::numbers::pi) * 2.0 * ch * ch);
  for (int k = 2; k <= body.truncation(); ++k) {
    const double c2 = body.ck2(k);
    if (c2 != 0.0) acc.add(std::numbers::pi * c2 * kernels::g(k, omega));
  }
  const double s = std::sin(omega);
  return acc.value() / (s * s);
}

/// Crofton: int (w - sin w) dP = -pi F + L^2/2.
inline double crofton(const ConvexBody& body) {
  const double L = body.length();
  return -std::numbers::pi * body.area() + 0.5 * L * L;
}

/// Masotti: int (w^2 - sin^2 w) dP
///   = -pi^2 F + 4 L^2/pi + 8 pi sum_{even k>=2} c_k^2/(1-k^2).
inline double masotti(const ConvexBody& body) {
  const double L = body.length();
  double s = 0.0;
  for (int k = 2; k <= body.truncation(); k += 2)
    s += body.ck2(k) / (1.0 - double(k) * k);
  return -std::numbers::pi * std::numbers::pi * body.area() +
         4.0 * L * L / std::numbers::pi + 8.0 * std::numbers::pi * s;
}

/// Hurwitz: int f_m dP = L^2 + (-1)^m pi^2 (m^2 - 1) c_m^2.
inline double hurwitz_integral(const ConvexBody& body, int m) {
  if (m < 2) throw std::domain_error("hurwitz_integral: requires m >= 2");
  const double L = body.length();
  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  return L * L + sgn * std::numbers::pi * std::numbers::pi *
                     (double(m) * m - 1.0) * body.ck2(m);
}

/// M(sin^m) = pi m! / (2^{m-1} (m-2) Gamma((m+1)/2)^2), m >= 3.
inline double M_sin_power(int m) {
  if (m < 3) throw std::domain_error("M_sin_power: requires m >= 3");
  const double g = sf::gamma(0.5 * (m + 1));
  return std::numbers::pi * sf::gamma(m + 1.0) /
         (std::ldexp(1.0, m - 1) * (m - 2.0) * g * g);
}

/// Full multiplier of c_k^2 in the sin^m expansion (even k; exact zero past
/// the Gamma poles, which for odd m cuts the sum at k = m - 1).
inline double sin_power_ck_coefficient(int m, int k) {
  if (m < 3) throw std::domain_error("sin_power_ck_coefficient: requires m >= 3");
  if (k % 2 != 0) return 0.0;
  const double ga = sf::gamma(0.5 * (m + 1 - k));
  if (std::isinf(ga)) return 0.0;
  const double gb = sf::gamma(0.5 * (m + 1 + k));
  const double sgn = ((k / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
  return detail::factorial(m) * std::numbers::pi * std::numbers::pi /
         (std::ldexp(1.0, m - 1) * (m - 2.0)) * sgn * (double(k) * k - 1.0) /
         (ga * gb);
}

/// int sin^m dP by the closed form, m >= 3.
inline double sin_power(const ConvexBody& body, int m) {
  if (m < 3) throw std::domain_error("sin_power: requires m >= 3");
  const double L = body.length();
  quad::KahanAccumulator acc;
  acc.add(M_sin_power(m) * L * L / (2.0 * std::numbers::pi));
  for (int k = 2; k <= body.truncation(); k += 2) {
    const double c2 = body.ck2(k);
    if (c2 != 0.0) acc.add(sin_power_ck_coefficient(m, k) * c2);
  }
  return acc.value();
}

/// M_m = M(omega^m - sin^m omega). m = 1, 2 are the known constants pi and 8
/// (the two pieces diverge separately there); m >= 3 uses the Bernoulli
/// series for M(omega^m) minus M(sin^m). Capped at m = 20: M_m grows like
/// e^m and the bound machinery has no use for larger m.
inline double M_m(int m) {
  if (m < 1) throw std::domain_error("M_m: requires m >= 1");
  if (m > 20) throw std::domain_error("M_m: capped at m = 20");
  if (m == 1) return std::numbers::pi;
  if (m == 2) return 8.0;
  double series = 1.0 / (m - 2.0);
  for (int k = 1; k <= 400; ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const double term = sgn * sf::bernoulli_pi_ratio(k) / (m - 2.0 + 2.0 * k);
    series += term;
    if (std::abs(term) < 1e-17 * std::abs(series)) break;
  }
  const double M_omega_m = 2.0 * m * (m - 1.0) *
                           std::pow(std::numbers::pi, m - 2) * series;
  return M_omega_m - M_sin_power(m);
}

/// Analytic beta_k(omega^m - sin^m omega) through the V and I moments.
inline double beta_k_power(int m, int k) {
  if (m < 1) throw std::domain_error("beta_k_power: requires m >= 1");
  if (k < 2) throw std::domain_error("beta_k_power: requires k >= 2");
  if (m == 1) return 0.0;
  if (m == 2) return (k % 2 == 0) ? 8.0 / (1.0 - double(k) * k) : 0.0;
  if (k % 2 == 1) {
    // only the omega^m part survives for odd k
    double acc = 0.0;
    for (int j = 2; j <= k - 1; j += 2) acc += j * kernels::V(m - 1, j);
    return -2.0 * m * acc;
  }
  double acc = M_m(m);
  for (int j = 1; j <= k - 1; j += 2) acc += 2.0 * m * j * kernels::V(m - 1, j);
  acc += m * (m - 1.0) * kernels::I(m - 3, 0) - double(m) * m * kernels::I(m - 1, 0);
  acc += -m * (m - 1.0) * kernels::I(m - 3, k) + double(m) * m * kernels::I(m - 1, k);
  return acc;
}

/// int (omega^m - sin^m omega) dP
///   = -pi^m F + M_m L^2/(2pi) + pi sum_{k>=2} beta_k c_k^2.
inline double omega_minus_sin_power(const ConvexBody& body, int m) {
  if (m < 1) throw std::domain_error("omega_minus_sin_power: requires m >= 1");
  if (m == 1) return crofton(body);
  if (m == 2) return masotti(body);
  const double L = body.length();
  quad::KahanAccumulator acc;
  acc.add(-std::pow(std::numbers::pi, m) * body.area());
  acc.add(M_m(m) * L * L / (2.0 * std::numbers::pi));
  for (int k = 2; k <= body.truncation(); ++k) {
    const double c2 = body.ck2(k);
    if (c2 != 0.0) acc.add(std::numbers::pi * beta_k_power(m, k) * c2);
  }
  return acc.value();
}

/// Residual |lhs - rhs| of the decomposition of sin^m into Hurwitz
/// integrals, m odd >= 3; both sides from this module's own closed forms.
inline double hurwitz_decomposition_check(const ConvexBody& body, int m) {
  if (m < 3 || m % 2 == 0)
    throw std::domain_error("hurwitz_decomposition_check: requires odd m >= 3");
  const double lhs = sin_power(body, m);
  const double pref =
      detail::factorial(m) / (std::ldexp(1.0, m - 1) * (m - 2.0));
  quad::KahanAccumulator rhs;
  for (int p = 1; 2 * p <= m - 1; ++p) {
    const double gb = sf::gamma(0.5 * (m + 1) - p);
    if (std::isinf(gb)) continue;
    const double ga = sf::gamma(0.5 * (m + 1) + p);
    const double sgn = (p % 2 == 1) ? 1.0 : -1.0;
    rhs.add(pref * sgn / (ga * gb) * hurwitz_integral(body, 2 * p));
  }
  return std::abs(lhs - rhs.value());
}

}  // namespace visang::formulas
