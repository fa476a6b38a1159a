#pragma once

// Evaluation of the inequalities: the general upper bound for
// int (omega^m - sin^m) dP, Santalo's lower bound for the Masotti integral
// and its two improvements, and the constant-width lower-bound chain.
// Bound sides come from closed forms only, so inequality verification is
// isolated from quadrature noise.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "visang/convex_body.hpp"
#include "visang/formulas.hpp"

namespace visang::bounds {

enum class Side { upper, lower };
enum class Applicability { all, constant_width, m_eq_2 };

/// A body fails the applicability requirement of a bound (e.g. the
/// constant-width chain on a generic body). Reported as a skip, not a failure.
class applicability_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BoundRecord {
  std::string name;
  Side side;
  double bound_value;
  double slack;  // signed distance into the feasible side
  bool satisfied;
  Applicability applicability;
};

struct BoundsReport {
  int m = 0;
  double integral_value = 0.0;
  std::vector<BoundRecord> records;

  bool all_satisfied() const {
    for (const auto& r : records)
      if (!r.satisfied) return false;
    return true;
  }
};

namespace detail {
inline double slack_tol(double bound_value) {
  return 1e-9 * std::max(1.0, std::abs(bound_value));
}

inline BoundRecord make_record(std::string name, Side side, double value,
                               double bound, Applicability app) {
  const double slack = (side == Side::upper) ? bound - value : value - bound;
  return {std::move(name), side, bound, slack, slack >= -slack_tol(bound), app};
}
}  // namespace detail

/// int (omega^m - sin^m) dP <= -pi^m F + M_m L^2/(2 pi); equality only for
/// circles.
inline BoundRecord upper_bound(const ConvexBody& body, int m) {
  if (m < 1) throw std::domain_error("upper_bound: requires m >= 1");
  const double L = body.length();
  const double bound = -std::pow(std::numbers::pi, m) * body.area() +
                       formulas::M_m(m) * L * L / (2.0 * std::numbers::pi);
  const double value = formulas::omega_minus_sin_power(body, m);
  return detail::make_record("upper:m=" + std::to_string(m), Side::upper,
                             value, bound, Applicability::all);
}

/// The three lower bounds for the Masotti integral, strongest first:
/// the H-corrected bound, its pedal-area corollary, and Santalo's bound.
inline std::vector<BoundRecord> masotti_lower_bounds(const ConvexBody& body) {
  const double L = body.length();
  const double F = body.area();
  const double A = body.pedal_area();
  const double H = body.visual_limit();
  const double value = formulas::masotti(body);
  const double pi = std::numbers::pi;

  const double b_sharp =
      -pi * pi * F + 4.0 * L * L / pi - (4.0 / 3.0) * (H - L * L / pi);
  const double b_pedal = (16.0 - pi * pi) * F + (32.0 / 3.0) * (A - F);
  const double b_santalo = (16.0 - pi * pi) * F;

  return {
      detail::make_record("lower:H-corrected", Side::lower, value, b_sharp,
                          Applicability::m_eq_2),
      detail::make_record("lower:pedal", Side::lower, value, b_pedal,
                          Applicability::m_eq_2),
      detail::make_record("lower:santalo", Side::lower, value, b_santalo,
                          Applicability::m_eq_2),
  };
}

/// Constant-width chain:
/// int (omega^m - sin^m) dP >= -pi^m F + M_m L^2/(2pi)
///   - (pi^{m-1}/4)(1 - (3/4)^m) Delta >= 0.
inline BoundsReport constant_width_lower_bound(const ConvexBody& body, int m,
                                               double cw_tol = 1e-9) {
  if (m < 1) throw std::domain_error("constant_width_lower_bound: requires m >= 1");
  if (!body.is_constant_width(cw_tol))
    throw applicability_error(
        "constant_width_lower_bound: body is not constant width");
  const double L = body.length();
  const double delta = body.isoperimetric_deficit();
  const double pi = std::numbers::pi;
  const double correction = 0.25 * std::pow(pi, m - 1) *
                            (1.0 - std::pow(0.75, m)) * delta;
  const double bound = -std::pow(pi, m) * body.area() +
                       formulas::M_m(m) * L * L / (2.0 * pi) - correction;
  const double value = formulas::omega_minus_sin_power(body, m);

  BoundsReport rep;
  rep.m = m;
  rep.integral_value = value;
  rep.records.push_back(detail::make_record("cw-lower:m=" + std::to_string(m),
                                            Side::lower, value, bound,
                                            Applicability::constant_width));
  rep.records.push_back(detail::make_record(
      "cw-nonneg:m=" + std::to_string(m), Side::lower, bound, 0.0,
      Applicability::constant_width));
  return rep;
}

/// Constant-width specialization of the sin-power formula:
/// |int sin^m dP - M(sin^m) L^2/(2pi)| <= 1e-9 L^2.
inline BoundRecord sin_power_constant_width(const ConvexBody& body, int m,
                                            double cw_tol = 1e-9) {
  if (m < 3) throw std::domain_error("sin_power_constant_width: requires m >= 3");
  if (!body.is_constant_width(cw_tol))
    throw applicability_error(
        "sin_power_constant_width: body is not constant width");
  const double L = body.length();
  const double expected =
      formulas::M_sin_power(m) * L * L / (2.0 * std::numbers::pi);
  const double value = formulas::sin_power(body, m);
  const double resid = std::abs(value - expected);
  return {"cw-sinpow:m=" + std::to_string(m), Side::lower, expected,
          1e-9 * L * L - resid, resid <= 1e-9 * L * L,
          Applicability::constant_width};
}

}  // namespace visang::bounds
