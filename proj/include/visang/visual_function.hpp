#pragma once

// Tagged descriptions of the integrand families f(omega) with analytic
// derivatives. Built-in kinds evaluate with full relative accuracy near
// omega = 0 where the naive differences cancel (omega - sin(omega) and
// relatives lose ~10 digits there otherwise).

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "visang/kernels.hpp"

namespace visang {

enum class VisualKind {
  crofton,                 // omega - sin(omega)
  sin_power,               // sin^m(omega)
  hurwitz,                 // f_m(omega)
  omega_minus_sin_power,   // omega^m - sin^m(omega)
  custom,
};

namespace vf_detail {

// sin(w)/w - 1 with full relative precision.
inline double sin_ratio_minus_one(double w) {
  const double w2 = w * w;
  if (std::abs(w) < 0.5) {
    double t = 1.0 - w2 / 156.0;          // 12*13
    t = 1.0 - w2 / 110.0 * t;             // 10*11
    t = 1.0 - w2 / 72.0 * t;              // 8*9
    t = 1.0 - w2 / 42.0 * t;              // 6*7
    t = 1.0 - w2 / 20.0 * t;              // 4*5
    return -w2 / 6.0 * t;
  }
  return std::sin(w) / w - 1.0;
}

// w^m - sin^m(w), stable for all w in [0, pi].
inline double omega_pow_minus_sin_pow(int m, double w) {
  if (w <= 0.0) return 0.0;
  if (w < 1.0) {
    const double lq = std::log1p(sin_ratio_minus_one(w));
    return -std::pow(w, m) * std::expm1(m * lq);
  }
  return std::pow(w, m) - std::pow(std::sin(w), m);
}

// d/dw of the above: m (w^{m-1} - sin^{m-1}(w) cos(w)).
inline double omega_pow_minus_sin_pow_deriv(int m, double w) {
  if (w <= 0.0) return 0.0;
  if (w < 1.0) {
    const double lq = std::log1p(sin_ratio_minus_one(w));
    const double s = std::sin(0.5 * w);
    const double lc = std::log1p(-2.0 * s * s);  // log(cos w)
    return -m * std::pow(w, m - 1) * std::expm1((m - 1) * lq + lc);
  }
  return m * (std::pow(w, m - 1) -
              std::pow(std::sin(w), m - 1) * std::cos(w));
}

}  // namespace vf_detail

class VisualFunction {
 public:
  static VisualFunction crofton() {
    return VisualFunction(VisualKind::crofton, 1, "crofton");
  }
  static VisualFunction sin_power(int m) {
    if (m < 3)
      throw std::domain_error("sin_power: requires m >= 3 (the O(w^3) gate)");
    return VisualFunction(VisualKind::sin_power, m,
                          "sinpow:" + std::to_string(m));
  }
  static VisualFunction hurwitz(int m) {
    if (m < 2) throw std::domain_error("hurwitz: requires m >= 2");
    return VisualFunction(VisualKind::hurwitz, m,
                          "hurwitz:" + std::to_string(m));
  }
  static VisualFunction omega_minus_sin_power(int m) {
    if (m < 1) throw std::domain_error("omega_minus_sin_power: requires m >= 1");
    return VisualFunction(VisualKind::omega_minus_sin_power, m,
                          "omspow:" + std::to_string(m));
  }
  static VisualFunction custom(std::string name,
                               std::function<double(double)> eval,
                               std::function<double(double)> deriv) {
    VisualFunction f(VisualKind::custom, 0, std::move(name));
    f.eval_ = std::move(eval);
    f.deriv_ = std::move(deriv);
    return f;
  }

  double operator()(double w) const {
    switch (kind_) {
      case VisualKind::crofton:
        return -w * vf_detail::sin_ratio_minus_one(w);
      case VisualKind::sin_power:
        return std::pow(std::sin(w), m_);
      case VisualKind::hurwitz:
        return kernels::f_hurwitz(m_, w);
      case VisualKind::omega_minus_sin_power:
        return vf_detail::omega_pow_minus_sin_pow(m_, w);
      case VisualKind::custom:
        return eval_(w);
    }
    return 0.0;
  }

  double deriv(double w) const {
    switch (kind_) {
      case VisualKind::crofton: {
        const double s = std::sin(0.5 * w);
        return 2.0 * s * s;  // 1 - cos w
      }
      case VisualKind::sin_power:
        return m_ * std::pow(std::sin(w), m_ - 1) * std::cos(w);
      case VisualKind::hurwitz:
        return kernels::f_hurwitz_deriv(m_, w);
      case VisualKind::omega_minus_sin_power:
        return vf_detail::omega_pow_minus_sin_pow_deriv(m_, w);
      case VisualKind::custom:
        return deriv_(w);
    }
    return 0.0;
  }

  VisualKind kind() const { return kind_; }
  int power() const { return m_; }
  const std::string& name() const { return name_; }

 private:
  VisualFunction(VisualKind kind, int m, std::string name)
      : kind_(kind), m_(m), name_(std::move(name)) {}

  VisualKind kind_;
  int m_;
  std::string name_;
  std::function<double(double)> eval_;
  std::function<double(double)> deriv_;
};

/// Result of the numerical O(w^3) admission check.
struct GrowthGate {
  bool pass;
  double exponent;  // measured growth order between w = 1e-2 and 1e-3
};

/// |f(w)|/w^3 must stay bounded as w -> 0; measured as a log-log slope.
inline GrowthGate check_cubic_gate(const VisualFunction& f) {
  const double w1 = 1e-2, w2 = 1e-3;
  const double f1 = std::abs(f(w1)), f2 = std::abs(f(w2));
  if (f1 < 1e-250 && f2 < 1e-250) return {true, 3.0};
  if (f2 == 0.0) return {true, 3.0};
  const double alpha = std::log(f1 / f2) / std::log(w1 / w2);
  return {alpha >= 2.9, alpha};
}

}  // namespace visang
