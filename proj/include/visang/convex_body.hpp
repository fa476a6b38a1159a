#pragma once

// A compact convex set represented by the truncated Fourier series of its
// support function
//   p(phi) = a0 + sum_{k=1}^{K} (a_k cos k phi + b_k sin k phi),
// together with every geometric functional the integral formulas consume.
// Convexity (p + p'' >= 0) is validated at construction on a dense grid with
// local refinement; bodies are immutable afterwards and safe to share across
// threads.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace visang {

/// p, p', p'' at a single normal angle, evaluated termwise from the series.
struct SupportEval {
  double p;
  double dp;
  double ddp;
};

/// Construction-time rejection; carries the minimizing angle and the value of
/// p + p'' found there.
class convexity_error : public std::invalid_argument {
 public:
  convexity_error(double phi, double rho)
      : std::invalid_argument("support function is not convex: p + p'' = " +
                              std::to_string(rho) + " at phi = " +
                              std::to_string(phi)),
        phi_min(phi),
        rho_min(rho) {}
  double phi_min;
  double rho_min;
};

class ConvexBody {
 public:
  /// Validated construction from Fourier coefficients; coeffs[k-1] = (a_k, b_k).
  static ConvexBody from_fourier(double a0,
                                 std::vector<std::array<double, 2>> coeffs) {
    if (!(a0 > 0.0))
      throw std::invalid_argument("from_fourier: requires a0 > 0");
    ConvexBody body(a0, std::move(coeffs));
    body.validate_convexity();
    return body;
  }

  /// Projection of equispaced support-function samples onto harmonics 0..K.
  /// Exact for trigonometric polynomials of degree <= K; least squares
  /// otherwise. Requires at least 4K samples covering one full period.
  static ConvexBody from_samples(
      const std::vector<std::array<double, 2>>& samples, int K) {
    if (K < 1) throw std::invalid_argument("from_samples: requires K >= 1");
    const std::size_t n = samples.size();
    if (n < std::size_t(4 * K))
      throw std::invalid_argument("from_samples: requires at least 4K samples");
    const double step = 2.0 * std::numbers::pi / double(n);
    for (std::size_t i = 1; i < n; ++i) {
      const double d = samples[i][0] - samples[i - 1][0];
      if (std::abs(d - step) > 1e-9)
        throw std::invalid_argument("from_samples: samples must be equispaced");
    }
    double a0 = 0.0;
    for (const auto& s : samples) a0 += s[1];
    a0 /= double(n);
    std::vector<std::array<double, 2>> coeffs(K, {0.0, 0.0});
    for (int k = 1; k <= K; ++k) {
      double ak = 0.0, bk = 0.0;
      for (const auto& s : samples) {
        ak += s[1] * std::cos(k * s[0]);
        bk += s[1] * std::sin(k * s[0]);
      }
      coeffs[k - 1] = {2.0 * ak / double(n), 2.0 * bk / double(n)};
    }
    return from_fourier(a0, std::move(coeffs));
  }

  double a0() const { return a0_; }
  int truncation() const { return int(ab_.size()); }

  /// a_k, b_k for k in [1, K]; zero beyond the truncation.
  double coeff_a(int k) const {
    return (k >= 1 && k <= truncation()) ? ab_[k - 1][0] : 0.0;
  }
  double coeff_b(int k) const {
    return (k >= 1 && k <= truncation()) ? ab_[k - 1][1] : 0.0;
  }
  /// c_k^2 = a_k^2 + b_k^2. Translation-sensitive only through k = 1; all
  /// integral formulas consume k >= 2 only.
  double ck2(int k) const {
    const double a = coeff_a(k), b = coeff_b(k);
    return a * a + b * b;
  }

  SupportEval support(double phi) const {
    const double c1 = std::cos(phi), s1 = std::sin(phi);
    double ck = c1, sk = s1;
    double p = a0_, dp = 0.0, ddp = 0.0;
    for (int k = 1; k <= truncation(); ++k) {
      if (k > 1) {
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
      }
      const double a = ab_[k - 1][0], b = ab_[k - 1][1];
      const double e = a * ck + b * sk;
      p += e;
      dp += k * (b * ck - a * sk);
      ddp -= double(k) * k * e;
    }
    return {p, dp, ddp};
  }

  /// L = 2 pi a0 (orthogonality kills every higher harmonic).
  double length() const { return 2.0 * std::numbers::pi * a0_; }

  /// F = L^2/(4 pi) - (pi/2) sum_{k>=2} (k^2-1) c_k^2.
  double area() const {
    double s = 0.0;
    for (int k = 2; k <= truncation(); ++k)
      s += (double(k) * k - 1.0) * ck2(k);
    return std::numbers::pi * a0_ * a0_ - 0.5 * std::numbers::pi * s;
  }

  /// Pedal area about the Steiner point: pi a0^2 + (pi/2) sum_{k>=2} c_k^2.
  double pedal_area() const {
    double s = 0.0;
    for (int k = 2; k <= truncation(); ++k) s += ck2(k);
    return std::numbers::pi * a0_ * a0_ + 0.5 * std::numbers::pi * s;
  }

  std::array<double, 2> steiner_point() const {
    return {coeff_a(1), coeff_b(1)};
  }

  /// Same body with the Steiner point moved to the origin (a_1 = b_1 = 0).
  ConvexBody recentered() const {
    if (truncation() == 0 || (ab_[0][0] == 0.0 && ab_[0][1] == 0.0))
      return *this;
    ConvexBody b = *this;
    b.ab_[0] = {0.0, 0.0};
    return b;
  }

  /// True iff every even harmonic k >= 2 satisfies sqrt(c_k^2) <= tol * a0.
  bool is_constant_width(double tol) const {
    for (int k = 2; k <= truncation(); k += 2)
      if (std::sqrt(ck2(k)) > tol * a0_) return false;
    return true;
  }

  /// Isoperimetric deficit Delta = L^2 - 4 pi F = 2 pi^2 sum (k^2-1) c_k^2.
  double isoperimetric_deficit() const {
    double s = 0.0;
    for (int k = 2; k <= truncation(); ++k)
      s += (double(k) * k - 1.0) * ck2(k);
    return 2.0 * std::numbers::pi * std::numbers::pi * s;
  }

  /// H = lim_{w->0} F(w) sin^2 w = L^2/pi + 2 pi sum_{even k>=2} c_k^2.
  double visual_limit() const {
    double s = 0.0;
    for (int k = 2; k <= truncation(); k += 2) s += ck2(k);
    const double L = length();
    return L * L / std::numbers::pi + 2.0 * std::numbers::pi * s;
  }

  /// Sufficient condition for the origin to lie inside K.
  bool origin_strictly_interior() const {
    double s = 0.0;
    for (int k = 1; k <= truncation(); ++k) s += std::sqrt(ck2(k));
    return a0_ > s;
  }

  /// Tangent lengths T, T1 from the exterior point with coordinates
  /// (phi, omega); requires the origin inside K (recenter first otherwise).
  std::pair<double, double> tangent_lengths(double phi, double omega) const {
    if (!origin_strictly_interior())
      throw std::domain_error(
          "tangent_lengths: origin not verifiably interior; recenter to the "
          "Steiner point first");
    return tangent_lengths_unchecked(phi, omega);
  }

  /// Same as tangent_lengths without the interiority guard; quadrature code
  /// recenters once and then calls this in the hot loop.
  std::pair<double, double> tangent_lengths_unchecked(double phi,
                                                      double omega) const {
    const double s = std::sin(omega), c = std::cos(omega);
    const SupportEval e = support(phi);
    const SupportEval e1 = support(std::numbers::pi + phi - omega);
    const double T = (e.p * c - e.dp * s + e1.p) / s;
    const double T1 = (e1.p * c + e1.dp * s + e.p) / s;
    return {T, T1};
  }

  /// The point seeing K under visual angle omega, tangency normal angle phi.
  std::array<double, 2> exterior_point(double phi, double omega) const {
    const double s = std::sin(omega);
    const double p = support(phi).p;
    const double p1 = support(std::numbers::pi + phi - omega).p;
    const double X = -(p * std::sin(phi - omega) + p1 * std::sin(phi)) / s;
    const double Y = (p * std::cos(phi - omega) + p1 * std::cos(phi)) / s;
    return {X, Y};
  }

  /// Fourier coefficients (alpha_k, beta_k) = ((1-k^2) a_k, (1-k^2) b_k) of
  /// the radius of curvature rho = p + p''; gamma_k^2 = (1-k^2)^2 c_k^2.
  std::vector<std::array<double, 2>> curvature_radius_coeffs() const {
    std::vector<std::array<double, 2>> out(ab_.size());
    for (int k = 1; k <= truncation(); ++k) {
      const double f = 1.0 - double(k) * k;
      out[k - 1] = {f * ab_[k - 1][0], f * ab_[k - 1][1]};
    }
    return out;
  }

  /// Rotation by theta: phase shift of each harmonic; every c_k^2 unchanged.
  ConvexBody rotated(double theta) const {
    ConvexBody b = *this;
    for (int k = 1; k <= truncation(); ++k) {
      const double c = std::cos(k * theta), s = std::sin(k * theta);
      const double a = ab_[k - 1][0], bb = ab_[k - 1][1];
      b.ab_[k - 1] = {a * c - bb * s, a * s + bb * c};
    }
    return b;
  }

  /// Translation by (dx, dy): only the first harmonic moves.
  ConvexBody translated(double dx, double dy) const {
    ConvexBody b = *this;
    if (b.ab_.empty()) b.ab_.push_back({0.0, 0.0});
    b.ab_[0][0] += dx;
    b.ab_[0][1] += dy;
    return b;
  }

  /// min(p + p'') located during validation.
  double convexity_margin() const { return margin_; }

 private:
  ConvexBody(double a0, std::vector<std::array<double, 2>> coeffs)
      : a0_(a0), ab_(std::move(coeffs)) {}

  double rho(double phi) const {
    const SupportEval e = support(phi);
    return e.p + e.ddp;
  }

  void validate_convexity() {
    const int K = std::max(truncation(), 1);
    const int n = std::max(32 * K, 256);
    const double step = 2.0 * std::numbers::pi / n;
    double best = rho(0.0);
    int besti = 0;
    for (int i = 1; i < n; ++i) {
      const double v = rho(i * step);
      if (v < best) {
        best = v;
        besti = i;
      }
    }
    // golden-section refinement inside the bracketing cell
    double lo = (besti - 1) * step, hi = (besti + 1) * step;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = rho(x1), f2 = rho(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = rho(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = rho(x2);
      }
    }
    const double xmin = 0.5 * (lo + hi);
    const double fmin = std::min(std::min(f1, f2), best);
    margin_ = fmin;
    if (fmin < -1e-9 * a0_)
      throw convexity_error(fmin < best ? xmin : besti * step, fmin);
  }

  double a0_;
  std::vector<std::array<double, 2>> ab_;
  double margin_ = 0.0;
};

/// The section-2 functionals in one record.
struct BodySummary {
  double length;
  double area;
  double pedal_area;
  std::array<double, 2> steiner;
  double deficit;        // L^2 - 4 pi F
  double visual_limit;   // H
  bool constant_width;
  double convexity_margin;
};

inline BodySummary summarize(const ConvexBody& body, double cw_tol = 1e-12) {
  return {body.length(),
          body.area(),
          body.pedal_area(),
          body.steiner_point(),
          body.isoperimetric_deficit(),
          body.visual_limit(),
          body.is_constant_width(cw_tol),
          body.convexity_margin()};
}

namespace presets {

inline ConvexBody circle(double r) { return ConvexBody::from_fourier(r, {}); }

/// Support function sqrt(a^2 cos^2 + b^2 sin^2) sampled and projected.
inline ConvexBody ellipse(double a, double b, int K = 32) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("ellipse: requires positive semi-axes");
  const int n = std::max(4 * K, 512);
  std::vector<std::array<double, 2>> samples(n);
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / n;
    const double c = std::cos(phi), s = std::sin(phi);
    samples[i] = {phi, std::sqrt(a * a * c * c + b * b * s * s)};
  }
  return ConvexBody::from_samples(samples, K);
}

/// Constant-width family p = a0 + a3 cos(3 phi); convex iff 8|a3| <= a0.
inline ConvexBody cw3(double a0, double a3) {
  return ConvexBody::from_fourier(a0, {{0.0, 0.0}, {0.0, 0.0}, {a3, 0.0}});
}

namespace detail {
inline double next_uniform(std::uint64_t& s) {
  // splitmix64; keeps preset bodies identical across platforms
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return double(z >> 11) * 0x1.0p-53;
}
}  // namespace detail

/// Random valid body: harmonics k = 2..K with magnitudes ~ 1/k^decay, then
/// rescaled so sum (k^2-1) c_k = 0.45 a0, which keeps p + p'' >= 0.55 a0.
inline ConvexBody random_body(std::uint64_t seed, int K, double decay) {
  if (K < 2) throw std::invalid_argument("random_body: requires K >= 2");
  std::uint64_t state = seed * 0x2545f4914f6cdd1dULL + 0x9e3779b97f4a7c15ULL;
  std::vector<std::array<double, 2>> coeffs(K, {0.0, 0.0});
  double weighted = 0.0;
  for (int k = 2; k <= K; ++k) {
    const double mag =
        (0.25 + 0.75 * detail::next_uniform(state)) / std::pow(double(k), decay);
    const double ang = 2.0 * std::numbers::pi * detail::next_uniform(state);
    coeffs[k - 1] = {mag * std::cos(ang), mag * std::sin(ang)};
    weighted += (double(k) * k - 1.0) * mag;
  }
  const double scale = 0.45 / weighted;
  for (auto& c : coeffs) {
    c[0] *= scale;
    c[1] *= scale;
  }
  return ConvexBody::from_fourier(1.0, std::move(coeffs));
}

}  // namespace presets
}  // namespace visang
