#pragma once

// Numerical integration engines.
//
//  - integrate_1d: adaptive Gauss-Kronrod (7-15) bisection with an embedded
//    error estimate. The rule is open (no endpoint evaluation) so integrable
//    endpoint behavior on an open interval is handled without special casing.
//  - integrate_exterior: the direct (phi, omega) integrator for
//    int f(omega) dP over the exterior of a convex body; the brute-force
//    oracle for every closed form in the library.
//
// Evaluation may run on several threads (VISANG_THREADS); reduction order is
// fixed and compensated, so results are bit-identical for any thread count.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "visang/convex_body.hpp"
#include "visang/visual_function.hpp"

namespace visang::quad {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_panels = 20000;
  double endpoint_margin = 1e-3;  // offset from singular endpoints

  void validate() const {
    if (!(rel_tol >= 1e-13))
      throw std::invalid_argument("QuadratureSpec: rel_tol must be >= 1e-13");
    if (!(endpoint_margin > 0.0) || endpoint_margin > 1e-2)
      throw std::invalid_argument(
          "QuadratureSpec: endpoint_margin must lie in (0, 1e-2]");
    if (max_panels < 1)
      throw std::invalid_argument("QuadratureSpec: max_panels must be >= 1");
  }
};

enum class Method { series, direct, functional, closed_form };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::direct: return "direct";
    case Method::functional: return "functional";
    case Method::closed_form: return "closed";
  }
  return "?";
}

struct IntegralResult {
  double value = 0.0;
  Method method = Method::direct;
  double error_estimate = 0.0;
  long metadata = 0;  // panel count (quadrature) or truncation K (series)
  bool converged = true;
};

/// Compensated accumulator; fixed insertion order gives reproducible sums.
class KahanAccumulator {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

namespace detail {

inline std::atomic<int>& thread_override() {
  static std::atomic<int> v{0};
  return v;
}

inline int thread_count() {
  const int o = thread_override().load(std::memory_order_relaxed);
  if (o >= 1) return o;
  if (const char* env = std::getenv("VISANG_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// fn(i) must write only to slot i of caller-owned storage.
template <typename Fn>
void for_each_index(int n, Fn&& fn) {
  const int nt = std::min(thread_count(), n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    const int lo = n * t / nt, hi = n * (t + 1) / nt;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
inline constexpr double gk_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
  double value;
  double error;
};

template <typename F>
PanelEstimate gk15(F&& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double fv1[7], fv2[7];
  const double fc = f(c);
  double resk = gk_wk[7] * fc;
  double resg = gk_wg[3] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double d = h * gk_nodes[j];
    fv1[j] = f(c - d);
    fv2[j] = f(c + d);
    const double sum = fv1[j] + fv2[j];
    resk += gk_wk[j] * sum;
    resabs += gk_wk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += gk_wg[(j - 1) / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = gk_wk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += gk_wk[j] *
              (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  resasc *= std::abs(h);
  resabs *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  return {resk * h, std::max(err, floor)};
}

template <typename F>
struct AdaptiveWorker {
  F& f;
  int budget;
  KahanAccumulator value;
  KahanAccumulator error;
  long panels = 0;
  bool exhausted = false;

  void refine(double a, double b, const PanelEstimate& e, double tol,
              int depth) {
    if (e.error <= tol || depth >= 52 || budget <= 0) {
      if (e.error > tol && budget <= 0) exhausted = true;
      value.add(e.value);
      error.add(e.error);
      ++panels;
      return;
    }
    const double mid = 0.5 * (a + b);
    budget -= 2;
    const PanelEstimate left = gk15(f, a, mid);
    const PanelEstimate right = gk15(f, mid, b);
    refine(a, mid, left, 0.5 * tol, depth + 1);
    refine(mid, b, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace detail

/// Adaptive quadrature of f over (a, b); open rule, deterministic
/// left-to-right compensated accumulation. min_intervals forces an initial
/// uniform split (raise it for oscillatory integrands).
template <typename F>
IntegralResult integrate_1d(F&& f, double a, double b,
                            const QuadratureSpec& spec, int min_intervals = 8) {
  spec.validate();
  const int n0 = std::max(1, min_intervals);
  std::vector<detail::PanelEstimate> first(n0);
  std::vector<double> edges(n0 + 1);
  for (int i = 0; i <= n0; ++i) edges[i] = a + (b - a) * double(i) / n0;
  double coarse = 0.0;
  for (int i = 0; i < n0; ++i) {
    first[i] = detail::gk15(f, edges[i], edges[i + 1]);
    coarse += first[i].value;
  }
  const double tau = std::max(spec.abs_tol, spec.rel_tol * std::abs(coarse));

  detail::AdaptiveWorker<F> worker{f, spec.max_panels - n0, {}, {}, 0, false};
  for (int i = 0; i < n0; ++i)
    worker.refine(edges[i], edges[i + 1], first[i], tau / n0, 0);

  IntegralResult out;
  out.value = worker.value.value();
  out.error_estimate = worker.error.value();
  out.metadata = worker.panels;
  out.method = Method::direct;
  out.converged =
      !worker.exhausted &&
      out.error_estimate <=
          2.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)) +
              1e-300;
  return out;
}

namespace detail {

// int_0^{2pi} T*T1 dphi by the periodic trapezoid rule; exact for the
// trigonometric polynomial integrand once n > 2K. Node evaluation may be
// parallel; the reduction is ordered and compensated.
class InnerProduct {
 public:
  explicit InnerProduct(const ConvexBody& body)
      : body_(body), n_(std::max(64, 4 * body.truncation() + 8)) {}

  double operator()(double omega) const {
    std::vector<double> vals(n_);
    const double step = 2.0 * std::numbers::pi / n_;
    for_each_index(n_, [&](int j) {
      const auto [t, t1] = body_.tangent_lengths_unchecked(j * step, omega);
      vals[j] = t * t1;
    });
    KahanAccumulator acc;
    for (double v : vals) acc.add(v);
    return acc.value() * step;
  }

  int nodes() const { return n_; }

 private:
  const ConvexBody& body_;
  int n_;
};

// int_{pi-delta}^{pi} G, fitting G(pi-u) = c1 u + c2 u^2 through samples at
// u = delta and delta/2. Returns the estimate and |difference from the
// linear-only model| as its error proxy.
template <typename G>
PanelEstimate pi_sliver(G&& g, double delta) {
  const double g1 = g(std::numbers::pi - delta);
  const double g2 = g(std::numbers::pi - 0.5 * delta);
  const double s = delta * (g1 + 4.0 * g2) / 6.0;
  return {s, std::abs(s - 0.5 * delta * g1)};
}

}  // namespace detail

/// Direct exterior integral int_{P not in K} f(omega) dP in (phi, omega)
/// coordinates. f must vanish to third order at omega = 0 (checked); the
/// sliver [pi - margin, pi], where the tangent lengths vanish as 0/0, is
/// handled by quadratic extrapolation instead of pointwise evaluation.
inline IntegralResult integrate_exterior(const ConvexBody& body,
                                         const VisualFunction& f,
                                         const QuadratureSpec& spec) {
  spec.validate();
  const GrowthGate gate = check_cubic_gate(f);
  if (!gate.pass)
    throw std::domain_error(
        "integrate_exterior: f fails the O(w^3) growth gate (measured "
        "exponent " +
        std::to_string(gate.exponent) + ")");
  const ConvexBody b = body.recentered();
  const detail::InnerProduct inner(b);
  const auto g = [&](double w) { return f(w) / std::sin(w) * inner(w); };

  const double delta = spec.endpoint_margin;
  IntegralResult out =
      integrate_1d(g, 0.0, std::numbers::pi - delta, spec, 16);
  const detail::PanelEstimate sliver = detail::pi_sliver(g, delta);
  out.value += sliver.value;
  out.error_estimate += sliver.error;
  out.method = Method::direct;
  return out;
}

/// Area enclosed by the level set C_{omega0}, computed the slow way:
/// F plus the integral of the area element over omega in (omega0, pi).
/// Serves as the oracle for the closed-form level-set area.
inline IntegralResult level_set_area_direct(const ConvexBody& body,
                                            double omega0,
                                            const QuadratureSpec& spec) {
  spec.validate();
  if (!(omega0 > 0.0) || !(omega0 < std::numbers::pi))
    throw std::domain_error("level_set_area_direct: omega0 must lie in (0, pi)");
  const ConvexBody b = body.recentered();
  const detail::InnerProduct inner(b);
  const auto g = [&](double w) { return inner(w) / std::sin(w); };

  const double delta =
      std::min(spec.endpoint_margin, 0.5 * (std::numbers::pi - omega0));
  IntegralResult out =
      integrate_1d(g, omega0, std::numbers::pi - delta, spec, 16);
  const detail::PanelEstimate sliver = detail::pi_sliver(g, delta);
  out.value += sliver.value + b.area();
  out.error_estimate += sliver.error;
  out.method = Method::direct;
  return out;
}

/// Override the VISANG_THREADS environment default (0 restores it).
inline void set_thread_count(int n) {
  detail::thread_override().store(n, std::memory_order_relaxed);
}

}  // namespace visang::quad
