#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "visang/kernels.hpp"
#include "visang/quadrature.hpp"

using namespace visang;
namespace pi = std::numbers;

TEST_CASE("h: pinned values") {
  for (double w = 0.0; w <= pi::pi; w += 0.17)
    CHECK(kernels::h(1, w) == 0.0);
  CHECK(kernels::h(2, 0.0) == Approx(4.0).margin(1e-13));
  CHECK(kernels::h(3, 0.0) == Approx(0.0).margin(1e-13));
  CHECK(kernels::h(4, 0.0) == Approx(4.0).margin(1e-13));
  CHECK(kernels::h(5, 0.0) == Approx(0.0).margin(1e-13));
  CHECK(kernels::h(2, pi::pi / 2.0) == Approx(3.0).margin(1e-14));
}

TEST_CASE("h: four-cosine form matches the raw trigonometric polynomial") {
  for (int k = 2; k <= 12; ++k)
    for (double w = 0.05; w < pi::pi; w += 0.07)
      CHECK(kernels::h(k, w) == Approx(kernels::h_raw(k, w)).margin(1e-11));
}

TEST_CASE("h vanishes to fourth order at pi") {
  for (int k = 2; k <= 12; ++k) {
    const double h2 = std::abs(kernels::h(k, pi::pi - 1e-2));
    const double h3 = std::abs(kernels::h(k, pi::pi - 1e-3));
    // ratio ~ 10^4 for a quartic zero
    CHECK(h2 / h3 > 5e3);
    CHECK(h2 / h3 < 2e4);
    CHECK(h2 < 1e-4 * (k + 1.0) * (k + 1.0));
  }
}

TEST_CASE("h_over_sin3 equals h/sin^3 in the interior") {
  for (int k = 2; k <= 12; ++k)
    for (double w = 0.3; w < pi::pi - 0.3; w += 0.11) {
      const double s = std::sin(w);
      CHECK(kernels::h_over_sin3(k, w) ==
            Approx(kernels::h(k, w) / (s * s * s)).epsilon(1e-11).margin(1e-11));
    }
}

TEST_CASE("g: pinned values") {
  CHECK(kernels::g(2, 0.0) == Approx(2.0).margin(1e-14));
  CHECK(kernels::g(2, pi::pi) == Approx(0.0).margin(1e-14));
  CHECK(kernels::g(3, 0.0) == Approx(0.0).margin(1e-14));
  // g_k(0) = 1 + (-1)^k; g_k(pi) = 0
  for (int k = 2; k <= 12; ++k) {
    CHECK(kernels::g(k, 0.0) ==
          Approx(1.0 + ((k % 2 == 0) ? 1.0 : -1.0)).margin(1e-13));
    CHECK(kernels::g(k, pi::pi) == Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("g_over_sin2: cosine sums match direct division away from endpoints") {
  CHECK(kernels::g_over_sin2(3, pi::pi / 2.0) == Approx(4.0).margin(1e-13));
  CHECK(kernels::g_over_sin2(2, pi::pi / 2.0) == Approx(1.0).margin(1e-13));
  const double s1 = std::sin(1.0);
  CHECK(kernels::g_over_sin2(3, 1.0) ==
        Approx(kernels::g(3, 1.0) / (s1 * s1)).epsilon(1e-12));
  for (int k = 2; k <= 12; ++k)
    for (double w = 0.1; w < pi::pi - 0.1; w += 0.09) {
      const double s = std::sin(w);
      CHECK(kernels::g_over_sin2(k, w) ==
            Approx(kernels::g(k, w) / (s * s)).epsilon(1e-12).margin(1e-12));
    }
}

TEST_CASE("derivative identity: h_k/sin^3 = -(g_k/sin^2)'") {
  // 5-point central stencil: the 3-point one is swamped by the third
  // derivative of 1/(1-cos w) near the left edge of the grid
  const double step = 1e-5;
  for (int k = 2; k <= 12; ++k)
    for (double w = 0.1 + 1e-3; w <= pi::pi - 0.1; w += 0.05) {
      const auto g = [&](double x) { return kernels::g_over_sin2(k, x); };
      const double d = (-g(w + 2.0 * step) + 8.0 * g(w + step) -
                        8.0 * g(w - step) + g(w - 2.0 * step)) /
                       (12.0 * step);
      CHECK(std::abs(kernels::h_over_sin3(k, w) + d) <= 1e-6);
    }
}

TEST_CASE("hurwitz functions: pinned values and endpoints") {
  for (int m = 2; m <= 10; ++m) {
    CHECK(kernels::f_hurwitz(m, 0.0) == Approx(0.0).margin(1e-15));
    CHECK(kernels::f_hurwitz(m, pi::pi) == Approx(0.0).margin(1e-12));
  }
  CHECK(kernels::f_hurwitz(2, pi::pi / 2.0) == Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("hurwitz Taylor branch is continuous with the direct form") {
  for (int m = 2; m <= 10; ++m) {
    const double wc = 0.5 / (m + 1.0);  // branch crossover
    for (double w : {0.9 * wc, 0.999 * wc, 1.001 * wc, 1.1 * wc}) {
      const double md = m;
      const double direct = -2.0 * std::sin(w) +
                            (md + 1.0) / (md - 1.0) * std::sin((md - 1.0) * w) -
                            (md - 1.0) / (md + 1.0) * std::sin((md + 1.0) * w);
      CHECK(kernels::f_hurwitz(m, w) == Approx(direct).margin(1e-14));
    }
  }
}

TEST_CASE("hurwitz derivative: product form vs finite differences, and the small-w limit") {
  const double step = 1e-6;
  for (int m = 2; m <= 8; ++m)
    for (double w = 0.2; w < pi::pi; w += 0.23) {
      const double fd = (kernels::f_hurwitz(m, w + step) -
                         kernels::f_hurwitz(m, w - step)) /
                        (2.0 * step);
      CHECK(kernels::f_hurwitz_deriv(m, w) == Approx(fd).margin(1e-7));
    }
  // f'_m(w) / (2(1-cos w)) -> m^2 as w -> 0
  for (int m = 2; m <= 8; ++m) {
    const double w = 1e-4;
    const double s = std::sin(0.5 * w);
    CHECK(kernels::f_hurwitz_deriv(m, w) / (4.0 * s * s) ==
          Approx(double(m) * m).epsilon(1e-5));
  }
}

TEST_CASE("g-f link: g_m = 1 + ((-1)^m/2)(f'_m + 2 cos)") {
  for (int m = 2; m <= 10; ++m)
    for (double w = 0.0; w <= pi::pi; w += 0.03) {
      const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
      const double rhs =
          1.0 + 0.5 * sgn * (kernels::f_hurwitz_deriv(m, w) + 2.0 * std::cos(w));
      CHECK(kernels::g(m, w) == Approx(rhs).margin(1e-12));
    }
}

TEST_CASE("conjugate Dirichlet sum identity (even k)") {
  for (int k = 2; k <= 12; k += 2)
    for (double w = 0.05; w < pi::pi - 0.05; w += 0.07) {
      double lhs = 0.0;
      for (int j = 1; j <= k - 1; j += 2) lhs += std::sin(j * w);
      const double rhs = (1.0 - std::cos(k * w)) / (2.0 * std::sin(w));
      CHECK(lhs == Approx(rhs).margin(1e-12));
    }
}

TEST_CASE("V: bases, recurrence values, signs") {
  for (int j = 1; j <= 12; ++j) CHECK(kernels::V(0, j) == 0.0);
  // V(2,j) = 2 pi (-1)^j / j^2
  for (int j = 1; j <= 12; ++j) {
    const double sj = (j % 2 == 0) ? 1.0 : -1.0;
    CHECK(kernels::V(2, j) ==
          Approx(2.0 * pi::pi * sj / (double(j) * j)).epsilon(1e-13));
  }
  // V(3,1) = -3 pi^2 + 12 by integrating omega^3 cos(omega) by parts
  CHECK(kernels::V(3, 1) == Approx(-3.0 * pi::pi * pi::pi + 12.0).epsilon(1e-13));
  for (int r = 1; r <= 8; ++r)
    for (int j = 1; j <= 12; ++j) {
      if (j % 2 == 0) CHECK(kernels::V(r, j) >= -1e-13);
      else CHECK(kernels::V(r, j) <= 1e-13);
    }
}

TEST_CASE("V against quadrature") {
  const quad::QuadratureSpec spec{1e-12, 1e-13, 20000, 1e-3};
  for (int r = 0; r <= 8; ++r)
    for (int j = 1; j <= 12; ++j) {
      const auto q = quad::integrate_1d(
          [r, j](double w) { return std::pow(w, r) * std::cos(j * w); }, 0.0,
          pi::pi, spec, std::max(8, j));
      CHECK(std::abs(kernels::V(r, j) - q.value) <= 1e-10);
    }
}

TEST_CASE("I: pinned values") {
  CHECK(kernels::I(2, 2) == Approx(-pi::pi / 4.0).epsilon(1e-13));
  CHECK(kernels::I(0, 0) == Approx(pi::pi).epsilon(1e-14));
  CHECK(kernels::I(2, 0) == Approx(pi::pi / 2.0).epsilon(1e-13));
  // I(m,0) = 2^{-m} m! pi / Gamma(1+m/2)^2
  for (int m = 1; m <= 10; ++m) {
    const double g = sf::gamma(1.0 + 0.5 * m);
    CHECK(kernels::I(m, 0) ==
          Approx(std::ldexp(1.0, -m) * kernels::detail::factorial(m) * pi::pi /
                 (g * g))
              .epsilon(1e-12));
  }
  // poles: m even, k > m
  CHECK(kernels::I(2, 4) == 0.0);
  CHECK(kernels::I(4, 6) == 0.0);
  // I(3,6) = 4/315 (expand sin^3 into harmonics 1, 3 and integrate by hand)
  CHECK(kernels::I(3, 6) == Approx(4.0 / 315.0).epsilon(1e-12));
  CHECK_THROWS_AS(kernels::I(3, 5), std::domain_error);
}

TEST_CASE("I against quadrature") {
  const quad::QuadratureSpec spec{1e-12, 1e-13, 20000, 1e-3};
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= 12; k += 2) {
      const auto q = quad::integrate_1d(
          [m, k](double w) {
            return std::pow(std::sin(w), m) * std::cos(k * w);
          },
          0.0, pi::pi, spec, std::max(8, k));
      CHECK(std::abs(kernels::I(m, k) - q.value) <= 1e-10);
    }
}
