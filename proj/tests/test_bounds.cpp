#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "visang/bounds.hpp"

using namespace visang;
namespace pi = std::numbers;

TEST_CASE("upper bound: circle is the equality case") {
  const auto circle = presets::circle(1.0);
  for (int m = 1; m <= 8; ++m) {
    const auto r = bounds::upper_bound(circle, m);
    CHECK(r.satisfied);
    CHECK(std::abs(r.slack) <= 1e-9);
  }
  // strict slack once any k >= 2 harmonic is present
  const auto body = ConvexBody::from_fourier(1.0, {{0, 0}, {0.1, 0}});
  const auto r = bounds::upper_bound(body, 2);
  CHECK(r.satisfied);
  // Eq. evaluates to -8 pi/(1-4) c_2^2 of slack
  CHECK(r.slack == Approx(8.0 * pi::pi * 0.01 / 3.0).epsilon(1e-12));
  // m = 3 bound value: -pi^3 F + (12 pi ln2 - 3 pi/2) L^2/(2 pi)
  const auto r3 = bounds::upper_bound(body, 3);
  const double L = body.length();
  CHECK(r3.bound_value ==
        Approx(-std::pow(pi::pi, 3) * body.area() +
               (12.0 * pi::pi * std::log(2.0) - 1.5 * pi::pi) * L * L /
                   (2.0 * pi::pi))
            .epsilon(1e-13));
}

TEST_CASE("upper bound: randomized sweep with slack shrinking to zero") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto body = presets::random_body(seed, 8, 3.0);
    for (int m = 1; m <= 8; ++m) CHECK(bounds::upper_bound(body, m).satisfied);
  }
  // slack(t * coeffs) decreases with t on sampled t
  const auto base = presets::random_body(42, 8, 3.0);
  double prev = -1.0;
  for (double t : {1.0, 0.6, 0.3, 0.1, 0.0}) {
    std::vector<std::array<double, 2>> coeffs;
    for (int k = 1; k <= base.truncation(); ++k)
      coeffs.push_back({t * base.coeff_a(k), t * base.coeff_b(k)});
    const auto scaled = ConvexBody::from_fourier(base.a0(), coeffs);
    const double slack = bounds::upper_bound(scaled, 4).slack;
    if (prev >= 0.0) CHECK(slack < prev);
    prev = slack;
  }
  CHECK(prev == Approx(0.0).margin(1e-12));
}

TEST_CASE("masotti lower bounds: values and ordering") {
  // circle: Santalo's bound is tight, (16 - pi^2) pi = 16 pi - pi^3
  const auto circle = presets::circle(1.0);
  const auto rc = bounds::masotti_lower_bounds(circle);
  REQUIRE(rc.size() == 3);
  for (const auto& r : rc) {
    CHECK(r.satisfied);
    CHECK(std::abs(r.slack) <= 1e-12);
  }
  CHECK(rc[2].bound_value ==
        Approx((16.0 - pi::pi * pi::pi) * pi::pi).epsilon(1e-14));

  // astroid-parallel body: H-corrected bound attained exactly
  const auto astro = ConvexBody::from_fourier(1.0, {{0, 0}, {0.08, 0.06}});
  const auto ra = bounds::masotti_lower_bounds(astro);
  CHECK(std::abs(ra[0].slack) <= 1e-8);
  CHECK(ra[1].satisfied);
  CHECK(ra[2].satisfied);

  // odd-harmonic body: constant width, so the H-corrected bound is exactly
  // tight (even harmonics vanish) while the weaker two stay strict
  const auto odd = ConvexBody::from_fourier(1.0, {{0, 0}, {0, 0}, {0.05, 0}});
  const auto ro = bounds::masotti_lower_bounds(odd);
  CHECK(ro[0].satisfied);
  CHECK(std::abs(ro[0].slack) <= 1e-12);
  CHECK(ro[1].slack > 1e-6);
  CHECK(ro[2].slack > 1e-6);

  // ordering: H-corrected >= pedal >= Santalo, for random bodies
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto body = presets::random_body(seed, 8, 3.0);
    const auto r = bounds::masotti_lower_bounds(body);
    CHECK(r[0].bound_value >= r[1].bound_value - 1e-12);
    CHECK(r[1].bound_value >= r[2].bound_value - 1e-12);
    for (const auto& rec : r) CHECK(rec.satisfied);
  }
}

TEST_CASE("constant-width chain") {
  // circle: value = bound, and the chain tail is zero
  const auto circle = presets::circle(1.0);
  const auto rc = bounds::constant_width_lower_bound(circle, 2);
  CHECK(rc.all_satisfied());
  CHECK(std::abs(rc.records[0].slack) <= 1e-9);
  CHECK(rc.integral_value == Approx(16.0 * pi::pi - std::pow(pi::pi, 3)));

  const auto cw = presets::cw3(1.0, 0.05);
  const double delta = cw.isoperimetric_deficit();
  for (int m = 1; m <= 8; ++m) {
    const auto r = bounds::constant_width_lower_bound(cw, m);
    CHECK(r.all_satisfied());
    // strict first inequality away from the circle
    CHECK(r.records[0].slack > 1e-9);
    // the (3/4)^m margin of the second inequality
    const double margin =
        0.25 * std::pow(pi::pi, m - 1) * std::pow(0.75, m) * delta;
    CHECK(r.records[1].slack >= margin - 1e-9);
  }

  const auto generic = ConvexBody::from_fourier(1.0, {{0, 0}, {0.1, 0}});
  CHECK_THROWS_AS(bounds::constant_width_lower_bound(generic, 2),
                  bounds::applicability_error);
}

TEST_CASE("constant-width sin-power equality") {
  const auto circle = presets::circle(1.0);
  const auto r3 = bounds::sin_power_constant_width(circle, 3);
  CHECK(r3.satisfied);
  CHECK(r3.bound_value == Approx(3.0 * pi::pi * pi::pi).epsilon(1e-13));

  const auto cw = presets::cw3(1.0, 0.05);
  for (int m : {4, 7})
    CHECK(bounds::sin_power_constant_width(cw, m).satisfied);

  const auto generic = ConvexBody::from_fourier(1.0, {{0, 0}, {0.1, 0}});
  CHECK_THROWS_AS(bounds::sin_power_constant_width(generic, 4),
                  bounds::applicability_error);
}
