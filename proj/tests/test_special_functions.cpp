#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>

#include "visang/special_functions.hpp"

using namespace visang;
namespace pi = std::numbers;

TEST_CASE("gamma at integers and half-integers") {
  CHECK(sf::gamma(5.0) == Approx(24.0).epsilon(1e-14));
  CHECK(sf::gamma(0.5) == Approx(std::sqrt(pi::pi)).epsilon(1e-14));
  CHECK(sf::gamma(1.0) == Approx(1.0).epsilon(1e-14));
  // Gamma(3.5) Gamma(1.5) = 15 pi / 16
  CHECK(sf::gamma(3.5) * sf::gamma(1.5) ==
        Approx(15.0 * pi::pi / 16.0).epsilon(1e-13));
}

TEST_CASE("gamma matches the C library on [0.5, 30]") {
  for (double x = 0.5; x <= 30.0; x += 0.25)
    CHECK(sf::gamma(x) == Approx(std::tgamma(x)).epsilon(1e-13));
}

TEST_CASE("gamma recurrence and reflection") {
  for (double x : {0.7, 1.3, 2.9, 7.6, 14.2})
    CHECK(sf::gamma(x + 1.0) == Approx(x * sf::gamma(x)).epsilon(1e-13));
  // negative non-integer arguments via reflection
  CHECK(sf::gamma(-0.5) == Approx(-2.0 * std::sqrt(pi::pi)).epsilon(1e-13));
  CHECK(sf::gamma(-1.5) == Approx(4.0 * std::sqrt(pi::pi) / 3.0).epsilon(1e-13));
}

TEST_CASE("gamma poles are reported as infinite") {
  CHECK(std::isinf(sf::gamma(0.0)));
  CHECK(std::isinf(sf::gamma(-1.0)));
  CHECK(std::isinf(sf::gamma(-6.0)));
  CHECK(1.0 / sf::gamma(-3.0) == 0.0);
}

TEST_CASE("duplication identity") {
  for (double z = 0.5; z <= 10.0; z += 0.5) {
    const double lhs = sf::gamma(z) * sf::gamma(z + 0.5);
    const double rhs =
        std::pow(2.0, 1.0 - 2.0 * z) * std::sqrt(pi::pi) * sf::gamma(2.0 * z);
    CHECK(std::abs(lhs - rhs) / sf::gamma(2.0 * z) <= 1e-12);
  }
}

TEST_CASE("log_gamma consistency") {
  for (double x : {0.25, 0.5, 1.0, 2.5, 10.0, 25.0})
    CHECK(sf::log_gamma(x) == Approx(std::lgamma(x)).margin(1e-13));
  CHECK_THROWS_AS(sf::log_gamma(0.0), std::domain_error);
}

TEST_CASE("digamma known values and recurrence") {
  CHECK(sf::digamma(1.0) == Approx(-sf::euler_gamma).margin(1e-12));
  CHECK(sf::digamma(2.0) == Approx(1.0 - sf::euler_gamma).margin(1e-12));
  CHECK(sf::digamma(0.5) ==
        Approx(-sf::euler_gamma - 2.0 * std::log(2.0)).margin(1e-12));
  for (double x : {0.3, 1.7, 4.4, 9.9, 21.0})
    CHECK(sf::digamma(x + 1.0) ==
          Approx(sf::digamma(x) + 1.0 / x).margin(1e-12));
  CHECK_THROWS_AS(sf::digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::digamma(-2.0), std::domain_error);
}

TEST_CASE("digamma against central differences of log_gamma") {
  const double h = 1e-5;
  for (double x : {0.8, 2.5, 6.0, 14.0, 29.0}) {
    const double fd = (sf::log_gamma(x + h) - sf::log_gamma(x - h)) / (2.0 * h);
    CHECK(sf::digamma(x) == Approx(fd).margin(5e-10));
  }
}

TEST_CASE("digamma reflection") {
  for (double x : {0.25, 1.0 / 3.0}) {
    const double lhs = sf::digamma(1.0 - x) - sf::digamma(x);
    const double rhs = pi::pi / std::tan(pi::pi * x);
    CHECK(lhs == Approx(rhs).margin(1e-10));
  }
}

TEST_CASE("beta function") {
  CHECK(sf::beta(1.0, 1.0) == Approx(1.0).epsilon(1e-13));
  CHECK(sf::beta(2.5, 0.5) == Approx(3.0 * pi::pi / 8.0).epsilon(1e-12));
  CHECK(sf::beta(3.0, 1.0) == Approx(1.0 / 3.0).epsilon(1e-12));
  for (double x : {0.5, 1.5, 4.0})
    for (double y : {0.5, 2.0, 7.5})
      CHECK(sf::beta(x, y) ==
            Approx(sf::gamma(x) * sf::gamma(y) / sf::gamma(x + y))
                .epsilon(1e-12));
  CHECK_THROWS_AS(sf::beta(0.0, 1.0), std::domain_error);
}

TEST_CASE("bernoulli numbers") {
  CHECK(sf::bernoulli(1) == Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(sf::bernoulli(2) == Approx(-1.0 / 30.0).epsilon(1e-15));
  CHECK(sf::bernoulli(3) == Approx(1.0 / 42.0).epsilon(1e-15));
  CHECK(sf::bernoulli(5) == Approx(5.0 / 66.0).epsilon(1e-15));
  CHECK_THROWS_AS(sf::bernoulli(0), std::domain_error);

  // independent oracle: the defining recurrence sum_j C(n+1,j) B_j = 0
  // (B_1 = -1/2), evaluated for B_2..B_30
  std::vector<double> B(31, 0.0);
  B[0] = 1.0;
  B[1] = -0.5;
  for (int n = 2; n <= 30; ++n) {
    double binom = 1.0;  // C(n+1, 0)
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += binom * B[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    B[n] = -acc / binom;  // binom is now C(n+1, n)
  }
  for (int k = 1; k <= 15; ++k)
    CHECK(sf::bernoulli(k) == Approx(B[2 * k]).epsilon(1e-12));
}

TEST_CASE("bernoulli pi ratio: table route vs zeta route") {
  // pi^{2k}|B_{2k}|/(2k)! = 2 zeta(2k)/4^k; both sides computable for
  // k in [6, 15] (below that the direct zeta sum is too slow to converge)
  for (int k = 6; k <= 15; ++k) {
    double scale = 1.0;  // pi^{2k} / (2k)!
    for (int i = 1; i <= k; ++i)
      scale *= pi::pi * pi::pi / ((2.0 * i - 1.0) * (2.0 * i));
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double viazeta =
        sign * 2.0 * sf::detail::zeta_even(k) * std::pow(0.25, k);
    CHECK(sf::bernoulli_pi_ratio(k) ==
          Approx(scale * sf::bernoulli(k)).epsilon(1e-13));
    CHECK(sf::bernoulli_pi_ratio(k) == Approx(viazeta).epsilon(1e-13));
  }
  // spot value: k = 1 gives pi^2/12
  CHECK(sf::bernoulli_pi_ratio(1) == Approx(pi::pi * pi::pi / 12.0).epsilon(1e-14));
}

TEST_CASE("bernoulli weights decay geometrically and the series tail dies") {
  for (int k = 2; k <= 40; ++k)
    CHECK(std::abs(sf::bernoulli_pi_ratio(k)) <=
          0.3 * std::abs(sf::bernoulli_pi_ratio(k - 1)));
  for (int m : {3, 12})
    CHECK(std::abs(sf::bernoulli_pi_ratio(30)) / (m - 2.0 + 60.0) < 1e-15);
}
