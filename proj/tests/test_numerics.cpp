#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "thinshield/numerics.hpp"

using namespace thinshield;
using std::numbers::pi;

TEST_CASE("pairwise sum matches long-double reference") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(10001);
  long double ref = 0.0L;
  for (double& x : v) {
    x = dist(rng);
    ref += x;
  }
  CHECK(std::abs(num::pairwise_sum(v) - static_cast<double>(ref)) < 1e-12);
  CHECK(num::pairwise_sum(std::span<const double>{}) == 0.0);
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2q-1 exactly") {
  for (int q : {4, 8, 16}) {
    const auto& rule = num::gauss_legendre(q);
    // int_{-1}^{1} x^(2q-2) dx = 2/(2q-1)
    double s = 0.0;
    for (int i = 0; i < q; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 2 * q - 2);
    CHECK(s == doctest::Approx(2.0 / (2 * q - 1)).epsilon(1e-13));
    double total = 0.0;
    for (double w : rule.weights) total += w;
    CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(num::gauss_legendre(1), std::invalid_argument);
}

TEST_CASE("adaptive simpson") {
  const double s = num::adaptive_simpson([](double x) { return std::sin(x); }, 0.0, pi, 1e-12);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-11));
  const double p = num::adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0, 1e-12);
  CHECK(p == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("unit ball volumes") {
  CHECK(num::unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(num::unit_ball_volume(2) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(num::unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
}

TEST_CASE("parallel_for partition does not change results") {
  std::vector<double> a(50000), b(50000);
  const auto fill = [](std::vector<double>& out) {
    return [&out](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) out[i] = std::sin(0.001 * static_cast<double>(i));
    };
  };
  num::set_max_threads(1);
  num::parallel_for(a.size(), fill(a));
  num::set_max_threads(8);
  num::parallel_for(b.size(), fill(b));
  num::set_max_threads(1);
  CHECK(a == b);
  CHECK(num::pairwise_sum(a) == num::pairwise_sum(b));
}
