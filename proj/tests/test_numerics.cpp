#include <cmath>

#include "doctest.h"
#include "orlicz/numerics.hpp"

using namespace orlicz;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("logspace endpoints and monotonicity") {
  const auto g = logspace(1e-6, 3.0, 97);
  CHECK(g.size() == 97);
  CHECK(g.front() == 1e-6);
  CHECK(g.back() == 3.0);
  for (size_t i = 0; i + 1 < g.size(); ++i) CHECK(g[i] < g[i + 1]);
}

TEST_CASE("bisect_increasing solves cube root") {
  auto cube = [](double x) { return x * x * x; };
  const double x = bisect_increasing(cube, 27.0, 0.0, 10.0);
  CHECK(x == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("adaptive_simpson matches closed forms") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK(adaptive_simpson([](double x) { return x * std::exp(x * x); }, 0.0, 2.0) ==
        doctest::Approx(0.5 * std::expm1(4.0)).epsilon(1e-11));
}

TEST_CASE("trend_direction classifies sequences") {
  CHECK(trend_direction({1.0, 2.0, 3.0}) == "increasing");
  CHECK(trend_direction({3.0, 2.0, 1.0}) == "decreasing");
  CHECK(trend_direction({1.0, 1.0, 1.0}) == "flat");
  CHECK(trend_direction({1.0, 2.0, 1.5}) == "mixed");
}

TEST_SUITE_END();
