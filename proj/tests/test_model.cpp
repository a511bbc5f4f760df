#include <doctest.h>

#include <cmath>
#include <random>

#include "nematic/model.hpp"

using namespace nematic;

TEST_CASE("validate_params accepts distinct positive constants") {
  const ModelParams p = validate_params(1.0, 4.0);
  CHECK(p.c0 == doctest::Approx(1.0));
  CHECK(p.c1 == doctest::Approx(2.0));
}

TEST_CASE("validate_params rejects the constant-speed case") {
  CHECK_THROWS_WITH_AS(validate_params(1.0, 1.0), doctest::Contains("DegenerateSpeed"),
                       Error);
}

TEST_CASE("validate_params rejects nonpositive constants") {
  CHECK_THROWS_WITH_AS(validate_params(0.0, 2.0),
                       doctest::Contains("NonPositiveConstant"), Error);
  CHECK_THROWS_WITH_AS(validate_params(1.0, -3.0),
                       doctest::Contains("NonPositiveConstant"), Error);
}

TEST_CASE("wave_speed values and derivatives") {
  const ModelParams p = validate_params(1.0, 4.0);

  SUBCASE("n1 = 0") {
    const WaveSpeed w = wave_speed(p, 0.0);
    CHECK(w.c == doctest::Approx(1.0));
    CHECK(w.c_prime == doctest::Approx(0.0));
    CHECK(w.c_second == doctest::Approx(3.0));
  }
  SUBCASE("n1 = 1") {
    const WaveSpeed w = wave_speed(p, 1.0);
    CHECK(w.c == doctest::Approx(2.0));
    CHECK(w.c_prime == doctest::Approx(1.5));
  }
  SUBCASE("n1 = 0.5") {
    // c = sqrt(1 + 3*0.25) = sqrt(1.75)
    CHECK(wave_speed(p, 0.5).c == doctest::Approx(std::sqrt(1.75)).epsilon(1e-12));
  }
}

TEST_CASE("wave_speed clamps roundoff and rejects genuine violations") {
  const ModelParams p = validate_params(1.0, 4.0);
  CHECK(wave_speed(p, 1.0 + 1e-10).c == doctest::Approx(2.0));
  CHECK_THROWS_WITH_AS(wave_speed(p, 1.0 + 1e-6), doctest::Contains("OutOfRange"),
                       Error);
}

TEST_CASE("speed stays within [c0, c1] and obeys the symmetry") {
  const ModelParams p = validate_params(2.5, 0.7);
  for (int k = 0; k <= 100; ++k) {
    const double n1 = -1.0 + 0.02 * k;
    const WaveSpeed w = wave_speed(p, n1);
    CHECK(w.c >= p.c0 - 1e-14);
    CHECK(w.c <= p.c1 + 1e-14);
    CHECK(wave_speed(p, -n1).c == doctest::Approx(w.c).epsilon(1e-14));
    CHECK(wave_speed(p, -n1).c_prime ==
          doctest::Approx(-w.c_prime).epsilon(1e-14));
  }
}

TEST_CASE("c_prime matches a centered difference of c") {
  const ModelParams p = validate_params(1.0, 4.0);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-0.99, 0.99);
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const double n1 = dist(rng);
    const double fd =
        (wave_speed(p, n1 + h).c - wave_speed(p, n1 - h).c) / (2.0 * h);
    const double exact = wave_speed(p, n1).c_prime;
    CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("c_second matches a centered difference of c_prime") {
  const ModelParams p = validate_params(1.0, 4.0);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-0.9, 0.9);
  const double h = 1e-5;
  for (int k = 0; k < 50; ++k) {
    const double n1 = dist(rng);
    const double fd = (wave_speed(p, n1 + h).c_prime -
                       wave_speed(p, n1 - h).c_prime) /
                      (2.0 * h);
    CHECK(fd == doctest::Approx(wave_speed(p, n1).c_second).epsilon(1e-6));
  }
}
