#include <doctest.h>

#include <cmath>

#include "fourgen/bounds.hpp"

using namespace fourgen;

TEST_CASE("upper bound values and equality cases") {
  auto b32 = m3_upper(3, 2);
  CHECK(b32.integer_bound == 5);
  CHECK(b32.equality_case);
  auto b43 = m3_upper(4, 3);
  CHECK(b43.integer_bound == 11);
  CHECK(b43.equality_case);
  auto b55 = m3_upper(5, 5);
  CHECK(b55.integer_bound == 44);
  CHECK_FALSE(b55.equality_case);
  CHECK(m3_upper(5, 16).integer_bound == 386);
  CHECK(m3_upper(3, 4).integer_bound == 7);
  CHECK(m3_upper(6, 2).integer_bound == 15);
}

TEST_CASE("upper bound floor is exact near perfect squares") {
  // 8*2^4 + 4 - 12 + 1 = 121 = 11^2, (11 - 1) / 2 = 5 exactly
  auto b = m3_upper(3, 2);
  CHECK(b.integer_bound == 5);
  CHECK(b.real_value == doctest::Approx(5.0));
}

TEST_CASE("lower bound thresholds") {
  auto t32 = t3_lower(3, 2);
  REQUIRE(t32.simplified.has_value());
  CHECK(t32.simplified->integer_bound == 5);  // cbrt(95) = 4.56..
  CHECK(t32.effective.integer_bound == 5);

  auto t62 = t3_lower(6, 2);
  REQUIRE(t62.simplified.has_value());
  CHECK(t62.simplified->integer_bound == 10);  // cbrt(767) = 9.15..
  CHECK(t62.effective.integer_bound == 10);

  // at (q,n) = (2,5) the simplified radical exceeds the true cubic root:
  // the 7-point complete set settles that only the general bound is valid
  auto t52 = t3_lower(5, 2);
  REQUIRE(t52.simplified.has_value());
  CHECK(t52.simplified->integer_bound == 8);
  CHECK(t52.general.integer_bound == 7);
  CHECK(t52.effective.integer_bound == 7);

  // general formula at (3, 9); the value must sit above the plain cube root
  auto t39 = t3_lower(3, 9);
  double plain = std::cbrt(6.0 * 9 * 9 * 9 * 9 - 81.0 - 9.0) / 8.0;
  CHECK(t39.general.real_value > plain);
  CHECK(t39.general.integer_bound >= (uint64_t)plain + 1);
}

TEST_CASE("affine upper bounds by case") {
  CHECK(ag_upper(5, 2).integer_bound == 6);    // 2^3 - 2
  CHECK(ag_upper(4, 2).integer_bound == 4);    // floor(2^2.5 + .5) - 2
  CHECK(ag_upper(4, 3).integer_bound == 9);    // ceil(3^2)
  CHECK(ag_upper(5, 3).integer_bound == 16);   // ceil(3^2.5) = 16
  CHECK(ag_upper(4, 5).integer_bound == 28);   // 2*25/sqrt(3) = 28.86..
}

TEST_CASE("reference values") {
  auto r38 = reference_values(3, 8);
  REQUIRE(r38.size() == 1);
  CHECK(r38[0].exact);
  CHECK(r38[0].value == 9);
  auto r33 = reference_values(3, 3);
  CHECK(r33[0].value == 5);
  auto r44 = reference_values(4, 4);
  REQUIRE(r44.size() == 1);
  CHECK_FALSE(r44[0].exact);
  CHECK(r44[0].value == 9);  // 4 + 4 + 1
}

TEST_CASE("integer helpers") {
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(1) == 1);
  CHECK(isqrt_u64(120) == 10);
  CHECK(isqrt_u64(121) == 11);
  CHECK(ipow_u64(3, 8) == 6561);
  CHECK_THROWS(ipow_u64(2, 64));
}
