#include <catch2/catch_amalgamated.hpp>

#include "dps/dps.hpp"

using namespace dps;

namespace {
  PartialTransformation map(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    PartialTransformation f(n);
    for (auto [x, y] : pairs) {
      f.set(static_cast<std::size_t>(x), static_cast<Point>(y));
    }
    return f;
  }
}  // namespace

TEST_CASE("star distance", "[star_metric]") {
  CHECK(star_distance(6, 3, 3) == 0);
  CHECK(star_distance(6, 0, 5) == 1);
  CHECK(star_distance(6, 5, 0) == 1);
  CHECK(star_distance(6, 2, 3) == 2);
  CHECK_THROWS_AS(star_distance(6, 6, 0), Error);
}

TEST_CASE("partial isometry examples", "[star_metric]") {
  CHECK_FALSE(is_partial_isometry(map(3, {{0, 1}, {1, 0}, {2, 2}})));
  CHECK_FALSE(is_partial_isometry(map(5, {{0, 1}, {1, 0}, {2, 2}})));
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(is_partial_isometry(PartialTransformation::identity(n)));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto f = map(n, {{int(x), int(y)}});
        CHECK(is_partial_isometry(f));
        CHECK(is_dps_member(f));
      }
    }
  }
}

TEST_CASE("membership by the four cases", "[star_metric]") {
  CHECK(is_dps_member(map(4, {{0, 3}, {2, 0}})));
  CHECK_FALSE(is_dps_member(map(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK(is_dps_member(map(3, {{1, 2}, {2, 1}})));
  CHECK_FALSE(is_dps_member(map(3, {{0, 1}, {1, 0}, {2, 2}})));
  CHECK_FALSE(is_dps_member(map(3, {{1, 2}, {2, 2}})));
}

TEST_CASE("membership agrees with the metric oracle for n <= 5", "[star_metric]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t members = 0;
    for_each_partial_transformation(n, [&](PartialTransformation const& f) {
      bool const oracle = is_partial_isometry(f);
      if (is_dps_member(f) != oracle) {
        FAIL_CHECK("disagreement at " << to_json(f));
      }
      members += oracle ? 1 : 0;
    });
    CHECK(BigInt(members) == dps_count(n));
  }
}
