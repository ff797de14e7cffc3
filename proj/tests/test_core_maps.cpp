#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <unordered_set>

#include "dps/dps.hpp"

using namespace dps;

TEST_CASE("make_partial_injection builds gamma and the empty map", "[core_maps]") {
  auto g = make_partial_injection(2, {{0, 1}, {1, 0}});
  CHECK(g[0] == 1);
  CHECK(g[1] == 0);
  CHECK(to_json(g) == "[1,0]");

  auto e = make_partial_injection(3, {});
  CHECK(e.rank() == 0);
  CHECK(to_json(e) == "[null,null,null]");
}

TEST_CASE("make_partial_injection rejects bad input", "[core_maps]") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] { make_partial_injection(3, {{0, 1}, {1, 1}}); }) == ErrorCode::NotInjective);
  CHECK(code_of([] { make_partial_injection(3, {{0, 1}, {0, 2}}); }) == ErrorCode::DuplicateDomain);
  CHECK(code_of([] { make_partial_injection(3, {{0, 3}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { make_partial_injection(3, {{5, 0}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] {
          PartialInjection::identity(2) * PartialInjection::identity(3);
        })
        == ErrorCode::DegreeMismatch);
}

TEST_CASE("composition runs left to right", "[core_maps]") {
  auto f = make_partial_injection(2, {{0, 1}});
  auto g = make_partial_injection(2, {{1, 0}});
  CHECK(f * g == make_partial_injection(2, {{0, 0}}));
  CHECK(g * f == make_partial_injection(2, {{1, 1}}));

  auto alpha = PartialInjection(4, std::vector<Point>{0, 2, 3, 1});
  CHECK(PartialInjection::identity(4) * alpha == alpha);
  CHECK(alpha * PartialInjection::identity(4) == alpha);
}

TEST_CASE("three-factor product (0 i / 0 1)(0 1 / 1 0)(0 1 / 0 j) = (0 i / j 0)", "[core_maps]") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto gamma = make_partial_injection(n, {{0, 1}, {1, 0}});
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        auto left  = make_partial_injection(n, {{0, 0}, {i, 1}});
        auto right = make_partial_injection(n, {{0, 0}, {1, j}});
        CHECK(left * gamma * right == make_partial_injection(n, {{0, j}, {i, 0}}));
      }
    }
  }
}

TEST_CASE("invert", "[core_maps]") {
  auto gamma = make_partial_injection(2, {{0, 1}, {1, 0}});
  CHECK(invert(gamma) == gamma);
  CHECK(invert(make_partial_injection(3, {{0, 2}})) == make_partial_injection(3, {{2, 0}}));
  auto alpha1 = PartialInjection(4, std::vector<Point>{0, 2, 3, 1});
  CHECK(invert(alpha1) == PartialInjection(4, std::vector<Point>{0, 3, 1, 2}));
}

TEST_CASE("inverse monoid laws on DPS_4", "[core_maps]") {
  auto all = enumerate_dps(4);
  for (auto const& f : all) {
    auto fi = invert(f);
    CHECK(f * fi * f == f);
    CHECK(fi * f * fi == fi);
    CHECK(is_dps_member(fi));
  }
}

TEST_CASE("composition is associative on random triples", "[core_maps]") {
  auto              all = enumerate_dps(4);
  std::mt19937      rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    auto const& a = all[pick(rng)];
    auto const& b = all[pick(rng)];
    auto const& c = all[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("JSON round trip and parse errors", "[core_maps]") {
  for (auto const& f : enumerate_dps(3)) {
    CHECK(parse_injection(to_json(f)) == f);
  }
  CHECK_THROWS_AS(parse_injection("[1,1]"), Error);
  CHECK_THROWS_AS(parse_transformation("[0,"), Error);
  CHECK_THROWS_AS(parse_transformation("[0,7]"), Error);
  CHECK(parse_transformation("[1,1]").is_injective() == false);
}

TEST_CASE("hashing distinguishes all of DPS_4", "[core_maps]") {
  auto all = enumerate_dps(4);
  std::unordered_set<PartialInjection> set(all.begin(), all.end());
  CHECK(set.size() == all.size());
}

TEST_CASE("for_each_partial_transformation counts (n+1)^n maps", "[core_maps]") {
  std::size_t count = 0;
  for_each_partial_transformation(3, [&](PartialTransformation const&) { ++count; });
  CHECK(count == 64);
}
