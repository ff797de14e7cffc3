#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "dps/dps.hpp"

using namespace dps;

TEST_CASE("symmetric inverse counts", "[dps_monoid]") {
  CHECK(symmetric_inverse_count(0) == 1);
  CHECK(symmetric_inverse_count(2) == 7);
  CHECK(symmetric_inverse_count(3) == 34);
  CHECK(symmetric_inverse_count(4) == 209);
}

TEST_CASE("dps_count matches the size table", "[dps_monoid]") {
  char const* table[] = {"2",
                         "7",
                         "22",
                         "83",
                         "442",
                         "3127",
                         "26702",
                         "261907",
                         "2883538",
                         "35144327",
                         "469324582",
                         "6810715507",
                         "106668909002",
                         "1792648617463",
                         "32167115690782",
                         "613654341732467",
                         "12399337905055522",
                         "264481977288432007",
                         "5937942527822578358",
                         "139949655415806098707"};
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(dps_count(n) == BigInt(table[n - 1]));
  }
}

TEST_CASE("enumerate_symmetric_inverse", "[dps_monoid]") {
  CHECK(enumerate_symmetric_inverse(3, {}).size() == 1);
  CHECK(enumerate_symmetric_inverse(3, {1, 2}).size() == 7);
  CHECK(enumerate_symmetric_inverse(4, {1, 2, 3}).size() == 34);
}

TEST_CASE("embed_psi", "[dps_monoid]") {
  CHECK(embed_psi(make_partial_injection(3, {})) == make_partial_injection(3, {{0, 0}}));
  CHECK(embed_psi(make_partial_injection(4, {{1, 2}, {2, 3}, {3, 1}}))
        == PartialInjection(4, std::vector<Point>{0, 2, 3, 1}));
  CHECK(embed_psi(make_partial_injection(3, {{1, 1}, {2, 2}})) == PartialInjection::identity(3));
  CHECK_THROWS_AS(embed_psi(make_partial_injection(3, {{0, 1}})), Error);

  auto xs = enumerate_symmetric_inverse(4, {1, 2, 3});
  std::set<PartialInjection, CanonicalLess> images;
  for (auto const& a : xs) {
    images.insert(embed_psi(a));
    for (auto const& b : xs) {
      CHECK(embed_psi(a * b) == embed_psi(a) * embed_psi(b));
    }
  }
  CHECK(images.size() == xs.size());
}

TEST_CASE("enumerate_dps for n = 2 lists the seven elements", "[dps_monoid]") {
  auto got = enumerate_dps(2);
  std::set<std::string> json;
  for (auto const& f : got) {
    json.insert(to_json(f));
  }
  CHECK(json == std::set<std::string>{"[null,null]", "[0,null]", "[1,null]", "[null,0]",
                                      "[null,1]", "[0,1]", "[1,0]"});
}

TEST_CASE("enumerate_dps agrees with filtering all partial maps", "[dps_monoid]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<PartialInjection> filtered;
    for_each_partial_transformation(n, [&](PartialTransformation const& f) {
      if (is_partial_isometry(f)) {
        filtered.emplace_back(f);
      }
    });
    auto got = enumerate_dps(n);
    std::sort(filtered.begin(), filtered.end(), CanonicalLess{});
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
    CHECK(sorted == filtered);
    CHECK(BigInt(got.size()) == dps_count(n));
  }
}

TEST_CASE("the four parts are disjoint and of the expected sizes", "[dps_monoid]") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto parts = dps_parts(n);
    std::set<PartialInjection, CanonicalLess> all;
    std::size_t                               total = 0;
    for (auto const& part : parts) {
      total += part.size();
      all.insert(part.begin(), part.end());
      CHECK(std::is_sorted(part.begin(), part.end(), CanonicalLess{}));
    }
    CHECK(all.size() == total);
    CHECK(BigInt(parts[0].size()) == symmetric_inverse_count(n - 1));
    CHECK(BigInt(total) == dps_count(n));
  }
}

TEST_CASE("units", "[dps_monoid]") {
  CHECK(units(1) == std::vector{PartialInjection::identity(1)});
  auto u3 = units(3);
  CHECK(u3.size() == 2);
  CHECK(std::find(u3.begin(), u3.end(), PartialInjection::identity(3)) != u3.end());
  CHECK(std::find(u3.begin(), u3.end(), PartialInjection(3, std::vector<Point>{0, 2, 1}))
        != u3.end());
  CHECK(units(4).size() == 6);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<PartialInjection> full;
    for (auto const& f : enumerate_dps(n)) {
      if (f.rank() == n) {
        full.push_back(f);
      }
    }
    std::sort(full.begin(), full.end(), CanonicalLess{});
    CHECK(units(n) == full);
  }
}
