#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dps/dps.hpp"

using namespace dps;

TEST_CASE("small quotients", "[quotient]") {
  auto t1 = enumerate_quotient(dps_presentation(1), 100);
  CHECK(t1.class_count == 2);
  CHECK(enumerate_quotient(dps_presentation(2), 100).class_count == 7);
  CHECK(enumerate_quotient(dps_presentation(4), 1000).class_count == 83);
  CHECK(word_class(t1, {}) == t1.identity_class);
  CHECK(t1.representatives[t1.identity_class].empty());
}

TEST_CASE("budget and letters", "[quotient]") {
  try {
    enumerate_quotient(dps_presentation(5), 100);
    FAIL("expected BudgetExceeded");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  auto t = enumerate_quotient(dps_presentation(3), 100);
  CHECK_THROWS_AS(word_class(t, Word{7}), Error);
}

TEST_CASE("tables are sound, canonical and deterministic", "[quotient]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = dps_presentation(n);
    auto t = enumerate_quotient(p, 10000);
    CHECK_FALSE(find_violation(t, p).has_value());
    std::set<Word> reps(t.representatives.begin(), t.representatives.end());
    CHECK(reps.size() == t.class_count);
    for (std::size_t c = 0; c < t.class_count; ++c) {
      CHECK(word_class(t, t.representatives[c]) == c);
    }
    for (std::size_t c = 1; c < t.class_count; ++c) {
      CHECK(shortlex_less(t.representatives[c - 1], t.representatives[c]));
    }
    auto again = enumerate_quotient(p, 10000);
    CHECK(again.right_action == t.right_action);
    CHECK(again.representatives == t.representatives);
  }
}

TEST_CASE("the representation map is a homomorphism", "[quotient]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = dps_presentation(n);
    auto f = standard_assignment(n);
    auto t = enumerate_quotient(p, 10000);
    for (std::size_t c = 0; c < t.class_count; ++c) {
      for (Letter x = 0; x < t.alphabet.size(); ++x) {
        auto lhs = eval_word(f, t.representatives[c] + Word{x});
        auto rhs = eval_word(f, t.representatives[t.right_action[c][x]]);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("derived relations collapse to one class", "[quotient]") {
  for (std::size_t n = 4; n <= 6; ++n) {
    auto p     = dps_presentation(n);
    auto t     = enumerate_quotient(p, 10000);
    auto w     = [&](std::string_view s) { return parse_word(s, p.alphabet); };
    Word chain = power(w("b1 a1"), n - 3) + w("b1 a1 a1 a1 a2");
    CHECK(word_class(t, w("a1 a2 c")) == word_class(t, w("c")));
    CHECK(word_class(t, w("c c")) == word_class(t, chain));
    CHECK(word_class(t, w("b1 c")) == word_class(t, w("c")));
    CHECK(word_class(t, w("b2 c")) == word_class(t, w("c a2") + chain));
  }
}

TEST_CASE("verify_presentation_defines", "[quotient]") {
  std::size_t const expected[] = {2, 7, 22, 83, 442};
  for (std::size_t n = 1; n <= 5; ++n) {
    auto v = verify_presentation_defines(n, 5000);
    CHECK(v.defined);
    CHECK(v.class_count == expected[n - 1]);
    CHECK(v.dps_size == dps_count(n));
  }
}

TEST_CASE("a presentation with a missing relation is rejected", "[quotient]") {
  auto p = dps_presentation(3);
  p.relations.pop_back();
  auto t = enumerate_quotient(p, 1000);
  CHECK(t.class_count > 22);
}

TEST_CASE("the two presentations of I({1..4}) give isomorphic tables", "[quotient]") {
  using V = SymmetricInverseVariant;
  for (std::size_t m = 3; m <= 4; ++m) {
    auto pb  = symmetric_inverse_presentation(m, V::b);
    auto pb1 = symmetric_inverse_presentation(m, V::b1);
    auto tb  = enumerate_quotient(pb, 10000);
    auto tb1 = enumerate_quotient(pb1, 10000);
    CHECK(BigInt(tb.class_count) == symmetric_inverse_count(m));
    CHECK(BigInt(tb1.class_count) == symmetric_inverse_count(m));
    Word b_image = power(Word{0}, m - 1) + Word{2, 0};
    CHECK(tables_isomorphic_via(tb, tb1, {Word{0}, Word{1}, b_image}));
    CHECK_FALSE(tables_isomorphic_via(tb, tb1, {Word{0}, Word{1}, Word{2}}));
  }
}
