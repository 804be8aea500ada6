#include <catch_amalgamated.hpp>

#include "nbraid/braid_word.hpp"
#include "nbraid/nbridge.hpp"
#include "nbraid/permutation.hpp"
#include "support/random_words.hpp"

using namespace nbraid;

TEST_CASE("delta and gamma") {
  CHECK(delta(2, 3).to_signed() == std::vector<int>{2, 1});
  CHECK(delta(1, 2).to_signed() == std::vector<int>{1});
  CHECK(delta(3, 5).to_signed() == std::vector<int>{3, 2, 1});
  CHECK(delta(3, 5).strands() == 5);
  CHECK(gamma(2, 3).to_signed() == std::vector<int>{1, 2});
  CHECK(gamma(1, 2).to_signed() == std::vector<int>{1});
  CHECK(gamma(3, 4).to_signed() == std::vector<int>{1, 2, 3});
  CHECK(delta(0, 3).empty());
  CHECK(gamma(0, 1).empty());
  CHECK_THROWS_AS(delta(3, 3), ParameterError);
  CHECK_THROWS_AS(gamma(2, 2), ParameterError);
  CHECK_THROWS_AS(delta(-1, 3), ParameterError);
  for (int n = 0; n <= 7; ++n) {
    CHECK(delta(n, n + 1).size() == static_cast<std::size_t>(n));
    CHECK(gamma(n, n + 2).is_positive());
  }
}

TEST_CASE("word construction rejects bad letters") {
  CHECK_THROWS_AS(BraidWord(0), ParameterError);
  CHECK_THROWS_AS(BraidWord::from_signed(3, {3}), ParameterError);
  CHECK_THROWS_AS(BraidWord::from_signed(3, {0}), ParameterError);
  CHECK_THROWS_AS(BraidWord(3, {Letter{1, 2}}), ParameterError);
  CHECK_NOTHROW(BraidWord::from_signed(3, {-2, 1}));
  CHECK(BraidWord(4).empty());
}

TEST_CASE("text format round trip") {
  const auto w = BraidWord::from_signed(3, {1, 2, -1});
  CHECK(w.to_string() == "strands=3; 1 2 -1");
  CHECK(BraidWord::parse(w.to_string()) == w);
  CHECK(BraidWord(4).to_string() == "strands=4;");
  CHECK(BraidWord::parse("strands=4;") == BraidWord(4));
  CHECK(BraidWord::parse("  strands = 3 ;1   2\t1 ") == BraidWord::from_signed(3, {1, 2, 1}));
  CHECK(BraidWord::parse("strands=3; +1 -2") == BraidWord::from_signed(3, {1, -2}));
  CHECK_THROWS_AS(BraidWord::parse("strand=3; 1"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("strands=3 1 2"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("strands=3; 1 x"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("strands=3; 3"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("strands=3; 0"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("strands=0;"), ParseError);
}

TEST_CASE("word algebra") {
  const auto a = BraidWord::from_signed(4, {1, -3});
  const auto b = BraidWord::from_signed(4, {2});
  CHECK((a * b).to_signed() == std::vector<int>{1, -3, 2});
  CHECK(a.inverse().to_signed() == std::vector<int>{3, -1});
  CHECK(a.pow(2).to_signed() == std::vector<int>{1, -3, 1, -3});
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(0).empty());
  CHECK(a.exponent_sum() == 0);
  CHECK(!a.is_positive());
  CHECK(a.max_index() == 3);
  CHECK(a.reflected().to_signed() == std::vector<int>{3, -1});
  CHECK((a * b).slice(1, 2).to_signed() == std::vector<int>{-3, 2});
  CHECK((a * b).splice(1, 1, BraidWord::from_signed(4, {2, 2})).to_signed() == std::vector<int>{1, 2, 2, 2});
  CHECK_THROWS_AS(a * BraidWord(3), ParameterError);
  CHECK_THROWS_AS(a.slice(1, 5), ParameterError);
  CHECK_THROWS_AS(BraidWord::from_signed(3, {2}).with_strands(2), ParameterError);
}

TEST_CASE("nbridge words") {
  CHECK(nbridge_word({5, 4, 2, 2}) == delta(4, 5).pow(4));
  CHECK(nbridge_word({2, 1, 1, 1}).to_signed() == std::vector<int>{1, 1});
  CHECK(nbridge_word({4, 1, 2, 1}).to_signed() == std::vector<int>{1, 3, 2, 1, 3, 2, 1});
  for (int w = 2; w <= 6; ++w)
    for (int b = 1; b < w; ++b)
      for (int t = 1; t <= 3; ++t)
        for (int n = 1; n <= 3; ++n)
          CHECK(nbridge_word({w, b, t, n}).size() == static_cast<std::size_t>(n * b + t * (w - 1)));
  CHECK_THROWS_WITH(nbridge_word({2, 2, 1, 1}), Catch::Matchers::ContainsSubstring("b <= w-1"));
  CHECK_THROWS_WITH(nbridge_word({1, 1, 1, 1}), Catch::Matchers::ContainsSubstring("w >= 2"));
  CHECK_THROWS_WITH(nbridge_word({3, 0, 1, 1}), Catch::Matchers::ContainsSubstring("b >= 1"));
  CHECK_THROWS_WITH(nbridge_word({3, 1, 0, 1}), Catch::Matchers::ContainsSubstring("t >= 1"));
  CHECK_THROWS_WITH(nbridge_word({3, 1, 1, 0}), Catch::Matchers::ContainsSubstring("n >= 1"));
}

TEST_CASE("underlying permutation") {
  const auto p = underlying_permutation(BraidWord::from_signed(3, {1, 2, 1}));
  CHECK(p(1) == 3);
  CHECK(p(3) == 1);
  CHECK(p(2) == 2);
  CHECK(underlying_permutation(BraidWord(4)).is_identity());
  const auto trefoil = underlying_permutation(delta(2, 3).pow(2));
  CHECK(trefoil.cycle_count() == 1);
  CHECK(!trefoil.is_identity());
  // sigma_1 sigma_2: strand 1 ends at position 3.
  CHECK(underlying_permutation(BraidWord::from_signed(3, {1, 2}))(1) == 3);
}

TEST_CASE("permutation is a homomorphism and conjugation invariant") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto u = testing_support::random_word(rng, n, static_cast<int>(rng() % 12));
    const auto v = testing_support::random_word(rng, n, static_cast<int>(rng() % 12));
    CHECK(underlying_permutation(u * v) == underlying_permutation(u).then(underlying_permutation(v)));
    CHECK(underlying_permutation(u.inverse()) == underlying_permutation(u).inverse());
    CHECK(closure_invariants(v.inverse() * u * v).component_count == closure_invariants(u).component_count);
  }
}

TEST_CASE("closure invariants") {
  const auto c = closure_invariants(BraidWord::from_signed(2, {1, 1, 1}));
  CHECK(c == ClosureInvariants{2, 3, 1, -1});
  CHECK(closure_invariants(BraidWord(1)) == ClosureInvariants{1, 0, 1, 1});
  CHECK(closure_invariants(nbridge_word({4, 1, 2, 1})).component_count == 1);
  CHECK(closure_invariants(BraidWord(4)).component_count == 4);
  const auto pos = nbridge_word({5, 2, 3, 2});
  CHECK(closure_invariants(pos).bennequin_quantity == 5 - static_cast<int>(pos.size()));
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), ParameterError);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), ParameterError);
  CHECK(Permutation::from_images({2, 3, 1}).cycle_count() == 1);
  CHECK(Permutation::from_images({1, 2, 3}).cycle_count() == 3);
}
