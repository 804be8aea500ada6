#include <catch_amalgamated.hpp>

#include <random>

#include "nbraid/alexander.hpp"
#include "nbraid/garside.hpp"
#include "nbraid/lorenz.hpp"
#include "support/random_words.hpp"

using namespace nbraid;

namespace {
BraidWord W(int n, std::initializer_list<int> g) { return BraidWord::from_signed(n, g); }
TLinkSpec T(std::vector<std::pair<int, int>> p) { return TLinkSpec{std::move(p)}; }
}  // namespace

TEST_CASE("T-link words") {
  CHECK(tlink_word(T({{2, 1}, {4, 2}})) == W(4, {1, 1, 2, 3, 1, 2, 3}));
  CHECK(tlink_word(T({{2, 3}})) == W(2, {1, 1, 1}));
  CHECK(tlink_word(T({{3, 1}, {3, 1}})) == gamma(2, 3).pow(2));
  CHECK_THROWS_AS(tlink_word(T({})), ParameterError);
  CHECK_THROWS_AS(tlink_word(T({{1, 2}})), ParameterError);
  CHECK_THROWS_AS(tlink_word(T({{3, 1}, {2, 1}})), ParameterError);
  CHECK_THROWS_AS(tlink_word(T({{3, 0}})), ParameterError);
}

TEST_CASE("T-link text format") {
  CHECK(T({{2, 1}, {4, 2}}).to_string() == "T((2,1),(4,2))");
  CHECK(TLinkSpec::parse("T((2,1),(4,2))") == T({{2, 1}, {4, 2}}));
  CHECK(TLinkSpec::parse(" T( (2, 1) ,\t(4,2) ) ") == T({{2, 1}, {4, 2}}));
  CHECK(TLinkSpec::parse("T((5,4))") == T({{5, 4}}));
  CHECK_THROWS_AS(TLinkSpec::parse("T()"), ParseError);
  CHECK_THROWS_AS(TLinkSpec::parse("T((2,1),)"), ParseError);
  CHECK_THROWS_AS(TLinkSpec::parse("T((2,1)(3,1))"), ParseError);
  CHECK_THROWS_AS(TLinkSpec::parse("T((2;1))"), ParseError);
  CHECK_THROWS_AS(TLinkSpec::parse("((2,1))"), ParseError);
  CHECK_THROWS_AS(TLinkSpec::parse("T((3,1),(2,1))"), ParseError);
  CHECK_THROWS_AS(TLinkSpec::parse("T((2,x))"), ParseError);
  CHECK(T({{2, 1}, {2, 3}, {4, 1}}).merged() == T({{2, 4}, {4, 1}}));
}

TEST_CASE("reflection") {
  CHECK(reflect(W(4, {1, 3, 2, 1})) == W(4, {3, 1, 2, 3}));
  CHECK(reflect(W(2, {1})) == W(2, {1}));
  std::mt19937 rng(41);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const BraidWord w = testing_support::random_word(rng, n, static_cast<int>(rng() % 15));
    CHECK(reflect(reflect(w)) == w);
    const BraidWord d = half_twist_word(n);
    CHECK(words_equal(d.inverse() * w * d, reflect(w)));
  }
}

TEST_CASE("n-bridge to T-link examples") {
  auto conv = nbridge_to_tlink({4, 1, 2, 1});
  CHECK(conv.spec == T({{2, 1}, {4, 2}}));
  CHECK(conv.trace.start == reflect(nbridge_word({4, 1, 2, 1})));
  CHECK(conv.trace.end == tlink_word(conv.spec));
  CHECK(verify_trace(conv.trace).valid);
  // w-b-1 passes of n pushes plus one conjugation each.
  CHECK(conv.trace.moves.size() == 2 * (1 + 1));

  conv = nbridge_to_tlink({3, 1, 1, 1});
  CHECK(conv.spec == T({{2, 1}, {3, 1}}));
  CHECK(verify_trace(conv.trace).valid);
  CHECK(closure_invariants(conv.trace.start) == closure_invariants(conv.trace.end));

  int knots = 0;
  for (int w = 3; w <= 5; ++w)
    for (int t = 1; t <= 4; ++t) {
      const NBridgeParams p{w, 1, t, 1};
      if (closure_invariants(nbridge_word(p)).component_count != 1) continue;
      conv = nbridge_to_tlink(p);
      CHECK(alexander_polynomial(conv.trace.start) == alexander_polynomial(conv.trace.end));
      ++knots;
    }
  CHECK(knots > 0);

  // b+1 = w: both pairs have width w and are merged.
  conv = nbridge_to_tlink({5, 4, 2, 2});
  CHECK(conv.spec == T({{5, 4}}));
  CHECK(conv.trace.end == tlink_word(T({{5, 2}, {5, 2}})));
  REQUIRE(conv.trace.moves.size() == 1);
  CHECK_THAT(conv.trace.moves[0].annotation, Catch::Matchers::ContainsSubstring("T((5,2),(5,2))"));
  CHECK(verify_trace(conv.trace).valid);

  conv = nbridge_to_tlink({7, 2, 3, 3}, Verify::fast);
  CHECK(conv.spec == T({{3, 3}, {7, 3}}));
  CHECK(conv.trace.moves.size() == 4 * (3 + 1));
  CHECK(verify_trace(conv.trace).valid);
  CHECK_THROWS_AS(nbridge_to_tlink({3, 3, 1, 1}), ParameterError);
}

TEST_CASE("twisted torus to T-link") {
  TwistedTorusParams p{3, 2, 2, 1};
  CHECK(twisted_torus_word(p) == W(3, {2, 1, 2, 1, 2, 2}));
  auto conv = twisted_torus_to_tlink(p);
  CHECK(conv.spec == T({{2, 2}, {3, 2}}));
  CHECK(verify_trace(conv.trace).valid);

  conv = twisted_torus_to_tlink({3, 1, 3, 1});
  CHECK(conv.spec == T({{3, 4}}));
  CHECK(verify_trace(conv.trace).valid);
  CHECK(closure_invariants(conv.trace.end) == closure_invariants(twisted_torus_word({3, 1, 3, 1})));

  conv = twisted_torus_to_tlink({2, 1, 2, 1});
  CHECK(conv.spec == T({{2, 3}}));
  CHECK(alexander_polynomial(conv.trace.end) == LaurentPoly({1, -1, 1}));

  conv = twisted_torus_to_tlink({5, 3, 3, 2});
  CHECK(conv.spec == T({{3, 6}, {5, 3}}));
  CHECK(verify_trace(conv.trace).valid);
  if (closure_invariants(conv.trace.start).component_count == 1)
    CHECK(alexander_polynomial(conv.trace.start) == alexander_polynomial(conv.trace.end));

  CHECK_THROWS_AS(twisted_torus_word({3, 1, 4, 1}), ParameterError);
  CHECK_THROWS_AS(twisted_torus_word({3, 1, 1, 1}), ParameterError);
  CHECK_THROWS_AS(twisted_torus_word({3, 0, 2, 1}), ParameterError);
  CHECK_THROWS_AS(twisted_torus_word({3, 1, 2, 0}), ParameterError);
}

TEST_CASE("T-link conversion over a grid") {
  for (int w = 2; w <= 6; ++w)
    for (int b = 1; b < w; ++b)
      for (int t = 1; t <= 4; ++t)
        for (int n = 1; n <= 3; ++n) {
          const NBridgeParams p{w, b, t, n};
          const auto conv = nbridge_to_tlink(p, Verify::fast);
          REQUIRE(verify_trace(conv.trace, Verify::fast).valid);
          const auto& pairs = conv.spec.pairs;
          for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1].first < pairs[i].first);
          CHECK(closure_invariants(conv.trace.end) == closure_invariants(nbridge_word(p)));
        }
}
