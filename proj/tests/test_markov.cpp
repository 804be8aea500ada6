#include <catch_amalgamated.hpp>

#include <random>

#include "nbraid/alexander.hpp"
#include "nbraid/index.hpp"
#include "nbraid/markov.hpp"
#include "support/random_words.hpp"

using namespace nbraid;

namespace {
BraidWord W(int n, std::initializer_list<int> g) { return BraidWord::from_signed(n, g); }
}  // namespace

TEST_CASE("elementary moves") {
  CHECK(apply_move(W(3, {1, 2}), Move{Destabilize{}, ""}) == W(2, {1}));
  CHECK(apply_move(W(3, {1, 2}), Move{CyclicRotate{1}, ""}) == W(3, {2, 1}));
  CHECK(apply_move(W(3, {1, 2}), Move{CyclicRotate{0}, ""}) == W(3, {1, 2}));
  CHECK(apply_move(W(3, {1, 2}), Move{CyclicRotate{2}, ""}) == W(3, {1, 2}));
  CHECK_THROWS_AS(apply_move(W(3, {1, 2}), Move{CyclicRotate{3}, ""}), IllegalMove);
  CHECK_THROWS_AS(apply_move(W(3, {2, 1, 2}), Move{Destabilize{}, ""}), IllegalMove);
  CHECK_THROWS_AS(apply_move(W(3, {2, 1}), Move{Destabilize{}, ""}), IllegalMove);
  CHECK_THROWS_AS(apply_move(W(3, {1, 1}), Move{Destabilize{}, ""}), IllegalMove);
  CHECK_THROWS_AS(apply_move(BraidWord(1), Move{Destabilize{}, ""}), IllegalMove);
  CHECK(apply_move(W(3, {1, -2}), Move{Destabilize{}, ""}) == W(2, {1}));
  CHECK(apply_move(W(2, {1}), Move{Stabilize{+1}, ""}) == W(3, {1, 2}));
  CHECK(apply_move(W(2, {1}), Move{Stabilize{-1}, ""}) == W(3, {1, -2}));
  CHECK_THROWS_AS(apply_move(W(2, {1}), Move{Stabilize{0}, ""}), IllegalMove);
}

TEST_CASE("conjugation cancels only at the junctions") {
  const BraidWord g = W(3, {1, 2});
  // g^-1 w g with w starting by g: the g^-1 g pair at the left junction cancels.
  CHECK(apply_move(W(3, {1, 2, 1}), Move{Conjugate{g}, ""}) == W(3, {1, 1, 2}));
  CHECK(apply_move(W(3, {2}), Move{Conjugate{W(3, {1})}, ""}) == W(3, {-1, 2, 1}));
  CHECK(apply_move(W(3, {2, -1}), Move{Conjugate{W(3, {1})}, ""}) == W(3, {-1, 2}));
  CHECK(apply_move(BraidWord(3), Move{Conjugate{g}, ""}) == BraidWord(3));
  CHECK_THROWS_AS(apply_move(W(3, {1}), Move{Conjugate{W(4, {1})}, ""}), IllegalMove);
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord w = testing_support::random_word(rng, n, static_cast<int>(rng() % 10));
    const BraidWord c = testing_support::random_word(rng, n, static_cast<int>(rng() % 5));
    CHECK(words_equal(apply_move(w, Move{Conjugate{c}, ""}), c.inverse() * w * c));
  }
}

TEST_CASE("destabilize_unique_top") {
  auto [w1, m1] = destabilize_unique_top(W(4, {1, 3, 2}));
  CHECK(w1 == W(3, {2, 1}));
  REQUIRE(m1.size() == 2);
  CHECK(std::get<CyclicRotate>(m1[0].action).k == 2);
  CHECK(std::holds_alternative<Destabilize>(m1[1].action));

  auto [w2, m2] = destabilize_unique_top(W(3, {1, 2, 1}));
  CHECK(w2 == W(2, {1, 1}));
  CHECK(closure_invariants(W(3, {1, 2, 1})).component_count == closure_invariants(w2).component_count);

  auto [w3, m3] = destabilize_unique_top(W(3, {1, 2}));
  CHECK(w3 == W(2, {1}));
  CHECK(m3.size() == 1);

  // Case 2 step at K(4,1,2,1): delta_1 delta_2 (sigma3 sigma2 sigma1) gamma_1.
  const BraidWord before = W(4, {1, 2, 1, 3, 2, 1, 1});
  auto [w4, m4] = destabilize_unique_top(before);
  CHECK(w4.strands() == 3);
  CHECK(alexander_polynomial(w4) == alexander_polynomial(before));

  CHECK_THROWS_AS(destabilize_unique_top(W(3, {2, 1, 2})), IllegalMove);
  CHECK_THROWS_AS(destabilize_unique_top(W(3, {1, 1})), IllegalMove);
  CHECK_THROWS_AS(destabilize_unique_top(W(3, {1, -2})), ParameterError);
}

TEST_CASE("trace building and replay") {
  TraceBuilder tb(W(4, {1, 3, 2, 1, 3, 2, 1}));
  tb.rewrite(Rule::prop_delta_factor, 1, rule_params(Rule::prop_delta_factor, {3, 2}), "factor");
  auto [w, moves] = destabilize_unique_top(tb.current());
  tb.append(moves);
  CHECK(tb.current() == w);
  const MoveTrace tr = tb.finish();
  CHECK(tr.moves.size() == 3);
  CHECK(verify_trace(tr).valid);
  CHECK(verify_trace(tr).to_string() == "valid");

  MoveTrace flipped = tr;
  flipped.end = flipped.end.splice(0, 1, W(3, {flipped.end[0].index == 1 ? 2 : 1}));
  const Verdict v = verify_trace(flipped);
  CHECK(!v.valid);
  CHECK(!v.step.has_value());

  MoveTrace illegal{W(3, {2, 1, 2}), {Move{Destabilize{}, ""}}, W(2, {1})};
  const Verdict v2 = verify_trace(illegal);
  CHECK(!v2.valid);
  REQUIRE(v2.step.has_value());
  CHECK(*v2.step == 0);
  CHECK_THAT(v2.to_string(), Catch::Matchers::StartsWith("invalid at move 1"));
}

TEST_CASE("verify_trace enforces conservation laws") {
  // Stabilize +: components and strands - exponent_sum both preserved.
  MoveTrace ok{W(2, {1, 1, 1}), {Move{Stabilize{+1}, ""}}, W(3, {1, 1, 1, 2})};
  CHECK(verify_trace(ok).valid);
  // Stabilize -: bennequin quantity may change.
  MoveTrace neg{W(2, {1, 1, 1}), {Move{Stabilize{-1}, ""}, Move{Destabilize{}, ""}}, W(2, {1, 1, 1})};
  CHECK(verify_trace(neg).valid);
  // A conjugation cannot change the component count; a rewrite forged through
  // an unchecked rule would be caught by the site match.
  MoveTrace forged{W(3, {1, 2}), {Move{RewriteStep{Rule::lemma_dd_split, 0, 2, {{"k", 1}}}, ""}}, W(3, {1, 1})};
  CHECK(!verify_trace(forged).valid);
}

TEST_CASE("pipeline traces conserve invariants") {
  const auto cert = reduce_to_full_twist({4, 1, 2, 1});
  CHECK(verify_trace(cert.trace).valid);
  CHECK(cert.final_word == W(2, {1, 1, 1, 1, 1}));
  BraidWord cur = cert.trace.start;
  const auto inv0 = closure_invariants(cur);
  for (const Move& m : cert.trace.moves) {
    cur = apply_move(cur, m);
    CHECK(closure_invariants(cur).component_count == inv0.component_count);
    CHECK(closure_invariants(cur).bennequin_quantity == inv0.bennequin_quantity);
  }
}

TEST_CASE("move kinds") {
  CHECK(move_kind(Move{Destabilize{}, ""}) == "destabilize");
  CHECK(move_kind(Move{Stabilize{1}, ""}) == "stabilize");
  CHECK(move_kind(Move{CyclicRotate{1}, ""}) == "cyclic_rotate");
  CHECK(move_kind(Move{Conjugate{BraidWord(2)}, ""}) == "conjugate");
  CHECK(move_kind(Move{RewriteStep{}, ""}) == "rewrite");
}
