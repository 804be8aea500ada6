#pragma once

// Markov moves and replayable move traces.
//
// A trace records a start word, a list of moves and the claimed end word.
// Every move is checkable on its own: rewrites re-instantiate their rule and
// must match letter for letter, conjugations carry their conjugator,
// destabilization only removes a terminal top generator that occurs nowhere
// else in the word.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braid_word.hpp"
#include "permutation.hpp"
#include "rewrite.hpp"

namespace nbraid {

struct Conjugate {
  BraidWord by;
  bool operator==(const Conjugate&) const = default;
};

/// Conjugation by the first k letters: u v -> v u.
struct CyclicRotate {
  std::size_t k = 0;
  bool operator==(const CyclicRotate&) const = default;
};

/// w on s strands -> w sigma_s^{sign} on s+1 strands.
struct Stabilize {
  int sign = +1;
  bool operator==(const Stabilize&) const = default;
};

/// w' sigma_{s-1}^{+-1} on s strands -> w' on s-1 strands.
struct Destabilize {
  bool operator==(const Destabilize&) const = default;
};

struct Move {
  std::variant<RewriteStep, Conjugate, CyclicRotate, Stabilize, Destabilize> action;
  std::string annotation;

  bool operator==(const Move&) const = default;
};

inline std::string_view move_kind(const Move& m) {
  struct {
    std::string_view operator()(const RewriteStep&) const { return "rewrite"; }
    std::string_view operator()(const Conjugate&) const { return "conjugate"; }
    std::string_view operator()(const CyclicRotate&) const { return "cyclic_rotate"; }
    std::string_view operator()(const Stabilize&) const { return "stabilize"; }
    std::string_view operator()(const Destabilize&) const { return "destabilize"; }
  } visitor;
  return std::visit(visitor, m.action);
}

namespace detail {

/// g^{-1} w g, cancelling free pairs only where g^{-1} meets w and w meets g.
inline BraidWord conjugate_word(const BraidWord& w, const BraidWord& g) {
  const BraidWord ginv = g.inverse();
  std::vector<Letter> left(ginv.letters().begin(), ginv.letters().end());
  std::vector<Letter> right(g.letters().begin(), g.letters().end());
  const auto wl = w.letters();
  std::size_t lo = 0, hi = wl.size();
  while (!left.empty() && lo < hi && left.back() == wl[lo].inverse()) {
    left.pop_back();
    ++lo;
  }
  std::size_t rstart = 0;
  while (lo < hi && rstart < right.size() && wl[hi - 1] == right[rstart].inverse()) {
    --hi;
    ++rstart;
  }
  if (lo == hi) {
    while (!left.empty() && rstart < right.size() && left.back() == right[rstart].inverse()) {
      left.pop_back();
      ++rstart;
    }
  }
  std::vector<Letter> out = std::move(left);
  out.insert(out.end(), wl.begin() + static_cast<std::ptrdiff_t>(lo), wl.begin() + static_cast<std::ptrdiff_t>(hi));
  out.insert(out.end(), right.begin() + static_cast<std::ptrdiff_t>(rstart), right.end());
  return BraidWord(w.strands(), std::move(out));
}

}  // namespace detail

inline BraidWord apply_move(const BraidWord& w, const Move& m, Verify verify = Verify::oracle) {
  if (const auto* step = std::get_if<RewriteStep>(&m.action)) return apply_rewrite(w, *step, verify);
  if (const auto* c = std::get_if<Conjugate>(&m.action)) {
    if (c->by.strands() != w.strands())
      throw IllegalMove("conjugator lives on " + std::to_string(c->by.strands()) + " strands, word on " +
                        std::to_string(w.strands()));
    return detail::conjugate_word(w, c->by);
  }
  if (const auto* r = std::get_if<CyclicRotate>(&m.action)) {
    if (r->k > w.size())
      throw IllegalMove("cannot rotate by " + std::to_string(r->k) + " letters a word of length " +
                        std::to_string(w.size()));
    return w.slice(r->k, w.size() - r->k) * w.slice(0, r->k);
  }
  if (const auto* s = std::get_if<Stabilize>(&m.action)) {
    if (s->sign != 1 && s->sign != -1) throw IllegalMove("stabilization sign must be +1 or -1");
    const int n = w.strands();
    return w.with_strands(n + 1) * BraidWord(n + 1, {Letter{n, s->sign}});
  }
  // Destabilize.
  const int n = w.strands();
  if (n < 2) throw IllegalMove("cannot destabilize a word on one strand");
  const int top = n - 1;
  const std::size_t count = w.count_index(top);
  if (count == 0) throw IllegalMove("destabilize: sigma_" + std::to_string(top) + " does not occur");
  if (count > 1)
    throw IllegalMove("destabilize: sigma_" + std::to_string(top) + " occurs " + std::to_string(count) + " times");
  if (w[w.size() - 1].index != top)
    throw IllegalMove("destabilize: sigma_" + std::to_string(top) + " is not the final letter");
  return w.slice(0, w.size() - 1).with_strands(n - 1);
}

struct MoveTrace {
  BraidWord start;
  std::vector<Move> moves;
  BraidWord end;
};

/// Accumulates moves while tracking the current word.
class TraceBuilder {
 public:
  explicit TraceBuilder(BraidWord start, Verify verify = Verify::oracle)
      : start_(start), current_(std::move(start)), verify_(verify) {}

  const BraidWord& current() const noexcept { return current_; }
  Verify verify_mode() const noexcept { return verify_; }

  void push(Move m) {
    current_ = apply_move(current_, m, verify_);
    moves_.push_back(std::move(m));
  }

  /// Fire a rewrite rule at an explicit site.
  void rewrite(Rule rule, std::size_t site, RuleParams params, std::string annotation = {}) {
    auto [next, step] = rewrite_at(current_, rule, site, std::move(params), verify_);
    current_ = std::move(next);
    moves_.push_back(Move{std::move(step), std::move(annotation)});
  }

  void append(const std::vector<Move>& moves) {
    for (const Move& m : moves) push(m);
  }

  MoveTrace finish() const { return MoveTrace{start_, moves_, current_}; }

 private:
  BraidWord start_;
  BraidWord current_;
  std::vector<Move> moves_;
  Verify verify_;
};

/// Remove the single occurrence of the top generator: rotate it to the end, then destabilize.
inline std::pair<BraidWord, std::vector<Move>> destabilize_unique_top(const BraidWord& w) {
  if (!w.is_positive()) throw ParameterError("destabilize_unique_top expects a positive word");
  const int n = w.strands();
  if (n < 2) throw IllegalMove("cannot destabilize a word on one strand");
  const int top = n - 1;
  const std::size_t count = w.count_index(top);
  if (count == 0) throw IllegalMove("top generator sigma_" + std::to_string(top) + " is absent");
  if (count > 1) throw IllegalMove("top generator sigma_" + std::to_string(top) + " is repeated");
  std::size_t pos = 0;
  while (w[pos].index != top) ++pos;
  std::vector<Move> moves;
  BraidWord cur = w;
  if (pos + 1 != w.size()) {
    moves.push_back(Move{CyclicRotate{pos + 1}, "bring sigma_" + std::to_string(top) + " to the end"});
    cur = apply_move(cur, moves.back());
  }
  moves.push_back(Move{Destabilize{}, "remove the unique sigma_" + std::to_string(top)});
  cur = apply_move(cur, moves.back());
  return {std::move(cur), std::move(moves)};
}

struct Verdict {
  bool valid = true;
  std::optional<std::size_t> step;  // 0-based move index, unset for start/end failures
  std::string reason;

  static Verdict ok() { return {}; }
  static Verdict fail(std::optional<std::size_t> step, std::string reason) {
    return Verdict{false, step, std::move(reason)};
  }
  explicit operator bool() const noexcept { return valid; }

  std::string to_string() const {
    if (valid) return "valid";
    std::string s = "invalid";
    if (step) s += " at move " + std::to_string(*step + 1);
    return s + ": " + reason;
  }
};

namespace detail {

/// Moves that may change strands - exponent_sum.
inline bool may_change_bennequin(const Move& m, const BraidWord& before) {
  if (const auto* s = std::get_if<Stabilize>(&m.action)) return s->sign < 0;
  if (std::holds_alternative<Destabilize>(m.action))
    return !before.empty() && before[before.size() - 1].sign < 0;
  return false;
}

}  // namespace detail

/// Replay a trace. Valid iff every move is legal, the replay reproduces `end`
/// letter for letter, the closure's component count never changes, and
/// strands - exponent_sum is constant across every move other than a negative
/// (de)stabilization.
inline Verdict verify_trace(const MoveTrace& tr, Verify verify = Verify::oracle) {
  BraidWord cur = tr.start;
  ClosureInvariants inv = closure_invariants(cur);
  for (std::size_t i = 0; i < tr.moves.size(); ++i) {
    const Move& m = tr.moves[i];
    BraidWord next;
    try {
      next = apply_move(cur, m, verify);
    } catch (const std::exception& e) {
      return Verdict::fail(i, std::string(move_kind(m)) + ": " + e.what());
    }
    const ClosureInvariants next_inv = closure_invariants(next);
    if (next_inv.component_count != inv.component_count)
      return Verdict::fail(i, "component count changed from " + std::to_string(inv.component_count) + " to " +
                                  std::to_string(next_inv.component_count));
    if (!detail::may_change_bennequin(m, cur) && next_inv.bennequin_quantity != inv.bennequin_quantity)
      return Verdict::fail(i, "strands - exponent_sum changed from " + std::to_string(inv.bennequin_quantity) +
                                  " to " + std::to_string(next_inv.bennequin_quantity));
    cur = std::move(next);
    inv = next_inv;
  }
  if (cur != tr.end)
    return Verdict::fail(std::nullopt, "replay ends at " + cur.to_string() + " but trace claims " + tr.end.to_string());
  return Verdict::ok();
}

}  // namespace nbraid
