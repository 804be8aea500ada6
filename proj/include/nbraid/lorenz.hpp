#pragma once

// T-link presentations and the conversions that put n-bridge braids and
// twisted torus braids into T-link form.

#include <string>
#include <utility>
#include <vector>

#include "braid_word.hpp"
#include "garside.hpp"
#include "markov.hpp"
#include "nbridge.hpp"
#include "rewrite.hpp"

namespace nbraid {

/// T((p1,q1),...,(ps,qs)): the closure of gamma_{p1-1}^{q1} ... gamma_{ps-1}^{qs} on ps strands,
/// with 2 <= p1 <= ... <= ps and every qi > 0.
struct TLinkSpec {
  std::vector<std::pair<int, int>> pairs;

  void validate() const {
    if (pairs.empty()) throw ParameterError("T-link needs at least one (p,q) pair");
    int prev = 2;
    for (const auto& [p, q] : pairs) {
      if (p < 2) throw ParameterError("T-link width p >= 2 violated (p=" + std::to_string(p) + ")");
      if (p < prev) throw ParameterError("T-link widths must be non-decreasing");
      if (q < 1) throw ParameterError("T-link exponent q > 0 violated (q=" + std::to_string(q) + ")");
      prev = p;
    }
  }

  int strands() const { return pairs.empty() ? 1 : pairs.back().first; }

  /// Adjacent pairs of equal width combined by adding exponents.
  TLinkSpec merged() const {
    TLinkSpec out;
    for (const auto& pq : pairs) {
      if (!out.pairs.empty() && out.pairs.back().first == pq.first)
        out.pairs.back().second += pq.second;
      else
        out.pairs.push_back(pq);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "T(";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i) s += ',';
      s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return s + ")";
  }

  /// Parses "T((p1,q1),(p2,q2),...)"; whitespace anywhere is ignored.
  static TLinkSpec parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!detail::is_space(c)) s += c;
    if (s.size() < 4 || s.compare(0, 2, "T(") != 0 || s.back() != ')')
      throw ParseError("T-link spec must look like T((p,q),...)");
    std::string_view body(s);
    body = body.substr(2, body.size() - 3);
    TLinkSpec spec;
    while (!body.empty()) {
      if (body.front() != '(') throw ParseError("expected '(' in T-link spec");
      const auto close = body.find(')');
      const auto comma = body.find(',');
      if (close == std::string_view::npos || comma == std::string_view::npos || comma > close)
        throw ParseError("malformed (p,q) pair in T-link spec");
      const int p = detail::parse_int(body.substr(1, comma - 1), "T-link spec");
      const int q = detail::parse_int(body.substr(comma + 1, close - comma - 1), "T-link spec");
      spec.pairs.emplace_back(p, q);
      body.remove_prefix(close + 1);
      if (!body.empty()) {
        if (body.front() != ',') throw ParseError("expected ',' between T-link pairs");
        body.remove_prefix(1);
        if (body.empty()) throw ParseError("trailing ',' in T-link spec");
      }
    }
    try {
      spec.validate();
    } catch (const ParameterError& e) {
      throw ParseError(e.what());
    }
    return spec;
  }

  bool operator==(const TLinkSpec&) const = default;
};

inline BraidWord tlink_word(const TLinkSpec& spec) {
  spec.validate();
  const int n = spec.strands();
  BraidWord w(n);
  for (const auto& [p, q] : spec.pairs) w = w * gamma(p - 1, n).pow(q);
  return w;
}

/// sigma_i -> sigma_{n-i}. Equals conjugation by the half twist Delta.
inline BraidWord reflect(const BraidWord& w) { return w.reflected(); }

/// Twisted torus braid on `strands` strands:
/// (sigma_{n-1} ... sigma_1)^power (sigma_{n-1} ... sigma_{n-k+1})^{q k},
/// i.e. q extra full twists on the k rightmost strands.
struct TwistedTorusParams {
  int strands = 2;
  int power = 1;
  int width = 2;   // k
  int twists = 1;  // q

  void validate() const {
    if (width < 2) throw ParameterError("twist width k >= 2 violated (k=" + std::to_string(width) + ")");
    if (width > strands)
      throw ParameterError("twist width k <= strands violated (k=" + std::to_string(width) +
                           ", strands=" + std::to_string(strands) + ")");
    if (power < 1) throw ParameterError("power p >= 1 violated (p=" + std::to_string(power) + ")");
    if (twists < 1) throw ParameterError("twist count q >= 1 violated (q=" + std::to_string(twists) + ")");
  }
};

inline BraidWord twisted_torus_word(const TwistedTorusParams& p) {
  p.validate();
  const int n = p.strands;
  return delta(n - 1, n).pow(p.power) * descending_run(n - 1, n - p.width + 1, n).pow(p.twists * p.width);
}

struct TLinkConversion {
  TLinkSpec spec;
  MoveTrace trace;  // from the reflected input word to tlink_word(spec)
};

namespace detail {

inline void merge_equal_widths(TLinkSpec& spec, TraceBuilder& tb) {
  TLinkSpec merged = spec.merged();
  if (merged.pairs.size() != spec.pairs.size()) {
    tb.push(Move{CyclicRotate{0}, "merge equal-width blocks: " + spec.to_string() + " = " + merged.to_string()});
    spec = std::move(merged);
  }
}

}  // namespace detail

/// K(w,b,t,n) as the T-link T((b+1,n),(w,t)).
///
/// Starting from reflect(K) = (sigma_{w-b} ... sigma_{w-1})^n gamma_{w-1}^t,
/// each of the w-b-1 passes pushes the n blocks, last first, through the
/// leading gamma_{w-1} (each push shifts a block down by one) and then
/// conjugates that gamma_{w-1} around to the back.
inline TLinkConversion nbridge_to_tlink(const NBridgeParams& p, Verify verify = Verify::oracle) {
  p.validate();
  const int w = p.w;
  const int width = p.b;  // letters per block
  TraceBuilder tb(reflect(nbridge_word(p)), verify);
  const BraidWord g = gamma(w - 1, w);
  for (int a = w - p.b; a >= 2; --a) {
    for (int block = p.n - 1; block >= 0; --block) {
      const std::size_t site = static_cast<std::size_t>(block) * static_cast<std::size_t>(width);
      tb.rewrite(Rule::left_push, site, rule_params(Rule::left_push, {a, width - 1, w}),
                 "push block sigma_" + std::to_string(a) + "..sigma_" + std::to_string(a + width - 1) +
                     " through gamma_" + std::to_string(w - 1));
    }
    tb.push(Move{Conjugate{g}, "conjugate by gamma_" + std::to_string(w - 1)});
  }
  TLinkConversion out;
  out.spec.pairs = {{p.b + 1, p.n}, {w, p.t}};
  detail::merge_equal_widths(out.spec, tb);
  out.trace = tb.finish();
  if (out.trace.end != tlink_word(out.spec))
    throw InternalError("nbridge_to_tlink did not reach the T-link word");
  return out;
}

/// Twisted torus braid as T((k, qk), (n, p)): reflect, then rotate the full
/// torus part to the back so block widths are non-decreasing.
inline TLinkConversion twisted_torus_to_tlink(const TwistedTorusParams& p, Verify verify = Verify::oracle) {
  p.validate();
  const int n = p.strands;
  TraceBuilder tb(reflect(twisted_torus_word(p)), verify);
  tb.push(Move{CyclicRotate{static_cast<std::size_t>(p.power) * static_cast<std::size_t>(n - 1)},
               "move gamma_" + std::to_string(n - 1) + "^" + std::to_string(p.power) + " to the back"});
  TLinkConversion out;
  out.spec.pairs = {{p.width, p.twists * p.width}, {n, p.power}};
  detail::merge_equal_widths(out.spec, tb);
  out.trace = tb.finish();
  if (out.trace.end != tlink_word(out.spec))
    throw InternalError("twisted_torus_to_tlink did not reach the T-link word");
  return out;
}

}  // namespace nbraid
