#pragma once

// Braid index of n-bridge braids: the closed-form case split and a
// constructive reduction to a positive braid containing a full twist, whose
// strand count is then the braid index.

#include <optional>
#include <string>
#include <string_view>

#include "alexander.hpp"
#include "braid_word.hpp"
#include "garside.hpp"
#include "markov.hpp"
#include "nbridge.hpp"
#include "permutation.hpp"
#include "rewrite.hpp"

namespace nbraid {

enum class CaseTag { C1, C2, C3, C4, C5a, C5b };

inline std::string_view case_name(CaseTag c) {
  switch (c) {
    case CaseTag::C1: return "C1";
    case CaseTag::C2: return "C2";
    case CaseTag::C3: return "C3";
    case CaseTag::C4: return "C4";
    case CaseTag::C5a: return "C5a";
    case CaseTag::C5b: return "C5b";
  }
  return "?";
}

/// "C5" for both C5a and C5b.
inline std::string_view case_family(CaseTag c) {
  return c == CaseTag::C5a || c == CaseTag::C5b ? std::string_view("C5") : case_name(c);
}

inline std::optional<CaseTag> case_from_name(std::string_view s) {
  for (CaseTag c : {CaseTag::C1, CaseTag::C2, CaseTag::C3, CaseTag::C4, CaseTag::C5a, CaseTag::C5b})
    if (case_name(c) == s) return c;
  return std::nullopt;
}

struct IndexResult {
  int index = 0;
  CaseTag case_tag = CaseTag::C1;
};

inline IndexResult braid_index_formula(const NBridgeParams& p) {
  p.validate();
  const auto [w, b, t, n] = p;
  if (t >= w) return {w, CaseTag::C1};
  if (t > b) return {t, CaseTag::C2};
  if (n == 1) return {t + 1, CaseTag::C3};
  if (n + t >= b + 1) return {b + 1, CaseTag::C4};
  return {n + t, n + t == b ? CaseTag::C5a : CaseTag::C5b};
}

inline constexpr std::string_view kLinkClosureNote = "link-closure: formula unproven for links";

struct IndexCertificate {
  NBridgeParams params;
  int claimed_index = 0;
  CaseTag case_tag = CaseTag::C1;
  MoveTrace trace;
  BraidWord final_word;
  std::string note;  // kLinkClosureNote when the closure has several components
};

namespace detail {

/// Pipeline state: the current word is prefix * delta_m^e * tail on m+1 strands,
/// with prefix = delta_b^n (or empty once merged into the body).
struct ReductionState {
  int m = 0;
  int e = 0;
  int b = 0;
  int n = 0;
  bool merged = false;
  BraidWord tail;

  std::size_t prefix_size() const { return merged ? 0 : static_cast<std::size_t>(b) * static_cast<std::size_t>(n); }

  BraidWord word() const {
    const int s = m + 1;
    BraidWord out = merged ? BraidWord(s) : delta(b, s).pow(n);
    return out * delta(m, s).pow(e) * tail.with_strands(s);
  }
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw InternalError("reduction precondition failed: " + what);
}

/// One round: expose a unique sigma_m, destabilize it away, and restore the
/// shape prefix * delta_{m-1}^e * gamma_{e-1} * tail.
inline void reduction_round(ReductionState& st, TraceBuilder& tb) {
  const int m = st.m;
  const int e = st.e;
  check(e >= 1 && e <= m, "body exponent " + std::to_string(e) + " outside [1, " + std::to_string(m) + "]");
  const std::size_t ps = st.prefix_size();
  const std::string where = " on " + std::to_string(m + 1) + " strands";
  if (e == m) {
    tb.rewrite(Rule::prop_same_super_sub, ps, rule_params(Rule::prop_same_super_sub, {m}),
               "delta_" + std::to_string(m) + "^" + std::to_string(m) + " split" + where);
    if (m - 1 >= 2)
      tb.rewrite(Rule::prop_delta_factor, ps + static_cast<std::size_t>(m - 1),
                 rule_params(Rule::prop_delta_factor, {m, m - 1}),
                 "factor delta_" + std::to_string(m) + "^" + std::to_string(m - 1) + where);
  } else if (e >= 2) {
    tb.rewrite(Rule::prop_delta_factor, ps, rule_params(Rule::prop_delta_factor, {m, e}),
               "factor delta_" + std::to_string(m) + "^" + std::to_string(e) + where);
  }
  auto [after, moves] = destabilize_unique_top(tb.current());
  tb.append(moves);
  // Now Y * X with X = prefix * delta_{m-1}^{e-1}; rotate X back to the front.
  const std::size_t x_len = ps + static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(e - 1);
  const std::size_t k = tb.current().size() - x_len;
  if (k != 0 && x_len != 0) tb.push(Move{CyclicRotate{k}, "restore prefix order"});

  st.tail = gamma(e - 1, m) * st.tail.with_strands(m);
  st.m = m - 1;
  check(tb.current() == st.word(), "round on " + std::to_string(m + 1) + " strands left an unexpected word");
}

}  // namespace detail

/// Run the case pipeline and package the result as a certificate.
inline IndexCertificate reduce_to_full_twist(const NBridgeParams& p, Verify verify = Verify::oracle) {
  const IndexResult formula = braid_index_formula(p);
  const BraidWord start = nbridge_word(p);
  TraceBuilder tb(start, verify);
  detail::ReductionState st{p.w - 1, p.t, p.b, p.n, false, BraidWord(p.w)};
  if (formula.case_tag != CaseTag::C1) {
    while (st.m + 1 > formula.index) {
      if (!st.merged && st.m == st.b) {
        st.merged = true;
        st.e += st.n;
      }
      detail::reduction_round(st, tb);
    }
    if (!st.merged && st.m == st.b) {
      st.merged = true;
      st.e += st.n;
    }
  }
  IndexCertificate cert;
  cert.params = p;
  cert.claimed_index = formula.index;
  cert.case_tag = formula.case_tag;
  cert.trace = tb.finish();
  cert.final_word = cert.trace.end;
  detail::check(cert.final_word.strands() == formula.index, "final strand count differs from the formula");
  detail::check(contains_full_twist(cert.final_word), "final word has no full twist");
  if (underlying_permutation(start).cycle_count() > 1) cert.note = std::string(kLinkClosureNote);
  return cert;
}

/// Valid iff the trace replays from nbridge_word(params) to final_word, the
/// final word is positive, contains a full twist, has claimed_index strands,
/// and (for knots, unless disabled) start and final word share their
/// Alexander polynomial.
inline Verdict check_certificate(const IndexCertificate& c, Verify verify = Verify::oracle,
                                 bool check_alexander = true) {
  try {
    c.params.validate();
  } catch (const ParameterError& e) {
    return Verdict::fail(std::nullopt, e.what());
  }
  if (c.trace.start != nbridge_word(c.params))
    return Verdict::fail(std::nullopt, "trace does not start at " + c.params.to_string());
  if (Verdict v = verify_trace(c.trace, verify); !v) return v;
  if (c.trace.end != c.final_word) return Verdict::fail(std::nullopt, "trace end differs from the final word");
  if (!c.final_word.is_positive()) return Verdict::fail(std::nullopt, "final word is not positive");
  if (c.final_word.strands() != c.claimed_index)
    return Verdict::fail(std::nullopt, "final word has " + std::to_string(c.final_word.strands()) +
                                           " strands but the claimed index is " + std::to_string(c.claimed_index));
  if (!contains_full_twist(c.final_word)) return Verdict::fail(std::nullopt, "final word contains no full twist");
  if (check_alexander && underlying_permutation(c.trace.start).cycle_count() == 1) {
    try {
      if (alexander_polynomial(c.trace.start) != alexander_polynomial(c.final_word))
        return Verdict::fail(std::nullopt, "Alexander polynomials of start and final word differ");
    } catch (const std::exception& e) {
      return Verdict::fail(std::nullopt, std::string("Alexander check failed: ") + e.what());
    }
  }
  return Verdict::ok();
}

}  // namespace nbraid
