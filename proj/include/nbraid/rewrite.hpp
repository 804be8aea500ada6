#pragma once

// Named rewriting steps on positive braid words.
//
// Each rule is instantiated from its integer parameters into a concrete pair
// (lhs, rhs) on the ambient strand count and fires at an explicit letter
// index. Equality rules are identities in B_n; block_shift is a conjugation
// whose conjugator is gamma_{w-1}. With Verify::oracle every application is
// checked against the Garside normal form; Verify::fast skips the check and
// produces the same words.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "braid_word.hpp"
#include "garside.hpp"

namespace nbraid {

enum class Verify { fast, oracle };

enum class Rule {
  lemma_dd_split,
  lemma_sigma1_pass,
  lemma_sigmaj_pass,
  lemma_power_pass,
  prop_delta_peel,
  prop_delta_factor,
  prop_same_super_sub,
  left_push,
  block_shift,
};

inline constexpr std::array<std::pair<Rule, std::string_view>, 9> kRuleNames{{
    {Rule::lemma_dd_split, "lemma_dd_split"},
    {Rule::lemma_sigma1_pass, "lemma_sigma1_pass"},
    {Rule::lemma_sigmaj_pass, "lemma_sigmaj_pass"},
    {Rule::lemma_power_pass, "lemma_power_pass"},
    {Rule::prop_delta_peel, "prop_delta_peel"},
    {Rule::prop_delta_factor, "prop_delta_factor"},
    {Rule::prop_same_super_sub, "prop_same_super_sub"},
    {Rule::left_push, "left_push"},
    {Rule::block_shift, "block_shift"},
}};

inline std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

inline std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames)
    if (n == name) return rule;
  return std::nullopt;
}

using RuleParams = std::map<std::string, int>;

struct RewriteStep {
  Rule rule = Rule::lemma_dd_split;
  std::size_t site_begin = 0;  // letter range [site_begin, site_end) of the source word
  std::size_t site_end = 0;
  RuleParams params;

  bool operator==(const RewriteStep&) const = default;
};

/// One instance of an equality rule: lhs = rhs in B_strands.
struct Identity {
  BraidWord lhs;
  BraidWord rhs;
};

/// conjugator^{-1} * source * conjugator = target.
struct ConjugationWitness {
  BraidWord source;
  BraidWord target;
  BraidWord conjugator;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

inline void require_strands(int strands, int needed, std::string_view rule) {
  require(strands >= needed, std::string(rule) + " needs at least " + std::to_string(needed) +
                                 " strands, word has " + std::to_string(strands));
}

inline int param(const RuleParams& p, const std::string& key, Rule r) {
  const auto it = p.find(key);
  if (it == p.end())
    throw ParameterError(std::string(rule_name(r)) + " is missing parameter '" + key + "'");
  return it->second;
}

}  // namespace detail

/// delta_k delta_k = delta_{k-1} delta_k sigma_1, k >= 1.
inline Identity lemma_dd_split(int k, int strands) {
  detail::require(k >= 1, "lemma_dd_split needs k >= 1");
  detail::require_strands(strands, k + 1, "lemma_dd_split");
  return {delta(k, strands).pow(2), delta(k - 1, strands) * delta(k, strands) * gamma(1, strands)};
}

/// sigma_j delta_k = delta_k sigma_{j+1}, 1 <= j < k.
inline Identity lemma_sigma_pass(int j, int k, int strands) {
  detail::require(j >= 1 && j < k, "lemma_sigma_pass needs 1 <= j < k (got j=" + std::to_string(j) +
                                       ", k=" + std::to_string(k) + ")");
  detail::require_strands(strands, k + 1, "lemma_sigma_pass");
  const BraidWord dk = delta(k, strands);
  return {ascending_run(j, j, strands) * dk, dk * ascending_run(j + 1, j + 1, strands)};
}

/// sigma_1 delta_k^s = delta_k^s sigma_{s+1}, 1 <= s < k.
inline Identity lemma_power_pass(int s, int k, int strands) {
  detail::require(s >= 1 && s < k, "lemma_power_pass needs 1 <= s < k (got s=" + std::to_string(s) +
                                       ", k=" + std::to_string(k) + ")");
  detail::require_strands(strands, k + 1, "lemma_power_pass");
  const BraidWord dks = delta(k, strands).pow(s);
  return {gamma(1, strands) * dks, dks * ascending_run(s + 1, s + 1, strands)};
}

/// delta_j^t = delta_{j-1} delta_j^{t-1} sigma_{t-1}, 2 <= t < j.
inline Identity prop_delta_peel(int j, int t, int strands) {
  detail::require(t >= 2 && t < j, "prop_delta_peel needs 2 <= t < j (got j=" + std::to_string(j) +
                                       ", t=" + std::to_string(t) + ")");
  detail::require_strands(strands, j + 1, "prop_delta_peel");
  return {delta(j, strands).pow(t),
          delta(j - 1, strands) * delta(j, strands).pow(t - 1) * ascending_run(t - 1, t - 1, strands)};
}

/// delta_k^t = delta_{k-1}^{t-1} delta_k gamma_{t-1}, 2 <= t < k.
inline Identity prop_delta_factor(int k, int t, int strands) {
  detail::require(t >= 2 && t < k, "prop_delta_factor needs 2 <= t < k (got k=" + std::to_string(k) +
                                       ", t=" + std::to_string(t) + ")");
  detail::require_strands(strands, k + 1, "prop_delta_factor");
  return {delta(k, strands).pow(t),
          delta(k - 1, strands).pow(t - 1) * delta(k, strands) * gamma(t - 1, strands)};
}

/// delta_k^k = delta_{k-1} delta_k^{k-1} sigma_{k-1}, k >= 2.
inline Identity prop_same_super_sub(int k, int strands) {
  detail::require(k >= 2, "prop_same_super_sub needs k >= 2 (got k=" + std::to_string(k) + ")");
  detail::require_strands(strands, k + 1, "prop_same_super_sub");
  return {delta(k, strands).pow(k),
          delta(k - 1, strands) * delta(k, strands).pow(k - 1) * ascending_run(k - 1, k - 1, strands)};
}

/// (sigma_a ... sigma_{a+c}) gamma_{w-1} = gamma_{w-1} (sigma_{a-1} ... sigma_{a+c-1}).
inline Identity push_block_through_gamma(int a, int c, int w) {
  detail::require(a >= 2, "left_push needs a >= 2 (got a=" + std::to_string(a) + ")");
  detail::require(c >= 0, "left_push needs c >= 0");
  detail::require(a + c <= w - 1, "left_push needs a+c <= w-1 (got a=" + std::to_string(a) +
                                       ", c=" + std::to_string(c) + ", w=" + std::to_string(w) + ")");
  const BraidWord g = gamma(w - 1, w);
  return {ascending_run(a, a + c, w) * g, g * ascending_run(a - 1, a + c - 1, w)};
}

/// (sigma_a ... sigma_{a+c}) gamma_{w-1}^t is conjugate by gamma_{w-1} to the block shifted down by one.
inline ConjugationWitness block_shift(int a, int c, int t, int w, Verify verify = Verify::oracle) {
  detail::require(a >= 2, "block_shift needs a >= 2 (got a=" + std::to_string(a) + ")");
  detail::require(c >= 0, "block_shift needs c >= 0");
  detail::require(t >= 1, "block_shift needs t >= 1");
  detail::require(a + c <= w - 1, "block_shift needs a+c <= w-1 (got a=" + std::to_string(a) +
                                       ", c=" + std::to_string(c) + ", w=" + std::to_string(w) + ")");
  const BraidWord g = gamma(w - 1, w);
  ConjugationWitness out{ascending_run(a, a + c, w) * g.pow(t), ascending_run(a - 1, a + c - 1, w) * g.pow(t), g};
  if (verify == Verify::oracle && !words_equal(out.conjugator.inverse() * out.source * out.conjugator, out.target))
    throw InternalError("block_shift conjugation failed the oracle check");
  return out;
}

/// The parameter map each rule records in traces.
inline RuleParams rule_params(Rule r, std::initializer_list<int> values) {
  static const std::map<Rule, std::vector<std::string>> keys{
      {Rule::lemma_dd_split, {"k"}},
      {Rule::lemma_sigma1_pass, {"j", "k"}},
      {Rule::lemma_sigmaj_pass, {"j", "k"}},
      {Rule::lemma_power_pass, {"s", "k"}},
      {Rule::prop_delta_peel, {"j", "t"}},
      {Rule::prop_delta_factor, {"k", "t"}},
      {Rule::prop_same_super_sub, {"k"}},
      {Rule::left_push, {"a", "c", "w"}},
      {Rule::block_shift, {"a", "c", "t", "w"}},
  };
  const auto& names = keys.at(r);
  if (names.size() != values.size())
    throw ParameterError(std::string(rule_name(r)) + " takes " + std::to_string(names.size()) + " parameters");
  RuleParams p;
  auto it = values.begin();
  for (const auto& n : names) p[n] = *it++;
  return p;
}

/// The concrete (lhs, rhs) a step denotes on a word with `strands` strands.
inline Identity instantiate(Rule r, const RuleParams& p, int strands) {
  using detail::param;
  switch (r) {
    case Rule::lemma_dd_split:
      return lemma_dd_split(param(p, "k", r), strands);
    case Rule::lemma_sigma1_pass:
      detail::require(param(p, "j", r) == 1, "lemma_sigma1_pass needs j = 1");
      return lemma_sigma_pass(1, param(p, "k", r), strands);
    case Rule::lemma_sigmaj_pass:
      detail::require(param(p, "j", r) > 1, "lemma_sigmaj_pass needs 1 < j");
      return lemma_sigma_pass(param(p, "j", r), param(p, "k", r), strands);
    case Rule::lemma_power_pass:
      return lemma_power_pass(param(p, "s", r), param(p, "k", r), strands);
    case Rule::prop_delta_peel:
      return prop_delta_peel(param(p, "j", r), param(p, "t", r), strands);
    case Rule::prop_delta_factor:
      return prop_delta_factor(param(p, "k", r), param(p, "t", r), strands);
    case Rule::prop_same_super_sub:
      return prop_same_super_sub(param(p, "k", r), strands);
    case Rule::left_push: {
      const int w = param(p, "w", r);
      detail::require(w == strands, "left_push parameter w must equal the strand count");
      return push_block_through_gamma(param(p, "a", r), param(p, "c", r), w);
    }
    case Rule::block_shift: {
      const int w = param(p, "w", r);
      detail::require(w == strands, "block_shift parameter w must equal the strand count");
      auto cw = block_shift(param(p, "a", r), param(p, "c", r), param(p, "t", r), w, Verify::fast);
      return {cw.source, cw.target};
    }
  }
  throw ParameterError("unknown rule");
}

inline Rule sigma_pass_rule(int j) { return j == 1 ? Rule::lemma_sigma1_pass : Rule::lemma_sigmaj_pass; }

/// Apply a recorded step to w. Throws SiteMismatch if the letters at the site are not the rule's lhs.
inline BraidWord apply_rewrite(const BraidWord& w, const RewriteStep& step, Verify verify = Verify::oracle) {
  const Identity id = instantiate(step.rule, step.params, w.strands());
  const std::string name(rule_name(step.rule));
  if (step.site_end < step.site_begin || step.site_end - step.site_begin != id.lhs.size())
    throw SiteMismatch(name + ": site length does not match the rule's left side");
  if (step.site_end > w.size()) throw SiteMismatch(name + ": site runs past the end of the word");
  if (step.rule == Rule::block_shift && (step.site_begin != 0 || step.site_end != w.size()))
    throw SiteMismatch("block_shift is a conjugation and must cover the whole word");
  if (w.slice(step.site_begin, id.lhs.size()) != id.lhs)
    throw SiteMismatch(name + ": letters at [" + std::to_string(step.site_begin) + ", " +
                       std::to_string(step.site_end) + ") do not match " + id.lhs.to_string());
  if (verify == Verify::oracle) {
    if (step.rule == Rule::block_shift) {
      const BraidWord g = gamma(w.strands() - 1, w.strands());
      if (!words_equal(g.inverse() * id.lhs * g, id.rhs))
        throw InternalError("block_shift instance failed the oracle check");
    } else if (!words_equal(id.lhs, id.rhs)) {
      throw InternalError(name + " instance failed the oracle check");
    }
  }
  return w.splice(step.site_begin, id.lhs.size(), id.rhs);
}

/// Fire `rule` at letter index `site` of w; returns the new word and the step that records it.
inline std::pair<BraidWord, RewriteStep> rewrite_at(const BraidWord& w, Rule rule, std::size_t site,
                                                    RuleParams params, Verify verify = Verify::oracle) {
  const Identity id = instantiate(rule, params, w.strands());
  RewriteStep step{rule, site, site + id.lhs.size(), std::move(params)};
  BraidWord out = apply_rewrite(w, step, verify);
  return {std::move(out), std::move(step)};
}

}  // namespace nbraid
