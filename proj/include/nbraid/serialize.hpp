#pragma once

// JSON files for traces and index certificates.
//
// Words are stored in their canonical text form; every move carries the
// FNV-1a 64-bit hash of the canonical text of the word before and after it.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braid_word.hpp"
#include "index.hpp"
#include "markov.hpp"
#include "rewrite.hpp"

namespace nbraid {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kTraceFormat = "nbraid-trace/1";
inline constexpr std::string_view kCertificateFormat = "nbraid-certificate/1";

inline std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string word_hash(const BraidWord& w) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(w.to_string())));
  return buf;
}

namespace detail {

inline json move_params(const Move& m) {
  json p = json::object();
  if (const auto* s = std::get_if<RewriteStep>(&m.action)) {
    p["rule"] = std::string(rule_name(s->rule));
    p["site"] = {s->site_begin, s->site_end};
    for (const auto& [k, v] : s->params) p[k] = v;
  } else if (const auto* c = std::get_if<Conjugate>(&m.action)) {
    p["by"] = c->by.to_string();
  } else if (const auto* r = std::get_if<CyclicRotate>(&m.action)) {
    p["k"] = r->k;
  } else if (const auto* st = std::get_if<Stabilize>(&m.action)) {
    p["sign"] = st->sign;
  }
  return p;
}

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

inline Move move_from_json(const json& j) {
  const auto kind = get_field<std::string>(j, "kind");
  const json& p = j.contains("params") ? j.at("params") : json::object();
  Move m;
  if (j.contains("annotation")) m.annotation = get_field<std::string>(j, "annotation");
  if (kind == "rewrite") {
    const auto name = get_field<std::string>(p, "rule");
    const auto rule = rule_from_name(name);
    if (!rule) throw ParseError("unknown rule '" + name + "'");
    const auto site = get_field<std::vector<std::size_t>>(p, "site");
    if (site.size() != 2) throw ParseError("rewrite site must be [begin, end]");
    RewriteStep step{*rule, site[0], site[1], {}};
    for (const auto& [k, v] : p.items()) {
      if (k == "rule" || k == "site") continue;
      if (!v.is_number_integer()) throw ParseError("rule parameter '" + k + "' must be an integer");
      step.params[k] = v.get<int>();
    }
    m.action = std::move(step);
  } else if (kind == "conjugate") {
    m.action = Conjugate{BraidWord::parse(get_field<std::string>(p, "by"))};
  } else if (kind == "cyclic_rotate") {
    m.action = CyclicRotate{get_field<std::size_t>(p, "k")};
  } else if (kind == "stabilize") {
    m.action = Stabilize{get_field<int>(p, "sign")};
  } else if (kind == "destabilize") {
    m.action = Destabilize{};
  } else {
    throw ParseError("unknown move kind '" + kind + "'");
  }
  return m;
}

}  // namespace detail

/// Trace as JSON. Hashes are computed by replaying the moves in fast mode.
inline json trace_to_json(const MoveTrace& tr) {
  json j;
  j["format"] = std::string(kTraceFormat);
  j["start"] = tr.start.to_string();
  j["end"] = tr.end.to_string();
  json moves = json::array();
  BraidWord cur = tr.start;
  for (const Move& m : tr.moves) {
    json jm;
    jm["kind"] = std::string(move_kind(m));
    jm["params"] = detail::move_params(m);
    jm["annotation"] = m.annotation;
    jm["before_hash"] = word_hash(cur);
    cur = apply_move(cur, m, Verify::fast);
    jm["after_hash"] = word_hash(cur);
    moves.push_back(std::move(jm));
  }
  j["moves"] = std::move(moves);
  return j;
}

/// A parsed trace plus the hashes it recorded.
struct TraceDocument {
  MoveTrace trace;
  std::vector<std::pair<std::string, std::string>> hashes;  // (before, after) per move
};

inline TraceDocument trace_from_json(const json& j) {
  if (detail::get_field<std::string>(j, "format") != kTraceFormat) throw ParseError("not a trace file");
  TraceDocument doc;
  doc.trace.start = BraidWord::parse(detail::get_field<std::string>(j, "start"));
  doc.trace.end = BraidWord::parse(detail::get_field<std::string>(j, "end"));
  if (!j.contains("moves") || !j.at("moves").is_array()) throw ParseError("missing move list");
  for (const json& jm : j.at("moves")) {
    doc.trace.moves.push_back(detail::move_from_json(jm));
    doc.hashes.emplace_back(jm.value("before_hash", std::string()), jm.value("after_hash", std::string()));
  }
  return doc;
}

/// Full replay check plus agreement of every recorded hash.
inline Verdict verify_document(const TraceDocument& doc, Verify verify = Verify::oracle) {
  if (Verdict v = verify_trace(doc.trace, verify); !v) return v;
  BraidWord cur = doc.trace.start;
  for (std::size_t i = 0; i < doc.trace.moves.size(); ++i) {
    if (doc.hashes[i].first != word_hash(cur)) return Verdict::fail(i, "before_hash does not match the replayed word");
    cur = apply_move(cur, doc.trace.moves[i], Verify::fast);
    if (doc.hashes[i].second != word_hash(cur)) return Verdict::fail(i, "after_hash does not match the replayed word");
  }
  return Verdict::ok();
}

inline json certificate_to_json(const IndexCertificate& c) {
  json j;
  j["format"] = std::string(kCertificateFormat);
  j["params"] = {{"w", c.params.w}, {"b", c.params.b}, {"t", c.params.t}, {"n", c.params.n}};
  j["claimed_index"] = c.claimed_index;
  j["case_tag"] = std::string(case_name(c.case_tag));
  j["final_word"] = c.final_word.to_string();
  if (!c.note.empty()) j["note"] = c.note;
  j["trace"] = trace_to_json(c.trace);
  return j;
}

struct CertificateDocument {
  IndexCertificate certificate;
  TraceDocument trace;
};

inline CertificateDocument certificate_from_json(const json& j) {
  if (detail::get_field<std::string>(j, "format") != kCertificateFormat) throw ParseError("not a certificate file");
  CertificateDocument doc;
  IndexCertificate& c = doc.certificate;
  const json& p = j.contains("params") ? j.at("params") : json();
  c.params = NBridgeParams{detail::get_field<int>(p, "w"), detail::get_field<int>(p, "b"),
                           detail::get_field<int>(p, "t"), detail::get_field<int>(p, "n")};
  c.claimed_index = detail::get_field<int>(j, "claimed_index");
  const auto tag = case_from_name(detail::get_field<std::string>(j, "case_tag"));
  if (!tag) throw ParseError("unknown case tag");
  c.case_tag = *tag;
  c.final_word = BraidWord::parse(detail::get_field<std::string>(j, "final_word"));
  c.note = j.value("note", std::string());
  if (!j.contains("trace")) throw ParseError("missing field 'trace'");
  doc.trace = trace_from_json(j.at("trace"));
  c.trace = doc.trace.trace;
  return doc;
}

inline Verdict verify_certificate_document(const CertificateDocument& doc, Verify verify = Verify::oracle) {
  if (Verdict v = verify_document(doc.trace, verify); !v) return v;
  if (Verdict v = check_certificate(doc.certificate, verify); !v) return v;
  const auto formula = braid_index_formula(doc.certificate.params);
  if (doc.certificate.case_tag != formula.case_tag)
    return Verdict::fail(std::nullopt, "case tag does not match the parameters");
  return Verdict::ok();
}

/// Parses JSON text, mapping syntax errors to ParseError.
inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace nbraid
