// nbraid: braid index, T-link conversion, certificate checking and word queries.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nbraid/nbraid.hpp"

namespace {

using namespace nbraid;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

Verify verify_mode() {
  const char* v = std::getenv("NBRAID_VERIFY");
  return v && std::string_view(v) == "fast" ? Verify::fast : Verify::oracle;
}

std::string move_line(const Move& m) {
  std::ostringstream os;
  if (const auto* s = std::get_if<RewriteStep>(&m.action)) {
    os << rule_name(s->rule) << '(';
    bool first = true;
    for (const auto& [k, v] : s->params) {
      os << (first ? "" : ",") << k << '=' << v;
      first = false;
    }
    os << ") at [" << s->site_begin << ',' << s->site_end << ')';
  } else if (const auto* c = std::get_if<Conjugate>(&m.action)) {
    os << "conjugate by " << c->by.to_string();
  } else if (const auto* r = std::get_if<CyclicRotate>(&m.action)) {
    os << "cyclic_rotate(" << r->k << ')';
  } else if (const auto* st = std::get_if<Stabilize>(&m.action)) {
    os << "stabilize(" << (st->sign > 0 ? "+" : "-") << ')';
  } else {
    os << "destabilize";
  }
  return os.str();
}

void print_derivation(std::ostream& os, const MoveTrace& tr) {
  os << "   0. " << tr.start.to_string() << '\n';
  BraidWord cur = tr.start;
  for (std::size_t i = 0; i < tr.moves.size(); ++i) {
    cur = apply_move(cur, tr.moves[i], Verify::fast);
    os << (i + 1 < 10 ? "   " : (i + 1 < 100 ? "  " : " ")) << i + 1 << ". " << move_line(tr.moves[i]);
    if (!tr.moves[i].annotation.empty()) os << "  [" << tr.moves[i].annotation << ']';
    os << "\n      = " << cur.to_string() << '\n';
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ParamFlags {
  NBridgeParams p;
  void add(CLI::App* app) {
    app->add_option("--w", p.w, "strand count")->required();
    app->add_option("--b", p.b, "bridge width")->required();
    app->add_option("--t", p.t, "twist count")->required();
    app->add_option("--n", p.n, "bridge count")->required();
  }
};

int cmd_index(const NBridgeParams& p, const std::string& cert_path, bool derivation) {
  const IndexResult f = braid_index_formula(p);
  std::cout << f.index << " (case " << case_family(f.case_tag) << ")\n";
  if (cert_path.empty() && !derivation) return kOk;
  const IndexCertificate c = reduce_to_full_twist(p, verify_mode());
  if (derivation) print_derivation(std::cout, c.trace);
  if (!c.note.empty()) std::cerr << "note: " << c.note << '\n';
  if (!cert_path.empty()) write_json(cert_path, certificate_to_json(c));
  return kOk;
}

int emit_conversion(const TLinkConversion& conv, const std::string& trace_path, bool derivation) {
  std::cout << conv.spec.to_string() << '\n';
  if (derivation) print_derivation(std::cout, conv.trace);
  if (!trace_path.empty()) write_json(trace_path, trace_to_json(conv.trace));
  return kOk;
}

int cmd_verify(const std::string& path) {
  const json j = parse_json(read_file(path));
  const std::string format = j.is_object() ? j.value("format", std::string()) : std::string();
  Verdict v;
  if (format == kCertificateFormat)
    v = verify_certificate_document(certificate_from_json(j), verify_mode());
  else if (format == kTraceFormat)
    v = verify_document(trace_from_json(j), verify_mode());
  else
    throw ParseError("unrecognized file format '" + format + "'");
  std::cout << v.to_string() << '\n';
  return v.valid ? kOk : kFail;
}

int cmd_sweep(const SweepBounds& bounds, const std::string& format, bool alexander, unsigned threads) {
  SweepOptions opt;
  opt.verify = verify_mode();
  opt.verify_alexander = alexander;
  opt.threads = threads;
  const SweepReport rep = run_sweep(bounds, opt);
  if (format == "csv") {
    std::cout << "w,b,t,n,formula_index,pipeline_index,case,components,status\n";
    for (const auto& r : rep.records)
      std::cout << r.params.w << ',' << r.params.b << ',' << r.params.t << ',' << r.params.n << ','
                << r.formula_index << ',' << r.pipeline_index << ',' << case_name(r.case_tag) << ','
                << r.components << ",\"" << r.status << "\"\n";
  } else if (format == "json") {
    json j;
    j["bounds"] = {{"wmax", bounds.wmax}, {"tmax", bounds.tmax}, {"nmax", bounds.nmax}};
    json recs = json::array();
    for (const auto& r : rep.records)
      recs.push_back({{"w", r.params.w},
                      {"b", r.params.b},
                      {"t", r.params.t},
                      {"n", r.params.n},
                      {"formula_index", r.formula_index},
                      {"pipeline_index", r.pipeline_index},
                      {"case_tag", std::string(case_name(r.case_tag))},
                      {"components", r.components},
                      {"status", r.status}});
    j["records"] = std::move(recs);
    j["summary"] = {{"tuples", rep.records.size()}, {"agreeing", rep.agreeing()}, {"knots", rep.knots()}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("%3s %3s %3s %3s  %7s %8s  %-4s %5s  %s\n", "w", "b", "t", "n", "formula", "pipeline", "case",
                "comp", "certificate");
    for (const auto& r : rep.records)
      std::printf("%3d %3d %3d %3d  %7d %8d  %-4s %5d  %s\n", r.params.w, r.params.b, r.params.t, r.params.n,
                  r.formula_index, r.pipeline_index, std::string(case_name(r.case_tag)).c_str(), r.components,
                  r.status.c_str());
    std::printf("%zu tuples, %zu agree (%s), %zu knots\n", rep.records.size(), rep.agreeing(),
                rep.records.empty() ? "100%"
                                    : (std::to_string(100 * rep.agreeing() / rep.records.size()) + "%").c_str(),
                rep.knots());
  }
  return rep.all_agree() ? kOk : kFail;
}

int run(int argc, char** argv) {
  CLI::App app{"n-bridge braid index and T-link tools"};
  app.require_subcommand(1);

  ParamFlags index_flags;
  std::string cert_path;
  bool index_derivation = false;
  auto* index = app.add_subcommand("index", "braid index by formula, optionally with a certificate");
  index_flags.add(index);
  index->add_option("--emit-cert", cert_path, "write the certificate JSON here");
  index->add_flag("--derivation", index_derivation, "print the reduction trace");

  ParamFlags tlink_flags;
  std::string tlink_trace;
  bool tlink_derivation = false;
  auto* tlink = app.add_subcommand("tlink", "T-link form of an n-bridge braid");
  tlink_flags.add(tlink);
  tlink->add_option("--trace", tlink_trace, "write the conversion trace JSON here");
  tlink->add_flag("--derivation", tlink_derivation, "print the conversion trace");

  TwistedTorusParams tw;
  std::string twisted_trace;
  bool twisted_derivation = false;
  auto* twisted = app.add_subcommand("twisted", "T-link form of a twisted torus braid");
  twisted->add_option("--strands", tw.strands, "strand count")->required();
  twisted->add_option("--p", tw.power, "torus power")->required();
  twisted->add_option("--k", tw.width, "twisted strand count")->required();
  twisted->add_option("--q", tw.twists, "number of full twists")->required();
  twisted->add_option("--trace", twisted_trace, "write the conversion trace JSON here");
  twisted->add_flag("--derivation", twisted_derivation, "print the conversion trace");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check a trace or certificate file");
  verify->add_option("path", verify_path, "trace or certificate JSON")->required();

  SweepBounds bounds;
  std::string format = "text";
  bool sweep_alexander = false;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "formula vs pipeline over a parameter grid");
  sweep->add_option("--wmax", bounds.wmax, "largest w")->required();
  sweep->add_option("--tmax", bounds.tmax, "largest t")->required();
  sweep->add_option("--nmax", bounds.nmax, "largest n")->required();
  sweep->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  sweep->add_flag("--verify-alexander", sweep_alexander, "also compare Alexander polynomials on knots");
  sweep->add_option("--threads", threads, "worker threads, 0 for all cores");

  std::string word_a, word_b;
  auto* eq = app.add_subcommand("eq", "decide equality of two braid words");
  eq->add_option("a", word_a, "first word")->required();
  eq->add_option("b", word_b, "second word")->required();

  std::string nf_word;
  auto* nf = app.add_subcommand("nf", "Garside normal form of a braid word");
  nf->add_option("word", nf_word, "braid word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*index) return cmd_index(index_flags.p, cert_path, index_derivation);
    if (*tlink) return emit_conversion(nbridge_to_tlink(tlink_flags.p, verify_mode()), tlink_trace, tlink_derivation);
    if (*twisted) return emit_conversion(twisted_torus_to_tlink(tw, verify_mode()), twisted_trace, twisted_derivation);
    if (*verify) return cmd_verify(verify_path);
    if (*sweep) return cmd_sweep(bounds, format, sweep_alexander, threads);
    if (*eq) {
      const bool same = words_equal(BraidWord::parse(word_a), BraidWord::parse(word_b));
      std::cout << (same ? "equal" : "not equal") << '\n';
      return same ? kOk : kFail;
    }
    if (*nf) {
      const NormalForm f = normal_form(BraidWord::parse(nf_word));
      std::cout << f.to_string() << '\n';
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
