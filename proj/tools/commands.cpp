#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "grw/error.hpp"
#include "grw/parallel.hpp"
#include "grw/spec.hpp"
#include "report.hpp"

namespace grw::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_spec(const std::string& path) {
  if (path.empty()) throw InputError("missing spec file");
  if (path == "-") {
    std::stringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void apply_workers(const Options& o, const RingSpecDocument* doc);

RingSpecDocument load_doc(const std::string& path, const Options& o) {
  ParseOptions po;
  po.ring_cap = o.ring_cap;
  auto doc = parse_spec(read_spec(path), po);
  apply_workers(o, &doc);
  return doc;
}

std::size_t ideal_cap(const Options& o, const RingSpecDocument* doc) {
  if (o.ideal_cap) return *o.ideal_cap;
  if (doc)
    if (auto c = doc->option_size("ideal-cap")) return *c;
  return kDefaultIdealCap;
}

void apply_workers(const Options& o, const RingSpecDocument* doc) {
  if (o.workers) {
    set_num_workers(*o.workers);
  } else if (doc) {
    if (auto w = doc->option_size("workers")) set_num_workers(static_cast<int>(*w));
  }
}

// Splits on commas outside brackets and parentheses.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Elem> parse_degrees(const std::string& list, const FiniteGroup& g) {
  std::vector<Elem> out;
  for (const auto& tok : split_top(list)) {
    std::optional<Elem> hit;
    for (Elem a = 0; a < g.order(); ++a)
      if (g.name(a) == tok) hit = a;
    if (!hit) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty() || v >= g.order())
        throw InputError("unknown degree '" + tok + "'");
      hit = static_cast<Elem>(v);
    }
    out.push_back(*hit);
  }
  return out;
}

std::string element_tuple(const FiniteRing& r, const std::vector<Elem>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + r.name(xs[i]);
  return s + ")";
}

std::string gens_text(const FiniteRing& r, const std::vector<Elem>& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + r.name(gens[i]);
  return s + ">";
}

std::string ideal_text(const GradedRing& gr, const IdealSubset& p) {
  return gens_text(gr.ring(), p.graded() ? homogeneous_generators(gr, p) : p.additive_generators());
}

std::string witness_text(const GradedRing& gr, const Verdict& v) {
  if (!v.fails()) return v.truth == Truth::Skipped ? v.note : "";
  if (!v.elements.empty()) return element_tuple(gr.ring(), v.elements);
  static const char* labels[] = {"A", "B", "C"};
  std::string s;
  const bool pair = v.ideals.size() == 2;
  for (std::size_t i = 0; i < v.ideals.size(); ++i) {
    if (i) s += " ";
    s += std::string(pair ? (i ? "J" : "I") : labels[std::min<std::size_t>(i, 2)]) + "=" +
         ideal_text(gr, v.ideals[i]);
  }
  return s;
}

// Adds the witness to the report and returns its id, or null when none.
Json add_witness(Json& report, const RingContext& ctx, const std::string& ideal,
                 const IdealSubset& p, const std::string& predicate, const Verdict& v,
                 bool& unverified) {
  if (!v.fails()) return nullptr;
  const auto& gr = ctx.graded();
  auto& ws = report["witnesses"];
  const std::string id = "w" + std::to_string(ws.size() + 1);
  Json w;
  w["id"] = id;
  w["ideal"] = ideal;
  w["predicate"] = predicate;
  w["degree"] = v.degree ? Json(*v.degree) : Json(nullptr);
  w["elements"] = Json::array();
  for (Elem a : v.elements) w["elements"].push_back(element_json(gr, a));
  w["ideals"] = Json::array();
  for (const auto& i : v.ideals) w["ideals"].push_back(ideal_json(gr, i));
  const bool ok = verify_witness(ctx, p, predicate, v);
  unverified |= !ok;
  w["verified"] = ok;
  ws.push_back(std::move(w));
  return id;
}

void write_report(const Options& o, const Json& report) {
  if (!o.report) return;
  std::ofstream f(*o.report, std::ios::binary);
  if (!f) throw InputError("cannot write " + *o.report);
  f << report.dump(2) << '\n';
}

Json doc_ideals(const RingSpecDocument& doc) {
  Json out = Json::array();
  for (const auto& n : doc.ideals) {
    Json j;
    j["name"] = n.name;
    j.update(ideal_json(*doc.ring, n.ideal));
    out.push_back(std::move(j));
  }
  return out;
}

void ring_header(std::ostream& out, const RingSpecDocument& doc) {
  const auto& gr = *doc.ring;
  const auto& r = gr.ring();
  out << "ring     " << doc.expr->text << "\n";
  out << "order    " << r.order() << (r.is_commutative() ? ", commutative" : ", non-commutative")
      << (r.unity() ? ", unity " + r.name(*r.unity()) : std::string(", no unity")) << "\n";
  out << "grading  " << (doc.grading.empty() ? "natural" : doc.grading) << " over a group of order "
      << gr.group().order() << ", component sizes";
  for (Elem g = 0; g < gr.group().order(); ++g)
    out << " " << gr.group().name(g) << ":" << gr.component(g).count();
  out << "\n";
}

Outcome cmd_validate(const std::string& spec, const Options& o, std::ostream& out) {
  const auto doc = load_doc(spec, o);
  const auto& gr = *doc.ring;
  Outcome res;
  res.report = report_skeleton("validate");
  res.report["ring"] = ring_json(doc.expr->text, gr);
  res.report["grading"] = grading_json(doc.grading, gr);
  res.report["ideals"] = doc_ideals(doc);

  const auto rv = validate_ring(gr.ring());
  const auto gv = validate_grading(gr.ring(), gr.grading());
  Json checks;
  checks["ring_axioms"] = rv.report.ok;
  checks["grading_axioms"] = gv.ok;
  res.report["validation"] = checks;

  ring_header(out, doc);
  for (const auto& n : doc.ideals)
    out << "ideal    " << n.name << " = " << ideal_text(gr, n.ideal) << ", " << n.ideal.size()
        << " elements, " << to_string(n.ideal.side())
        << (n.ideal.graded() ? ", graded" : ", not graded") << "\n";
  if (!rv.report.ok) out << "ring axiom failure: " << rv.report.violation << "\n";
  if (!gv.ok) out << "grading axiom failure: " << gv.violation << "\n";
  const bool ok = rv.report.ok && gv.ok;
  out << (ok ? "valid" : "invalid") << "\n";
  res.exit_code = ok ? kOk : kViolations;
  return res;
}

Sidedness parse_side(const std::string& s) {
  if (s == "two-sided") return Sidedness::TwoSided;
  if (s == "left") return Sidedness::Left;
  if (s == "right") return Sidedness::Right;
  throw InputError("unknown side '" + s + "'");
}

Outcome cmd_ideals(const std::string& spec, const Options& o, std::ostream& out) {
  const auto doc = load_doc(spec, o);
  const auto& gr = *doc.ring;
  const auto side = parse_side(o.side);
  const auto all = enumerate_graded_ideals(gr, side, ideal_cap(o, &doc));
  Outcome res;
  res.report = report_skeleton("ideals");
  res.report["ring"] = ring_json(doc.expr->text, gr);
  res.report["grading"] = grading_json(doc.grading, gr);
  ring_header(out, doc);
  out << all.size() << " graded " << to_string(side) << " ideals\n";
  out << std::setw(5) << "#" << std::setw(8) << "size" << "  generators\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    Json j;
    j["name"] = "I" + std::to_string(i);
    j.update(ideal_json(gr, all[i]));
    res.report["ideals"].push_back(std::move(j));
    out << std::setw(5) << i << std::setw(8) << all[i].size() << "  " << ideal_text(gr, all[i])
        << "\n";
  }
  return res;
}

Outcome cmd_classify(const std::string& spec, const Options& o, std::ostream& out) {
  const auto doc = load_doc(spec, o);
  const auto& gr = *doc.ring;
  RingContext ctx(doc.ring, ideal_cap(o, &doc));
  std::vector<Elem> degrees;
  if (o.degrees) degrees = parse_degrees(*o.degrees, gr.group());
  else if (doc.options.count("degrees")) degrees = parse_degrees(doc.options.at("degrees"), gr.group());

  std::vector<std::pair<std::string, IdealSubset>> targets;
  for (const auto& n : doc.ideals) targets.emplace_back(n.name, n.ideal);
  Outcome res;
  res.report = report_skeleton("classify");
  res.report["ring"] = ring_json(doc.expr->text, gr);
  res.report["grading"] = grading_json(doc.grading, gr);
  if (targets.empty()) {
    // Every proper graded two-sided ideal.
    const auto& lat = ctx.lattice(Sidedness::TwoSided);
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (!lat[i].is_whole()) targets.emplace_back("I" + std::to_string(i), lat[i]);
  }
  for (const auto& [name, p] : targets) {
    Json j;
    j["name"] = name;
    j.update(ideal_json(gr, p));
    res.report["ideals"].push_back(std::move(j));
  }

  ring_header(out, doc);
  bool unverified = false;
  for (const auto& [name, p] : targets) {
    const auto rep = classify_ideal(ctx, p, degrees);
    Json c;
    c["ideal"] = name;
    c["proper"] = rep.proper;
    c["graded"] = rep.graded;
    c["predicates"] = Json::array();
    out << "\nideal " << name << " = " << ideal_text(gr, p) << " (" << p.size() << (p.size() == 1 ? " element" : " elements")
        << (rep.graded ? "" : ", not graded") << (rep.proper ? "" : ", not proper") << ")\n";
    out << "  " << std::left << std::setw(38) << "predicate" << std::setw(9) << "value"
        << "witness\n";
    for (const auto& pr : rep.predicates) {
      Json pj;
      pj["name"] = pr.name;
      pj["value"] = truth_name(pr.verdict.truth);
      pj["note"] = pr.verdict.note;
      pj["witness"] = add_witness(res.report, ctx, name, p, pr.name, pr.verdict, unverified);
      c["predicates"].push_back(std::move(pj));
      out << "  " << std::setw(38) << pr.name << std::setw(9) << truth_name(pr.verdict.truth)
          << witness_text(gr, pr.verdict) << "\n";
    }
    c["degrees"] = Json::array();
    for (const auto& d : rep.degrees) {
      Json dj;
      dj["degree"] = d.degree;
      dj["degree_name"] = gr.group().name(d.degree);
      dj["applicable"] = d.applicable;
      const std::pair<const char*, const Verdict*> parts[] = {{"g-weakly-2-absorbing", &d.weakly},
                                                               {"g-2-absorbing", &d.plain}};
      for (const auto& [pname, v] : parts) {
        Json vj;
        vj["value"] = truth_name(v->truth);
        vj["note"] = v->note;
        vj["witness"] = add_witness(res.report, ctx, name, p, pname, *v, unverified);
        dj[pname] = std::move(vj);
        const std::string label = std::string(pname).replace(0, 1, gr.group().name(d.degree));
        out << "  " << std::setw(38) << label << std::setw(9) << truth_name(v->truth)
            << witness_text(gr, *v) << "\n";
      }
      dj["triple_zeros"] = d.triple_zeros;
      if (d.applicable)
        out << "  " << std::setw(38) << (gr.group().name(d.degree) + "-triple-zeros")
            << d.triple_zeros << "\n";
      c["degrees"].push_back(std::move(dj));
    }
    out << std::right;
    res.report["classifications"].push_back(std::move(c));
  }
  if (unverified) out << "\nwitness re-verification failed\n";
  res.exit_code = unverified ? kViolations : kOk;
  return res;
}

Corpus load(const Options& o) {
  if (o.corpus == "default") return default_corpus();
  if (!std::filesystem::is_directory(o.corpus))
    throw InputError("corpus must be 'default' or a directory: " + o.corpus);
  ParseOptions po;
  po.ring_cap = o.ring_cap;
  return load_corpus(o.corpus, po);
}

Json corpus_json(const Corpus& c) {
  Json j = Json::array();
  for (const auto& e : c) j.push_back(e.label);
  return j;
}

Outcome cmd_theorems(const Options& o, std::ostream& out) {
  const auto corpus = load(o);
  TheoremOptions to;
  to.ideal_cap = ideal_cap(o, nullptr);
  const auto results = run_all_properties(corpus, to);
  Outcome res;
  res.report = report_skeleton("theorems");
  res.report["corpus"] = corpus_json(corpus);
  std::size_t violations = 0, unverified = 0;
  out << corpus.size() << " rings\n";
  out << std::left << std::setw(6) << "id" << std::right << std::setw(10) << "instances"
      << std::setw(12) << "violations" << std::setw(9) << "skipped" << "  statement\n";
  for (const auto& r : results) {
    Json pj;
    pj["id"] = r.id;
    pj["statement"] = r.statement;
    pj["instances"] = r.instances;
    pj["vacuous"] = r.vacuous();
    pj["violations"] = r.violations.size();
    pj["skipped"] = Json::array();
    for (const auto& s : r.skipped) pj["skipped"].push_back(skip_json(s));
    res.report["properties"].push_back(std::move(pj));
    for (const auto& f : r.violations) {
      Json w = finding_json(f);
      w["property"] = r.id;
      unverified += !f.verified;
      res.report["witnesses"].push_back(std::move(w));
    }
    violations += r.violations.size();
    out << std::left << std::setw(6) << r.id << std::right << std::setw(10) << r.instances
        << std::setw(12) << r.violations.size() << std::setw(9) << r.skipped.size() << "  "
        << r.statement << (r.vacuous() ? "  [vacuous]" : "") << "\n";
  }
  for (const auto& r : results)
    for (const auto& f : r.violations)
      out << r.id << " violation in " << f.ring << ": " << f.detail << "\n";
  out << results.size() << " properties, " << violations << " violations\n";
  if (unverified) out << unverified << " violations did not re-verify\n";
  res.exit_code = violations ? kViolations : kOk;
  return res;
}

Outcome cmd_search_q1(const Options& o, std::ostream& out) {
  const auto corpus = load(o);
  TheoremOptions to;
  to.ideal_cap = ideal_cap(o, nullptr);
  const auto q = search_question1(corpus, to);
  Outcome res;
  res.report = report_skeleton("search-q1");
  res.report["corpus"] = corpus_json(corpus);
  Json c;
  c["rings"] = q.rings;
  c["qualifying_ideals"] = q.qualifying_ideals;
  c["examined"] = q.examined;
  c["hypothesis_hits"] = q.hypothesis_hits;
  c["counterexamples"] = q.counterexamples.size();
  c["partial"] = q.partial();
  c["skipped"] = Json::array();
  for (const auto& s : q.skipped) c["skipped"].push_back(skip_json(s));
  res.report["question1"] = c;
  bool unverified = false;
  for (const auto& f : q.counterexamples) {
    res.report["witnesses"].push_back(finding_json(f));
    unverified |= !f.verified;
  }
  out << "rings              " << q.rings << "\n"
      << "qualifying ideals  " << q.qualifying_ideals << "\n"
      << "tuples examined    " << q.examined << "\n"
      << "hypothesis hits    " << q.hypothesis_hits << "\n"
      << "counterexamples    " << q.counterexamples.size() << "\n";
  for (const auto& f : q.counterexamples)
    out << "  " << f.ring << ": " << f.detail << (f.verified ? "" : " (NOT re-verified)") << "\n";
  for (const auto& s : q.skipped) out << "  skipped " << s.ring << ": " << s.reason << "\n";
  if (q.counterexamples.empty())
    out << (q.partial() ? "partial exhaustion certificate\n" : "exhaustion certificate\n");
  res.exit_code = unverified ? kViolations : kOk;
  return res;
}

Outcome cmd_census(const Options& o, std::ostream& out) {
  const auto corpus = load(o);
  TheoremOptions to;
  to.ideal_cap = ideal_cap(o, nullptr);
  const auto c = run_census(corpus, to);
  Outcome res;
  res.report = report_skeleton("census");
  res.report["corpus"] = corpus_json(corpus);
  Json rows = Json::array();
  out << std::right << std::setw(6) << "order" << std::setw(7) << "ideals" << std::setw(7)
      << "prime" << std::setw(7) << "wprime" << std::setw(6) << "2abs" << std::setw(7) << "w2abs"
      << std::setw(6) << "sw" << std::setw(8) << "w-not-2" << std::setw(9) << "tzeros"
      << std::setw(7) << "allSW" << "  ring\n";
  for (const auto& r : c.rows) {
    Json j;
    j["ring"] = r.ring;
    j["order"] = r.order;
    j["commutative"] = r.commutative;
    j["unital"] = r.unital;
    j["graded_ideals"] = r.graded_ideals;
    j["prime"] = r.prime;
    j["weakly_prime"] = r.weakly_prime;
    j["two_absorbing"] = r.two_absorbing;
    j["weakly_two_absorbing"] = r.weakly_two_absorbing;
    j["strongly_weakly"] = r.strongly_weakly;
    j["weakly_not_two_absorbing"] = r.weakly_not_two_absorbing;
    j["triple_zeros"] = r.triple_zeros;
    j["all_strongly_weakly"] = r.all_strongly_weakly;
    rows.push_back(std::move(j));
    out << std::setw(6) << r.order << std::setw(7) << r.graded_ideals << std::setw(7) << r.prime
        << std::setw(7) << r.weakly_prime << std::setw(6) << r.two_absorbing << std::setw(7)
        << r.weakly_two_absorbing << std::setw(6) << r.strongly_weakly << std::setw(8)
        << r.weakly_not_two_absorbing << std::setw(9) << r.triple_zeros << std::setw(7)
        << (r.all_strongly_weakly ? "yes" : "no") << "  " << r.ring << "\n";
  }
  res.report["census"] = std::move(rows);
  res.report["skipped"] = Json::array();
  for (const auto& s : c.skipped) {
    res.report["skipped"].push_back(skip_json(s));
    out << "skipped " << s.ring << ": " << s.reason << "\n";
  }
  return res;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"validate", "ideals",    "classify",
                                             "theorems", "search-q1", "census"};
  return c;
}

Outcome run(const std::string& command, const std::string& spec, const Options& opts,
            std::ostream& out, std::ostream& err) {
  const int saved_workers = num_workers();
  Outcome res;
  try {
    if (opts.workers && *opts.workers < 1) throw InputError("--workers must be at least 1");
    // A spec's own worker option applies once it is parsed.
    apply_workers(opts, nullptr);
    if (command == "validate") res = cmd_validate(spec, opts, out);
    else if (command == "ideals") res = cmd_ideals(spec, opts, out);
    else if (command == "classify") res = cmd_classify(spec, opts, out);
    else if (command == "theorems") res = cmd_theorems(opts, out);
    else if (command == "search-q1") res = cmd_search_q1(opts, out);
    else if (command == "census") res = cmd_census(opts, out);
    else throw InputError("unknown command '" + command + "'");
    write_report(opts, res.report);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    res = Outcome{kInputError, {}};
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    res = Outcome{kInputError, {}};
  }
  set_num_workers(saved_workers);
  return res;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded weakly 2-absorbing ideals in finite rings"};
  app.require_subcommand(1);
  Options o;
  std::string spec;
  std::optional<int> workers;
  std::optional<std::size_t> icap, rcap;
  std::optional<std::string> degrees, report;

  auto common = [&](CLI::App* s) {
    s->add_option("--report", report, "write the JSON report to this path");
    s->add_option("--workers", workers, "worker threads");
    s->add_option("--ideal-cap", icap, "maximum number of enumerated ideals");
  };
  auto with_spec = [&](CLI::App* s) {
    s->add_option("spec", spec, "ring-spec file, or - for standard input")->required();
    s->add_option("--ring-cap", rcap, "maximum carrier size");
  };
  auto with_corpus = [&](CLI::App* s) {
    s->add_option("--corpus", o.corpus, "default, or a directory of *.spec files");
    s->add_option("--ring-cap", rcap, "maximum carrier size for corpus files");
  };
  auto* v = app.add_subcommand("validate", "check ring and grading axioms");
  common(v);
  with_spec(v);
  auto* id = app.add_subcommand("ideals", "list graded ideals");
  common(id);
  with_spec(id);
  id->add_option("--side", o.side, "two-sided, left or right");
  auto* cl = app.add_subcommand("classify", "classify the named ideals");
  common(cl);
  with_spec(cl);
  cl->add_option("--degrees", degrees, "comma list of degrees for the g-variants");
  for (const char* name : {"theorems", "search-q1", "census"}) {
    auto* s = app.add_subcommand(name, "");
    common(s);
    with_corpus(s);
  }
  app.get_subcommand("theorems")->description("run the property suite over a corpus");
  app.get_subcommand("search-q1")->description("search for an ideal-wise triple counterexample");
  app.get_subcommand("census")->description("per-ring counts over a corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  o.report = report;
  o.workers = workers;
  o.ideal_cap = icap;
  o.ring_cap = rcap;
  o.degrees = degrees;
  const auto* sub = app.get_subcommands().front();
  return run(sub->get_name(), spec, o, out, err).exit_code;
}

}  // namespace grw::cli
