#include "ghom/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ghom/chain.hpp"
#include "ghom/cycle_rewrite.hpp"
#include "ghom/errors.hpp"
#include "ghom/reduced.hpp"

namespace ghom {

using json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  Stopwatch(std::vector<Timing>& sink, std::string phase)
      : sink_(sink), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    sink_.push_back({phase_, d.count()});
  }

 private:
  std::vector<Timing>& sink_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Vertex> source_walk(const CircleForm& cf, const PerfectCycle& p) {
  std::vector<Vertex> out;
  for (Vertex v : p.walk()) out.push_back(cf.original_label(v));
  return out;
}

Edge source_edge(const CircleForm& cf, const Edge& e) {
  return Edge(cf.original_label(e.lo()), cf.original_label(e.hi()));
}

std::vector<Edge> source_edges(const CircleForm& cf, const auto& edges) {
  std::vector<Edge> out;
  for (const Edge& e : edges) out.push_back(source_edge(cf, e));
  return out;
}

BasisClassReport class_report(const CircleForm& cf, const BasisEntry& e) {
  BasisClassReport r;
  r.hamiltonian = e.hamiltonian;
  if (e.chord) r.chord = source_edge(cf, *e.chord);
  r.type = e.type;
  r.walk = source_walk(cf, e.walk);
  return r;
}

BasisReport basis_report(const CircleForm& cf, const H1Basis& b) {
  BasisReport r;
  r.summary = summarize(b);
  for (const auto& e : b.classes) r.classes.push_back(class_report(cf, e));
  for (const auto& e : b.filtered_trivial) r.filtered.push_back(class_report(cf, e));
  for (const auto& d : b.nets) {
    NetReport n;
    n.chords = source_edges(cf, d.net.edges);
    for (Vertex v : d.subgraph.vertices) n.vertices.push_back(cf.original_label(v));
    std::sort(n.vertices.begin(), n.vertices.end());
    n.edges = source_edges(cf, d.subgraph.edges);
    std::sort(n.edges.begin(), n.edges.end());
    n.tree = source_edges(cf, d.spanning.tree_edges);
    n.chord_part = source_edges(cf, d.spanning.chord_part);
    n.cardinality = d.cardinality;
    r.nets.push_back(std::move(n));
  }
  return r;
}

CorpusEntry corpus_entry(std::size_t id, const OracleComparison& c) {
  CorpusEntry e;
  e.id = id;
  e.graph = graph_info(c.graph, c.hamiltonian);
  e.reduced = c.reduced;
  e.definitional = c.definitional;
  e.definitional_note = c.definitional_note;
  e.basis = c.basis;
  e.basis_note = c.basis_note;
  e.engines_agree = c.engines_agree;
  e.basis_agrees = c.basis_agrees;
  e.torsion = c.torsion_found;
  e.discrepancies = c.discrepancies;
  e.basis_findings = c.basis_findings;
  return e;
}

CompareOptions compare_options(const Options& opt) {
  CompareOptions c;
  c.budget = opt.max_simplices;
  c.cycle_cap = opt.cycle_cap;
  c.max_cycles = opt.max_cycles;
  c.type = opt.type;
  return c;
}

void finish(Report& r, const Options& opt) {
  if (!opt.timings) r.timings.clear();
  if (r.exit_code == kExitOk && opt.strict && !r.discrepancies.empty()) r.exit_code = kExitDiscrepancy;
}

}  // namespace

GraphInfo graph_info(const Graph& g, const std::optional<std::vector<Vertex>>& hamiltonian) {
  return {g.vertex_count(), g.edges(), hamiltonian};
}

Report error_report(std::string command, int exit_code, std::string message) {
  Report r;
  r.command = std::move(command);
  r.exit_code = exit_code;
  r.error = std::move(message);
  return r;
}

Report run_h1(const GraphDocument& doc, const Options& opt) {
  const Graph& g = doc.graph;
  Report r;
  r.command = "h1";
  r.method = opt.method;
  r.graph = graph_info(g, doc.pinned_cycle);
  try {
    if (opt.method == "definitional") {
      {
        Stopwatch sw(r.timings, "definitional");
        r.h1 = h1_definitional(g, opt.max_simplices);
      }
      Stopwatch sw(r.timings, "reduced");
      r.cross_check = h1_reduced(g);
      if (!(*r.cross_check == *r.h1))
        r.discrepancies.push_back("definitional " + to_string(*r.h1) + " vs reduced " + to_string(*r.cross_check));
    } else if (opt.method == "reduced") {
      {
        Stopwatch sw(r.timings, "reduced");
        r.h1 = h1_reduced(g);
      }
      if (opt.strict && count_simplices_2(g) <= opt.max_simplices) {
        Stopwatch sw(r.timings, "definitional");
        HomologyGroup d = h1_definitional(g, opt.max_simplices);
        if (!(d == *r.h1)) r.discrepancies.push_back("reduced " + to_string(*r.h1) + " vs definitional " + to_string(d));
      }
    } else if (opt.method == "basis") {
      std::optional<std::vector<Vertex>> cycle = doc.pinned_cycle;
      if (!cycle) cycle = find_hamiltonian_cycle(g);
      if (!cycle) return error_report("h1", kExitInvalid, "graph is not Hamiltonian");
      r.graph->hamiltonian = cycle;
      CircleForm cf = to_circle_form(g, *cycle);
      std::optional<CycleCatalog> cat;
      {
        Stopwatch sw(r.timings, "catalog");
        cat.emplace(cf, opt.cycle_cap.value_or(default_cycle_cap(g.vertex_count())), opt.max_cycles);
      }
      H1Basis b;
      {
        Stopwatch sw(r.timings, "basis");
        b = h1_basis(*cat, opt.type);
      }
      r.basis = basis_report(cf, b);
      r.h1 = HomologyGroup{b.rank_claim, {}};
      r.cross_check = h1_reduced(g);
      if (b.rank_claim != r.cross_check->rank)
        r.basis_findings.push_back("basis claims rank " + std::to_string(b.rank_claim) + " vs reduced " +
                                   to_string(*r.cross_check));
      if (!r.cross_check->torsion_free()) r.discrepancies.push_back("reduced model has torsion");
      if (!b.independent) r.basis_findings.push_back("basis classes are dependent");
      if (!b.spans) r.basis_findings.push_back("basis classes do not span");
    } else {
      return error_report("h1", kExitInvalid, "unknown method '" + opt.method + "'");
    }
  } catch (const EnumerationBudgetExceeded& e) {
    Report err = error_report("h1", kExitBudget, e.what());
    err.method = opt.method;
    err.graph = r.graph;
    return err;
  } catch (const std::invalid_argument& e) {
    return error_report("h1", kExitInvalid, e.what());
  } catch (const Error& e) {
    return error_report("h1", kExitInvalid, e.what());
  }
  finish(r, opt);
  return r;
}

Report run_check_trivial(const GraphDocument& doc, std::string_view walk_text, const Options& opt) {
  const Graph& g = doc.graph;
  Report r;
  r.command = "check-trivial";
  r.graph = graph_info(g, doc.pinned_cycle);
  try {
    PerfectCycle walk = parse_walk(walk_text, g.vertex_count());
    walk.validate(g);
    TrivialityReport t;
    t.walk = walk.walk();
    {
      Stopwatch sw(r.timings, "reduced");
      ReducedModel model(g, true);
      auto cert = model.certificate(to_edge_vector(walk));
      t.reduced = cert.has_value();
      if (cert)
        for (const auto& [idx, k] : *cert) t.reduced_certificate.push_back({model.triangles()[idx], k});
    }
    std::uint64_t count = count_simplices_2(g);
    if (count > opt.max_simplices) {
      t.definitional_note = std::to_string(count) + " 2-simplices exceed the budget of " +
                            std::to_string(opt.max_simplices);
    } else {
      Stopwatch sw(r.timings, "definitional");
      DefinitionalComplex cx(g, opt.max_simplices, true);
      auto cert = cx.certificate(walk.chain());
      t.definitional = cert.has_value();
      if (cert)
        for (const auto& [s, k] : cert->terms())
          t.definitional_certificate.push_back({std::vector<Vertex>(s.cells().begin(), s.cells().end()), k});
      if (*t.definitional != t.reduced)
        r.discrepancies.push_back(std::string("reduced says ") + (t.reduced ? "trivial" : "nontrivial") +
                                  ", definitional says " + (*t.definitional ? "trivial" : "nontrivial"));
    }
    r.triviality = std::move(t);
  } catch (const EnumerationBudgetExceeded& e) {
    return error_report("check-trivial", kExitBudget, e.what());
  } catch (const Error& e) {
    return error_report("check-trivial", kExitInvalid, e.what());
  } catch (const std::invalid_argument& e) {
    return error_report("check-trivial", kExitInvalid, e.what());
  }
  finish(r, opt);
  return r;
}

Report run_corpus(const Options& opt) {
  Report r;
  r.command = "corpus";
  std::vector<CorpusGraph> graphs;
  try {
    graphs = opt.exhaustive ? exhaustive_corpus(opt.nmax) : random_corpus(opt.nmax, opt.count, opt.seed);
  } catch (const std::invalid_argument& e) {
    return error_report("corpus", kExitInvalid, e.what());
  }
  CorpusSummary s;
  s.nmax = opt.nmax;
  s.requested = opt.exhaustive ? graphs.size() : opt.count;
  s.seed = opt.seed;
  s.exhaustive = opt.exhaustive;
  s.entries.resize(graphs.size());

  CompareOptions copt = compare_options(opt);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      std::vector<Vertex> rim(static_cast<std::size_t>(graphs[i].graph.vertex_count()));
      std::iota(rim.begin(), rim.end(), 1);
      s.entries[i] = corpus_entry(graphs[i].id, compare_with_oracle(graphs[i].graph, copt, rim));
    }
  };
  {
    Stopwatch sw(r.timings, "corpus");
    unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(graphs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
  }
  std::sort(s.entries.begin(), s.entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  s.graphs = s.entries.size();
  for (const CorpusEntry& e : s.entries) {
    s.torsion_graphs += e.torsion;
    s.definitional_checked += e.definitional.has_value();
    s.engine_agreements += e.definitional.has_value() && e.engines_agree;
    s.basis_checked += e.basis.has_value();
    s.basis_agreements += e.basis.has_value() && e.basis_agrees;
    for (const std::string& d : e.discrepancies) r.discrepancies.push_back("graph " + std::to_string(e.id) + ": " + d);
    for (const std::string& d : e.basis_findings)
      r.basis_findings.push_back("graph " + std::to_string(e.id) + ": " + d);
  }
  if (s.torsion_graphs > 0) r.exit_code = kExitDiscrepancy;
  r.corpus = std::move(s);
  finish(r, opt);
  return r;
}

std::string dump_boundary(const Graph& g, int which, std::uint64_t budget) {
  if (which != 1 && which != 2) throw std::invalid_argument("boundary index must be 1 or 2");
  ChainComplex cx = build_matrices(g, budget);
  return dump_coordinates(which == 1 ? cx.d1 : cx.d2);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json edge_json(const Edge& e) { return json::array({e.lo(), e.hi()}); }

Edge edge_from(const json& j) { return Edge(j.at(0).get<Vertex>(), j.at(1).get<Vertex>()); }

json edges_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back(edge_json(e));
  return a;
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const json& e : j) out.push_back(edge_from(e));
  return out;
}

json group_json(const HomologyGroup& h) {
  json t = json::array();
  for (const Integer& k : h.torsion) t.push_back(k.str());
  return {{"rank", h.rank}, {"torsion", t}, {"group", to_string(h)}};
}

HomologyGroup group_from(const json& j) {
  HomologyGroup h;
  h.rank = j.at("rank").get<std::size_t>();
  for (const json& k : j.at("torsion")) h.torsion.emplace_back(k.get<std::string>());
  return h;
}

template <class T, class F>
json opt_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

template <class F>
auto opt_from(const json& j, const char* key, F&& f) -> std::optional<decltype(f(j))> {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

json graph_json(const GraphInfo& g) {
  return {{"vertices", g.n},
          {"edges", edges_json(g.edges)},
          {"hamiltonian", opt_json(g.hamiltonian, [](const auto& c) { return json(c); })}};
}

GraphInfo graph_from(const json& j) {
  GraphInfo g;
  g.n = j.at("vertices").get<int>();
  g.edges = edges_from(j.at("edges"));
  g.hamiltonian = opt_from(j, "hamiltonian", [](const json& c) { return c.get<std::vector<Vertex>>(); });
  return g;
}

json summary_json(const BasisSummary& b) {
  return {{"type", b.type},           {"rank_claim", b.rank_claim}, {"includes_hamiltonian", b.includes_hamiltonian},
          {"filtered", b.filtered},   {"nets", b.nets},             {"independent", b.independent},
          {"spans", b.spans}};
}

BasisSummary summary_from(const json& j) {
  BasisSummary b;
  b.type = j.at("type").get<int>();
  b.rank_claim = j.at("rank_claim").get<std::size_t>();
  b.includes_hamiltonian = j.at("includes_hamiltonian").get<bool>();
  b.filtered = j.at("filtered").get<std::size_t>();
  b.nets = j.at("nets").get<std::size_t>();
  b.independent = j.at("independent").get<bool>();
  b.spans = j.at("spans").get<bool>();
  return b;
}

json class_json(const BasisClassReport& c) {
  return {{"hamiltonian", c.hamiltonian},
          {"chord", opt_json(c.chord, edge_json)},
          {"type", c.type},
          {"walk", c.walk}};
}

BasisClassReport class_from(const json& j) {
  BasisClassReport c;
  c.hamiltonian = j.at("hamiltonian").get<bool>();
  c.chord = opt_from(j, "chord", edge_from);
  c.type = j.at("type").get<int>();
  c.walk = j.at("walk").get<std::vector<Vertex>>();
  return c;
}

json cardinality_json(const CardinalityReport& c) {
  return {{"skipped", c.skipped}, {"note", c.note},   {"formula", c.formula},
          {"actual", c.actual},   {"rim_acyclic", c.rim_acyclic}, {"match", c.match}};
}

CardinalityReport cardinality_from(const json& j) {
  CardinalityReport c;
  c.skipped = j.at("skipped").get<bool>();
  c.note = j.at("note").get<std::string>();
  c.formula = j.at("formula").get<long long>();
  c.actual = j.at("actual").get<std::size_t>();
  c.rim_acyclic = j.at("rim_acyclic").get<bool>();
  c.match = j.at("match").get<bool>();
  return c;
}

json basis_json(const BasisReport& b) {
  json classes = json::array(), filtered = json::array(), nets = json::array();
  for (const auto& c : b.classes) classes.push_back(class_json(c));
  for (const auto& c : b.filtered) filtered.push_back(class_json(c));
  for (const auto& n : b.nets)
    nets.push_back({{"chords", edges_json(n.chords)},
                    {"vertices", n.vertices},
                    {"edges", edges_json(n.edges)},
                    {"tree", edges_json(n.tree)},
                    {"chord_part", edges_json(n.chord_part)},
                    {"cardinality", cardinality_json(n.cardinality)}});
  return {{"summary", summary_json(b.summary)}, {"classes", classes}, {"filtered", filtered}, {"nets", nets}};
}

BasisReport basis_from(const json& j) {
  BasisReport b;
  b.summary = summary_from(j.at("summary"));
  for (const json& c : j.at("classes")) b.classes.push_back(class_from(c));
  for (const json& c : j.at("filtered")) b.filtered.push_back(class_from(c));
  for (const json& n : j.at("nets")) {
    NetReport r;
    r.chords = edges_from(n.at("chords"));
    r.vertices = n.at("vertices").get<std::vector<Vertex>>();
    r.edges = edges_from(n.at("edges"));
    r.tree = edges_from(n.at("tree"));
    r.chord_part = edges_from(n.at("chord_part"));
    r.cardinality = cardinality_from(n.at("cardinality"));
    b.nets.push_back(std::move(r));
  }
  return b;
}

json triviality_json(const TrivialityReport& t) {
  json rc = json::array(), dc = json::array();
  for (const auto& term : t.reduced_certificate)
    rc.push_back({{"triangle", term.triangle}, {"coefficient", term.coefficient.str()}});
  for (const auto& term : t.definitional_certificate)
    dc.push_back({{"simplex", term.cells}, {"coefficient", term.coefficient}});
  return {{"walk", t.walk},
          {"reduced", t.reduced},
          {"reduced_certificate", rc},
          {"definitional", opt_json(t.definitional, [](bool b) { return json(b); })},
          {"definitional_note", t.definitional_note},
          {"definitional_certificate", dc}};
}

TrivialityReport triviality_from(const json& j) {
  TrivialityReport t;
  t.walk = j.at("walk").get<std::vector<Vertex>>();
  t.reduced = j.at("reduced").get<bool>();
  for (const json& term : j.at("reduced_certificate"))
    t.reduced_certificate.push_back(
        {term.at("triangle").get<std::vector<Vertex>>(), Integer(term.at("coefficient").get<std::string>())});
  t.definitional = opt_from(j, "definitional", [](const json& b) { return b.get<bool>(); });
  t.definitional_note = j.at("definitional_note").get<std::string>();
  for (const json& term : j.at("definitional_certificate"))
    t.definitional_certificate.push_back(
        {term.at("simplex").get<std::vector<Vertex>>(), term.at("coefficient").get<std::int64_t>()});
  return t;
}

json entry_json(const CorpusEntry& e) {
  return {{"id", e.id},
          {"graph", graph_json(e.graph)},
          {"reduced", group_json(e.reduced)},
          {"definitional", opt_json(e.definitional, group_json)},
          {"definitional_note", e.definitional_note},
          {"basis", opt_json(e.basis, summary_json)},
          {"basis_note", e.basis_note},
          {"engines_agree", e.engines_agree},
          {"basis_agrees", e.basis_agrees},
          {"torsion", e.torsion},
          {"discrepancies", e.discrepancies},
          {"basis_findings", e.basis_findings}};
}

CorpusEntry entry_from(const json& j) {
  CorpusEntry e;
  e.id = j.at("id").get<std::size_t>();
  e.graph = graph_from(j.at("graph"));
  e.reduced = group_from(j.at("reduced"));
  e.definitional = opt_from(j, "definitional", group_from);
  e.definitional_note = j.at("definitional_note").get<std::string>();
  e.basis = opt_from(j, "basis", summary_from);
  e.basis_note = j.at("basis_note").get<std::string>();
  e.engines_agree = j.at("engines_agree").get<bool>();
  e.basis_agrees = j.at("basis_agrees").get<bool>();
  e.torsion = j.at("torsion").get<bool>();
  e.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
  e.basis_findings = j.at("basis_findings").get<std::vector<std::string>>();
  return e;
}

json corpus_json(const CorpusSummary& s) {
  json entries = json::array();
  for (const auto& e : s.entries) entries.push_back(entry_json(e));
  return {{"nmax", s.nmax},
          {"requested", s.requested},
          {"seed", s.seed},
          {"exhaustive", s.exhaustive},
          {"graphs", s.graphs},
          {"torsion_graphs", s.torsion_graphs},
          {"definitional_checked", s.definitional_checked},
          {"engine_agreements", s.engine_agreements},
          {"basis_checked", s.basis_checked},
          {"basis_agreements", s.basis_agreements},
          {"entries", entries}};
}

CorpusSummary corpus_from(const json& j) {
  CorpusSummary s;
  s.nmax = j.at("nmax").get<int>();
  s.requested = j.at("requested").get<std::size_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.exhaustive = j.at("exhaustive").get<bool>();
  s.graphs = j.at("graphs").get<std::size_t>();
  s.torsion_graphs = j.at("torsion_graphs").get<std::size_t>();
  s.definitional_checked = j.at("definitional_checked").get<std::size_t>();
  s.engine_agreements = j.at("engine_agreements").get<std::size_t>();
  s.basis_checked = j.at("basis_checked").get<std::size_t>();
  s.basis_agreements = j.at("basis_agreements").get<std::size_t>();
  for (const json& e : j.at("entries")) s.entries.push_back(entry_from(e));
  return s;
}

}  // namespace

std::string render_json(const Report& r) {
  json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["exit_code"] = r.exit_code;
  if (!r.error.empty()) j["error"] = r.error;
  if (r.graph) j["graph"] = graph_json(*r.graph);
  if (!r.method.empty()) j["method"] = r.method;
  if (r.h1) j["h1"] = group_json(*r.h1);
  if (r.cross_check) j["cross_check"] = group_json(*r.cross_check);
  if (r.basis) j["basis"] = basis_json(*r.basis);
  if (r.triviality) j["triviality"] = triviality_json(*r.triviality);
  if (r.corpus) j["corpus"] = corpus_json(*r.corpus);
  j["discrepancies"] = r.discrepancies;
  j["basis_findings"] = r.basis_findings;
  if (!r.timings.empty()) {
    json t = json::array();
    for (const Timing& x : r.timings) t.push_back({{"phase", x.phase}, {"seconds", x.seconds}});
    j["timings"] = t;
  }
  return j.dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
  try {
    json j = json::parse(text);
    Report r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != kReportSchema) throw ParseError("unsupported report schema " + std::to_string(r.schema));
    r.command = j.at("command").get<std::string>();
    r.exit_code = j.at("exit_code").get<int>();
    r.error = j.value("error", "");
    r.graph = opt_from(j, "graph", graph_from);
    r.method = j.value("method", "");
    r.h1 = opt_from(j, "h1", group_from);
    r.cross_check = opt_from(j, "cross_check", group_from);
    r.basis = opt_from(j, "basis", basis_from);
    r.triviality = opt_from(j, "triviality", triviality_from);
    r.corpus = opt_from(j, "corpus", corpus_from);
    r.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
    r.basis_findings = j.at("basis_findings").get<std::vector<std::string>>();
    if (j.contains("timings"))
      for (const json& t : j.at("timings")) r.timings.push_back({t.at("phase").get<std::string>(), t.at("seconds").get<double>()});
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string walk_text(const std::vector<Vertex>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::string edges_text(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? " " : "") + to_string(es[i]);
  return out.empty() ? "-" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string class_text(const BasisClassReport& c) {
  std::string head = c.hamiltonian ? "hamiltonian" : "chord " + to_string(*c.chord) + " type " + std::to_string(c.type);
  return head + ": " + walk_text(c.walk);
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  if (r.graph) {
    os << "graph: " << r.graph->n << " vertices, " << r.graph->edges.size() << " edges\n";
    if (r.graph->hamiltonian) os << "hamiltonian cycle: " << walk_text(*r.graph->hamiltonian) << "\n";
  }
  if (!r.method.empty()) os << "method: " << r.method << "\n";
  if (r.h1) {
    os << "H1: " << to_string(*r.h1) << " (rank " << r.h1->rank << ", torsion [";
    for (std::size_t i = 0; i < r.h1->torsion.size(); ++i) os << (i ? ", " : "") << r.h1->torsion[i];
    os << "])\n";
  }
  if (r.cross_check) os << "reduced cross-check: " << to_string(*r.cross_check) << "\n";
  if (r.basis) {
    const BasisReport& b = *r.basis;
    os << "basis type " << b.summary.type << ": rank claim " << b.summary.rank_claim << ", independent "
       << yes_no(b.summary.independent) << ", spans " << yes_no(b.summary.spans) << "\n";
    for (const auto& c : b.classes) os << "  class " << class_text(c) << "\n";
    for (const auto& c : b.filtered) os << "  filtered (trivial) " << class_text(c) << "\n";
    for (std::size_t i = 0; i < b.nets.size(); ++i) {
      const NetReport& n = b.nets[i];
      os << "  net " << i + 1 << ": " << edges_text(n.chords) << "\n";
      os << "    s(G): " << n.vertices.size() << " vertices, " << n.edges.size() << " edges\n";
      os << "    spanning chords: " << edges_text(n.chord_part) << "\n";
      const CardinalityReport& c = n.cardinality;
      if (c.skipped)
        os << "    cardinality: skipped (" << c.note << ")\n";
      else
        os << "    cardinality: formula " << c.formula << ", actual " << c.actual << ", "
           << (c.match ? "match" : "mismatch") << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    }
  }
  if (r.triviality) {
    const TrivialityReport& t = *r.triviality;
    os << "walk: " << walk_text(t.walk) << "\n";
    os << "reduced: " << (t.reduced ? "trivial" : "nontrivial") << "\n";
    for (const auto& term : t.reduced_certificate)
      os << "  " << term.coefficient << " * [" << walk_text(term.triangle) << "]\n";
    if (t.definitional)
      os << "definitional: "
         << (*t.definitional ? "trivial (" + std::to_string(t.definitional_certificate.size()) + " simplices in certificate)"
                             : std::string("nontrivial"))
         << "\n";
    else
      os << "definitional: skipped (" << t.definitional_note << ")\n";
  }
  if (r.corpus) {
    const CorpusSummary& s = *r.corpus;
    os << "corpus: " << s.graphs << " graphs" << (s.exhaustive ? " (exhaustive, n = " : " (nmax ")
       << s.nmax << (s.exhaustive ? "" : ", seed " + std::to_string(s.seed)) << ")\n";
    os << "torsion graphs: " << s.torsion_graphs << "\n";
    os << "definitional vs reduced: " << s.engine_agreements << "/" << s.definitional_checked << " agree\n";
    os << "basis rank claim vs reduced: " << s.basis_agreements << "/" << s.basis_checked << " agree\n";
  }
  for (const std::string& d : r.discrepancies) os << "discrepancy: " << d << "\n";
  for (const std::string& d : r.basis_findings) os << "basis finding: " << d << "\n";
  for (const Timing& t : r.timings) os << "time " << t.phase << ": " << t.seconds << " s\n";
  os << "exit code: " << r.exit_code << "\n";
  return os.str();
}

}  // namespace ghom
