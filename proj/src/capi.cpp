#include "ghom/ghom.h"

#include <cstring>
#include <new>
#include <string>

#include "ghom/errors.hpp"
#include "ghom/graph.hpp"
#include "ghom/homology.hpp"
#include "ghom/reduced.hpp"
#include "ghom/report.hpp"

struct ghom_graph {
  ghom::GraphDocument doc;
};

struct ghom_report {
  ghom::Report report;
};

namespace {

thread_local std::string last_error;

ghom_status fail(ghom_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
ghom_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ghom::EnumerationBudgetExceeded& e) {
    return fail(GHOM_ERR_BUDGET, e.what());
  } catch (const ghom::Error& e) {
    return fail(GHOM_ERR_INVALID, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GHOM_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GHOM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GHOM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ghom::Options to_options(const ghom_options* opt) {
  ghom_options defaults;
  ghom_options_init(&defaults);
  if (!opt) opt = &defaults;
  ghom::Options o;
  switch (opt->method) {
    case GHOM_METHOD_DEFINITIONAL: o.method = "definitional"; break;
    case GHOM_METHOD_REDUCED: o.method = "reduced"; break;
    case GHOM_METHOD_BASIS: o.method = "basis"; break;
    default: throw std::invalid_argument("unknown method");
  }
  o.type = opt->type;
  o.max_simplices = opt->max_simplices;
  if (opt->cycle_cap >= 0) o.cycle_cap = static_cast<std::size_t>(opt->cycle_cap);
  o.max_cycles = opt->max_cycles;
  o.seed = opt->seed;
  o.count = opt->count;
  o.nmax = opt->nmax;
  o.exhaustive = opt->exhaustive != 0;
  o.strict = opt->strict != 0;
  o.timings = opt->timings != 0;
  o.threads = opt->threads;
  return o;
}

}  // namespace

extern "C" {

void ghom_options_init(ghom_options* opt) {
  if (!opt) return;
  ghom::Options d;
  opt->method = GHOM_METHOD_REDUCED;
  opt->type = d.type;
  opt->max_simplices = d.max_simplices;
  opt->cycle_cap = -1;
  opt->max_cycles = d.max_cycles;
  opt->seed = d.seed;
  opt->count = d.count;
  opt->nmax = d.nmax;
  opt->exhaustive = 0;
  opt->strict = 0;
  opt->timings = 0;
  opt->threads = 0;
}

const char* ghom_last_error(void) { return last_error.c_str(); }

ghom_status ghom_graph_from_text(const char* text, ghom_graph** out) {
  if (!text || !out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new ghom_graph{ghom::parse_graph_document(text)};
    return GHOM_OK;
  });
}

ghom_status ghom_graph_from_file(const char* path, ghom_graph** out) {
  if (!path || !out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new ghom_graph{ghom::load_graph_document(path)};
    return GHOM_OK;
  });
}

void ghom_graph_free(ghom_graph* g) { delete g; }

int ghom_graph_vertex_count(const ghom_graph* g) { return g ? g->doc.graph.vertex_count() : 0; }

size_t ghom_graph_edge_count(const ghom_graph* g) { return g ? g->doc.graph.edge_count() : 0; }

ghom_status ghom_h1(const ghom_graph* g, ghom_method method, uint64_t max_simplices, size_t* rank,
                    int64_t* torsion, size_t torsion_cap, size_t* torsion_count) {
  if (!g || !rank) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    ghom::HomologyGroup h;
    if (method == GHOM_METHOD_DEFINITIONAL)
      h = ghom::h1_definitional(g->doc.graph, max_simplices);
    else if (method == GHOM_METHOD_REDUCED)
      h = ghom::h1_reduced(g->doc.graph);
    else
      return fail(GHOM_ERR_INVALID, "ghom_h1 supports the definitional and reduced methods");
    *rank = h.rank;
    if (torsion_count) *torsion_count = h.torsion.size();
    for (size_t i = 0; torsion && i < torsion_cap && i < h.torsion.size(); ++i)
      torsion[i] = h.torsion[i] <= INT64_MAX ? static_cast<int64_t>(h.torsion[i]) : 0;
    return GHOM_OK;
  });
}

ghom_status ghom_run_h1(const ghom_graph* g, const ghom_options* opt, ghom_report** out) {
  if (!g || !out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new ghom_report{ghom::run_h1(g->doc, to_options(opt))};
    return GHOM_OK;
  });
}

ghom_status ghom_run_check_trivial(const ghom_graph* g, const char* walk, const ghom_options* opt,
                                   ghom_report** out) {
  if (!g || !walk || !out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new ghom_report{ghom::run_check_trivial(g->doc, walk, to_options(opt))};
    return GHOM_OK;
  });
}

ghom_status ghom_run_corpus(const ghom_options* opt, ghom_report** out) {
  if (!out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new ghom_report{ghom::run_corpus(to_options(opt))};
    return GHOM_OK;
  });
}

ghom_status ghom_report_render(const ghom_report* r, ghom_format format, char** out) {
  if (!r || !out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = copy_string(format == GHOM_FORMAT_JSON ? ghom::render_json(r->report) : ghom::render_text(r->report));
    return GHOM_OK;
  });
}

int ghom_report_exit_code(const ghom_report* r) { return r ? r->report.exit_code : GHOM_ERR_INVALID; }

void ghom_report_free(ghom_report* r) { delete r; }

ghom_status ghom_dump_boundary(const ghom_graph* g, int which, uint64_t max_simplices, char** out) {
  if (!g || !out) return fail(GHOM_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = copy_string(ghom::dump_boundary(g->doc.graph, which, max_simplices));
    return GHOM_OK;
  });
}

void ghom_string_free(char* s) { std::free(s); }

}  // extern "C"
