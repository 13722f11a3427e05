#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "ghom/ghom.h"

namespace {

struct Common {
  std::string method = "reduced";
  std::string format = "text";
  int type = 1;
  uint64_t max_simplices = 0;
  int64_t cycle_cap = -1;
  bool strict = false;
  bool timings = false;
};

int emit(ghom_report* report, const std::string& format) {
  char* text = nullptr;
  if (ghom_report_render(report, format == "json" ? GHOM_FORMAT_JSON : GHOM_FORMAT_TEXT, &text) != GHOM_OK) {
    std::cerr << "error: " << ghom_last_error() << "\n";
    ghom_report_free(report);
    return 1;
  }
  std::fputs(text, stdout);
  ghom_string_free(text);
  int code = ghom_report_exit_code(report);
  ghom_report_free(report);
  return code;
}

int status_exit(ghom_status s) {
  std::cerr << "error: " << ghom_last_error() << "\n";
  return s == GHOM_ERR_BUDGET ? 2 : 1;
}

ghom_graph* load(const std::string& path, ghom_status& s) {
  ghom_graph* g = nullptr;
  s = ghom_graph_from_file(path.c_str(), &g);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubical singular H1 of reflexive graphs"};
  app.require_subcommand(1);

  ghom_options opt;
  ghom_options_init(&opt);
  Common c;
  c.max_simplices = opt.max_simplices;

  const std::map<std::string, ghom_method> methods{
      {"definitional", GHOM_METHOD_DEFINITIONAL}, {"reduced", GHOM_METHOD_REDUCED}, {"basis", GHOM_METHOD_BASIS}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-simplices", c.max_simplices, "budget for 2-simplex enumeration");
    sub->add_option("--cycle-cap", c.cycle_cap, "length bound for witness cycles, 0 for none");
    sub->add_option("--type", c.type, "cycle type for basis classes")->check(CLI::Range(1, 4));
    sub->add_flag("--strict", c.strict, "exit 3 when engines disagree");
    sub->add_flag("--timings", c.timings, "include wall-clock timings");
  };

  std::string file, walk;
  int which = 2;

  CLI::App* h1 = app.add_subcommand("h1", "first homology of one graph");
  h1->add_option("file", file, "graph file")->required();
  h1->add_option("--method", c.method, "definitional, reduced or basis")
      ->check(CLI::IsMember({"definitional", "reduced", "basis"}));
  add_common(h1);

  CLI::App* trivial = app.add_subcommand("check-trivial", "decide whether a closed walk bounds");
  trivial->add_option("file", file, "graph file")->required();
  trivial->add_option("walk", walk, "closed walk, e.g. 13576421 or 1,10,3,1")->required();
  add_common(trivial);

  uint64_t seed = opt.seed, count = opt.count;
  int nmax = opt.nmax;
  bool exhaustive = false;
  unsigned threads = 0;
  CLI::App* corpus = app.add_subcommand("corpus", "screen Hamiltonian graphs for torsion and rank agreement");
  corpus->add_option("--seed", seed, "random seed");
  corpus->add_option("--count", count, "number of random graphs");
  corpus->add_option("--nmax", nmax, "largest vertex count (n for --exhaustive)");
  corpus->add_flag("--exhaustive", exhaustive, "every chord subset of C_nmax");
  corpus->add_option("--threads", threads, "worker threads, 0 for all cores");
  add_common(corpus);

  CLI::App* dump = app.add_subcommand("dump", "boundary matrix as a coordinate list");
  dump->add_option("file", file, "graph file")->required();
  dump->add_option("--which", which, "1 or 2")->check(CLI::IsMember({1, 2}));
  dump->add_option("--max-simplices", c.max_simplices, "budget for 2-simplex enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  opt.method = methods.at(c.method);
  opt.type = c.type;
  opt.max_simplices = c.max_simplices;
  opt.cycle_cap = c.cycle_cap;
  opt.strict = c.strict;
  opt.timings = c.timings;
  opt.seed = seed;
  opt.count = count;
  opt.nmax = nmax;
  opt.exhaustive = exhaustive;
  opt.threads = threads;

  ghom_status s = GHOM_OK;
  ghom_report* report = nullptr;

  if (*corpus) {
    s = ghom_run_corpus(&opt, &report);
    return s == GHOM_OK ? emit(report, c.format) : status_exit(s);
  }

  ghom_graph* g = load(file, s);
  if (s != GHOM_OK) return status_exit(s);

  int code = 0;
  if (*h1) {
    s = ghom_run_h1(g, &opt, &report);
    code = s == GHOM_OK ? emit(report, c.format) : status_exit(s);
  } else if (*trivial) {
    s = ghom_run_check_trivial(g, walk.c_str(), &opt, &report);
    code = s == GHOM_OK ? emit(report, c.format) : status_exit(s);
  } else {
    char* text = nullptr;
    s = ghom_dump_boundary(g, which, c.max_simplices, &text);
    if (s == GHOM_OK) {
      std::fputs(text, stdout);
      ghom_string_free(text);
    } else {
      code = status_exit(s);
    }
  }
  ghom_graph_free(g);
  return code;
}
