#include "ghom/compare.hpp"

#include <random>

#include "ghom/errors.hpp"
#include "ghom/reduced.hpp"

namespace ghom {

BasisSummary summarize(const H1Basis& b) {
  BasisSummary s;
  s.type = b.type;
  s.rank_claim = b.rank_claim;
  s.includes_hamiltonian = b.includes_hamiltonian;
  s.filtered = b.filtered_trivial.size();
  s.nets = b.nets.size();
  s.independent = b.independent;
  s.spans = b.spans;
  return s;
}

OracleComparison compare_with_oracle(const Graph& g, const CompareOptions& opt,
                                     const std::optional<std::vector<Vertex>>& pinned) {
  OracleComparison out(g);
  out.reduced = h1_reduced(g);
  if (!out.reduced.torsion_free()) {
    out.torsion_found = true;
    out.discrepancies.push_back("reduced model has torsion: " + to_string(out.reduced));
  }

  std::uint64_t count = count_simplices_2(g);
  if (count > opt.budget) {
    out.definitional_note = std::to_string(count) + " 2-simplices exceed the budget of " + std::to_string(opt.budget);
  } else {
    out.definitional = h1_definitional(g, opt.budget);
    if (!out.definitional->torsion_free()) {
      out.torsion_found = true;
      out.discrepancies.push_back("definitional engine has torsion: " + to_string(*out.definitional));
    }
    if (!(*out.definitional == out.reduced)) {
      out.engines_agree = false;
      out.discrepancies.push_back("definitional " + to_string(*out.definitional) + " vs reduced " +
                                  to_string(out.reduced));
    }
  }

  if (pinned && is_hamiltonian_cycle(g, *pinned))
    out.hamiltonian = *pinned;
  else
    out.hamiltonian = find_hamiltonian_cycle(g);
  if (pinned && out.hamiltonian != pinned)
    out.basis_findings.push_back("pinned cycle is not Hamiltonian; searched for another");
  if (!out.hamiltonian) {
    out.basis_note = "graph is not Hamiltonian";
    return out;
  }
  try {
    CircleForm cf = to_circle_form(g, *out.hamiltonian);
    CycleCatalog cat(cf, opt.cycle_cap.value_or(default_cycle_cap(g.vertex_count())), opt.max_cycles);
    out.basis = summarize(h1_basis(cat, opt.type));
  } catch (const EnumerationBudgetExceeded& e) {
    out.basis_note = e.what();
    return out;
  }
  if (out.basis->rank_claim != out.reduced.rank) {
    out.basis_agrees = false;
    out.basis_findings.push_back("basis claims rank " + std::to_string(out.basis->rank_claim) + " vs reduced rank " +
                                 std::to_string(out.reduced.rank));
  }
  if (!out.basis->independent) out.basis_findings.push_back("basis classes are dependent");
  if (!out.basis->spans) out.basis_findings.push_back("basis classes do not span");
  return out;
}

namespace {

Graph rim_with_chords(int n, const std::vector<Edge>& diagonals, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  for (std::size_t k = 0; k < diagonals.size(); ++k)
    if (mask >> k & 1U) edges.push_back(diagonals[k]);
  return Graph(n, edges);
}

std::vector<Edge> cycle_diagonals(int n) {
  std::vector<Edge> out;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) out.emplace_back(a, b);
  return out;
}

}  // namespace

std::vector<CorpusGraph> random_corpus(int nmax, std::size_t count, std::uint64_t seed) {
  if (nmax < 4 || nmax > kCorpusMaxVertices)
    throw std::invalid_argument("nmax must lie in [4, " + std::to_string(kCorpusMaxVertices) + "]");
  // Raw engine output only: distribution objects differ between standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<CorpusGraph> out;
  out.reserve(count);
  const std::uint64_t span = static_cast<std::uint64_t>(nmax - 4 + 1);
  for (std::size_t id = 0; id < count; ++id) {
    int n = 4 + static_cast<int>(rng() % span);
    std::vector<Edge> diags = cycle_diagonals(n);
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < diags.size(); ++k)
      if (rng() >> 63) mask |= std::uint64_t{1} << k;
    out.push_back({id, rim_with_chords(n, diags, mask)});
  }
  return out;
}

std::vector<CorpusGraph> exhaustive_corpus(int n) {
  if (n < 3 || n > kCorpusMaxVertices) throw std::invalid_argument("n must lie in [3, " + std::to_string(kCorpusMaxVertices) + "]");
  std::vector<Edge> diags = cycle_diagonals(n);
  if (static_cast<int>(diags.size()) > kExhaustiveMaxChords)
    throw std::invalid_argument(std::to_string(diags.size()) + " chords is too many for exhaustive screening");
  std::vector<CorpusGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << diags.size()); ++mask)
    out.push_back({static_cast<std::size_t>(mask), rim_with_chords(n, diags, mask)});
  return out;
}

}  // namespace ghom
