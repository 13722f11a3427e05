#include "ghom/homology.hpp"

#include <unordered_set>

#include "ghom/errors.hpp"

namespace ghom {

std::string to_string(const HomologyGroup& h) {
  std::string out;
  if (h.rank == 1)
    out = "Z";
  else if (h.rank > 1)
    out = "Z^" + std::to_string(h.rank);
  for (const Integer& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + to_string(t);
  }
  return out.empty() ? "0" : out;
}

HomologyGroup homology_from_quotient(const QuotientStructure& q) { return {q.rank, q.torsion}; }

namespace {

struct VectorHash {
  std::size_t operator()(const SparseVector& v) const {
    std::size_t h = v.size();
    for (const auto& [i, x] : v) {
      h ^= std::hash<std::size_t>()(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= std::hash<std::int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// v and -v span the same lattice; keep the one with a positive first entry.
void canonical_sign(SparseVector& v) {
  if (!v.empty() && v.front().second < 0)
    for (auto& e : v) e.second = -e.second;
}

std::vector<BigSparseVector> cycle_basis(const Graph& g, const Simplex1Basis& basis) {
  IntMatrix d1(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Simplex1& s : basis.simplices()) {
    SparseVector col;
    if (s.a != s.c) {
      col.emplace_back(static_cast<std::size_t>(s.a - 1), -1);
      col.emplace_back(static_cast<std::size_t>(s.c - 1), 1);
    }
    d1.append_column(std::move(col));
  }
  return integer_kernel(d1);
}

}  // namespace

struct DefinitionalComplex::Impl {
  Graph graph;
  Simplex1Basis basis;
  Lattice image;
  std::uint64_t simplices = 0;
  std::vector<Simplex2> reps;  // per generator id, when tracking
  bool tracking;

  Impl(const Graph& g, bool track) : graph(g), basis(g), image(basis.size(), track), tracking(track) {}
};

DefinitionalComplex::DefinitionalComplex(const Graph& g, std::uint64_t budget, bool track)
    : impl_(std::make_unique<Impl>(g, track)) {
  std::uint64_t total = count_simplices_2(g);
  if (total > budget)
    throw EnumerationBudgetExceeded(std::to_string(total) + " 2-simplices exceed the budget of " +
                                    std::to_string(budget));
  impl_->simplices = total;
  std::unordered_set<SparseVector, VectorHash> seen;
  for_each_boundary_ring(g, budget, [&](const Simplex2& rep, std::uint64_t) {
    // Degenerate matrices have zero boundary, so only the coordinates matter.
    SparseVector v = impl_->basis.coordinates(boundary_2(rep));
    if (v.empty()) return;
    canonical_sign(v);
    if (!seen.insert(v).second) return;
    impl_->image.insert(v);
    if (impl_->tracking) impl_->reps.push_back(rep);
  });
}

DefinitionalComplex::~DefinitionalComplex() = default;
DefinitionalComplex::DefinitionalComplex(DefinitionalComplex&&) noexcept = default;
DefinitionalComplex& DefinitionalComplex::operator=(DefinitionalComplex&&) noexcept = default;

const Graph& DefinitionalComplex::graph() const { return impl_->graph; }
const Simplex1Basis& DefinitionalComplex::basis() const { return impl_->basis; }
std::uint64_t DefinitionalComplex::simplex_count() const { return impl_->simplices; }
std::size_t DefinitionalComplex::distinct_boundaries() const { return impl_->image.generator_count(); }
std::size_t DefinitionalComplex::boundary_rank() const { return impl_->image.rank(); }

HomologyGroup DefinitionalComplex::h1() const {
  auto kernel = cycle_basis(impl_->graph, impl_->basis);
  return homology_from_quotient(quotient_invariants(impl_->basis.size(), kernel, impl_->image.basis()));
}

bool DefinitionalComplex::is_cycle(const Chain1& c) const { return boundary_1(c).is_zero(); }

bool DefinitionalComplex::is_trivial(const Chain1& c) const {
  if (!is_cycle(c)) throw NotACycle("chain " + to_string(c) + " has nonzero boundary");
  return impl_->image.contains(impl_->basis.coordinates(c));
}

std::optional<Chain2> DefinitionalComplex::certificate(const Chain1& c) const {
  if (!impl_->tracking) throw std::logic_error("complex was built without certificate tracking");
  if (!is_cycle(c)) throw NotACycle("chain " + to_string(c) + " has nonzero boundary");
  auto cert = impl_->image.certificate(to_big(impl_->basis.coordinates(c)));
  if (!cert) return std::nullopt;
  Chain2 out;
  for (const auto& [id, k] : *cert) {
    // Generators were sign-normalized; recover the sign from the boundary.
    const Simplex2& s = impl_->reps.at(id);
    SparseVector v = impl_->basis.coordinates(boundary_2(s));
    std::int64_t sign = v.front().second < 0 ? -1 : 1;
    out.add(s, arith::mul(sign, arith::from_integer<std::int64_t>(k)));
  }
  if (boundary_2(out) != reduce_mod_degenerate(c)) throw std::logic_error("certificate failed verification");
  return out;
}

HomologyGroup h1_definitional(const Graph& g, std::uint64_t budget) { return DefinitionalComplex(g, budget).h1(); }

bool is_trivial_definitional(const Graph& g, const Chain1& c, std::uint64_t budget) {
  return DefinitionalComplex(g, budget).is_trivial(c);
}

HomologyGroup h1_from_complex(const ChainComplex& cx) {
  auto kernel = integer_kernel(cx.d1);
  Lattice image(cx.basis1.size());
  for (std::size_t j = 0; j < cx.d2.cols(); ++j) image.insert(cx.d2.column(j));
  return homology_from_quotient(quotient_invariants(cx.basis1.size(), kernel, image.basis()));
}

}  // namespace ghom
