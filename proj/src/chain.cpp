#include "ghom/chain.hpp"

#include <algorithm>
#include <sstream>

namespace ghom {

namespace {
template <class Key>
Chain<Key> drop_degenerate(const Chain<Key>& c) {
  Chain<Key> out;
  for (const auto& [k, v] : c.terms())
    if (!is_degenerate(k)) out.add(k, v);
  return out;
}
}  // namespace

Chain1 reduce_mod_degenerate(const Chain1& c) { return drop_degenerate(c); }
Chain2 reduce_mod_degenerate(const Chain2& c) { return drop_degenerate(c); }

Chain1 boundary_2(const Simplex2& s) {
  Chain1 out;
  for (int j = 1; j <= 2; ++j)
    for (int k = 0; k <= 1; ++k) {
      FaceIndex idx(j, k);
      Simplex1 f = face(s, idx);
      if (!is_degenerate(f)) out.add(f, idx.sign());
    }
  return out;
}

Chain1 boundary_2(const Chain2& c) {
  Chain1 out;
  for (const auto& [s, v] : c.terms())
    if (!is_degenerate(s)) out += v * boundary_2(s);
  return out;
}

Chain0 boundary_1(const Simplex1& s) {
  Chain0 out;
  out.add(s.c, 1);
  out.add(s.a, -1);
  return out;
}

Chain0 boundary_1(const Chain1& c) {
  Chain0 out;
  for (const auto& [s, v] : c.terms())
    if (!is_degenerate(s)) out += v * boundary_1(s);
  return out;
}

std::string to_string(const Chain1& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, v] : c.terms()) {
    if (v < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    std::int64_t m = v < 0 ? -v : v;
    if (m != 1) out += std::to_string(m);
    out += to_string(s);
    first = false;
  }
  return out;
}

Simplex1Basis::Simplex1Basis(const Graph& g) {
  for (const Simplex1& s : enumerate_simplices_1(g))
    if (!is_degenerate(s)) simplices_.push_back(s);
}

std::size_t Simplex1Basis::index(const Simplex1& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || *it != s) return npos;
  return static_cast<std::size_t>(it - simplices_.begin());
}

SparseVector Simplex1Basis::coordinates(const Chain1& c) const {
  SparseVector out;
  for (const auto& [s, v] : c.terms()) {
    if (is_degenerate(s)) continue;
    std::size_t i = index(s);
    if (i == npos) throw std::invalid_argument("simplex " + to_string(s) + " is not valid on this graph");
    out.emplace_back(i, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain1 Simplex1Basis::chain(const BigSparseVector& v) const {
  Chain1 out;
  for (const auto& [i, x] : v) out.add(at(i), arith::from_integer<std::int64_t>(x));
  return out;
}

ChainComplex build_matrices(const Graph& g, std::uint64_t budget) {
  ChainComplex cx;
  Simplex1Basis b1(g);
  cx.basis1 = b1.simplices();
  cx.d1 = IntMatrix(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Simplex1& s : cx.basis1) {
    SparseVector col;
    Chain0 d = boundary_1(s);
    for (const auto& [v, c] : d.terms()) col.emplace_back(static_cast<std::size_t>(v - 1), c);
    cx.d1.append_column(std::move(col));
  }
  cx.d2 = IntMatrix(cx.basis1.size(), 0);
  for (const Simplex2& s : enumerate_simplices_2(g, budget)) {
    if (is_degenerate(s)) continue;
    cx.basis2.push_back(s);
    cx.d2.append_column(b1.coordinates(boundary_2(s)));
  }
  return cx;
}

std::string dump_coordinates(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) os << r << ' ' << c << ' ' << v << '\n';
  return os.str();
}

}  // namespace ghom
