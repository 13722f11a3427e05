#include "ghom/cubical.hpp"

#include <sstream>

namespace ghom {

Simplex2::Simplex2(std::initializer_list<std::initializer_list<Vertex>> rows) {
  if (rows.size() != 3) throw std::invalid_argument("a 2-simplex has three rows");
  int i = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) throw std::invalid_argument("a 2-simplex row has three cells");
    for (Vertex v : row) cells_[i++] = v;
  }
}

FaceIndex::FaceIndex(int j, int k) : j_(j), k_(k) {
  if (j < 1 || j > 2 || k < 0 || k > 1) throw std::out_of_range("face index out of range");
}

bool is_valid(const Graph& g, const Simplex1& s) {
  const int n = g.vertex_count();
  for (Vertex v : {s.a, s.b, s.c})
    if (v < 1 || v > n) return false;
  return g.related(s.a, s.b) && g.related(s.b, s.c);
}

bool is_valid(const Graph& g, const Simplex2& s) {
  const int n = g.vertex_count();
  for (Vertex v : s.cells())
    if (v < 1 || v > n) return false;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int dr = 0; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc <= 0) continue;
          int r2 = r + dr, c2 = c + dc;
          if (r2 > 2 || c2 < 0 || c2 > 2) continue;
          if (!g.related(s.at(r, c), s.at(r2, c2))) return false;
        }
  return true;
}

bool is_degenerate(const Simplex1& s) { return s.a == s.b && s.b == s.c; }

bool is_degenerate(const Simplex2& s) {
  bool rows_constant = true, cols_constant = true;
  for (int i = 0; i < 3; ++i) {
    rows_constant = rows_constant && s.at(i, 0) == s.at(i, 1) && s.at(i, 1) == s.at(i, 2);
    cols_constant = cols_constant && s.at(0, i) == s.at(1, i) && s.at(1, i) == s.at(2, i);
  }
  return rows_constant || cols_constant;
}

Simplex1 face(const Simplex2& s, FaceIndex idx) {
  if (idx.j() == 1) {
    // First coordinate pinned: a column, read with the second coordinate
    // increasing, i.e. bottom to top.
    int col = 2 * idx.k();
    return {s.at(2, col), s.at(1, col), s.at(0, col)};
  }
  int row = 2 - 2 * idx.k();
  return {s.at(row, 0), s.at(row, 1), s.at(row, 2)};
}

std::array<Simplex2, 4> rotations(const Simplex2& s) {
  auto m = [&](int r, int c) { return s.at(r, c); };
  Simplex2 r0 = s;
  Simplex2 r1({m(0, 2), m(1, 2), m(2, 2), m(0, 1), m(1, 1), m(2, 1), m(0, 0), m(1, 0), m(2, 0)});
  Simplex2 r2({m(2, 2), m(2, 1), m(2, 0), m(1, 2), m(1, 1), m(1, 0), m(0, 2), m(0, 1), m(0, 0)});
  Simplex2 r3({m(2, 0), m(1, 0), m(0, 0), m(2, 1), m(1, 1), m(0, 1), m(2, 2), m(1, 2), m(0, 2)});
  return {r0, r1, r2, r3};
}

std::vector<Simplex1> enumerate_simplices_1(const Graph& g) {
  std::vector<Simplex1> out;
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    for (Vertex b = 1; b <= g.vertex_count(); ++b) {
      if (!g.related(a, b)) continue;
      for (Vertex c = 1; c <= g.vertex_count(); ++c)
        if (g.related(b, c)) out.push_back({a, b, c});
    }
  return out;
}

std::uint64_t count_simplices_2(const Graph& g) {
  std::vector<Simplex1> rows = enumerate_simplices_1(g);
  auto compatible = [&](const Simplex1& top, const Simplex1& mid) {
    const Vertex t[3] = {top.a, top.b, top.c};
    const Vertex m[3] = {mid.a, mid.b, mid.c};
    for (int i = 0; i < 3; ++i)
      for (int j = std::max(0, i - 1); j <= std::min(2, i + 1); ++j)
        if (!g.related(t[i], m[j])) return false;
    return true;
  };
  std::uint64_t total = 0;
  for (const Simplex1& mid : rows) {
    std::uint64_t c = 0;
    for (const Simplex1& other : rows)
      if (compatible(other, mid)) ++c;
    total += c * c;
  }
  return total;
}

std::vector<Simplex2> enumerate_simplices_2(const Graph& g, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  // Earlier cells each cell must agree with, in row-major order.
  static const std::vector<std::vector<int>> kBefore = {
      {}, {0}, {1}, {0, 1}, {0, 1, 2, 3}, {1, 2, 4}, {3, 4}, {3, 4, 5, 6}, {4, 5, 7}};
  std::vector<Simplex2> out;
  std::array<Vertex, 9> cell{};
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 9) {
      if (out.size() == budget)
        throw EnumerationBudgetExceeded("more than " + std::to_string(budget) + " 2-simplices");
      out.emplace_back(cell);
      return;
    }
    std::uint64_t cand = g.all_mask();
    for (int p : kBefore[pos]) cand &= g.closed_mask(cell[p]);
    while (cand) {
      int i = std::countr_zero(cand);
      cand &= cand - 1;
      cell[pos] = static_cast<Vertex>(i + 1);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {
std::string join_labels(std::initializer_list<Vertex> vs, bool compact) {
  std::string out;
  bool first = true;
  for (Vertex v : vs) {
    if (!compact && !first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out;
}
}  // namespace

std::string to_string(const Simplex1& s) {
  bool compact = s.a < 10 && s.b < 10 && s.c < 10;
  return "(" + join_labels({s.a, s.b, s.c}, compact) + ")";
}

std::string to_string(const Simplex2& s) {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    if (r) os << '\n';
    os << '[' << s.at(r, 0) << ' ' << s.at(r, 1) << ' ' << s.at(r, 2) << ']';
  }
  return os.str();
}

}  // namespace ghom
