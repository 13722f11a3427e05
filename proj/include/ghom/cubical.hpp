#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ghom/errors.hpp"
#include "ghom/graph.hpp"

namespace ghom {

inline constexpr std::uint64_t kDefaultSimplexBudget = 5'000'000;

// Morphism from the 3-vertex path I_1 = {0,1,2} to G, written (a b c).
struct Simplex1 {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  auto operator<=>(const Simplex1&) const = default;
};

// Morphism from I_2 = I_1 x I_1 to G, written as a 3x3 matrix whose first row
// is the top row. The point (r, s) of I_2 sits in row 2 - s, column r.
class Simplex2 {
 public:
  Simplex2() = default;
  explicit Simplex2(const std::array<Vertex, 9>& cells) : cells_(cells) {}
  Simplex2(std::initializer_list<std::initializer_list<Vertex>> rows);

  // 0-based row (0 = top) and column.
  Vertex at(int row, int col) const { return cells_[row * 3 + col]; }
  const std::array<Vertex, 9>& cells() const { return cells_; }

  auto operator<=>(const Simplex2&) const = default;

 private:
  std::array<Vertex, 9> cells_{};
};

// Face selector: coordinate j in {1,2} pinned to 2k, k in {0,1}.
class FaceIndex {
 public:
  FaceIndex(int j, int k);
  int j() const { return j_; }
  int k() const { return k_; }
  // (-1)^(j+k)
  int sign() const { return (j_ + k_) % 2 == 0 ? 1 : -1; }

 private:
  int j_;
  int k_;
};

bool is_valid(const Graph& g, const Simplex1& s);
bool is_valid(const Graph& g, const Simplex2& s);

// Constant maps are the only degenerate 1-simplices.
bool is_degenerate(const Simplex1& s);
// Degenerate iff every row is constant or every column is constant.
bool is_degenerate(const Simplex2& s);

Simplex1 face(const Simplex2& s, FaceIndex idx);

// s followed by its counterclockwise quarter, half and three-quarter turns.
std::array<Simplex2, 4> rotations(const Simplex2& s);

// All (a,b,c) with b in N[a], c in N[b], lexicographic, degenerate included.
std::vector<Simplex1> enumerate_simplices_1(const Graph& g);

// Exact count of valid 3x3 matrices, computed by a row transfer sum.
std::uint64_t count_simplices_2(const Graph& g);

// All valid matrices in lexicographic (row-major) order. Throws
// EnumerationBudgetExceeded if there are more than `budget`.
std::vector<Simplex2> enumerate_simplices_2(const Graph& g,
                                            std::uint64_t budget = kDefaultSimplexBudget);

std::string to_string(const Simplex1& s);
std::string to_string(const Simplex2& s);

// Visits every boundary ring (the eight outer cells) that admits at least one
// centre, passing a representative matrix with the smallest valid centre and
// the number of valid centres. The boundary of a matrix never reads its
// centre, so this covers every matrix's boundary once per ring. Throws
// EnumerationBudgetExceeded once the running matrix count passes `budget`.
template <class Visitor>
void for_each_boundary_ring(const Graph& g, std::uint64_t budget, Visitor&& visit) {
  const int n = g.vertex_count();
  std::array<Vertex, 9> cell{};
  std::uint64_t total = 0;
  auto bits = [](std::uint64_t m, auto&& f) {
    while (m) {
      int i = std::countr_zero(m);
      m &= m - 1;
      f(static_cast<Vertex>(i + 1));
    }
  };
  auto nb = [&](Vertex v) { return g.closed_mask(v); };
  // Cells in the order 0,1,2,3,5,6,7,8; the centre mask tracks common closed
  // neighbours of all placed cells.
  std::uint64_t all = g.all_mask();
  bits(all, [&](Vertex v0) {
    cell[0] = v0;
    std::uint64_t c0 = nb(v0);
    bits(nb(v0), [&](Vertex v1) {
      cell[1] = v1;
      std::uint64_t c1 = c0 & nb(v1);
      if (!c1) return;
      bits(nb(v1), [&](Vertex v2) {
        cell[2] = v2;
        std::uint64_t c2 = c1 & nb(v2);
        if (!c2) return;
        bits(nb(v0) & nb(v1), [&](Vertex v3) {
          cell[3] = v3;
          std::uint64_t c3 = c2 & nb(v3);
          if (!c3) return;
          bits(nb(v1) & nb(v2), [&](Vertex v5) {
            cell[5] = v5;
            std::uint64_t c5 = c3 & nb(v5);
            if (!c5) return;
            bits(nb(v3), [&](Vertex v6) {
              cell[6] = v6;
              std::uint64_t c6 = c5 & nb(v6);
              if (!c6) return;
              bits(nb(v6) & nb(v3) & nb(v5), [&](Vertex v7) {
                cell[7] = v7;
                std::uint64_t c7 = c6 & nb(v7);
                if (!c7) return;
                bits(nb(v7) & nb(v5), [&](Vertex v8) {
                  cell[8] = v8;
                  std::uint64_t c8 = c7 & nb(v8);
                  if (!c8) return;
                  auto centres = static_cast<std::uint64_t>(std::popcount(c8));
                  total += centres;
                  if (total > budget)
                    throw EnumerationBudgetExceeded(
                        "more than " + std::to_string(budget) + " 2-simplices on a " +
                        std::to_string(n) + "-vertex graph");
                  cell[4] = static_cast<Vertex>(std::countr_zero(c8) + 1);
                  visit(Simplex2(cell), centres);
                });
              });
            });
          });
        });
      });
    });
  });
}

}  // namespace ghom
