#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghom/cubical.hpp"
#include "ghom/int_linalg.hpp"

namespace ghom {

// Finitely supported integer combination of generators of one dimension.
// Zero coefficients are never stored.
template <class Key>
class Chain {
 public:
  Chain() = default;
  Chain(const Key& k, std::int64_t c = 1) { add(k, c); }

  void add(const Key& k, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second = arith::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::int64_t coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Chain& operator+=(const Chain& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    for (const auto& [k, c] : o.terms_) add(k, arith::neg(c));
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(std::int64_t s, const Chain& a) {
    Chain out;
    for (const auto& [k, c] : a.terms_) out.add(k, arith::mul(s, c));
    return out;
  }
  Chain operator-() const { return -1 * *this; }

  bool operator==(const Chain&) const = default;

 private:
  std::map<Key, std::int64_t> terms_;
};

using Chain0 = Chain<Vertex>;
using Chain1 = Chain<Simplex1>;
using Chain2 = Chain<Simplex2>;

Chain1 reduce_mod_degenerate(const Chain1& c);
Chain2 reduce_mod_degenerate(const Chain2& c);

// Signed face sum, degenerate faces dropped.
Chain1 boundary_2(const Simplex2& s);
Chain1 boundary_2(const Chain2& c);

// (a b c) -> c - a.
Chain0 boundary_1(const Simplex1& s);
Chain0 boundary_1(const Chain1& c);

std::string to_string(const Chain1& c);

// Nondegenerate 1-simplices of a graph in lexicographic order, with index
// lookup.
class Simplex1Basis {
 public:
  explicit Simplex1Basis(const Graph& g);

  std::size_t size() const { return simplices_.size(); }
  const Simplex1& at(std::size_t i) const { return simplices_.at(i); }
  const std::vector<Simplex1>& simplices() const { return simplices_; }
  // Position of a nondegenerate valid simplex, or npos.
  std::size_t index(const Simplex1& s) const;

  SparseVector coordinates(const Chain1& c) const;
  Chain1 chain(const BigSparseVector& v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Simplex1> simplices_;
};

struct ChainComplex {
  std::vector<Simplex1> basis1;
  std::vector<Simplex2> basis2;
  IntMatrix d1;  // rows: vertices 1..n, columns: basis1
  IntMatrix d2;  // rows: basis1, columns: basis2
};

// Full quotient complex in degrees 2 -> 1 -> 0. Throws
// EnumerationBudgetExceeded.
ChainComplex build_matrices(const Graph& g, std::uint64_t budget = kDefaultSimplexBudget);

// One "row col value" line per stored entry, 0-based, preceded by a
// "rows cols nonzeros" header line.
std::string dump_coordinates(const IntMatrix& m);

}  // namespace ghom
