#pragma once

// Incremental Hermite-form lattice over a sparse row basis.
//
// Rows have distinct leading columns and a positive leading entry. Entries of
// a row in another row's pivot column are kept in [0, pivot). Every update
// computes its result into a temporary before committing, so when checked
// arithmetic throws arith::Overflow the object is still consistent: the span
// of rows() plus pending() equals the span of everything inserted so far.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "ghom/integer.hpp"

namespace ghom::detail {

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;  // sorted by column, no zeros

template <class T>
using Combo = std::map<std::size_t, T>;  // generator id -> coefficient

template <class T>
SparseRow<T> axpy(const SparseRow<T>& x, const T& a, const SparseRow<T>& y) {
  // x + a*y
  SparseRow<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, arith::mul(a, y[j].second));
      ++j;
    } else {
      T v = arith::add(x[i].second, arith::mul(a, y[j].second));
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
SparseRow<T> lincomb(const T& a, const SparseRow<T>& x, const T& b, const SparseRow<T>& y) {
  SparseRow<T> ax;
  ax.reserve(x.size());
  for (const auto& [c, v] : x) ax.emplace_back(c, arith::mul(a, v));
  return axpy(ax, b, y);
}

template <class T>
Combo<T> combo_axpy(const Combo<T>& x, const T& a, const Combo<T>& y) {
  Combo<T> out = x;
  for (const auto& [id, v] : y) {
    T nv = arith::add(out[id], arith::mul(a, v));
    if (nv == 0)
      out.erase(id);
    else
      out[id] = std::move(nv);
  }
  return out;
}

template <class T>
Combo<T> combo_lincomb(const T& a, const Combo<T>& x, const T& b, const Combo<T>& y) {
  Combo<T> ax;
  for (const auto& [id, v] : x)
    if (a != 0) ax.emplace(id, arith::mul(a, v));
  return combo_axpy(ax, b, y);
}

template <class T>
T entry_at(const SparseRow<T>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return T(0);
  return it->second;
}

template <class T>
class HermiteLattice {
 public:
  using value_type = T;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Row {
    SparseRow<T> v;
    Combo<T> combo;
    std::size_t lead() const { return v.front().first; }
    const T& pivot() const { return v.front().second; }
  };

  struct Work {
    SparseRow<T> v;
    Combo<T> combo;
  };

  // Result of reducing a vector against the basis.
  struct Reduction {
    SparseRow<T> residual;
    std::vector<std::pair<std::size_t, T>> coords;  // (row index, multiplier)
    Combo<T> combo;                                 // generator combination subtracted
  };

  HermiteLattice(std::size_t dim, bool track) : dim_(dim), track_(track), pivot_row_(dim, npos) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool tracking() const { return track_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Work& pending() const { return pending_; }
  std::size_t generator_count() const { return generators_; }

  // Adds a generator; returns true when the lattice grew.
  bool insert(SparseRow<T> v) {
    for (const auto& e : v)
      if (e.first >= dim_) throw std::out_of_range("lattice vector index out of range");
    Work w;
    w.v = std::move(v);
    if (track_) w.combo.emplace(generators_, T(1));
    ++generators_;
    pending_ = std::move(w);
    grew_ = false;
    return drain();
  }

  // Continues inserting whatever is pending. Returns true when the current
  // insertion grew the lattice.
  bool drain() {
    while (!pending_.v.empty()) {
      reduce_in_place(pending_, 0, npos);
      if (pending_.v.empty()) break;
      grew_ = true;
      const std::size_t c = pending_.v.front().first;
      const std::size_t r = pivot_row_[c];
      if (r == npos) {
        Row row;
        if (pending_.v.front().second < 0) {
          row.v = lincomb(T(-1), pending_.v, T(0), SparseRow<T>{});
          row.combo = combo_lincomb(T(-1), pending_.combo, T(0), Combo<T>{});
        } else {
          row.v = pending_.v;
          row.combo = pending_.combo;
        }
        rows_.push_back(std::move(row));
        pivot_row_[c] = rows_.size() - 1;
        pending_ = Work{};
        fix_column(c, rows_.size() - 1);
      } else {
        // Non-divisible remainder under an existing pivot: gcd step.
        const T d = rows_[r].pivot();
        const T t = pending_.v.front().second;
        auto [g, x, y] = arith::ext_gcd(d, t);
        T dg = d / g, tg = t / g;
        Row merged;
        merged.v = lincomb(x, rows_[r].v, y, pending_.v);
        Work rest;
        rest.v = lincomb(dg, pending_.v, arith::neg(tg), rows_[r].v);
        if (track_) {
          merged.combo = combo_lincomb(x, rows_[r].combo, y, pending_.combo);
          rest.combo = combo_lincomb(dg, pending_.combo, arith::neg(tg), rows_[r].combo);
        }
        rows_[r] = std::move(merged);
        pending_ = std::move(rest);
        reduce_row_tail(r);
        fix_column(c, r);
      }
    }
    return grew_;
  }

  Reduction reduce(const SparseRow<T>& v) const {
    Work w{v, {}};
    Reduction out;
    reduce_in_place(w, 0, npos, &out.coords);
    out.residual = std::move(w.v);
    if (track_)
      for (const auto& [r, q] : out.coords) out.combo = combo_axpy(out.combo, q, rows_[r].combo);
    return out;
  }

  // Re-establishes reduced off-pivot entries on every row.
  void normalize() {
    for (std::size_t r = 0; r < rows_.size(); ++r) reduce_row_tail(r);
  }

  template <class U>
  HermiteLattice<U> convert() const {
    HermiteLattice<U> out(dim_, track_);
    out.generators_ = generators_;
    out.grew_ = grew_;
    out.pivot_row_ = pivot_row_;
    auto conv_row = [](const SparseRow<T>& v) {
      SparseRow<U> o;
      for (const auto& [c, x] : v) o.emplace_back(c, arith::from_integer<U>(arith::to_integer(x)));
      return o;
    };
    auto conv_combo = [](const Combo<T>& m) {
      Combo<U> o;
      for (const auto& [c, x] : m) o.emplace(c, arith::from_integer<U>(arith::to_integer(x)));
      return o;
    };
    for (const Row& row : rows_) out.rows_.push_back({conv_row(row.v), conv_combo(row.combo)});
    out.pending_ = {conv_row(pending_.v), conv_combo(pending_.combo)};
    return out;
  }

 private:
  template <class>
  friend class HermiteLattice;

  // Reduces w's entries at pivot columns, in increasing column order, skipping
  // the row `skip`, starting at column `from_col`.
  void reduce_in_place(Work& w, std::size_t from_col, std::size_t skip,
                       std::vector<std::pair<std::size_t, T>>* coords = nullptr) const {
    std::size_t i = 0;
    while (i < w.v.size() && w.v[i].first < from_col) ++i;
    while (i < w.v.size()) {
      const std::size_t c = w.v[i].first;
      const std::size_t r = pivot_row_[c];
      if (r != npos && r != skip) {
        const Row& row = rows_[r];
        T q = arith::floor_div(w.v[i].second, row.pivot());
        if (q != 0) {
          T mq = arith::neg(q);
          SparseRow<T> nv = axpy(w.v, mq, row.v);
          Combo<T> nc;
          if (track_ && !row.combo.empty()) nc = combo_axpy(w.combo, mq, row.combo);
          w.v = std::move(nv);
          if (track_ && !row.combo.empty()) w.combo = std::move(nc);
          if (coords) coords->emplace_back(r, q);
        }
      }
      // Move past column c; entries before it are untouched by the update.
      i = static_cast<std::size_t>(
          std::upper_bound(w.v.begin(), w.v.end(), c,
                           [](std::size_t col, const auto& e) { return col < e.first; }) -
          w.v.begin());
    }
  }

  void reduce_row_tail(std::size_t r) {
    Work w{rows_[r].v, rows_[r].combo};
    reduce_in_place(w, rows_[r].lead() + 1, r);
    rows_[r].v = std::move(w.v);
    rows_[r].combo = std::move(w.combo);
  }

  // After row `pr` becomes the pivot row of column c, reduce every other row's
  // entry in column c into [0, pivot).
  void fix_column(std::size_t c, std::size_t pr) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pr || rows_[r].lead() >= c) continue;
      T x = entry_at(rows_[r].v, c);
      if (x == 0) continue;
      T q = arith::floor_div(x, rows_[pr].pivot());
      if (q == 0) continue;
      T mq = arith::neg(q);
      SparseRow<T> nv = axpy(rows_[r].v, mq, rows_[pr].v);
      Combo<T> nc;
      if (track_) nc = combo_axpy(rows_[r].combo, mq, rows_[pr].combo);
      rows_[r].v = std::move(nv);
      if (track_) rows_[r].combo = std::move(nc);
      reduce_row_tail(r);
    }
  }

  std::size_t dim_;
  bool track_;
  std::size_t generators_ = 0;
  bool grew_ = false;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_row_;
  Work pending_;
};

}  // namespace ghom::detail
