#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ghom/integer.hpp"

namespace ghom {

using SparseVector = std::vector<std::pair<std::size_t, std::int64_t>>;
using BigSparseVector = std::vector<std::pair<std::size_t, Integer>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;  // row-major, dense

// Sparse integer matrix stored by columns. Stored entries are nonzero and each
// column is sorted by row.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nonzeros() const;

  std::int64_t at(std::size_t r, std::size_t c) const;
  // Accumulates; drops the entry if it becomes zero.
  void add(std::size_t r, std::size_t c, std::int64_t v);
  const SparseVector& column(std::size_t c) const { return cols_.at(c); }
  void append_column(SparseVector col);

  std::vector<std::vector<std::int64_t>> to_dense() const;
  IntMatrix multiply(const IntMatrix& rhs) const;
  bool is_zero() const { return nonzeros() == 0; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

struct SmithForm {
  // d_1 | d_2 | ... | d_r, all positive.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  // U * A * V = diag(invariant_factors), present when requested.
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
};

// Exact Smith normal form. Pivots on the smallest nonzero absolute value with a
// lexicographic (row, column) tie-break. Runs on 64-bit integers and redoes the
// whole decomposition with arbitrary precision if any step would overflow.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);
SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

// Lattice spanned by inserted integer vectors of fixed dimension, kept in
// Hermite form. Starts on 64-bit arithmetic and switches to arbitrary precision
// the first time an operation would overflow.
class Lattice {
 public:
  explicit Lattice(std::size_t dim, bool track_certificates = false);
  ~Lattice();
  Lattice(Lattice&&) noexcept;
  Lattice& operator=(Lattice&&) noexcept;

  std::size_t dim() const;
  std::size_t rank() const;
  std::size_t generator_count() const;
  bool escalated() const;

  // Generator ids are assigned in insertion order. Returns true when the
  // lattice grew.
  bool insert(const SparseVector& v);
  bool insert(const BigSparseVector& v);

  bool contains(const SparseVector& v) const;
  bool contains(const BigSparseVector& v) const;

  // Coefficients of v in terms of basis(), or nothing if v is outside.
  std::optional<std::vector<Integer>> coordinates(const BigSparseVector& v) const;

  // Generator-id -> coefficient combination equal to v; requires tracking.
  std::optional<std::map<std::size_t, Integer>> certificate(const BigSparseVector& v) const;

  std::vector<BigSparseVector> basis() const;

  // Switches to arbitrary precision now rather than on first overflow.
  void escalate();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Membership {
  bool member = false;
  // Coefficients per generator column when member.
  std::vector<Integer> coefficients;
};

// Is v an integer combination of the columns of `generators`? Decided through
// Hermite form; the returned certificate satisfies generators * c == v.
Membership lattice_contains(const IntMatrix& generators, std::span<const std::int64_t> v);

struct QuotientStructure {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

// Structure of L_K / L_B where L_K, L_B are the lattices spanned by the given
// vectors. Throws ImageNotContained when L_B is not inside L_K.
QuotientStructure quotient_invariants(std::size_t dim, const std::vector<BigSparseVector>& kernel_gens,
                                      const std::vector<BigSparseVector>& image_gens);
QuotientStructure quotient_invariants(const IntMatrix& kernel_gens, const IntMatrix& image_gens);

// Basis of the integer kernel {x : m x = 0}, read off the Smith transforms.
std::vector<BigSparseVector> integer_kernel(const IntMatrix& m);

BigSparseVector to_big(const SparseVector& v);

}  // namespace ghom
