#include "ghom/int_linalg.hpp"

#include <algorithm>
#include <variant>

#include "ghom/detail/hermite.hpp"
#include "ghom/errors.hpp"

namespace ghom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m.add(r, c, rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& cols) {
  IntMatrix m(rows, 0);
  for (const auto& c : cols) m.append_column(c);
  return m;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

std::int64_t IntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : 0;
}

void IntMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("matrix index out of range");
  if (v == 0) return;
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second = arith::add(it->second, v);
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

void IntMatrix::append_column(SparseVector col) {
  std::sort(col.begin(), col.end());
  SparseVector clean;
  for (const auto& [r, v] : col) {
    if (r >= rows_) throw std::out_of_range("column entry outside matrix rows");
    if (!clean.empty() && clean.back().first == r)
      clean.back().second = arith::add(clean.back().second, v);
    else
      clean.emplace_back(r, v);
  }
  std::erase_if(clean, [](const auto& e) { return e.second == 0; });
  cols_.push_back(std::move(clean));
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_.size(), 0));
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : cols_[c]) out[r][c] = v;
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols() != rhs.rows()) throw DimensionMismatch("matrix product dimensions disagree");
  IntMatrix out(rows_, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c)
    for (const auto& [k, b] : rhs.column(c))
      for (const auto& [r, a] : cols_[k]) out.add(r, c, arith::mul(a, b));
  return out;
}

BigSparseVector to_big(const SparseVector& v) {
  BigSparseVector out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.emplace_back(c, Integer(x));
  return out;
}

namespace {

template <class T>
using Dense = std::vector<std::vector<T>>;

template <class T>
struct SnfState {
  Dense<T> a;
  Dense<T> u;
  Dense<T> v;
  bool transforms;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (transforms) std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (transforms)
      for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_t
  void row_op(std::size_t i, std::size_t t, const T& q) {
    for (std::size_t c = 0; c < cols(); ++c)
      if (a[t][c] != 0) a[i][c] = arith::sub_mul(a[i][c], q, a[t][c]);
    if (transforms)
      for (std::size_t c = 0; c < u[i].size(); ++c)
        if (u[t][c] != 0) u[i][c] = arith::sub_mul(u[i][c], q, u[t][c]);
  }
  // col_j -= q * col_t
  void col_op(std::size_t j, std::size_t t, const T& q) {
    for (std::size_t r = 0; r < rows(); ++r)
      if (a[r][t] != 0) a[r][j] = arith::sub_mul(a[r][j], q, a[r][t]);
    if (transforms)
      for (std::size_t r = 0; r < v.size(); ++r)
        if (v[r][t] != 0) v[r][j] = arith::sub_mul(v[r][j], q, v[r][t]);
  }
  void negate_row(std::size_t t) {
    for (auto& x : a[t]) x = arith::neg(x);
    if (transforms)
      for (auto& x : u[t]) x = arith::neg(x);
  }
};

template <class T>
Dense<T> identity(std::size_t n) {
  Dense<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
SmithForm smith_impl(Dense<T> a, bool transforms) {
  SnfState<T> s{std::move(a), {}, {}, transforms};
  const std::size_t R = s.rows(), C = s.cols();
  if (transforms) {
    s.u = identity<T>(R);
    s.v = identity<T>(C);
  }
  std::vector<T> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Smallest |a_ij| over the trailing block, lexicographic tie-break.
    std::size_t pi = R, pj = C;
    T best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        const T& x = s.a[i][j];
        if (x == 0) continue;
        T ax = arith::abs(x);
        if (pi == R || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi == R) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i)
        if (s.a[i][t] != 0) {
          s.row_op(i, t, arith::trunc_div(s.a[i][t], s.a[t][t]));
          if (s.a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < C; ++j)
        if (s.a[t][j] != 0) {
          s.col_op(j, t, arith::trunc_div(s.a[t][j], s.a[t][t]));
          if (s.a[t][j] != 0) clean = false;
        }
      if (!clean) {
        // A remainder is smaller than the pivot; move the smallest one in.
        std::size_t bi = t, bj = t;
        T b = arith::abs(s.a[t][t]);
        for (std::size_t i = t + 1; i < R; ++i)
          if (s.a[i][t] != 0 && arith::abs(s.a[i][t]) < b) {
            b = arith::abs(s.a[i][t]);
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (s.a[t][j] != 0 && arith::abs(s.a[t][j]) < b) {
            b = arith::abs(s.a[t][j]);
            bi = t;
            bj = j;
          }
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold a row with a non-multiple entry into row t.
      std::size_t bad = R;
      if (arith::abs(s.a[t][t]) == 1) break;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (s.a[i][j] % s.a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      s.row_op(t, bad, T(-1));
    }
    if (s.a[t][t] < 0) s.negate_row(t);
    diag.push_back(s.a[t][t]);
  }
  SmithForm out;
  out.rank = diag.size();
  for (const T& d : diag) out.invariant_factors.push_back(arith::to_integer(d));
  if (transforms) {
    auto conv = [](const Dense<T>& m) {
      IntegerMatrix o(m.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        for (const T& x : m[i]) o[i].push_back(arith::to_integer(x));
      return o;
    };
    out.left = conv(s.u);
    out.right = conv(s.v);
  }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  auto dense = m.to_dense();
  try {
    return smith_impl<std::int64_t>(dense, with_transforms);
  } catch (const arith::Overflow&) {
    Dense<Integer> big(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i)
      for (std::int64_t x : dense[i]) big[i].emplace_back(x);
    return smith_impl<Integer>(std::move(big), with_transforms);
  }
}

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatch("ragged matrix rows");
  try {
    Dense<std::int64_t> small(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (const Integer& x : m[i]) small[i].push_back(arith::from_integer<std::int64_t>(x));
    return smith_impl<std::int64_t>(std::move(small), with_transforms);
  } catch (const arith::Overflow&) {
    return smith_impl<Integer>(m, with_transforms);
  }
}

// ---------------------------------------------------------------------------

struct Lattice::Impl {
  std::variant<detail::HermiteLattice<std::int64_t>, detail::HermiteLattice<Integer>> lat;

  Impl(std::size_t dim, bool track) : lat(detail::HermiteLattice<std::int64_t>(dim, track)) {}

  bool small() const { return lat.index() == 0; }
  auto& s() { return std::get<0>(lat); }
  auto& b() { return std::get<1>(lat); }
  const auto& s() const { return std::get<0>(lat); }
  const auto& b() const { return std::get<1>(lat); }

  void escalate() {
    if (!small()) return;
    auto big = s().template convert<Integer>();
    big.normalize();
    lat = std::move(big);
  }

  template <class F>
  auto with(F&& f) {
    if (small()) {
      try {
        return f(s());
      } catch (const arith::Overflow&) {
        escalate();
        return f(b());
      }
    }
    return f(b());
  }
};

Lattice::Lattice(std::size_t dim, bool track) : impl_(std::make_unique<Impl>(dim, track)) {}
Lattice::~Lattice() = default;
Lattice::Lattice(Lattice&&) noexcept = default;
Lattice& Lattice::operator=(Lattice&&) noexcept = default;

std::size_t Lattice::dim() const {
  return std::visit([](const auto& l) { return l.dim(); }, impl_->lat);
}
std::size_t Lattice::rank() const {
  return std::visit([](const auto& l) { return l.rank(); }, impl_->lat);
}
std::size_t Lattice::generator_count() const {
  return std::visit([](const auto& l) { return l.generator_count(); }, impl_->lat);
}
bool Lattice::escalated() const { return !impl_->small(); }
void Lattice::escalate() { impl_->escalate(); }

namespace {
template <class T>
detail::SparseRow<T> to_row(const BigSparseVector& v) {
  detail::SparseRow<T> out;
  out.reserve(v.size());
  for (const auto& [c, x] : v)
    if (x != 0) out.emplace_back(c, arith::from_integer<T>(x));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first) throw std::invalid_argument("duplicate index in sparse vector");
  return out;
}
}  // namespace

bool Lattice::insert(const SparseVector& v) {
  if (impl_->small()) {
    detail::SparseRow<std::int64_t> row;
    row.reserve(v.size());
    for (const auto& e : v)
      if (e.second != 0) row.push_back(e);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i].first == row[i - 1].first) throw std::invalid_argument("duplicate index in sparse vector");
    try {
      return impl_->s().insert(std::move(row));
    } catch (const arith::Overflow&) {
      // The pending remainder travels with the conversion.
      impl_->escalate();
      return impl_->b().drain();
    }
  }
  return impl_->b().insert(to_row<Integer>(to_big(v)));
}

bool Lattice::insert(const BigSparseVector& v) {
  if (impl_->small()) {
    detail::SparseRow<std::int64_t> row;
    try {
      row = to_row<std::int64_t>(v);
    } catch (const arith::Overflow&) {
      impl_->escalate();
      return impl_->b().insert(to_row<Integer>(v));
    }
    try {
      return impl_->s().insert(std::move(row));
    } catch (const arith::Overflow&) {
      impl_->escalate();
      return impl_->b().drain();
    }
  }
  return impl_->b().insert(to_row<Integer>(v));
}

bool Lattice::contains(const SparseVector& v) const { return contains(to_big(v)); }

bool Lattice::contains(const BigSparseVector& v) const { return coordinates(v).has_value(); }

std::optional<std::vector<Integer>> Lattice::coordinates(const BigSparseVector& v) const {
  return impl_->with([&](auto& lat) -> std::optional<std::vector<Integer>> {
    using T = typename std::decay_t<decltype(lat)>::value_type;
    auto red = lat.reduce(to_row<T>(v));
    if (!red.residual.empty()) return std::nullopt;
    std::vector<Integer> coords(lat.rank(), Integer(0));
    for (const auto& [r, q] : red.coords) coords[r] += arith::to_integer(q);
    return coords;
  });
}

std::optional<std::map<std::size_t, Integer>> Lattice::certificate(const BigSparseVector& v) const {
  return impl_->with([&](auto& lat) -> std::optional<std::map<std::size_t, Integer>> {
    if (!lat.tracking()) throw std::logic_error("lattice was built without certificate tracking");
    using T = typename std::decay_t<decltype(lat)>::value_type;
    auto red = lat.reduce(to_row<T>(v));
    if (!red.residual.empty()) return std::nullopt;
    std::map<std::size_t, Integer> out;
    for (const auto& [id, c] : red.combo)
      if (c != 0) out.emplace(id, arith::to_integer(c));
    return out;
  });
}

std::vector<BigSparseVector> Lattice::basis() const {
  return std::visit(
      [](const auto& lat) {
        std::vector<BigSparseVector> out;
        for (const auto& row : lat.rows()) {
          BigSparseVector b;
          for (const auto& [c, x] : row.v) b.emplace_back(c, arith::to_integer(x));
          out.push_back(std::move(b));
        }
        return out;
      },
      impl_->lat);
}

// ---------------------------------------------------------------------------

Membership lattice_contains(const IntMatrix& generators, std::span<const std::int64_t> v) {
  if (v.size() != generators.rows())
    throw DimensionMismatch("vector length " + std::to_string(v.size()) + " != generator rows " +
                            std::to_string(generators.rows()));
  Lattice lat(generators.rows(), true);
  for (std::size_t c = 0; c < generators.cols(); ++c) lat.insert(generators.column(c));
  BigSparseVector target;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) target.emplace_back(i, Integer(v[i]));
  auto cert = lat.certificate(target);
  Membership out;
  if (!cert) return out;
  out.member = true;
  out.coefficients.assign(generators.cols(), Integer(0));
  for (const auto& [id, c] : *cert) out.coefficients[id] = c;
  return out;
}

QuotientStructure quotient_invariants(std::size_t dim, const std::vector<BigSparseVector>& kernel_gens,
                                      const std::vector<BigSparseVector>& image_gens) {
  Lattice kernel(dim);
  for (const auto& k : kernel_gens) kernel.insert(k);
  const std::size_t k = kernel.rank();
  IntegerMatrix coords(k, std::vector<Integer>(image_gens.size(), Integer(0)));
  for (std::size_t j = 0; j < image_gens.size(); ++j) {
    auto c = kernel.coordinates(image_gens[j]);
    if (!c) throw ImageNotContained("image generator " + std::to_string(j) + " lies outside the kernel lattice");
    for (std::size_t i = 0; i < k; ++i) coords[i][j] = (*c)[i];
  }
  QuotientStructure out;
  if (k == 0) return out;
  SmithForm snf = smith_normal_form(coords);
  out.rank = k - snf.rank;
  for (const Integer& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

QuotientStructure quotient_invariants(const IntMatrix& kernel_gens, const IntMatrix& image_gens) {
  if (kernel_gens.rows() != image_gens.rows()) throw DimensionMismatch("kernel and image live in different spaces");
  std::vector<BigSparseVector> k, b;
  for (std::size_t c = 0; c < kernel_gens.cols(); ++c) k.push_back(to_big(kernel_gens.column(c)));
  for (std::size_t c = 0; c < image_gens.cols(); ++c) b.push_back(to_big(image_gens.column(c)));
  return quotient_invariants(kernel_gens.rows(), k, b);
}

std::vector<BigSparseVector> integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m, true);
  const IntegerMatrix& v = *snf.right;
  std::vector<BigSparseVector> out;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) {
    BigSparseVector col;
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (v[i][j] != 0) col.emplace_back(i, v[i][j]);
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace ghom
