#include "leibniz/linalg.hpp"

#include <algorithm>

namespace leibniz {

namespace {

// row - factor * pivot, both sorted by index.
SparseVector axpy(const SparseVector& row, const Rational& factor, const SparseVector& pivot) {
  SparseVector out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

const Rational* find_entry(const SparseVector& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t size) {
  Vector out(size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

EchelonForm::EchelonForm(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

SparseVector EchelonForm::reduce_leading(SparseVector row) const {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::ptrdiff_t p = pivot_row_[lead];
    if (p < 0) break;
    row = axpy(row, row.front().second, rows_[static_cast<std::size_t>(p)]);
  }
  return row;
}

bool EchelonForm::insert(SparseVector row) {
  row = reduce_leading(std::move(row));
  if (row.empty()) return false;
  const Rational lead = row.front().second;
  if (lead != Rational(1))
    for (auto& e : row) e.second /= lead;
  pivot_row_[row.front().first] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonForm::contains(SparseVector row) const { return reduce_leading(std::move(row)).empty(); }

std::vector<std::size_t> EchelonForm::pivot_columns() const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] >= 0) cols.push_back(c);
  return cols;
}

std::vector<SparseVector> EchelonForm::reduced_rows() const {
  const auto pivots = pivot_columns();
  std::vector<SparseVector> rref;
  rref.reserve(pivots.size());
  for (std::size_t c : pivots) rref.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  // Back substitution: clear each pivot column from every row above it.
  for (std::size_t k = rref.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational* f = find_entry(rref[i], col);
      if (f) rref[i] = axpy(rref[i], Rational(*f), rref[k]);
    }
  }
  return rref;
}

std::vector<Vector> EchelonForm::basis() const {
  std::vector<Vector> out;
  for (const auto& r : reduced_rows()) out.push_back(to_dense(r, cols_));
  return out;
}

std::vector<Vector> EchelonForm::nullspace() const {
  const auto rref = reduced_rows();
  const auto pivots = pivot_columns();
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    Vector v(cols_);
    v[f] = Rational(1);
    for (std::size_t k = 0; k < rref.size(); ++k)
      if (const Rational* x = find_entry(rref[k], f)) v[pivots[k]] = -*x;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix<Rational>& m) {
  EchelonForm e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::vector<Vector> nullspace_basis(const Matrix<Rational>& m) {
  EchelonForm e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.nullspace();
}

bool in_span(const Vector& v, const std::vector<Vector>& basis) {
  EchelonForm e(v.size());
  for (const auto& b : basis) e.insert(b);
  return e.contains(v);
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t size) {
  EchelonForm e(size);
  for (const auto& v : vectors) e.insert(v);
  return e.basis();
}

}  // namespace leibniz
