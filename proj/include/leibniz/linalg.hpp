#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "leibniz/laurent.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

using Vector = std::vector<Rational>;
/// Sparse vector as (index, value) pairs, strictly increasing index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t size);
bool is_zero(const Vector& v);

/// Row-echelon form built one row at a time.
///
/// Pivot rows are normalized to a leading 1. Rows are held sparsely since the
/// cochain systems have a handful of nonzeros per equation; callers see dense
/// vectors through nullspace() and basis().
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row; returns true iff the rank grew.
  bool insert(SparseVector row);
  bool insert(const Vector& row) { return insert(to_sparse(row)); }

  /// True iff the vector lies in the row space.
  bool contains(SparseVector row) const;
  bool contains(const Vector& row) const { return contains(to_sparse(row)); }

  /// Pivot column of each row, ascending.
  std::vector<std::size_t> pivot_columns() const;

  /// Rows of the reduced row-echelon form, ordered by pivot column.
  std::vector<Vector> basis() const;

  /// Basis of {v : row·v = 0 for every row}. One vector per free column in
  /// ascending order, with 1 at its free column and 0 at the other free ones.
  std::vector<Vector> nullspace() const;

 private:
  SparseVector reduce_leading(SparseVector row) const;
  std::vector<SparseVector> reduced_rows() const;

  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // per column, -1 when not a pivot
};

std::size_t rank(const Matrix<Rational>& m);
std::vector<Vector> nullspace_basis(const Matrix<Rational>& m);
bool in_span(const Vector& v, const std::vector<Vector>& basis);

/// Canonical basis (reduced echelon rows) of the span of the given vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t size);

/// True iff g·ginv = ginv·g = identity exactly.
template <typename T>
bool verify_inverse_pair(const Matrix<T>& g, const Matrix<T>& ginv) {
  if (!g.square() || !ginv.square() || g.rows() != ginv.rows()) return false;
  const auto id = Matrix<T>::identity(g.rows());
  return g * ginv == id && ginv * g == id;
}

}  // namespace leibniz
