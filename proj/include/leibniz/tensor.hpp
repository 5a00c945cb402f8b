#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "leibniz/laurent.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Structure constants of a bilinear bracket on a d-dimensional space:
/// [e_i, e_j] = sum_k gamma(i, j, k) e_k, with the first index the left factor.
/// Indices are 0-based here; documentation and file formats use e_1..e_d.
template <typename T>
class BasicTensor {
 public:
  BasicTensor() = default;
  explicit BasicTensor(std::size_t dim) : dim_(dim), gamma_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  T& at(std::size_t i, std::size_t j, std::size_t k) { return gamma_[index(i, j, k)]; }
  const T& at(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[index(i, j, k)]; }

  const std::vector<T>& data() const { return gamma_; }

  /// The vector [e_i, e_j].
  std::vector<T> product(std::size_t i, std::size_t j) const {
    return std::vector<T>(gamma_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0)),
                          gamma_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0) + dim_));
  }

  /// Bilinear extension of the bracket to coordinate vectors.
  std::vector<T> bracket(const std::vector<T>& u, const std::vector<T>& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("bracket: vector length differs from dimension");
    std::vector<T> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        const T coeff = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const T& g = at(i, j, k);
          if (!g.is_zero()) out[k] += coeff * g;
        }
      }
    }
    return out;
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.dim_ == b.dim_ && a.gamma_ == b.gamma_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure tensor index out of range");
    return (i * dim_ + j) * dim_ + k;
  }

  std::size_t dim_ = 0;
  std::vector<T> gamma_;
};

using StructureTensor = BasicTensor<Rational>;
using LaurentTensor = BasicTensor<LaurentScalar>;

/// The action (g*lambda)(x, y) = g(lambda(g^-1 x, g^-1 y)); column c of g is
/// the image of e_c. The inverse is trusted here; callers validate it.
template <typename T>
BasicTensor<T> transform_tensor(const BasicTensor<T>& t, const Matrix<T>& g, const Matrix<T>& ginv) {
  const std::size_t d = t.dim();
  if (g.rows() != d || g.cols() != d || ginv.rows() != d || ginv.cols() != d)
    throw std::invalid_argument("basis change size differs from tensor dimension");
  std::vector<std::vector<T>> preimage(d, std::vector<T>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r) preimage[i][r] = ginv(r, i);
  BasicTensor<T> out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto w = g * t.bracket(preimage[i], preimage[j]);
      for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = w[k];
    }
  return out;
}

/// Embeds a rational tensor as constant Laurent polynomials.
LaurentTensor to_laurent(const StructureTensor& t);

}  // namespace leibniz
