#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"
#include "leibniz/tensor.hpp"

namespace leibniz {

/// A Leibniz algebra given by structure constants, plus catalog metadata.
struct Algebra {
  std::string name;
  StructureTensor tensor;
  std::vector<std::string> basis_labels;
  /// Claimed nilradical as 0-based basis indices; verified, never computed.
  std::optional<std::vector<std::size_t>> nilradical;
  std::map<std::string, Rational> params;

  std::size_t dim() const { return tensor.dim(); }

  /// Builds an algebra with labels e1..ed; throws if a claimed nilradical
  /// fails verify_nilpotent_ideal.
  static Algebra make(std::string name, StructureTensor tensor,
                      std::optional<std::vector<std::size_t>> nilradical = std::nullopt,
                      std::vector<std::string> labels = {});
};

Vector bracket(const StructureTensor& t, const Vector& u, const Vector& v);

/// Basis vector e_i (0-based) of length d.
Vector unit_vector(std::size_t d, std::size_t i);

struct Defect {
  std::size_t i, j, k;
  Vector value;  // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
};

/// Every basis triple on which the Leibniz identity fails; empty iff Leibniz.
std::vector<Defect> leibniz_defects(const StructureTensor& t);
bool is_leibniz(const StructureTensor& t);

/// Basis of {x : [y, x] = 0 for all y}.
std::vector<Vector> right_annihilator(const StructureTensor& t);

/// Canonical basis of span{[u, v] : u in lhs, v in rhs}.
std::vector<Vector> product_span(const StructureTensor& t, const std::vector<Vector>& lhs,
                                 const std::vector<Vector>& rhs);

/// dim L^1, dim L^2, ... with L^{k+1} = [L^k, L], stopping at the first
/// repeated dimension (the repeat is not listed).
std::vector<std::size_t> lower_central_dims(const StructureTensor& t);
/// dim L^[1], dim L^[2], ... with L^[s+1] = [L^[s], L^[s]], same stopping rule.
std::vector<std::size_t> derived_dims(const StructureTensor& t);

bool is_nilpotent(const StructureTensor& t);
bool is_solvable(const StructureTensor& t);

/// Restriction of the bracket to span{e_s : s in subset}; assumes the span is
/// a subalgebra.
StructureTensor restrict_tensor(const StructureTensor& t, const std::vector<std::size_t>& subset);

/// True iff span(subset) is a two-sided ideal and nilpotent. Maximality is not
/// checked.
bool verify_nilpotent_ideal(const StructureTensor& t, const std::vector<std::size_t>& subset);

/// g * t for a rational basis change; throws BadInverse unless g·ginv = I.
StructureTensor apply_basis_change(const StructureTensor& t, const Matrix<Rational>& g,
                                   const Matrix<Rational>& ginv);

/// First entry (i, j, k) where two tensors of equal dimension differ.
std::optional<std::array<std::size_t, 3>> first_difference(const StructureTensor& a, const StructureTensor& b);

}  // namespace leibniz
