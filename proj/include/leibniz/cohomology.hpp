#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"

namespace leibniz {

/// Bilinear map phi: L x L -> L, phi(e_i, e_j) = sum_k at(i, j, k) e_k.
/// Flattened in (i, j, k) lexicographic order for all linear algebra.
class Cochain2 {
 public:
  Cochain2() = default;
  explicit Cochain2(std::size_t dim) : values_(dim) {}
  static Cochain2 from_flat(std::size_t dim, const Vector& flat);

  std::size_t dim() const { return values_.dim(); }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return values_.at(i, j, k); }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return values_.at(i, j, k); }

  Vector value(std::size_t i, std::size_t j) const { return values_.product(i, j); }
  /// phi(u, v) for coordinate vectors.
  Vector apply(const Vector& u, const Vector& v) const { return values_.bracket(u, v); }

  const Vector& flat() const { return values_.data(); }
  bool is_zero() const { return leibniz::is_zero(values_.data()); }

  friend bool operator==(const Cochain2& a, const Cochain2& b) { return a.values_ == b.values_; }
  friend Cochain2 operator+(const Cochain2& a, const Cochain2& b);
  friend Cochain2 operator*(const Rational& s, const Cochain2& a);

 private:
  StructureTensor values_;
};

enum class CochainKind { Cocycles, Coboundaries };

struct CochainSpace {
  std::size_t ambient = 0;  // d^3
  std::vector<Vector> basis;
  CochainKind kind = CochainKind::Cocycles;

  std::size_t dim() const { return basis.size(); }
};

/// Basis of Der(L); each D acts by column: D e_c = sum_r D(r, c) e_r.
std::vector<Matrix<Rational>> derivation_space(const StructureTensor& t);
std::size_t derivation_dim(const StructureTensor& t);

/// f(x, y) = [Dx, y] + [x, Dy] - D[x, y].
Cochain2 coboundary_of(const StructureTensor& t, const Matrix<Rational>& d);

/// (d^2 phi)(e_x, e_y, e_z), 0-based indices.
Vector d2_apply(const StructureTensor& t, const Cochain2& phi, std::size_t x, std::size_t y, std::size_t z);
bool is_cocycle(const StructureTensor& t, const Cochain2& phi);

/// Nullspace of the full d^4-equation cocycle system.
CochainSpace cocycle_space(const StructureTensor& t);
/// Only the dimension; avoids materializing the nullspace.
std::size_t cocycle_dim(const StructureTensor& t);

/// Image of d^1, as reduced echelon rows. Dimension is d^2 - dim Der.
CochainSpace coboundary_space(const StructureTensor& t);

struct CohomologyDims {
  std::size_t der = 0;
  std::size_t zl2 = 0;
  std::size_t bl2 = 0;
  std::size_t hl2 = 0;
};

/// All dimensions at once, asserting BL^2 inside ZL^2 per basis vector;
/// throws InclusionViolated otherwise.
CohomologyDims cohomology_dims(const StructureTensor& t);
std::size_t hl2_dim(const StructureTensor& t);

bool in_coboundaries(const StructureTensor& t, const Cochain2& phi);

/// True iff no nontrivial combination of reps lies in BL^2. Throws NotCocycle
/// naming the first failing representative.
bool classes_independent(const StructureTensor& t, const std::vector<Cochain2>& reps);

/// Named cohomology representatives for R2, R3, R4 and R5 ("xi", "rho",
/// "psi<k>", "phi<k>" for phi_{n,k}). Throws Undefined for other requests.
Cochain2 paper_cocycle(std::string_view key, std::size_t n, std::string_view which,
                       const catalog::Params& params = {});

/// Names of the representatives claimed to form a basis of HL^2 for the
/// given family member, following the published case split.
std::vector<std::string> paper_hl2_basis(std::string_view key, std::size_t n, const catalog::Params& params = {});

/// sum_k (k - 2) a_k psi_k over k = 4..n for R5; claimed to be a coboundary.
Cochain2 r5_psi_combination(std::size_t n, const catalog::Params& params);

}  // namespace leibniz
