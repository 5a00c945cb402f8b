#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz {

/// g_t with an explicitly supplied inverse; make() rejects a bad pair.
class BasisChangeFamily {
 public:
  static BasisChangeFamily make(Matrix<LaurentScalar> g, Matrix<LaurentScalar> g_inverse);
  /// diag(t^e_1, ..., t^e_d).
  static BasisChangeFamily diagonal(const std::vector<int>& exponents);

  std::size_t dim() const { return g_.rows(); }
  const Matrix<LaurentScalar>& g() const { return g_; }
  const Matrix<LaurentScalar>& g_inverse() const { return ginv_; }

 private:
  BasisChangeFamily(Matrix<LaurentScalar> g, Matrix<LaurentScalar> ginv) : g_(std::move(g)), ginv_(std::move(ginv)) {}
  Matrix<LaurentScalar> g_;
  Matrix<LaurentScalar> ginv_;
};

/// Tensor of [x, y]_t = g_t [g_t^-1 x, g_t^-1 y].
LaurentTensor transformed_tensor(const StructureTensor& src, const BasisChangeFamily& fam);

/// Entrywise t -> 0 limit. Throws NoLimit naming the first divergent entry
/// (1-based), or LimitNotLeibniz.
StructureTensor limit_tensor(const LaurentTensor& t);

struct RationalChange {
  Matrix<Rational> g;
  Matrix<Rational> g_inverse;
};

struct DegenerationFixture {
  std::string name;
  Algebra source;
  BasisChangeFamily family;
  Algebra target;
  std::optional<RationalChange> post_change;
};

struct FixtureResult {
  std::string name;
  bool verified = false;
  StructureTensor limit;
  DegenerationReport report;
};

/// Throws NoLimit, LimitNotLeibniz, or TargetMismatch at the first differing entry.
FixtureResult run_fixture(const DegenerationFixture& f);

/// The six published degenerations at size n (n >= 4).
std::vector<DegenerationFixture> builtin_fixtures(std::size_t n);

}  // namespace leibniz
