#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// tau_i = tr R_{e_i}, kappa_ij = tr(R_{e_i} R_{e_j}), with R_x(y) = [y, x].
struct TraceForm {
  Vector tau;
  Matrix<Rational> kappa;
};

TraceForm trace_form(const StructureTensor& t);

/// Matrix of right multiplication y -> [y, v].
Matrix<Rational> right_multiplication(const StructureTensor& t, const Vector& v);

struct InvariantValue {
  bool defined = false;
  std::optional<Rational> value;
  bool not_invariant = false;  // sampled ratios disagreed

  std::string str() const { return defined ? value->str() : (not_invariant ? "not-invariant" : "undefined"); }
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Seed from LEIBNIZ_SEED (decimal or 0x-prefixed hex) or kDefaultSeed.
std::uint64_t sampling_seed();

/// Exact decision: defined iff tau != 0, kappa != 0 and kappa = tau tau^T / c.
InvariantValue c11_exact(const StructureTensor& t);

/// tr(R_x)^i tr(R_y)^j / tr(R_x^i R_y^j) at pseudo-random rational pairs.
InvariantValue cij_sampled(const StructureTensor& t, unsigned i, unsigned j, std::size_t samples = 16,
                           std::uint64_t seed = kDefaultSeed);

std::size_t orbit_dim(const StructureTensor& t);

struct ConditionRecord {
  std::string condition;
  std::string status;  // pass | fail | undefined | unknown
  std::string lhs;
  std::string rhs;
};

struct DegenerationReport {
  std::string source;
  std::string target;
  std::vector<ConditionRecord> conditions;
  bool ruled_out = false;
  std::vector<std::string> reasons;  // names of failing conditions
};

/// Necessary conditions for source -> target. Throws DimensionMismatch or
/// PreconditionViolation (non-Leibniz input, identical tensors).
DegenerationReport degeneration_report(const Algebra& source, const Algebra& target);

}  // namespace leibniz
