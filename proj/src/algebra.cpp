#include "leibniz/algebra.hpp"

#include <algorithm>
#include <set>

#include "leibniz/errors.hpp"

namespace leibniz {

LaurentTensor to_laurent(const StructureTensor& t) {
  LaurentTensor out(t.dim());
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) = LaurentScalar(t.at(i, j, k));
  return out;
}

Algebra Algebra::make(std::string name, StructureTensor tensor, std::optional<std::vector<std::size_t>> nilradical,
                      std::vector<std::string> labels) {
  Algebra a;
  a.name = std::move(name);
  const std::size_t d = tensor.dim();
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != d) throw BadParams("basis label count differs from dimension");
  a.tensor = std::move(tensor);
  a.basis_labels = std::move(labels);
  if (nilradical && !verify_nilpotent_ideal(a.tensor, *nilradical))
    throw BadParams("claimed nilradical of " + a.name + " is not a nilpotent ideal");
  a.nilradical = std::move(nilradical);
  return a;
}

Vector bracket(const StructureTensor& t, const Vector& u, const Vector& v) { return t.bracket(u, v); }

Vector unit_vector(std::size_t d, std::size_t i) {
  Vector v(d);
  v.at(i) = Rational(1);
  return v;
}

std::vector<Defect> leibniz_defects(const StructureTensor& t) {
  const std::size_t d = t.dim();
  std::vector<Defect> out;
  // Cache products as vectors to avoid recomputing [e_a, e_b].
  std::vector<Vector> prod(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) prod[a * d + b] = t.product(a, b);

  // Right multiplication by a vector: [u, e_k] for u = sum u_a e_a.
  auto times_basis = [&](const Vector& u, std::size_t k) {
    Vector r(d);
    for (std::size_t a = 0; a < d; ++a) {
      if (u[a].is_zero()) continue;
      const Vector& p = prod[a * d + k];
      for (std::size_t c = 0; c < d; ++c)
        if (!p[c].is_zero()) r[c] += u[a] * p[c];
    }
    return r;
  };
  auto basis_times = [&](std::size_t i, const Vector& v) {
    Vector r(d);
    for (std::size_t b = 0; b < d; ++b) {
      if (v[b].is_zero()) continue;
      const Vector& p = prod[i * d + b];
      for (std::size_t c = 0; c < d; ++c)
        if (!p[c].is_zero()) r[c] += v[b] * p[c];
    }
    return r;
  };

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = basis_times(i, prod[j * d + k]);
        const Vector r1 = times_basis(prod[i * d + j], k);
        const Vector r2 = times_basis(prod[i * d + k], j);
        for (std::size_t c = 0; c < d; ++c) lhs[c] = lhs[c] - r1[c] + r2[c];
        if (!is_zero(lhs)) out.push_back(Defect{i, j, k, std::move(lhs)});
      }
  return out;
}

bool is_leibniz(const StructureTensor& t) { return leibniz_defects(t).empty(); }

std::vector<Vector> right_annihilator(const StructureTensor& t) {
  const std::size_t d = t.dim();
  EchelonForm system(d);
  // [e_i, x]_k = sum_j x_j gamma(i, j, k)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Vector row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = t.at(i, j, k);
      system.insert(row);
    }
  return system.nullspace();
}

std::vector<Vector> product_span(const StructureTensor& t, const std::vector<Vector>& lhs,
                                 const std::vector<Vector>& rhs) {
  EchelonForm span(t.dim());
  for (const auto& u : lhs)
    for (const auto& v : rhs) span.insert(t.bracket(u, v));
  return span.basis();
}

namespace {

std::vector<Vector> full_space(std::size_t d) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(unit_vector(d, i));
  return basis;
}

}  // namespace

std::vector<std::size_t> lower_central_dims(const StructureTensor& t) {
  const auto whole = full_space(t.dim());
  std::vector<Vector> current = whole;
  std::vector<std::size_t> dims{current.size()};
  while (!current.empty()) {
    auto next = product_span(t, current, whole);
    if (next.size() == current.size()) break;
    current = std::move(next);
    dims.push_back(current.size());
  }
  return dims;
}

std::vector<std::size_t> derived_dims(const StructureTensor& t) {
  std::vector<Vector> current = full_space(t.dim());
  std::vector<std::size_t> dims{current.size()};
  while (!current.empty()) {
    auto next = product_span(t, current, current);
    if (next.size() == current.size()) break;
    current = std::move(next);
    dims.push_back(current.size());
  }
  return dims;
}

bool is_nilpotent(const StructureTensor& t) { return lower_central_dims(t).back() == 0; }
bool is_solvable(const StructureTensor& t) { return derived_dims(t).back() == 0; }

StructureTensor restrict_tensor(const StructureTensor& t, const std::vector<std::size_t>& subset) {
  StructureTensor out(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = 0; b < subset.size(); ++b)
      for (std::size_t c = 0; c < subset.size(); ++c) out.at(a, b, c) = t.at(subset[a], subset[b], subset[c]);
  return out;
}

bool verify_nilpotent_ideal(const StructureTensor& t, const std::vector<std::size_t>& subset) {
  const std::size_t d = t.dim();
  const std::set<std::size_t> members(subset.begin(), subset.end());
  if (members.size() != subset.size()) return false;
  for (std::size_t s : subset)
    if (s >= d) return false;
  for (std::size_t s : subset)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (members.count(k)) continue;
        if (!t.at(s, j, k).is_zero() || !t.at(j, s, k).is_zero()) return false;
      }
  std::vector<std::size_t> sorted(members.begin(), members.end());
  return is_nilpotent(restrict_tensor(t, sorted));
}

StructureTensor apply_basis_change(const StructureTensor& t, const Matrix<Rational>& g, const Matrix<Rational>& ginv) {
  if (g.rows() != t.dim() || !verify_inverse_pair(g, ginv))
    throw BadInverse("basis change matrices are not mutually inverse");
  return transform_tensor(t, g, ginv);
}

std::optional<std::array<std::size_t, 3>> first_difference(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("tensors of different dimension");
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (a.at(i, j, k) != b.at(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

}  // namespace leibniz
