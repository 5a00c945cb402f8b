#include "leibniz/cohomology.hpp"

#include <charconv>
#include <map>

#include "leibniz/errors.hpp"

namespace leibniz {

Cochain2 Cochain2::from_flat(std::size_t dim, const Vector& flat) {
  if (flat.size() != dim * dim * dim) throw DimensionMismatch("flattened cochain has the wrong length");
  Cochain2 c(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) c.at(i, j, k) = flat[(i * dim + j) * dim + k];
  return c;
}

Cochain2 operator+(const Cochain2& a, const Cochain2& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("cochains of different dimension");
  Cochain2 out = a;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) += b.at(i, j, k);
  return out;
}

Cochain2 operator*(const Rational& s, const Cochain2& a) {
  Cochain2 out = a;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.at(i, j, k) *= s;
  return out;
}

namespace {

using RowBuilder = std::map<std::size_t, Rational>;

SparseVector finish(RowBuilder& row) {
  SparseVector out;
  for (auto& [col, c] : row)
    if (!c.is_zero()) out.emplace_back(col, std::move(c));
  return out;
}

// D[e_i,e_j] = [De_i,e_j] + [e_i,De_j], unknown D(r,c) at r*d + c.
EchelonForm derivation_system(const StructureTensor& t) {
  const std::size_t d = t.dim();
  EchelonForm system(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        RowBuilder row;
        for (std::size_t m = 0; m < d; ++m) {
          if (const auto& g = t.at(m, j, k); !g.is_zero()) row[m * d + i] += g;
          if (const auto& g = t.at(i, m, k); !g.is_zero()) row[m * d + j] += g;
          if (const auto& g = t.at(i, j, m); !g.is_zero()) row[k * d + m] -= g;
        }
        system.insert(finish(row));
      }
  return system;
}

// One row per (x, y, z, out) of the six-term cocycle expression.
template <typename Sink>
void for_each_cocycle_row(const StructureTensor& t, Sink&& sink) {
  const std::size_t d = t.dim();
  auto v = [d](std::size_t a, std::size_t b, std::size_t c) { return (a * d + b) * d + c; };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z)
        for (std::size_t out = 0; out < d; ++out) {
          RowBuilder row;
          for (std::size_t m = 0; m < d; ++m) {
            if (const auto& g = t.at(x, m, out); !g.is_zero()) row[v(y, z, m)] += g;
            if (const auto& g = t.at(m, z, out); !g.is_zero()) row[v(x, y, m)] -= g;
            if (const auto& g = t.at(m, y, out); !g.is_zero()) row[v(x, z, m)] += g;
            if (const auto& g = t.at(y, z, m); !g.is_zero()) row[v(x, m, out)] += g;
            if (const auto& g = t.at(x, y, m); !g.is_zero()) row[v(m, z, out)] -= g;
            if (const auto& g = t.at(x, z, m); !g.is_zero()) row[v(m, y, out)] += g;
          }
          SparseVector r = finish(row);
          if (!r.empty()) sink(std::move(r));
        }
}

EchelonForm cocycle_system(const StructureTensor& t) {
  const std::size_t d = t.dim();
  EchelonForm system(d * d * d);
  for_each_cocycle_row(t, [&](SparseVector row) { system.insert(std::move(row)); });
  return system;
}

EchelonForm coboundary_echelon(const StructureTensor& t) {
  const std::size_t d = t.dim();
  EchelonForm span(d * d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Matrix<Rational> e(d, d);
      e(r, c) = Rational(1);
      span.insert(coboundary_of(t, e).flat());
    }
  return span;
}

}  // namespace

std::vector<Matrix<Rational>> derivation_space(const StructureTensor& t) {
  const std::size_t d = t.dim();
  std::vector<Matrix<Rational>> out;
  for (const auto& v : derivation_system(t).nullspace()) {
    Matrix<Rational> m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = v[r * d + c];
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t derivation_dim(const StructureTensor& t) {
  const std::size_t d = t.dim();
  return d * d - derivation_system(t).rank();
}

Cochain2 coboundary_of(const StructureTensor& t, const Matrix<Rational>& dmap) {
  const std::size_t d = t.dim();
  if (dmap.rows() != d || dmap.cols() != d) throw DimensionMismatch("endomorphism size differs from dimension");
  Cochain2 f(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t m = 0; m < d; ++m) {
        // [D e_i, e_j] and [e_i, D e_j]
        if (const auto& a = dmap(m, i); !a.is_zero())
          for (std::size_t k = 0; k < d; ++k)
            if (!t.at(m, j, k).is_zero()) f.at(i, j, k) += a * t.at(m, j, k);
        if (const auto& a = dmap(m, j); !a.is_zero())
          for (std::size_t k = 0; k < d; ++k)
            if (!t.at(i, m, k).is_zero()) f.at(i, j, k) += a * t.at(i, m, k);
        // -D [e_i, e_j]
        if (const auto& g = t.at(i, j, m); !g.is_zero())
          for (std::size_t k = 0; k < d; ++k)
            if (!dmap(k, m).is_zero()) f.at(i, j, k) -= g * dmap(k, m);
      }
  return f;
}

Vector d2_apply(const StructureTensor& t, const Cochain2& phi, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t d = t.dim();
  if (phi.dim() != d) throw DimensionMismatch("cochain dimension differs from algebra dimension");
  const Vector ex = unit_vector(d, x), ey = unit_vector(d, y), ez = unit_vector(d, z);
  const Vector yz = t.product(y, z), xy = t.product(x, y), xz = t.product(x, z);
  Vector out = t.bracket(ex, phi.value(y, z));
  const Vector terms[] = {
      t.bracket(phi.value(x, y), ez), t.bracket(phi.value(x, z), ey), phi.apply(ex, yz),
      phi.apply(xy, ez),              phi.apply(xz, ey),
  };
  for (std::size_t k = 0; k < d; ++k)
    out[k] = out[k] - terms[0][k] + terms[1][k] + terms[2][k] - terms[3][k] + terms[4][k];
  return out;
}

bool is_cocycle(const StructureTensor& t, const Cochain2& phi) {
  if (phi.dim() != t.dim()) throw DimensionMismatch("cochain dimension differs from algebra dimension");
  const auto& flat = phi.flat();
  bool ok = true;
  for_each_cocycle_row(t, [&](const SparseVector& row) {
    if (!ok) return;
    Rational s;
    for (const auto& [col, c] : row)
      if (!flat[col].is_zero()) s += c * flat[col];
    if (!s.is_zero()) ok = false;
  });
  return ok;
}

CochainSpace cocycle_space(const StructureTensor& t) {
  const std::size_t d = t.dim();
  return CochainSpace{d * d * d, cocycle_system(t).nullspace(), CochainKind::Cocycles};
}

std::size_t cocycle_dim(const StructureTensor& t) {
  const std::size_t d = t.dim();
  return d * d * d - cocycle_system(t).rank();
}

CochainSpace coboundary_space(const StructureTensor& t) {
  const std::size_t d = t.dim();
  return CochainSpace{d * d * d, coboundary_echelon(t).basis(), CochainKind::Coboundaries};
}

CohomologyDims cohomology_dims(const StructureTensor& t) {
  const std::size_t d = t.dim();
  CohomologyDims out;
  out.der = derivation_dim(t);
  out.zl2 = cocycle_dim(t);
  const auto b = coboundary_space(t);
  out.bl2 = b.dim();
  for (std::size_t i = 0; i < b.basis.size(); ++i)
    if (!is_cocycle(t, Cochain2::from_flat(d, b.basis[i])))
      throw InclusionViolated("coboundary basis vector " + std::to_string(i) + " fails the cocycle equations");
  out.hl2 = out.zl2 - out.bl2;
  return out;
}

std::size_t hl2_dim(const StructureTensor& t) { return cohomology_dims(t).hl2; }

bool in_coboundaries(const StructureTensor& t, const Cochain2& phi) {
  return coboundary_echelon(t).contains(phi.flat());
}

bool classes_independent(const StructureTensor& t, const std::vector<Cochain2>& reps) {
  for (std::size_t r = 0; r < reps.size(); ++r)
    if (!is_cocycle(t, reps[r])) throw NotCocycle("representative " + std::to_string(r) + " is not a 2-cocycle");
  EchelonForm span = coboundary_echelon(t);
  bool independent = true;
  for (const auto& rep : reps)
    if (!span.insert(rep.flat())) independent = false;
  return independent;
}

namespace {

// Entry helper in 1-based notation with x = n + 1.
class CochainBuilder {
 public:
  explicit CochainBuilder(std::size_t n) : n_(n), c_(n + 1) {}
  std::size_t x() const { return n_ + 1; }
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    if (!v.is_zero()) c_.at(i - 1, j - 1, k - 1) += v;
  }
  Cochain2 take() { return std::move(c_); }

 private:
  std::size_t n_;
  Cochain2 c_;
};

std::optional<std::size_t> suffix_number(std::string_view which, std::string_view prefix) {
  if (which.substr(0, prefix.size()) != prefix || which.size() == prefix.size()) return std::nullopt;
  std::size_t k = 0;
  const auto tail = which.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
  if (ec != std::errc() || ptr != tail.data() + tail.size()) return std::nullopt;
  return k;
}

[[noreturn]] void undefined(std::string_view key, std::size_t n, std::string_view which) {
  throw Undefined("no representative '" + std::string(which) + "' for " + std::string(key) + " at n = " +
                  std::to_string(n));
}

// xi of R3, rho of R2 and the first three rows of rho of R4.
void add_xi(CochainBuilder& b, std::size_t n) {
  b.add(1, b.x(), 1, 1);
  for (std::size_t i = 3; i <= n; ++i) b.add(i, b.x(), i, static_cast<std::int64_t>(i) - 2);
  b.add(b.x(), 1, 1, -1);
}

Rational alpha(const catalog::Params& p, std::size_t n, std::size_t k) {
  if (k < 4 || k > n) return Rational(0);
  auto it = p.find("a" + std::to_string(k));
  return it == p.end() ? Rational(0) : it->second;
}

Cochain2 r5_phi(std::size_t n, std::size_t k, const catalog::Params& p) {
  CochainBuilder b(n);
  const auto x = b.x();
  const auto a = [&](std::size_t idx) { return alpha(p, n, idx); };
  b.add(n, 1, k, 1);
  if (k == 2) {
    for (std::size_t j = 3; j + 1 <= n; ++j) b.add(1, x, j, -a(n) * a(j + 1));
    for (std::size_t i = 3; i + 1 <= n; ++i)
      for (std::size_t j = 2; j + 1 <= i; ++j) b.add(i, x, j, a(n + j + 1 - i));
    for (std::size_t j = 3; j + 1 <= n; ++j) b.add(n, x, j, a(j + 1));
  } else {
    b.add(1, x, k, -a(n));
    for (std::size_t i = 3; i + 1 <= n; ++i) {
      const std::size_t top = (i <= n + 2 - k) ? i + k - 3 : n;
      for (std::size_t j = k; j <= top; ++j) b.add(i, x, j, a(n + j + 3 - i - k));
    }
    for (std::size_t j = k + 1; j <= n; ++j) b.add(n, x, j, a(j + 3 - k));
  }
  return b.take();
}

}  // namespace

Cochain2 paper_cocycle(std::string_view key, std::size_t n, std::string_view which, const catalog::Params& params) {
  if (n < 3) undefined(key, n, which);
  CochainBuilder b(n);
  const auto x = b.x();
  if (key == "R3" && which == "xi") {
    add_xi(b, n);
    return b.take();
  }
  if (key == "R4" && which == "rho") {
    add_xi(b, n);
    b.add(x, x, n - 1, -1);
    return b.take();
  }
  if (key == "R2") {
    if (which == "rho") {
      add_xi(b, n);
    } else if (which == "psi1") {
      for (std::size_t i = 2; i <= n; ++i) b.add(i, x, i, 1);
    } else if (which == "psi2") {
      for (std::size_t i = 2; i <= n; ++i) b.add(i, 2, i, 1);
    } else if (which == "psi3") {
      b.add(1, x, n, 1);
      b.add(x, x, n - 1, -1);
    } else if (which == "psi4") {
      b.add(1, 2, n, 1);
      b.add(x, 2, n - 1, -1);
    } else {
      undefined(key, n, which);
    }
    return b.take();
  }
  if (key == "R5") {
    if (which == "rho") {
      b.add(1, x, 1, 1);
      b.add(1, x, 2, -1);
      for (std::size_t i = 4; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i) - 3);
      b.add(x, 1, 1, 1);
      b.add(x, 1, 2, -1);
      return b.take();
    }
    if (auto k = suffix_number(which, "psi"); k && *k >= 4 && *k <= n) {
      if (*k == n) {
        b.add(2, x, n, 1);
      } else {
        b.add(1, x, *k, 1);
        for (std::size_t i = 2; i <= n - *k + 2; ++i) b.add(i, x, *k + i - 2, 1);
      }
      return b.take();
    }
    if (auto k = suffix_number(which, "phi"); k && *k >= 2 && *k + 1 <= n) return r5_phi(n, *k, params);
  }
  undefined(key, n, which);
}

std::vector<std::string> paper_hl2_basis(std::string_view key, std::size_t n, const catalog::Params& params) {
  if (key == "R3") return {"xi"};
  if (key == "R4") return {"rho"};
  if (key == "R2") {
    auto it = params.find("alpha");
    if (it == params.end()) throw BadParams("R2 needs alpha");
    const Rational& a = it->second;
    const auto sn = static_cast<std::int64_t>(n);
    if (n == 3) {
      // The printed list "0; -1; -2" for the first case repeats -1, which has
      // its own row; the HL2 dimension count puts 1 there instead.
      if (a == Rational(-1)) return {"psi1", "psi2", "psi3", "psi4"};
      if (a == Rational(0) || a == Rational(1) || a == Rational(-2)) return {"rho", "psi1"};
      return {"rho"};
    }
    if (a == Rational(-1)) return {"psi1", "psi2"};
    if (a == Rational(0) || a == Rational(1) || a == Rational(1 - sn) || a == Rational(2 - sn)) return {"rho", "psi1"};
    return {"rho"};
  }
  if (key == "R5") {
    std::optional<std::size_t> first_nonzero;
    for (std::size_t k = 4; k <= n && !first_nonzero; ++k)
      if (!alpha(params, n, k).is_zero()) first_nonzero = k;
    std::vector<std::string> out{"rho"};
    for (std::size_t k = 4; k <= n; ++k)
      if (k != first_nonzero) out.push_back("psi" + std::to_string(k));
    for (std::size_t k = 2; k + 1 <= n; ++k) out.push_back("phi" + std::to_string(k));
    return out;
  }
  throw Undefined("no published HL^2 basis for " + std::string(key));
}

Cochain2 r5_psi_combination(std::size_t n, const catalog::Params& params) {
  Cochain2 sum(n + 1);
  for (std::size_t k = 4; k <= n; ++k) {
    const Rational a = alpha(params, n, k);
    if (a.is_zero()) continue;
    sum = sum + (Rational(static_cast<std::int64_t>(k) - 2) * a) * paper_cocycle("R5", n, "psi" + std::to_string(k));
  }
  return sum;
}

}  // namespace leibniz
