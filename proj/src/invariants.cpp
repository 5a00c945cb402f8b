#include "leibniz/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "leibniz/cohomology.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

Matrix<Rational> right_multiplication(const StructureTensor& t, const Vector& v) {
  const std::size_t d = t.dim();
  if (v.size() != d) throw DimensionMismatch("vector length differs from dimension");
  Matrix<Rational> m(d, d);
  // column a holds [e_a, v]
  for (std::size_t b = 0; b < d; ++b) {
    if (v[b].is_zero()) continue;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t k = 0; k < d; ++k)
        if (!t.at(a, b, k).is_zero()) m(k, a) += v[b] * t.at(a, b, k);
  }
  return m;
}

namespace {

Rational trace(const Matrix<Rational>& m) {
  Rational s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

Rational trace_of_product(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) s += a(i, k) * b(k, i);
  return s;
}

Matrix<Rational> power(const Matrix<Rational>& m, unsigned e) {
  Matrix<Rational> out = Matrix<Rational>::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace

TraceForm trace_form(const StructureTensor& t) {
  const std::size_t d = t.dim();
  std::vector<Matrix<Rational>> r;
  TraceForm f{Vector(d), Matrix<Rational>(d, d)};
  for (std::size_t i = 0; i < d; ++i) {
    r.push_back(right_multiplication(t, unit_vector(d, i)));
    f.tau[i] = trace(r.back());
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) f.kappa(i, j) = trace_of_product(r[i], r[j]);
  return f;
}

std::uint64_t sampling_seed() {
  const char* env = std::getenv("LEIBNIZ_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  if (end == env || *end != '\0') throw ParseError(std::string("LEIBNIZ_SEED is not an integer: ") + env);
  return v;
}

InvariantValue c11_exact(const StructureTensor& t) {
  const TraceForm f = trace_form(t);
  const std::size_t d = t.dim();
  if (is_zero(f.tau) || is_zero(f.kappa.entries())) return {};
  // kappa = s * tau tau^T; s comes from a diagonal entry with tau_i != 0.
  std::optional<Rational> s;
  for (std::size_t i = 0; i < d && !s; ++i)
    if (!f.tau[i].is_zero()) s = f.kappa(i, i) / (f.tau[i] * f.tau[i]);
  if (!s || s->is_zero()) return {};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (f.kappa(i, j) != *s * f.tau[i] * f.tau[j]) return {};
  return InvariantValue{true, Rational(1) / *s, false};
}

InvariantValue cij_sampled(const StructureTensor& t, unsigned i, unsigned j, std::size_t samples,
                           std::uint64_t seed) {
  if (i == 0 || j == 0) throw BadParams("cij_sampled needs i, j >= 1");
  const std::size_t d = t.dim();
  std::mt19937_64 rng(seed);
  auto coordinate = [&rng] {
    const auto num = static_cast<std::int64_t>(rng() % 11) - 5;
    const auto den = static_cast<std::int64_t>(rng() % 3) + 1;
    return Rational(num, den);
  };
  std::optional<Rational> common;
  std::size_t successes = 0;
  bool any_nonzero = false;
  bool agree = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(d), y(d);
    for (auto& c : x) c = coordinate();
    for (auto& c : y) c = coordinate();
    const auto rx = right_multiplication(t, x);
    const auto ry = right_multiplication(t, y);
    const Rational den = trace_of_product(power(rx, i), power(ry, j));
    if (den.is_zero()) continue;
    const Rational ratio = pow(trace(rx), i) * pow(trace(ry), j) / den;
    ++successes;
    if (!ratio.is_zero()) any_nonzero = true;
    if (!common) common = ratio;
    else if (*common != ratio) agree = false;
  }
  if (!agree) return InvariantValue{false, std::nullopt, true};
  // An identically zero numerator means the invariant is not defined.
  if (successes == 0 || 2 * successes < samples || !any_nonzero) return {};
  return InvariantValue{true, common, false};
}

std::size_t orbit_dim(const StructureTensor& t) { return t.dim() * t.dim() - derivation_dim(t); }

DegenerationReport degeneration_report(const Algebra& source, const Algebra& target) {
  if (source.dim() != target.dim())
    throw DimensionMismatch("degeneration candidates must have equal dimension (" + std::to_string(source.dim()) +
                            " vs " + std::to_string(target.dim()) + ")");
  if (!is_leibniz(source.tensor)) throw PreconditionViolation(source.name + " is not a Leibniz algebra");
  if (!is_leibniz(target.tensor)) throw PreconditionViolation(target.name + " is not a Leibniz algebra");
  if (source.tensor == target.tensor) throw PreconditionViolation("source and target tensors are identical");

  DegenerationReport r;
  r.source = source.name;
  r.target = target.name;
  auto record = [&r](std::string name, bool pass, std::string lhs, std::string rhs) {
    r.conditions.push_back({name, pass ? "pass" : "fail", std::move(lhs), std::move(rhs)});
    if (!pass) r.reasons.push_back(std::move(name));
  };

  const std::size_t der_l = derivation_dim(source.tensor), der_m = derivation_dim(target.tensor);
  record("der", der_l < der_m, std::to_string(der_l), std::to_string(der_m));

  auto pl = lower_central_dims(source.tensor), pm = lower_central_dims(target.tensor);
  const std::size_t len = std::max(pl.size(), pm.size());
  pl.resize(len, pl.back());
  pm.resize(len, pm.back());
  for (std::size_t m = 0; m < len; ++m)
    record("power[" + std::to_string(m + 1) + "]", pl[m] >= pm[m], std::to_string(pl[m]), std::to_string(pm[m]));

  const InvariantValue cl = c11_exact(source.tensor), cm = c11_exact(target.tensor);
  if (cl.defined && cm.defined) record("c11", *cl.value == *cm.value, cl.str(), cm.str());
  else r.conditions.push_back({"c11", "undefined", cl.str(), cm.str()});

  if (source.nilradical && target.nilradical) {
    const auto nl = source.nilradical->size(), nm = target.nilradical->size();
    record("nilradical", nm >= nl, std::to_string(nm), std::to_string(nl));  // target vs source
  } else {
    r.conditions.push_back({"nilradical", "unknown", "", ""});
  }
  r.conditions.push_back({"lie", "unknown", "", ""});
  r.ruled_out = !r.reasons.empty();
  return r;
}

}  // namespace leibniz
