#include "leibniz/degeneration.hpp"

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

BasisChangeFamily BasisChangeFamily::make(Matrix<LaurentScalar> g, Matrix<LaurentScalar> g_inverse) {
  if (!verify_inverse_pair(g, g_inverse)) throw BadInverse("g_t and the supplied inverse do not multiply to the identity");
  return BasisChangeFamily(std::move(g), std::move(g_inverse));
}

BasisChangeFamily BasisChangeFamily::diagonal(const std::vector<int>& exponents) {
  const std::size_t d = exponents.size();
  Matrix<LaurentScalar> g(d, d), ginv(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    g(i, i) = LaurentScalar::monomial(Rational(1), exponents[i]);
    ginv(i, i) = LaurentScalar::monomial(Rational(1), -exponents[i]);
  }
  return make(std::move(g), std::move(ginv));
}

LaurentTensor transformed_tensor(const StructureTensor& src, const BasisChangeFamily& fam) {
  if (fam.dim() != src.dim()) throw DimensionMismatch("family size differs from algebra dimension");
  return transform_tensor(to_laurent(src), fam.g(), fam.g_inverse());
}

StructureTensor limit_tensor(const LaurentTensor& t) {
  const std::size_t d = t.dim();
  StructureTensor out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& s = t.at(i, j, k);
        if (s.min_exponent() < 0)
          throw NoLimit("no limit at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                        std::to_string(k + 1) + "): " + s.str());
        out.at(i, j, k) = laurent_limit(s);
      }
  if (!is_leibniz(out)) throw LimitNotLeibniz("limit bracket violates the Leibniz identity");
  return out;
}

FixtureResult run_fixture(const DegenerationFixture& f) {
  if (f.source.dim() != f.target.dim() || f.family.dim() != f.source.dim())
    throw DimensionMismatch("fixture " + f.name + ": source, target and family sizes differ");
  FixtureResult r;
  r.name = f.name;
  r.limit = limit_tensor(transformed_tensor(f.source.tensor, f.family));
  if (f.post_change) r.limit = apply_basis_change(r.limit, f.post_change->g, f.post_change->g_inverse);
  if (auto diff = first_difference(r.limit, f.target.tensor)) {
    const auto [i, j, k] = *diff;
    throw TargetMismatch("fixture " + f.name + ": limit differs from " + f.target.name + " at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                         "): " + r.limit.at(i, j, k).str() + " vs " + f.target.tensor.at(i, j, k).str());
  }
  r.report = degeneration_report(f.source, f.target);
  r.verified = true;
  return r;
}

namespace {

// x fixed, e_i scaled by t^{exps[i-1]}.
BasisChangeFamily scaling(std::vector<int> exps) {
  exps.push_back(0);
  return BasisChangeFamily::diagonal(exps);
}

}  // namespace

std::vector<DegenerationFixture> builtin_fixtures(std::size_t n) {
  if (n < 4) throw BadParams("builtin fixtures need n >= 4");
  const auto sn = static_cast<std::int64_t>(n);
  using catalog::build;
  std::vector<DegenerationFixture> out;

  {
    // g(e1) = e1 - t^-1 e2, g(e2) = t^-1 e2; inverse e1 -> e1 + e2, e2 -> t e2.
    Matrix<LaurentScalar> g = Matrix<LaurentScalar>::identity(n), ginv = Matrix<LaurentScalar>::identity(n);
    g(1, 0) = LaurentScalar::monomial(Rational(-1), -1);
    g(1, 1) = LaurentScalar::monomial(Rational(1), -1);
    ginv(1, 0) = LaurentScalar(1);
    ginv(1, 1) = LaurentScalar::monomial(Rational(1), 1);
    out.push_back({"F1g->F2g", build("F1g", n), BasisChangeFamily::make(std::move(g), std::move(ginv)),
                   build("F2g", n), std::nullopt});
  }
  {
    std::vector<int> e{-1};
    for (std::size_t i = 2; i <= n; ++i) e.push_back(2 - static_cast<int>(i));
    out.push_back({"RNF->R2(1)", build("RNF", n), scaling(e), build("R2", n, {{"alpha", Rational(1)}}), std::nullopt});
  }
  std::vector<int> tail(n, 1);
  tail[0] = 0;
  out.push_back({"R1->R2(0)", build("R1", n), scaling(tail), build("R2", n, {{"alpha", Rational(0)}}), std::nullopt});
  out.push_back({"R3->R2(1-n)", build("R3", n), scaling(tail), build("R2", n, {{"alpha", Rational(1 - sn)}}),
                 std::nullopt});
  out.push_back({"R4->R2(2-n)", build("R4", n), scaling(tail), build("R2", n, {{"alpha", Rational(2 - sn)}}),
                 std::nullopt});
  {
    std::vector<int> e{1};
    for (std::size_t i = 2; i <= n; ++i) e.push_back(static_cast<int>(i) - 1);
    out.push_back({"R5(a4=1)->R5(0)", build("R5", n, {{"a4", Rational(1)}}), scaling(e), build("R5", n),
                   std::nullopt});
  }
  return out;
}

}  // namespace leibniz
