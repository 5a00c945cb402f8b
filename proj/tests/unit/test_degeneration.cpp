#include "doctest.h"
#include "leibniz/catalog.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/errors.hpp"

using namespace leibniz;

namespace {

Matrix<Rational> evaluate(const Matrix<LaurentScalar>& m, const Rational& t) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(t);
  return out;
}

}  // namespace

TEST_SUITE("degeneration") {
  TEST_CASE("builtin fixtures verify") {
    for (std::size_t n = 4; n <= 8; ++n) {
      const auto fixtures = builtin_fixtures(n);
      REQUIRE(fixtures.size() == 6);
      for (const auto& f : fixtures) {
        const auto r = run_fixture(f);
        CHECK_MESSAGE(r.verified, f.name, " n=", n);
        CHECK(r.limit == f.target.tensor);
        CHECK(is_leibniz(r.limit));
        CHECK_FALSE(r.report.ruled_out);
      }
    }
    CHECK_THROWS_AS(builtin_fixtures(3), BadParams);
  }

  TEST_CASE("fixture names") {
    std::vector<std::string> names;
    for (const auto& f : builtin_fixtures(5)) names.push_back(f.name);
    CHECK(names == std::vector<std::string>{"F1g->F2g", "RNF->R2(1)", "R1->R2(0)", "R3->R2(1-n)", "R4->R2(2-n)",
                                            "R5(a4=1)->R5(0)"});
  }

  TEST_CASE("scaling every basis vector by t contracts to the abelian algebra") {
    for (const char* name : {"NF(4)", "R3(4)", "RL1(5)"}) {
      const auto a = catalog::build_from_name(name);
      const auto fam = BasisChangeFamily::diagonal(std::vector<int>(a.dim(), -1));
      // g e_i = t^-1 e_i, so every bracket picks up a factor t
      CHECK(limit_tensor(transformed_tensor(a.tensor, fam)) == StructureTensor(a.dim()));
    }
  }

  TEST_CASE("blow-up raises NoLimit with the offending entry") {
    const auto nf = catalog::build("NF", 3);
    const auto fam = BasisChangeFamily::diagonal({1, 1, 1});
    try {
      limit_tensor(transformed_tensor(nf.tensor, fam));
      FAIL("expected NoLimit");
    } catch (const NoLimit& e) {
      CHECK(std::string(e.what()).find("(1,1,2)") != std::string::npos);
    }
  }

  TEST_CASE("mismatched target") {
    const auto src = catalog::build("R1", 5);
    const auto wrong = catalog::build("R2", 5, {{"alpha", Rational(1)}});
    DegenerationFixture f{"R1->R2(1)", src, BasisChangeFamily::diagonal({-1, 0, 0, 0, 0, 0}), wrong, std::nullopt};
    CHECK_THROWS_AS(run_fixture(f), TargetMismatch);
  }

  TEST_CASE("bad inverse pair") {
    Matrix<LaurentScalar> g = Matrix<LaurentScalar>::identity(2);
    g(0, 0) = LaurentScalar::monomial(Rational(1), 1);
    CHECK_THROWS_AS(BasisChangeFamily::make(g, g), BadInverse);
    CHECK_THROWS_AS(transformed_tensor(catalog::build("NF", 3).tensor, BasisChangeFamily::diagonal({1, 1})), DimensionMismatch);
  }

  TEST_CASE("Laurent transform agrees with a rational change at fixed t") {
    for (const auto& f : builtin_fixtures(5)) {
      const auto lt = transformed_tensor(f.source.tensor, f.family);
      for (const Rational& t : {Rational(2), Rational(-1, 3)}) {
        const auto direct = apply_basis_change(f.source.tensor, evaluate(f.family.g(), t), evaluate(f.family.g_inverse(), t));
        for (std::size_t i = 0; i < lt.dim(); ++i)
          for (std::size_t j = 0; j < lt.dim(); ++j)
            for (std::size_t k = 0; k < lt.dim(); ++k) CHECK(lt.at(i, j, k).evaluate(t) == direct.at(i, j, k));
      }
    }
  }

  TEST_CASE("post change is applied to the limit") {
    // NF_2 with e1 -> t e1, e2 -> t^2 e2 is fixed; a rational rescale then doubles [e1,e1]
    const auto nf = catalog::build("NF", 2);
    auto target = nf;
    target.tensor.at(0, 0, 1) = 2;
    const Matrix<Rational> g{{1, 0}, {0, 2}}, ginv{{1, 0}, {0, Rational(1, 2)}};
    DegenerationFixture f{"nf2", nf, BasisChangeFamily::diagonal({-1, -2}), target, RationalChange{g, ginv}};
    CHECK(run_fixture(f).verified);
    f.post_change.reset();
    CHECK_THROWS_AS(run_fixture(f), TargetMismatch);
    f.post_change = RationalChange{g, ginv};
    f.target = catalog::build("Abelian", 2);
    CHECK_THROWS_AS(run_fixture(f), TargetMismatch);
  }
}
