#include <random>

#include "doctest.h"
#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  Vector v(d);
  for (auto& c : v) c = Rational(static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 3) + 1);
  return v;
}

std::pair<Matrix<Rational>, Matrix<Rational>> random_unitriangular(std::mt19937_64& rng, std::size_t d) {
  // g = L U with unit diagonals, inverted by two triangular solves done as
  // explicit back-substitution on the identity columns.
  Matrix<Rational> lo = Matrix<Rational>::identity(d), up = Matrix<Rational>::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = Rational(static_cast<std::int64_t>(rng() % 5) - 2);
      up(j, i) = Rational(static_cast<std::int64_t>(rng() % 5) - 2);
    }
  auto invert_lower = [d](const Matrix<Rational>& m) {
    Matrix<Rational> out(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) {
        Rational s = (r == c) ? Rational(1) : Rational(0);
        for (std::size_t k = 0; k < r; ++k) s -= m(r, k) * out(k, c);
        out(r, c) = s;
      }
    return out;
  };
  auto transpose = [d](const Matrix<Rational>& m) {
    Matrix<Rational> out(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(c, r) = m(r, c);
    return out;
  };
  const auto up_inv = transpose(invert_lower(transpose(up)));
  return {lo * up, up_inv * invert_lower(lo)};
}

StructureTensor nf3_broken() {
  // [e1,e1]=e2, [e2,e1]=e3, plus [e1,e2]=e3
  StructureTensor t(3);
  t.at(0, 0, 1) = 1;
  t.at(1, 0, 2) = 1;
  t.at(0, 1, 2) = 1;
  return t;
}

}  // namespace

TEST_SUITE("algebra_core") {
  TEST_CASE("bracket examples") {
    const auto nf3 = catalog::build("NF", 3);
    CHECK(bracket(nf3.tensor, unit_vector(3, 0), unit_vector(3, 0)) == unit_vector(3, 1));
    std::mt19937_64 rng(1);
    CHECK(is_zero(bracket(nf3.tensor, Vector(3), random_vector(rng, 3))));
    const auto rnf4 = catalog::build("RNF", 4);
    CHECK(bracket(rnf4.tensor, unit_vector(5, 1), unit_vector(5, 4)) == Vector{0, 2, 0, 0, 0});
  }

  TEST_CASE("bracket is bilinear") {
    std::mt19937_64 rng(3);
    const auto r3 = catalog::build("R3", 5);
    for (int i = 0; i < 20; ++i) {
      const auto u = random_vector(rng, 6), v = random_vector(rng, 6), w = random_vector(rng, 6);
      const Rational a(static_cast<std::int64_t>(rng() % 7) - 3), b(static_cast<std::int64_t>(rng() % 7) - 3);
      Vector lin(6);
      for (std::size_t k = 0; k < 6; ++k) lin[k] = a * u[k] + b * v[k];
      const auto lhs = bracket(r3.tensor, lin, w);
      const auto bu = bracket(r3.tensor, u, w), bv = bracket(r3.tensor, v, w);
      for (std::size_t k = 0; k < 6; ++k) CHECK(lhs[k] == a * bu[k] + b * bv[k]);
      // right slot
      const auto rhs = bracket(r3.tensor, w, lin);
      const auto wu = bracket(r3.tensor, w, u), wv = bracket(r3.tensor, w, v);
      for (std::size_t k = 0; k < 6; ++k) CHECK(rhs[k] == a * wu[k] + b * wv[k]);
    }
  }

  TEST_CASE("leibniz defects") {
    CHECK(leibniz_defects(catalog::build("NF", 5).tensor).empty());
    for (std::size_t n = 3; n <= 6; ++n) CHECK(leibniz_defects(catalog::build("R3", n).tensor).empty());
    // Hand expansion at (e1,e1,e1): [e1,[e1,e1]] = [e1,e2] = e3, while
    // [[e1,e1],e1] - [[e1,e1],e1] = 0.
    const auto defects = leibniz_defects(nf3_broken());
    REQUIRE(defects.size() == 1);
    CHECK(defects[0].i == 0);
    CHECK(defects[0].j == 0);
    CHECK(defects[0].k == 0);
    CHECK(defects[0].value == Vector{0, 0, 1});
  }

  TEST_CASE("rescaled NF_3 stays Leibniz") {
    // gamma_{11}^2 = 2 is NF_3 in the basis e1, 2e2, 2e3.
    auto t = catalog::build("NF", 3).tensor;
    t.at(0, 0, 1) = 2;
    CHECK(is_leibniz(t));
  }

  TEST_CASE("right annihilator") {
    CHECK(right_annihilator(StructureTensor(2)).size() == 2);
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto ann = right_annihilator(catalog::build("NF", n).tensor);
      REQUIRE(ann.size() == n - 1);
      for (const auto& v : ann) CHECK(v[0].is_zero());
    }
  }

  TEST_CASE("right annihilator contains squares and symmetrized products") {
    std::mt19937_64 rng(5);
    for (const char* name : {"R1(5)", "R4(5)", "RL1(5)", "R5(5,a4=2)", "F1fam(5,a4=1,theta=3)"}) {
      const auto a = catalog::build_from_name(name);
      EchelonForm ann(a.dim());
      for (const auto& v : right_annihilator(a.tensor)) ann.insert(v);
      for (int i = 0; i < 10; ++i) {
        const auto x = random_vector(rng, a.dim()), y = random_vector(rng, a.dim());
        CHECK(ann.contains(bracket(a.tensor, x, x)));
        auto s = bracket(a.tensor, x, y);
        const auto t = bracket(a.tensor, y, x);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += t[k];
        CHECK(ann.contains(s));
      }
    }
  }

  TEST_CASE("series examples") {
    CHECK(lower_central_dims(catalog::build("NF", 4).tensor) == std::vector<std::size_t>{4, 3, 2, 1, 0});
    CHECK(lower_central_dims(StructureTensor(3)) == std::vector<std::size_t>{3, 0});
    CHECK(lower_central_dims(catalog::build("F1g", 5).tensor) == std::vector<std::size_t>{5, 3, 2, 1, 0});
    CHECK(derived_dims(StructureTensor(4)) == std::vector<std::size_t>{4, 0});
    CHECK(derived_dims(catalog::build("NF", 4).tensor) == std::vector<std::size_t>{4, 3, 0});
    CHECK(derived_dims(catalog::build("RNF", 3).tensor) == std::vector<std::size_t>{4, 3, 2, 0});
    CHECK(lower_central_dims(StructureTensor(0)) == std::vector<std::size_t>{0});
    CHECK(derived_dims(StructureTensor(1)) == std::vector<std::size_t>{1, 0});
  }

  TEST_CASE("series agree with the modular span oracle") {
    for (const auto& e : catalog::list_entries()) {
      if (e.key == "RL2" || e.key == "RL3" || e.key == "R2") continue;
      for (std::size_t n = std::max<std::size_t>(e.min_n, 3); n <= 6; ++n) {
        const auto t = catalog::build(e.key, n).tensor;
        const auto m = oracle::reduce(t);
        CHECK_MESSAGE(lower_central_dims(t) == oracle::series(m, false), e.key, " n=", n);
        CHECK_MESSAGE(derived_dims(t) == oracle::series(m, true), e.key, " n=", n);
      }
    }
  }

  TEST_CASE("series are weakly decreasing and derived descends fast enough") {
    for (const char* name : {"RNF(5)", "R2(5,alpha=1/2)", "RL3(6,j=5)", "F2fam(6,b4=1,gamma=2)"}) {
      const auto t = catalog::build_from_name(name).tensor;
      const auto lc = lower_central_dims(t), dd = derived_dims(t);
      for (std::size_t i = 1; i < lc.size(); ++i) CHECK(lc[i] < lc[i - 1]);
      for (std::size_t i = 1; i < dd.size(); ++i) CHECK(dd[i] < dd[i - 1]);
      // L^[s] is inside L^{2^{s-1}}
      for (std::size_t s = 1; s <= dd.size(); ++s) {
        const std::size_t idx = (std::size_t{1} << (s - 1)) - 1;
        const std::size_t bound = idx < lc.size() ? lc[idx] : lc.back();
        CHECK(dd[s - 1] <= bound);
      }
    }
  }

  TEST_CASE("nilpotency and solvability") {
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(is_nilpotent(catalog::build("NF", n).tensor));
      CHECK(is_solvable(catalog::build("NF", n).tensor));
      CHECK_FALSE(is_nilpotent(catalog::build("RNF", n).tensor));
      CHECK(is_solvable(catalog::build("RNF", n).tensor));
    }
    CHECK(is_nilpotent(StructureTensor(3)));
    CHECK(is_solvable(StructureTensor(3)));
  }

  TEST_CASE("verify_nilpotent_ideal") {
    CHECK(verify_nilpotent_ideal(catalog::build("R3", 5).tensor, {0, 1, 2, 3, 4}));
    CHECK(verify_nilpotent_ideal(catalog::build("NF", 4).tensor, {0, 1, 2, 3}));
    CHECK_FALSE(verify_nilpotent_ideal(catalog::build("RNF", 4).tensor, {4}));
    // the whole solvable algebra is an ideal but not nilpotent
    CHECK_FALSE(verify_nilpotent_ideal(catalog::build("RNF", 4).tensor, {0, 1, 2, 3, 4}));
    CHECK_THROWS_AS(Algebra::make("bad", catalog::build("RNF", 3).tensor, std::vector<std::size_t>{3}), BadParams);
  }

  TEST_CASE("basis change examples") {
    const auto nf2 = catalog::build("NF", 2).tensor;
    CHECK(apply_basis_change(nf2, Matrix<Rational>::identity(2), Matrix<Rational>::identity(2)) == nf2);
    const Matrix<Rational> g{{2, 0}, {0, 4}}, ginv{{Rational(1, 2), 0}, {0, Rational(1, 4)}};
    CHECK(apply_basis_change(nf2, g, ginv).at(0, 0, 1) == Rational(1));
    CHECK_THROWS_AS(apply_basis_change(nf2, g, g), BadInverse);
  }

  TEST_CASE("basis change round trip and preservation of the identity") {
    std::mt19937_64 rng(99);
    for (const char* name : {"R4(4)", "RL2(5,beta=2)", "R5(5,a4=1,a5=-1)"}) {
      const auto t = catalog::build_from_name(name).tensor;
      for (int i = 0; i < 5; ++i) {
        const auto [g, ginv] = random_unitriangular(rng, t.dim());
        REQUIRE(verify_inverse_pair(g, ginv));
        const auto moved = apply_basis_change(t, g, ginv);
        CHECK(is_leibniz(moved));
        CHECK(apply_basis_change(moved, ginv, g) == t);
      }
      const auto [g, ginv] = random_unitriangular(rng, 3);
      CHECK_FALSE(is_leibniz(apply_basis_change(nf3_broken(), g, ginv)));
    }
  }
}
