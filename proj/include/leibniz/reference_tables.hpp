#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/catalog.hpp"
#include "leibniz/rational.hpp"

namespace leibniz::reference {

/// One published value next to the value computed here.
struct Row {
  std::size_t n = 0;
  std::string group;  // der | cohomology | c11 | coincidence | degeneration
  std::string item;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Sampled alpha values for R2 at size n: 0, 1, -1, 1/2, 1-n, 2-n, 3.
std::vector<Rational> r2_alpha_samples(std::size_t n);

std::size_t expected_der_r2(std::size_t n, const Rational& alpha);
std::size_t expected_zl2_r2(std::size_t n, const Rational& alpha);
std::size_t expected_hl2_r2(std::size_t n, const Rational& alpha);

/// Closed forms exactly as published.
Rational c11_rnf(std::size_t n);
Rational c11_r1(std::size_t n);
Rational c11_rl1(std::size_t n);  // also R(L_2)
Rational c11_rl3(std::size_t n, std::size_t j);
Rational c11_r2(std::size_t n, const Rational& alpha);
Rational c11_r3(std::size_t n);
Rational c11_r4(std::size_t n);
Rational c11_r5(std::size_t n);

/// All rows for size n (n >= 3; degenerations need n >= 4). With
/// with_cohomology false the ZL^2/BL^2/HL^2 rows are skipped.
std::vector<Row> rows_for(std::size_t n, bool with_cohomology = true);

}  // namespace leibniz::reference
