#include "leibniz/reference_tables.hpp"

#include <algorithm>

#include "leibniz/cohomology.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz::reference {

namespace {

Rational q(std::int64_t v) { return Rational(v); }
std::int64_t s(std::size_t n) { return static_cast<std::int64_t>(n); }

bool in(const Rational& a, std::initializer_list<std::int64_t> values) {
  for (auto v : values)
    if (a == Rational(v)) return true;
  return false;
}

std::string label(const std::string& key, const catalog::Params& p) {
  if (p.empty()) return key;
  std::string out = key + "(";
  bool first = true;
  for (const auto& [k, v] : p) {
    out += (first ? "" : ",") + k + "=" + v.str();
    first = false;
  }
  return out + ")";
}

class Collector {
 public:
  explicit Collector(std::size_t n) : n_(n) {}

  void add(std::string group, std::string item, const std::string& expected, const std::string& computed) {
    rows_.push_back(Row{n_, std::move(group), std::move(item), expected, computed, expected == computed});
  }
  void add(std::string group, std::string item, std::size_t expected, std::size_t computed) {
    add(std::move(group), std::move(item), std::to_string(expected), std::to_string(computed));
  }

  std::vector<Row> take() { return std::move(rows_); }

 private:
  std::size_t n_;
  std::vector<Row> rows_;
};

std::string classes(std::size_t k) { return std::to_string(k) + (k == 1 ? " class" : " classes"); }

// "k classes" when the named set is a basis of HL^2, otherwise the first problem.
std::string representative_status(const std::string& key, std::size_t n, const catalog::Params& p,
                                  const StructureTensor& t, std::size_t hl2) {
  std::vector<Cochain2> reps;
  for (const auto& name : paper_hl2_basis(key, n, p)) {
    Cochain2 c = paper_cocycle(key, n, name, p);
    if (!is_cocycle(t, c)) return "not a cocycle: " + name;
    reps.push_back(std::move(c));
  }
  if (!classes_independent(t, reps)) return "dependent mod BL2";
  if (reps.size() != hl2) return classes(reps.size()) + ", HL2 = " + std::to_string(hl2);
  return classes(reps.size());
}

struct Member {
  std::string key;
  catalog::Params params;
};

}  // namespace

std::vector<Rational> r2_alpha_samples(std::size_t n) {
  std::vector<Rational> out;
  for (const auto& a : {q(0), q(1), q(-1), Rational(1, 2), q(1 - s(n)), q(2 - s(n)), q(3)})
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

std::size_t expected_der_r2(std::size_t n, const Rational& alpha) {
  return in(alpha, {1 - s(n), 2 - s(n)}) ? 4 : 3;
}

std::size_t expected_zl2_r2(std::size_t n, const Rational& alpha) {
  const std::size_t d2 = (n + 1) * (n + 1);
  if (n == 3) {
    if (in(alpha, {0, 1})) return 15;
    if (alpha == q(-1)) return 16;
    return 14;
  }
  return in(alpha, {0, 1, -1}) ? d2 - 1 : d2 - 2;
}

std::size_t expected_hl2_r2(std::size_t n, const Rational& alpha) {
  if (n == 3) {
    if (alpha == q(-1)) return 4;
    if (in(alpha, {0, 1, -2})) return 2;
    return 1;
  }
  return in(alpha, {0, 1, -1, 1 - s(n), 2 - s(n)}) ? 2 : 1;
}

Rational c11_rnf(std::size_t n) { return Rational(3 * s(n) * (s(n) + 1), 2 * (2 * s(n) + 1)); }

Rational c11_r1(std::size_t n) {
  const auto m = s(n);
  const auto a = m * m - m + 2;
  return Rational(3 * a * a, 2 * (6 + m * (m - 1) * (2 * m - 1)));
}

Rational c11_rl1(std::size_t n) { return Rational(3 * (s(n) * s(n) - 1), 4 * s(n) - 3); }

Rational c11_rl3(std::size_t n, std::size_t j) {
  const auto m = s(n), k = s(j);
  const auto a = m * m - m + 2 * k - 4;
  return Rational(3 * a * a, 4 * (m * m * m - 2 * m * m + m + 3 * (k - 2) * (k - 2)));
}

Rational c11_r2(std::size_t n, const Rational& alpha) {
  Rational num(1), den(1);
  for (std::size_t i = 2; i <= n; ++i) {
    const Rational v = Rational(s(i) - 1) + alpha;
    num += v;
    den += v * v;
  }
  return num * num / den;
}

Rational c11_r3(std::size_t n) {
  const auto m = s(n);
  return Rational(3 * m * (m - 3) * (m - 3), 2 * (2 * m * m - 9 * m + 15));
}

Rational c11_r4(std::size_t n) {
  const auto m = s(n);
  const auto a = m * m - 5 * m + 10;
  return Rational(3 * a * a, 2 * (2 * m * m * m - 15 * m * m + 37 * m - 18));
}

Rational c11_r5(std::size_t n) { return Rational(s(n) - 1); }

std::vector<Row> rows_for(std::size_t n, bool with_cohomology) {
  if (n < 3) throw BadParams("reference tables start at n = 3");
  Collector out(n);
  const std::size_t d2 = (n + 1) * (n + 1);
  const auto c11 = [](const Algebra& a) { return c11_exact(a.tensor).str(); };

  std::vector<Member> r2;
  for (const auto& a : r2_alpha_samples(n)) r2.push_back({"R2", {{"alpha", a}}});
  const catalog::Params a4{{"a4", q(1)}};

  // Derivations.
  out.add("der", "RNF", 2, derivation_dim(catalog::build("RNF", n).tensor));
  out.add("der", "R1", 2, derivation_dim(catalog::build("R1", n).tensor));
  for (const auto& m : r2)
    out.add("der", label(m.key, m.params), expected_der_r2(n, m.params.at("alpha")),
            derivation_dim(catalog::build(m.key, n, m.params).tensor));
  out.add("der", "R3", 3, derivation_dim(catalog::build("R3", n).tensor));
  out.add("der", "R4", 3, derivation_dim(catalog::build("R4", n).tensor));
  out.add("der", "R5", n, derivation_dim(catalog::build("R5", n).tensor));
  if (n >= 4) out.add("der", "R5(a4=1)", n - 1, derivation_dim(catalog::build("R5", n, a4).tensor));

  if (with_cohomology) {
    auto dims = [&](const std::string& item, const Algebra& a, std::optional<std::size_t> zl2, std::size_t bl2,
                    std::optional<std::size_t> hl2) {
      const auto c = cohomology_dims(a.tensor);
      if (zl2) out.add("cohomology", "ZL2 " + item, *zl2, c.zl2);
      out.add("cohomology", "BL2 " + item, bl2, c.bl2);
      if (hl2) out.add("cohomology", "HL2 " + item, *hl2, c.hl2);
      return c;
    };
    dims("RNF", catalog::build("RNF", n), d2 - 2, d2 - 2, 0);
    dims("R1", catalog::build("R1", n), std::nullopt, d2 - 2, std::nullopt);
    for (const auto& m : r2) {
      const Rational& a = m.params.at("alpha");
      const auto alg = catalog::build(m.key, n, m.params);
      const auto c = dims(label(m.key, m.params), alg, expected_zl2_r2(n, a), d2 - expected_der_r2(n, a),
                          expected_hl2_r2(n, a));
      out.add("representatives", label(m.key, m.params), classes(expected_hl2_r2(n, a)),
              representative_status("R2", n, m.params, alg.tensor, c.hl2));
    }
    for (const std::string key : {"R3", "R4"}) {
      const auto alg = catalog::build(key, n);
      const auto c = dims(key, alg, d2 - 2, d2 - 3, 1);
      // The n = 3 member of R4 is a documented exception.
      if (key == "R3" || n > 3) out.add("representatives", key, classes(1), representative_status(key, n, {}, alg.tensor, c.hl2));
    }
    {
      const auto alg = catalog::build("R5", n);
      const auto c = dims("R5", alg, n * n + 3 * n - 3, n * n + n + 1, 2 * n - 4);
      out.add("representatives", "R5", classes(2 * n - 4),
              representative_status("R5", n, {}, alg.tensor, c.hl2));
    }
    if (n >= 4) {
      const auto alg = catalog::build("R5", n, a4);
      const auto c = dims("R5(a4=1)", alg, n * n + 3 * n - 3, n * n + n + 2, 2 * n - 5);
      out.add("representatives", "R5(a4=1)", classes(2 * n - 5),
              representative_status("R5", n, a4, alg.tensor, c.hl2));
      out.add("representatives", "sum (k-2)a_k psi_k in BL2", "yes",
              in_coboundaries(alg.tensor, r5_psi_combination(n, a4)) ? "yes" : "no");
    }
  }

  // c_{1,1}.
  out.add("c11", "RNF", c11_rnf(n).str(), c11(catalog::build("RNF", n)));
  out.add("c11", "R1", c11_r1(n).str(), c11(catalog::build("R1", n)));
  out.add("c11", "RL1", c11_rl1(n).str(), c11(catalog::build("RL1", n)));
  if (n % 2 == 1 && n >= 5) out.add("c11", "RL2(beta=1)", c11_rl1(n).str(), c11(catalog::build("RL2", n, {{"beta", q(1)}})));
  for (std::size_t j = 4; j <= n; ++j)
    out.add("c11", "RL3(j=" + std::to_string(j) + ")", c11_rl3(n, j).str(),
            c11(catalog::build("RL3", n, {{"j", q(s(j))}})));
  for (const auto& m : r2)
    out.add("c11", label(m.key, m.params), c11_r2(n, m.params.at("alpha")).str(), c11(catalog::build(m.key, n, m.params)));
  out.add("c11", "R3", c11_r3(n).str(), c11(catalog::build("R3", n)));
  out.add("c11", "R4", c11_r4(n).str(), c11(catalog::build("R4", n)));
  out.add("c11", "R5", c11_r5(n).str(), c11(catalog::build("R5", n)));
  if (n >= 4) out.add("c11", "R5(a4=1)", c11_r5(n).str(), c11(catalog::build("R5", n, a4)));

  auto r2c = [&](std::int64_t a) { return c11(catalog::build("R2", n, {{"alpha", q(a)}})); };
  out.add("coincidence", "R2(1) = RNF", c11(catalog::build("RNF", n)), r2c(1));
  out.add("coincidence", "R2(0) = R1", c11(catalog::build("R1", n)), r2c(0));
  out.add("coincidence", "R2(1-n) = R3", c11(catalog::build("R3", n)), r2c(1 - s(n)));
  out.add("coincidence", "R2(2-n) = R4", c11(catalog::build("R4", n)), r2c(2 - s(n)));

  if (n >= 4) {
    for (const auto& f : builtin_fixtures(n)) {
      std::string verdict;
      try {
        const auto r = run_fixture(f);
        verdict = r.report.ruled_out ? "ruled_out" : "verified";
      } catch (const Error& e) {
        verdict = e.kind();
      }
      out.add("degeneration", f.name, "verified", verdict);
    }
  }
  return out.take();
}

}  // namespace leibniz::reference
