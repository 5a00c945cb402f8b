#include "leibniz/json_io.hpp"

#include <fstream>

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"

namespace leibniz::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t index_from_json(const json& j, std::size_t d, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  const auto i = v.get<std::int64_t>();
  if (i < 1 || static_cast<std::size_t>(i) > d)
    throw ParseError(std::string("index '") + name + "' = " + std::to_string(i) + " outside 1.." + std::to_string(d));
  return static_cast<std::size_t>(i - 1);
}

template <typename Tensor>
json entries_to_json(const Tensor& t) {
  json entries = json::array();
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (const auto& c = t.at(i, j, k); !c.is_zero())
          entries.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", c.str()}});
  return entries;
}

template <typename Tensor>
void entries_from_json(const json& list, Tensor& t) {
  if (!list.is_array()) throw ParseError("entry list must be an array");
  const std::size_t d = t.dim();
  for (const auto& e : list)
    t.at(index_from_json(e, d, "i"), index_from_json(e, d, "j"), index_from_json(e, d, "k")) +=
        rational_from_json(field(e, "c"));
}

std::size_t dim_from_json(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<std::int64_t>() < 0) throw ParseError("'dim' must be a non-negative integer");
  return d.get<std::size_t>();
}

template <typename T, typename Convert>
Matrix<T> matrix_from_json(const json& j, Convert convert) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j.at(r).is_array() || j.at(r).size() != cols) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = convert(j.at(r).at(c));
  }
  return m;
}

Algebra algebra_or_name(const json& j) {
  if (j.is_string()) return catalog::build_from_name(j.get<std::string>());
  return algebra_from_json(j);
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

json laurent_to_json(const LaurentScalar& s) {
  json out = json::object();
  for (const auto& [e, c] : s.terms()) out[std::to_string(e)] = c.str();
  return out;
}

LaurentScalar laurent_from_json(const json& j) {
  if (!j.is_object()) return LaurentScalar(rational_from_json(j));
  LaurentScalar s;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("Laurent exponent '" + key + "' is not an integer");
    }
    s += LaurentScalar::monomial(rational_from_json(value), e);
  }
  return s;
}

json algebra_to_json(const Algebra& a) {
  json out{{"name", a.name}, {"dim", a.dim()}, {"basis", a.basis_labels}, {"brackets", entries_to_json(a.tensor)}};
  if (a.nilradical) {
    json nil = json::array();
    for (auto i : *a.nilradical) nil.push_back(i + 1);
    out["nilradical"] = nil;
  }
  if (!a.params.empty()) {
    json p = json::object();
    for (const auto& [k, v] : a.params) p[k] = v.str();
    out["params"] = p;
  }
  return out;
}

Algebra algebra_from_json(const json& j) {
  const std::size_t d = dim_from_json(j);
  StructureTensor t(d);
  entries_from_json(field(j, "brackets"), t);
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    for (const auto& l : j.at("basis")) {
      if (!l.is_string()) throw ParseError("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::optional<std::vector<std::size_t>> nil;
  if (j.contains("nilradical")) {
    nil.emplace();
    for (const auto& i : j.at("nilradical")) {
      if (!i.is_number_integer() || i.get<std::int64_t>() < 1 || i.get<std::size_t>() > d)
        throw ParseError("nilradical indices must lie in 1..dim");
      nil->push_back(i.get<std::size_t>() - 1);
    }
  }
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "unnamed";
  Algebra a = Algebra::make(name, std::move(t), std::move(nil), std::move(labels));
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) a.params[k] = rational_from_json(v);
  return a;
}

json cochain_to_json(const Cochain2& c) {
  json entries = json::array();
  const std::size_t d = c.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (const auto& v = c.at(i, j, k); !v.is_zero())
          entries.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", v.str()}});
  return json{{"dim", d}, {"entries", entries}};
}

Cochain2 cochain_from_json(const json& j) {
  Cochain2 c(dim_from_json(j));
  entries_from_json(field(j, "entries"), c);
  return c;
}

json matrix_to_json(const Matrix<Rational>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

Matrix<Rational> rational_matrix_from_json(const json& j) {
  return matrix_from_json<Rational>(j, [](const json& v) { return rational_from_json(v); });
}

Matrix<LaurentScalar> laurent_matrix_from_json(const json& j) {
  return matrix_from_json<LaurentScalar>(j, [](const json& v) { return laurent_from_json(v); });
}

json report_to_json(const DegenerationReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions)
    conditions.push_back({{"condition", c.condition}, {"status", c.status}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return json{{"source", r.source},
              {"target", r.target},
              {"conditions", conditions},
              {"verdict", r.ruled_out ? "ruled_out" : "possible"},
              {"reasons", r.reasons}};
}

json invariant_to_json(const InvariantValue& v) {
  json out{{"defined", v.defined}};
  if (v.value) out["value"] = v.value->str();
  if (v.not_invariant) out["not_invariant"] = true;
  return out;
}

DegenerationFixture fixture_from_json(const json& j) {
  DegenerationFixture f{j.value("name", std::string("fixture")), algebra_or_name(field(j, "source")),
                        BasisChangeFamily::make(laurent_matrix_from_json(field(j, "g")),
                                                laurent_matrix_from_json(field(j, "g_inverse"))),
                        algebra_or_name(field(j, "target")), std::nullopt};
  if (j.contains("post_change")) {
    const json& pc = j.at("post_change");
    f.post_change = RationalChange{rational_matrix_from_json(field(pc, "g")),
                                   rational_matrix_from_json(field(pc, "g_inverse"))};
  }
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Algebra load_algebra(const std::string& spec) {
  if (catalog::looks_like_name(spec)) return catalog::build_from_name(spec);
  try {
    return algebra_from_json(read_json_file(spec));
  } catch (const json::exception& e) {
    throw ParseError(spec + ": " + e.what());
  }
}

}  // namespace leibniz::io
