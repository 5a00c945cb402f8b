#include "leibniz/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "leibniz/errors.hpp"

namespace leibniz::catalog {

namespace {

// Writes tables in 1-based notation: basis e_1..e_n, x = n+1.
class TableBuilder {
 public:
  TableBuilder(std::size_t n, bool with_x) : n_(n), t_(n + (with_x ? 1 : 0)) {}

  std::size_t x() const { return n_ + 1; }

  /// [e_i, e_j] += c e_k, all indices 1-based.
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (c.is_zero()) return;
    t_.at(i - 1, j - 1, k - 1) += c;
  }

  StructureTensor take() { return std::move(t_); }

 private:
  std::size_t n_;
  StructureTensor t_;
};

using Builder = std::function<StructureTensor(std::size_t n, const Params& p)>;

Rational param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  return it == p.end() ? Rational(0) : it->second;
}

Rational indexed(const Params& p, const std::string& prefix, std::size_t i) {
  return param(p, prefix + std::to_string(i));
}

// [e_i, e_1] = e_{i+1}, 2 <= i <= n-1: the filiform chain shared by most tables.
void filiform_chain(TableBuilder& b, std::size_t n) {
  for (std::size_t i = 2; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
}

StructureTensor build_nf(std::size_t n, const Params&) {
  TableBuilder b(n, false);
  for (std::size_t i = 1; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  return b.take();
}

StructureTensor build_rnf(std::size_t n, const Params&) {
  TableBuilder b(n, true);
  const auto x = b.x();
  for (std::size_t i = 1; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  b.add(x, 1, 1, -1);
  for (std::size_t i = 1; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i));
  return b.take();
}

StructureTensor build_f1g(std::size_t n, const Params&) {
  TableBuilder b(n, false);
  filiform_chain(b, n);
  return b.take();
}

StructureTensor build_f2g(std::size_t n, const Params&) {
  TableBuilder b(n, false);
  b.add(1, 1, 3, 1);
  for (std::size_t i = 3; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  return b.take();
}

StructureTensor build_f3g(std::size_t n, const Params& p) {
  const Rational alpha = param(p, "alpha");
  TableBuilder b(n, false);
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    b.add(i, 1, i + 1, 1);
    b.add(1, i, i + 1, -1);
  }
  // [e_i, e_{n+1-i}] = alpha (-1)^{i+1} e_n; the skew partner is the same
  // relation read at index n+1-i, consistent when n is even.
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    const Rational c = (i % 2 == 1) ? alpha : -alpha;
    b.add(i, n + 1 - i, n, c);
  }
  return b.take();
}

StructureTensor build_f1fam(std::size_t n, const Params& p) {
  TableBuilder b(n, false);
  filiform_chain(b, n);
  b.add(1, 2, n, param(p, "theta"));
  for (std::size_t j = 2; j + 2 <= n; ++j)
    for (std::size_t s = 4; s <= n + 2 - j; ++s) b.add(j, 2, j + s - 2, indexed(p, "a", s));
  return b.take();
}

StructureTensor build_f2fam(std::size_t n, const Params& p) {
  TableBuilder b(n, false);
  b.add(1, 1, 3, 1);
  for (std::size_t i = 3; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  for (std::size_t k = 4; k <= n; ++k) b.add(1, 2, k, indexed(p, "b", k));
  b.add(2, 2, n, param(p, "gamma"));
  for (std::size_t j = 3; j + 2 <= n; ++j)
    for (std::size_t s = 4; s <= n + 2 - j; ++s) b.add(j, 2, j + s - 2, indexed(p, "b", s));
  return b.take();
}

// Common part of R_2 .. R_4: filiform chain, [x,e_1] = -e_1, [e_1,x] = e_1.
TableBuilder r_common(std::size_t n) {
  TableBuilder b(n, true);
  filiform_chain(b, n);
  b.add(b.x(), 1, 1, -1);
  b.add(1, b.x(), 1, 1);
  return b;
}

StructureTensor build_r1(std::size_t n, const Params&) {
  TableBuilder b(n, true);
  const auto x = b.x();
  filiform_chain(b, n);
  b.add(x, 1, 1, -1);
  b.add(x, 1, 2, -1);
  b.add(1, x, 1, 1);
  for (std::size_t i = 2; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i) - 1);
  return b.take();
}

StructureTensor build_r2(std::size_t n, const Params& p) {
  const Rational alpha = param(p, "alpha");
  auto b = r_common(n);
  for (std::size_t i = 2; i <= n; ++i) b.add(i, b.x(), i, Rational(static_cast<std::int64_t>(i) - 1) + alpha);
  return b.take();
}

StructureTensor build_r3(std::size_t n, const Params&) {
  auto b = r_common(n);
  const auto x = b.x();
  for (std::size_t i = 2; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n));
  b.add(x, x, n, 1);
  return b.take();
}

StructureTensor build_r4(std::size_t n, const Params&) {
  auto b = r_common(n);
  const auto x = b.x();
  b.add(1, x, n, 1);
  for (std::size_t i = 2; i <= n; ++i)
    b.add(i, x, i, static_cast<std::int64_t>(i) + 1 - static_cast<std::int64_t>(n));
  b.add(x, x, n - 1, -1);
  return b.take();
}

StructureTensor build_r5(std::size_t n, const Params& p) {
  TableBuilder b(n, true);
  const auto x = b.x();
  b.add(1, 1, 3, 1);
  filiform_chain(b, n);
  b.add(1, x, 2, 1);
  for (std::size_t i = 4; i + 1 <= n; ++i) b.add(1, x, i, indexed(p, "a", i));
  for (std::size_t i = 2; i <= n; ++i) {
    b.add(i, x, i, 1);
    for (std::size_t j = i + 2; j <= n; ++j) b.add(i, x, j, indexed(p, "a", j - i + 2));
  }
  return b.take();
}

StructureTensor build_rl1(std::size_t n, const Params&) {
  TableBuilder b(n, true);
  const auto x = b.x();
  const Rational half = Rational(static_cast<std::int64_t>(n) - 1, 2);
  b.add(1, 1, 3, 1);
  b.add(2, 2, n, 1);
  for (std::size_t i = 3; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  b.add(x, 2, 2, -half);
  b.add(x, 1, 1, -1);
  b.add(1, x, 1, 1);
  b.add(2, x, 2, half);
  // (i-1) e_i: the printed "i e_i" violates the Leibniz identity and
  // disagrees with the trace sum 1 + 2 + ... + (n-1) + (n-1)/2.
  for (std::size_t i = 3; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i) - 1);
  return b.take();
}

StructureTensor build_rl2(std::size_t n, const Params& p) {
  const Rational beta = param(p, "beta");
  TableBuilder b(n, true);
  const auto x = b.x();
  const std::size_t m = (n + 3) / 2;
  const Rational half = Rational(static_cast<std::int64_t>(n) - 1, 2);
  b.add(1, 1, 3, 1);
  b.add(1, 2, m, beta);
  for (std::size_t i = 3; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  b.add(2, 2, n, 1);
  b.add(x, 1, 1, -1);
  for (std::size_t i = 3; i <= (n + 1) / 2; ++i) b.add(i, 2, (n - 1 + 2 * i) / 2, beta);
  b.add(1, x, 1, 1);
  b.add(x, 2, 2, -half);
  b.add(x, 2, (n + 1) / 2, -beta);
  b.add(2, x, 2, half);
  for (std::size_t i = 3; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i) - 1);
  return b.take();
}

StructureTensor build_rl3(std::size_t n, const Params& p) {
  const auto j = static_cast<std::size_t>(std::stoul(param(p, "j").str()));
  TableBuilder b(n, true);
  const auto x = b.x();
  b.add(1, 1, 3, 1);
  b.add(1, 2, j, 1);
  for (std::size_t i = 3; i + 1 <= n; ++i) b.add(i, 1, i + 1, 1);
  for (std::size_t i = 3; i + j <= n + 2; ++i) b.add(i, 2, j + i - 2, 1);
  b.add(x, 1, 1, -1);
  b.add(x, 2, 2, -static_cast<std::int64_t>(j - 2));
  b.add(x, 2, j - 1, -1);
  b.add(1, x, 1, 1);
  b.add(2, x, 2, static_cast<std::int64_t>(j - 2));
  for (std::size_t i = 3; i <= n; ++i) b.add(i, x, i, static_cast<std::int64_t>(i) - 1);
  return b.take();
}

StructureTensor build_abelian(std::size_t n, const Params&) { return StructureTensor(n); }

struct Family {
  Entry entry;
  Builder builder;
  std::function<void(std::size_t n, const Params& p)> check;  // extra range checks
};

ParamSpec scalar(std::string name, std::optional<Rational> def, std::string note = {}) {
  return ParamSpec{std::move(name), false, 0, false, std::move(def), std::move(note)};
}

ParamSpec series(std::string prefix, std::size_t first, std::string note = {}) {
  return ParamSpec{std::move(prefix), true, first, false, Rational(0), std::move(note)};
}

const std::vector<Family>& families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> f;
    auto nilpotent = [](std::string key, std::string desc, std::size_t min_n, std::string validity,
                        std::vector<ParamSpec> params, Builder builder) {
      return Family{Entry{std::move(key), std::move(desc), min_n, std::move(validity), 0, false, std::move(params)},
                    std::move(builder), nullptr};
    };
    auto solvable = [](std::string key, std::string desc, std::size_t min_n, std::string validity,
                       std::vector<ParamSpec> params, Builder builder) {
      return Family{Entry{std::move(key), std::move(desc), min_n, std::move(validity), 1, true, std::move(params)},
                    std::move(builder), nullptr};
    };
    f.push_back(nilpotent("Abelian", "abelian algebra of dimension n", 0, "n >= 0", {}, build_abelian));
    f.push_back(nilpotent("NF", "null-filiform NF_n: [e_i,e_1]=e_{i+1}", 1, "n >= 1", {}, build_nf));
    f.push_back(solvable("RNF", "solvable RNF_n with nilradical NF_n", 1, "n >= 1", {}, build_rnf));
    f.push_back(nilpotent("F1g", "naturally graded filiform F_n^1", 3, "n >= 3", {}, build_f1g));
    f.push_back(nilpotent("F2g", "naturally graded filiform F_n^2", 3, "n >= 3", {}, build_f2g));
    {
      Family fam = nilpotent("F3g", "naturally graded filiform F_n^3(alpha)", 3,
                             "n >= 3; alpha in {0,1} for even n, alpha = 0 for odd n",
                             {scalar("alpha", Rational(0), "alpha in {0,1} (even n) or 0 (odd n)")}, build_f3g);
      fam.check = [](std::size_t n, const Params& p) {
        const Rational a = param(p, "alpha");
        if (n % 2 == 1 && !a.is_zero()) throw BadParams("F3g: alpha must be 0 for odd n");
        if (!a.is_zero() && a != Rational(1)) throw BadParams("F3g: alpha must be 0 or 1");
      };
      f.push_back(std::move(fam));
    }
    f.push_back(nilpotent("F1fam", "filiform family F_1(a_4,...,a_n,theta)", 3, "n >= 3",
                          {series("a", 4, "a4..an"), scalar("theta", Rational(0))}, build_f1fam));
    f.push_back(nilpotent("F2fam", "filiform family F_2(b_4,...,b_n,gamma)", 3, "n >= 3",
                          {series("b", 4, "b4..bn"), scalar("gamma", Rational(0))}, build_f2fam));
    f.push_back(solvable("R1", "solvable R_1 with nilradical F_n^1", 3, "n >= 3", {}, build_r1));
    f.push_back(solvable("R2", "solvable R_2(alpha) with nilradical F_n^1", 3, "n >= 3",
                         {scalar("alpha", std::nullopt)}, build_r2));
    f.push_back(solvable("R3", "solvable R_3 with nilradical F_n^1", 3, "n >= 3", {}, build_r3));
    f.push_back(solvable("R4", "solvable R_4 with nilradical F_n^1", 3, "n >= 3", {}, build_r4));
    f.push_back(solvable("R5", "solvable R_5(a_4,...,a_n) with nilradical F_n^1", 3,
                         "n >= 3; a_i not normalized", {series("a", 4, "a4..an")}, build_r5));
    f.push_back(solvable("RL1", "solvable R(L_1), nilradical F_2(0,...,0,1)", 3, "n >= 3", {}, build_rl1));
    {
      Family fam = solvable("RL2", "solvable R(L_2^beta), nilradical F_2(0,..,beta,..,0,1)", 5, "odd n >= 5",
                            {scalar("beta", std::nullopt)}, build_rl2);
      fam.check = [](std::size_t n, const Params&) {
        if (n % 2 == 0) throw BadParams("RL2: n must be odd");
      };
      f.push_back(std::move(fam));
    }
    {
      Family fam = solvable("RL3", "solvable R(L_3^j), nilradical F_2 with beta_j = 1", 4, "4 <= j <= n",
                            {ParamSpec{"j", false, 0, true, std::nullopt, "integer 4 <= j <= n"}}, build_rl3);
      fam.check = [](std::size_t n, const Params& p) {
        const Rational j = param(p, "j");
        if (!j.is_integer() || j < Rational(4) || j > Rational(static_cast<std::int64_t>(n)))
          throw BadParams("RL3: j must be an integer with 4 <= j <= n");
      };
      f.push_back(std::move(fam));
    }
    return f;
  }();
  return all;
}

const Family& find_family(std::string_view key) {
  for (const auto& f : families())
    if (f.entry.key == key) return f;
  throw BadParams("unknown catalog key '" + std::string(key) + "'");
}

// Validates names and fills defaults.
Params complete_params(const Entry& e, std::size_t n, const Params& given) {
  Params out;
  std::vector<std::string> allowed;
  for (const auto& spec : e.params) {
    if (spec.indexed) {
      for (std::size_t i = spec.first_index; i <= n; ++i) allowed.push_back(spec.name + std::to_string(i));
    } else {
      allowed.push_back(spec.name);
    }
  }
  for (const auto& [name, value] : given)
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      throw BadParams(e.key + ": unknown parameter '" + name + "' for n = " + std::to_string(n));
  for (const auto& spec : e.params) {
    auto fill = [&](const std::string& name) {
      auto it = given.find(name);
      if (it != given.end()) {
        if (spec.integer && !it->second.is_integer()) throw BadParams(e.key + ": parameter " + name + " must be an integer");
        out[name] = it->second;
      } else if (spec.default_value) {
        out[name] = *spec.default_value;
      } else {
        throw BadParams(e.key + ": missing required parameter '" + name + "'");
      }
    };
    if (spec.indexed) {
      for (std::size_t i = spec.first_index; i <= n; ++i) fill(spec.name + std::to_string(i));
    } else {
      fill(spec.name);
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

const std::vector<Entry>& list_entries() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> out;
    for (const auto& f : families()) out.push_back(f.entry);
    return out;
  }();
  return entries;
}

const Entry& find_entry(std::string_view key) { return find_family(key).entry; }

Algebra build(std::string_view key, std::size_t n, const Params& params) {
  const Family& fam = find_family(key);
  const Entry& e = fam.entry;
  if (n < e.min_n)
    throw BadParams(e.key + ": n = " + std::to_string(n) + " outside the valid range (" + e.validity + ")");
  const Params full = complete_params(e, n, params);
  if (fam.check) fam.check(n, full);

  StructureTensor t = fam.builder(n, full);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  if (e.solvable_extension) labels.push_back("x");
  std::vector<std::size_t> nil(n);
  std::iota(nil.begin(), nil.end(), std::size_t{0});

  Algebra a = Algebra::make(format_name(NameSpec{e.key, n, params}), std::move(t), std::move(nil), std::move(labels));
  a.params = full;
  return a;
}

NameSpec parse_name(std::string_view text) {
  const std::string s = trim(text);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')' || open == 0)
    throw ParseError("catalog name must look like KEY(n[, name=value]...), got '" + s + "'");
  NameSpec spec;
  spec.key = trim(std::string_view(s).substr(0, open));
  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    parts.push_back(trim(std::string_view(inner).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.empty() || parts[0].empty()) throw ParseError("catalog name '" + s + "' lacks n");
  const Rational n = Rational::parse(parts[0]);
  if (!n.is_integer() || n.sign() < 0) throw ParseError("n must be a non-negative integer in '" + s + "'");
  spec.n = static_cast<std::size_t>(std::stoul(n.str()));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw ParseError("parameter '" + parts[i] + "' must be name=value");
    const std::string name = trim(std::string_view(parts[i]).substr(0, eq));
    if (name.empty()) throw ParseError("empty parameter name in '" + s + "'");
    if (spec.params.count(name)) throw ParseError("parameter '" + name + "' given twice");
    spec.params[name] = Rational::parse(trim(std::string_view(parts[i]).substr(eq + 1)));
  }
  return spec;
}

std::string format_name(const NameSpec& spec) {
  std::string out = spec.key + "(" + std::to_string(spec.n);
  for (const auto& [name, value] : spec.params) out += "," + name + "=" + value.str();
  return out + ")";
}

Algebra build_from_name(std::string_view text) {
  const NameSpec spec = parse_name(text);
  return build(spec.key, spec.n, spec.params);
}

bool looks_like_name(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || open == 0) return false;
  for (std::size_t i = 0; i < open; ++i)
    if (!std::isalnum(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

}  // namespace leibniz::catalog
