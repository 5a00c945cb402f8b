#include "leibniz/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/reference_tables.hpp"

namespace leibniz::cli {

namespace {

using io::json;

constexpr const char* kGrammar =
    "targets are catalog names KEY(n[,name=value]...), e.g. \"R2(5,alpha=1/2)\", \"R5(6,a4=1)\", "
    "\"RL3(6,j=4)\", or paths to algebra JSON files";

// Failures that still produced output; maps to exit status 1.
struct ComputationFailed {};

std::string term(const Rational& c, const std::string& label, bool first) {
  std::string out;
  const bool neg = c.sign() < 0;
  const Rational a = neg ? -c : c;
  if (first) out = neg ? "-" : "";
  else out = neg ? " - " : " + ";
  if (a != Rational(1)) out += a.str() + " ";
  return out + label;
}

std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out += term(v[k], labels[k], out.empty());
  return out.empty() ? "0" : out;
}

std::vector<std::string> nilradical_labels(const Algebra& a) {
  std::vector<std::string> out;
  for (auto i : *a.nilradical) out.push_back(a.basis_labels[i]);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return "[" + join(s, ", ") + "]";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- verbs ----

void cmd_catalog(std::ostream& out, bool as_json) {
  json list = json::array();
  for (const auto& e : catalog::list_entries()) {
    json params = json::array();
    std::vector<std::string> names;
    for (const auto& p : e.params) {
      const std::string name = p.indexed ? p.name + std::to_string(p.first_index) + ".." + p.name + "n" : p.name;
      names.push_back(name + (p.default_value ? "" : " (required)"));
      json pj{{"name", name}, {"indexed", p.indexed}, {"required", !p.default_value.has_value()}};
      if (p.default_value) pj["default"] = p.default_value->str();
      if (!p.note.empty()) pj["note"] = p.note;
      params.push_back(pj);
    }
    if (as_json) {
      list.push_back({{"key", e.key},
                      {"description", e.description},
                      {"min_n", e.min_n},
                      {"validity", e.validity},
                      {"dim", e.extra_dims ? "n+1" : "n"},
                      {"params", params}});
    } else {
      out << std::left << std::setw(8) << e.key << std::setw(58) << e.description << e.validity;
      if (!names.empty()) out << "; params " << join(names, ", ");
      out << "\n";
    }
  }
  if (as_json) print_json(out, list);
}

void cmd_show(std::ostream& out, const Algebra& a, bool as_json) {
  if (as_json) return print_json(out, io::algebra_to_json(a));
  out << a.name << "  dim " << a.dim() << "  basis " << join(a.basis_labels, " ") << "\n";
  if (a.nilradical) out << "nilradical: " << join(nilradical_labels(a), " ") << " (verified ideal)\n";
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector p = a.tensor.product(i, j);
      if (!is_zero(p))
        out << "[" << a.basis_labels[i] << "," << a.basis_labels[j] << "] = " << format_vector(p, a.basis_labels) << "\n";
    }
}

void cmd_check(std::ostream& out, const Algebra& a, bool as_json) {
  const auto defects = leibniz_defects(a.tensor);
  const bool leibniz = defects.empty();
  if (as_json) {
    json dj = json::array();
    for (const auto& df : defects) {
      json v = json::array();
      for (const auto& c : df.value) v.push_back(c.str());
      dj.push_back({{"i", df.i + 1}, {"j", df.j + 1}, {"k", df.k + 1}, {"defect", v}});
    }
    json j{{"name", a.name}, {"leibniz", leibniz}, {"defects", dj}};
    if (leibniz) {
      j["lower_central_dims"] = lower_central_dims(a.tensor);
      j["derived_dims"] = derived_dims(a.tensor);
      j["nilpotent"] = is_nilpotent(a.tensor);
      j["solvable"] = is_solvable(a.tensor);
      j["right_annihilator_dim"] = right_annihilator(a.tensor).size();
    }
    print_json(out, j);
  } else {
    out << a.name << ": " << (leibniz ? "Leibniz" : "NOT Leibniz, " + std::to_string(defects.size()) + " defects")
        << "\n";
    for (const auto& df : defects)
      out << "  (" << a.basis_labels[df.i] << "," << a.basis_labels[df.j] << "," << a.basis_labels[df.k]
          << "): " << format_vector(df.value, a.basis_labels) << "\n";
    if (leibniz) {
      out << "lower central dims " << join_counts(lower_central_dims(a.tensor)) << "\n";
      out << "derived dims       " << join_counts(derived_dims(a.tensor)) << "\n";
      out << "nilpotent " << (is_nilpotent(a.tensor) ? "yes" : "no") << ", solvable "
          << (is_solvable(a.tensor) ? "yes" : "no") << "\n";
      out << "dim Ann_r " << right_annihilator(a.tensor).size() << "\n";
    }
  }
  if (!leibniz) throw ComputationFailed{};
}

void cmd_der(std::ostream& out, const Algebra& a, bool as_json) {
  const auto basis = derivation_space(a.tensor);
  if (as_json) {
    json mats = json::array();
    for (const auto& m : basis) mats.push_back(io::matrix_to_json(m));
    return print_json(out, json{{"name", a.name}, {"dim", basis.size()}, {"basis", mats}});
  }
  out << basis.size() << "\n";
  for (std::size_t b = 0; b < basis.size(); ++b) {
    out << "d" << b + 1 << ":";
    for (std::size_t c = 0; c < a.dim(); ++c) {
      Vector col(a.dim());
      for (std::size_t r = 0; r < a.dim(); ++r) col[r] = basis[b](r, c);
      if (!is_zero(col)) out << "  " << a.basis_labels[c] << " -> " << format_vector(col, a.basis_labels) << ";";
    }
    out << "\n";
  }
}

void cmd_cohomology(std::ostream& out, const Algebra& a, bool as_json, bool reps) {
  const auto c = cohomology_dims(a.tensor);
  json j{{"name", a.name}, {"der", c.der}, {"zl2", c.zl2}, {"bl2", c.bl2}, {"hl2", c.hl2}};
  std::vector<std::pair<std::string, std::string>> rep_lines;
  if (reps) {
    const catalog::NameSpec spec = catalog::parse_name(a.name);
    json rj = json::array();
    for (const auto& name : paper_hl2_basis(spec.key, spec.n, a.params)) {
      const auto cochain = paper_cocycle(spec.key, spec.n, name, a.params);
      const bool cocycle = is_cocycle(a.tensor, cochain);
      const bool coboundary = cocycle && in_coboundaries(a.tensor, cochain);
      const std::string status = !cocycle ? "not a cocycle" : (coboundary ? "coboundary" : "nontrivial class");
      rj.push_back({{"name", name}, {"status", status}});
      rep_lines.emplace_back(name, status);
    }
    j["representatives"] = rj;
  }
  if (as_json) return print_json(out, j);
  out << "Der " << c.der << "\nZL2 " << c.zl2 << "\nBL2 " << c.bl2 << "\nHL2 " << c.hl2 << "\n";
  for (const auto& [name, status] : rep_lines) out << "  " << name << ": " << status << "\n";
}

void cmd_invariant(std::ostream& out, const std::string& kind, const Algebra& a, bool as_json, unsigned i, unsigned j,
                   std::size_t samples) {
  if (kind == "orbit") {
    const auto o = orbit_dim(a.tensor);
    if (as_json) return print_json(out, json{{"name", a.name}, {"orbit_dim", o}});
    out << o << "\n";
    return;
  }
  const InvariantValue v =
      kind == "c11" ? c11_exact(a.tensor) : cij_sampled(a.tensor, i, j, samples, sampling_seed());
  if (as_json) {
    json r = io::invariant_to_json(v);
    r["name"] = a.name;
    r["invariant"] = kind == "c11" ? "c11" : "c" + std::to_string(i) + "," + std::to_string(j);
    return print_json(out, r);
  }
  out << v.str() << "\n";
}

void print_report(std::ostream& out, const DegenerationReport& r) {
  out << r.source << " -> " << r.target << "\n";
  for (const auto& c : r.conditions)
    out << "  " << std::left << std::setw(12) << c.condition << std::setw(10) << c.status << c.lhs
        << (c.lhs.empty() ? "" : " vs ") << c.rhs << "\n";
  out << "verdict: " << (r.ruled_out ? "ruled_out (" + join(r.reasons, ", ") + ")" : "possible") << "\n";
}

void cmd_degenerate(std::ostream& out, bool builtin, std::size_t n, const std::string& file, bool as_json) {
  std::vector<DegenerationFixture> fixtures;
  if (builtin) fixtures = builtin_fixtures(n);
  else fixtures.push_back(io::fixture_from_json(io::read_json_file(file)));
  bool all_ok = true;
  json results = json::array();
  for (const auto& f : fixtures) {
    json r{{"fixture", f.name}};
    std::string line;
    try {
      const auto res = run_fixture(f);
      r["verdict"] = "verified";
      r["report"] = io::report_to_json(res.report);
      line = "verified";
      if (res.report.ruled_out) {
        all_ok = false;
        line += " (report rules it out: " + join(res.report.reasons, ", ") + ")";
      }
    } catch (const Error& e) {
      all_ok = false;
      r["verdict"] = e.kind();
      r["message"] = e.what();
      line = std::string(e.kind()) + ": " + e.what();
    }
    results.push_back(r);
    if (!as_json) out << std::left << std::setw(20) << f.name << line << "\n";
  }
  if (as_json) print_json(out, results);
  if (!all_ok) throw ComputationFailed{};
}

void cmd_compare(std::ostream& out, const Algebra& src, const Algebra& dst, bool as_json) {
  const auto r = degeneration_report(src, dst);
  if (as_json) return print_json(out, io::report_to_json(r));
  print_report(out, r);
}

void cmd_report(std::ostream& out, std::size_t nmin, std::size_t nmax, bool as_json) {
  json rows = json::array();
  std::size_t failures = 0;
  for (std::size_t n = nmin; n <= nmax; ++n)
    for (const auto& row : reference::rows_for(n)) {
      if (!row.pass) ++failures;
      if (as_json) {
        rows.push_back({{"n", row.n},
                        {"group", row.group},
                        {"item", row.item},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"status", row.pass ? "pass" : "fail"}});
      } else {
        out << "n=" << std::left << std::setw(3) << row.n << std::setw(16) << row.group << std::setw(30) << row.item
            << "expected " << std::setw(14) << row.expected << " computed " << std::setw(22) << row.computed
            << (row.pass ? "pass" : "FAIL") << "\n";
      }
    }
  if (as_json) print_json(out, json{{"rows", rows}, {"failures", failures}});
  else out << failures << " rows disagree with the published values\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for finite-dimensional Leibniz algebras", "leibniz"};
  app.fallthrough();
  app.require_subcommand(1);
  app.footer(kGrammar);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of tables");

  auto* sub_catalog = app.add_subcommand("catalog", "list catalog families");
  std::string target, second;
  auto* sub_show = app.add_subcommand("show", "print the bracket table");
  sub_show->add_option("target", target, "catalog name or algebra JSON")->required();
  auto* sub_check = app.add_subcommand("check", "Leibniz identity, series and annihilator");
  sub_check->add_option("target", target)->required();
  auto* sub_der = app.add_subcommand("der", "derivation algebra");
  sub_der->add_option("target", target)->required();
  auto* sub_coh = app.add_subcommand("cohomology", "dimensions of Der, ZL2, BL2, HL2");
  sub_coh->add_option("target", target)->required();
  bool reps = false;
  sub_coh->add_flag("--reps", reps, "check the published HL2 representatives (R2..R5)");

  auto* sub_inv = app.add_subcommand("invariant", "c11, sampled cij, or orbit dimension");
  std::string kind;
  unsigned ci = 1, cj = 1;
  std::size_t samples = 16;
  sub_inv->add_option("kind", kind)->required()->check(CLI::IsMember({"c11", "cij", "orbit"}));
  sub_inv->add_option("target", target)->required();
  sub_inv->add_option("--i", ci, "power i for cij")->check(CLI::PositiveNumber);
  sub_inv->add_option("--j", cj, "power j for cij")->check(CLI::PositiveNumber);
  sub_inv->add_option("--samples", samples, "sample pairs for cij")->check(CLI::PositiveNumber);

  auto* sub_deg = app.add_subcommand("degenerate", "verify degeneration fixtures");
  bool builtin = false;
  std::size_t n = 5;
  std::string fixture;
  sub_deg->add_flag("--builtin", builtin, "run the six built-in fixtures");
  sub_deg->add_option("--n", n, "size for --builtin");
  sub_deg->add_option("fixture", fixture, "fixture JSON file");

  auto* sub_cmp = app.add_subcommand("compare", "necessary conditions for SOURCE -> TARGET");
  sub_cmp->add_option("source", target)->required();
  sub_cmp->add_option("target", second)->required();

  auto* sub_rep = app.add_subcommand("report", "regenerate published tables");
  std::string which;
  std::size_t nmin = 4, nmax = 6;
  sub_rep->add_option("which", which)->required()->check(CLI::IsMember({"paper"}));
  sub_rep->add_option("--nmin", nmin)->check(CLI::Range(3, 12));
  sub_rep->add_option("--nmax", nmax)->check(CLI::Range(3, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (sub_deg->parsed() && builtin == !fixture.empty())
      throw CLI::ValidationError("degenerate", "give either --builtin or a fixture file");
    if (sub_rep->parsed() && nmin > nmax) throw CLI::ValidationError("report", "--nmin exceeds --nmax");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << "verbs: catalog, show, check, der, cohomology, invariant, degenerate, compare, report\n" << kGrammar << "\n";
    return 2;
  }

  try {
    if (sub_catalog->parsed()) cmd_catalog(out, as_json);
    else if (sub_show->parsed()) cmd_show(out, io::load_algebra(target), as_json);
    else if (sub_check->parsed()) cmd_check(out, io::load_algebra(target), as_json);
    else if (sub_der->parsed()) cmd_der(out, io::load_algebra(target), as_json);
    else if (sub_coh->parsed()) cmd_cohomology(out, io::load_algebra(target), as_json, reps);
    else if (sub_inv->parsed()) cmd_invariant(out, kind, io::load_algebra(target), as_json, ci, cj, samples);
    else if (sub_deg->parsed()) cmd_degenerate(out, builtin, n, fixture, as_json);
    else if (sub_cmp->parsed()) cmd_compare(out, io::load_algebra(target), io::load_algebra(second), as_json);
    else if (sub_rep->parsed()) cmd_report(out, nmin, nmax, as_json);
  } catch (const ComputationFailed&) {
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar << "\n";
    return 2;
  } catch (const BadParams& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace leibniz::cli
