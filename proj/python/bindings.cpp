#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "leibniz/catalog.hpp"
#include "leibniz/cli.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/degeneration.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/json_io.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.str()); }

// Accepts int, str or fractions.Fraction.
Rational to_rational(const py::handle& v) { return Rational::parse(py::str(v).cast<std::string>()); }

catalog::Params to_params(const py::kwargs& kw) {
  catalog::Params p;
  for (const auto& [k, v] : kw) p[k.cast<std::string>()] = to_rational(v);
  return p;
}

py::object invariant(const InvariantValue& v) { return v.defined ? fraction(*v.value) : py::none(); }

py::dict report_dict(const DegenerationReport& r) {
  py::list conds;
  for (const auto& c : r.conditions) {
    py::dict d;
    d["condition"] = c.condition;
    d["status"] = c.status;
    d["lhs"] = c.lhs;
    d["rhs"] = c.rhs;
    conds.append(d);
  }
  py::dict out;
  out["source"] = r.source;
  out["target"] = r.target;
  out["conditions"] = conds;
  out["verdict"] = r.ruled_out ? "ruled_out" : "possible";
  out["reasons"] = r.reasons;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Leibniz algebra computations";

  static py::exception<Error> base(m, "LeibnizError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base, (std::string(e.kind()) + ": " + e.what()).c_str());
    }
  });

  py::class_<Algebra>(m, "Algebra")
      .def_readonly("name", &Algebra::name)
      .def_readonly("basis", &Algebra::basis_labels)
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("nilradical",
                             [](const Algebra& a) -> py::object {
                               if (!a.nilradical) return py::none();
                               py::list l;
                               for (auto i : *a.nilradical) l.append(i + 1);
                               return l;
                             })
      .def_property_readonly("brackets",
                             [](const Algebra& a) {
                               py::list out;
                               const std::size_t d = a.dim();
                               for (std::size_t i = 0; i < d; ++i)
                                 for (std::size_t j = 0; j < d; ++j)
                                   for (std::size_t k = 0; k < d; ++k)
                                     if (!a.tensor.at(i, j, k).is_zero())
                                       out.append(py::make_tuple(i + 1, j + 1, k + 1, fraction(a.tensor.at(i, j, k))));
                               return out;
                             })
      .def("to_json", [](const Algebra& a) { return io::algebra_to_json(a).dump(); })
      .def("__repr__", [](const Algebra& a) { return "<Algebra " + a.name + ">"; });

  m.def("build", [](const std::string& key, std::size_t n, const py::kwargs& kw) {
    return catalog::build(key, n, to_params(kw));
  }, py::arg("key"), py::arg("n"));
  m.def("from_name", &catalog::build_from_name, py::arg("name"));
  m.def("from_json", [](const std::string& text) { return io::algebra_from_json(io::json::parse(text)); });
  m.def("catalog_keys", [] {
    std::vector<std::string> keys;
    for (const auto& e : catalog::list_entries()) keys.push_back(e.key);
    return keys;
  });

  m.def("is_leibniz", [](const Algebra& a) { return is_leibniz(a.tensor); });
  m.def("leibniz_defects", [](const Algebra& a) {
    py::list out;
    for (const auto& d : leibniz_defects(a.tensor)) out.append(py::make_tuple(d.i + 1, d.j + 1, d.k + 1));
    return out;
  });
  m.def("lower_central_dims", [](const Algebra& a) { return lower_central_dims(a.tensor); });
  m.def("derived_dims", [](const Algebra& a) { return derived_dims(a.tensor); });
  m.def("is_nilpotent", [](const Algebra& a) { return is_nilpotent(a.tensor); });
  m.def("is_solvable", [](const Algebra& a) { return is_solvable(a.tensor); });

  m.def("derivation_dim", [](const Algebra& a) { return derivation_dim(a.tensor); });
  m.def("cohomology_dims", [](const Algebra& a) {
    const auto c = cohomology_dims(a.tensor);
    py::dict d;
    d["der"] = c.der;
    d["zl2"] = c.zl2;
    d["bl2"] = c.bl2;
    d["hl2"] = c.hl2;
    return d;
  });
  m.def("representative_is_cocycle", [](const Algebra& a, const std::string& key, std::size_t n, const std::string& which) {
    return is_cocycle(a.tensor, paper_cocycle(key, n, which, a.params));
  });

  m.def("c11", [](const Algebra& a) { return invariant(c11_exact(a.tensor)); });
  m.def("cij", [](const Algebra& a, unsigned i, unsigned j, std::size_t samples) {
    return invariant(cij_sampled(a.tensor, i, j, samples, sampling_seed()));
  }, py::arg("algebra"), py::arg("i"), py::arg("j"), py::arg("samples") = 16);
  m.def("orbit_dim", [](const Algebra& a) { return orbit_dim(a.tensor); });
  m.def("degeneration_report", [](const Algebra& s, const Algebra& t) { return report_dict(degeneration_report(s, t)); });

  m.def("builtin_fixtures", [](std::size_t n) {
    py::list out;
    for (const auto& f : builtin_fixtures(n)) {
      std::string verdict;
      try {
        run_fixture(f);
        verdict = "verified";
      } catch (const Error& e) {
        verdict = e.kind();
      }
      out.append(py::make_tuple(f.name, verdict));
    }
    return out;
  });

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
