#include "liegiambelli/acceptance.hpp"
#include "liegiambelli/cli.hpp"
#include "liegiambelli/free_lie.hpp"
#include "liegiambelli/serialize.hpp"
#include "liegiambelli/strata.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace liegiambelli;

namespace {

DeterminantForm parse_form(const std::string& form) {
  if (form == "lambda") return DeterminantForm::lambda;
  if (form == "mu") return DeterminantForm::mu;
  throw py::value_error("form must be 'lambda' or 'mu'");
}

py::dict instance_dict(const DefectInstance& inst) {
  py::dict d;
  d["case"] = std::string(1, inst.family);
  d["parameters"] = inst.parameters;
  d["template"] = inst.nominal.entries;
  d["valid"] = inst.valid;
  if (!inst.valid) {
    d["rejection"] = inst.rejection;
    return d;
  }
  d["defect"] = inst.canonical_defect.entries;
  d["growth"] = std::vector<int>(inst.growth->ranks().begin(), inst.growth->ranks().end());
  d["cd"] = inst.cd;
  d["verified"] = inst.verified;
  return d;
}

std::vector<std::vector<int>> entries(const DefectSet& s) {
  std::vector<std::vector<int>> out;
  for (const auto& d : s) out.push_back(d.entries);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of liegiambelli";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<GradedSeries>(m, "Series")
      .def_property_readonly("order", &GradedSeries::order)
      .def_property_readonly("field", [](const GradedSeries& s) { return std::string(field_name(s.field())); })
      .def("is_zero", &GradedSeries::is_zero)
      .def("text", [](const GradedSeries& s) { return to_text(s); })
      .def("latex", [](const GradedSeries& s) { return to_latex(s); })
      .def("json", [](const GradedSeries& s) { return to_json(s).dump(); })
      .def("component", [](const GradedSeries& s, int j) { return component(s, j); })
      .def("__eq__", [](const GradedSeries& a, const GradedSeries& b) { return a == b; })
      .def("__add__", [](const GradedSeries& a, const GradedSeries& b) { return a + b; })
      .def("__mul__", [](const GradedSeries& a, const GradedSeries& b) { return a * b; })
      .def("__str__", [](const GradedSeries& s) { return to_text(s); })
      .def("__repr__", [](const GradedSeries& s) { return "Series(" + to_text(s) + ")"; })
      .def_static("from_json", [](const std::string& text) { return series_from_json(Json::parse(text)); });

  m.def("invert", &invert);

  m.def("witt_dim", [](std::int64_t n, std::int64_t k) { return witt_dim_exact(n, k).get_str(); });
  m.def("cumulative_dim", [](std::int64_t n, std::int64_t k) { return cumulative_dim_exact(n, k).get_str(); });
  m.def("count_max_depth", [](std::int64_t n, std::int64_t k) { return count_max_depth_exact(n, k).get_str(); });

  m.def(
      "hall_words",
      [](int n, int max_length) {
        const HallBasis h(n, max_length);
        py::list out;
        for (const auto& w : h.words()) {
          py::dict d;
          d["rank"] = w.rank;
          d["length"] = w.length;
          d["depth"] = h.depth(w.rank);
          d["word"] = h.render(w.rank);
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("max_length"));

  m.def(
      "lie_class",
      [](int n, int k, int order, bool mod2, bool generic) {
        const std::optional<int> g = generic ? std::nullopt : std::optional<int>(n);
        return mod2 ? lie_sw_class(n, k, order, g) : lie_total_class(n, k, order, g);
      },
      py::arg("n"), py::arg("k"), py::arg("order"), py::arg("mod2") = false, py::arg("generic") = false);

  m.def(
      "locus",
      [](std::vector<int> growth, int m, const std::string& form, std::optional<int> order) {
        if (growth.empty()) throw py::value_error("empty growth vector");
        const int n = growth.front();
        const GrowthVector r = validate_growth(std::move(growth), n, m);
        const LocusDiagrams d = young_diagrams(r);
        py::dict out;
        out["growth"] = std::vector<int>(r.ranks().begin(), r.ranks().end());
        out["reduced"] = reduce(r).indices;
        out["lambda"] = std::vector<int>(d.lambda.parts().begin(), d.lambda.parts().end());
        out["mu"] = std::vector<int>(d.mu.parts().begin(), d.mu.parts().end());
        out["cd"] = d.cd;
        out["maximal"] = r.is_maximal();
        out["class"] = giambelli_class(r, parse_form(form), order);
        return out;
      },
      py::arg("growth"), py::arg("m"), py::arg("form") = "lambda", py::arg("order") = py::none());

  m.def("saturation_length", &saturation_length);
  m.def("admissible_templates", [](int n, int m) {
    py::list out;
    for (const auto& inst : enumerate_admissible_defects(n, m)) out.append(instance_dict(inst));
    return out;
  });
  m.def("bounding_templates", [](int n, int m) {
    py::list out;
    for (const auto& inst : enumerate_bounding_defects(n, m)) out.append(instance_dict(inst));
    return out;
  });
  m.def("oracle_admissible", [](int n, int m) { return entries(oracle_admissible_defects(n, m)); });
  m.def("oracle_bounding", [](int n, int m) { return entries(oracle_bounding_defects(n, m)); });

  m.def(
      "check",
      [](const std::string& suite) {
        py::list out;
        for (const auto& r : acceptance::run(suite)) {
          py::dict d;
          d["id"] = r.id;
          d["suite"] = r.suite;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["checks"] = r.cases;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
