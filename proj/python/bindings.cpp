#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blowcone/cli.hpp"
#include "blowcone/errors.hpp"
#include "blowcone/lvample.hpp"
#include "blowcone/nef_cones.hpp"
#include "blowcone/oracle.hpp"
#include "blowcone/seshadri.hpp"
#include "blowcone/space_model.hpp"

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction. Incoming values may
// be int, str ("p" or "p/q") or Fraction.
namespace pybind11::detail {

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    std::string text;
    if (py::isinstance<py::str>(src)) {
      text = src.cast<std::string>();
    } else if (py::isinstance<py::int_>(src) && !py::isinstance<py::bool_>(src)) {
      text = py::str(src).cast<std::string>();
    } else {
      const auto fraction = py::module_::import("fractions").attr("Fraction");
      if (!py::isinstance(src, fraction)) return false;
      text = py::str(src.attr("numerator")).cast<std::string>() + "/" +
             py::str(src.attr("denominator")).cast<std::string>();
    }
    try {
      value = blowcone::parse_rational(text);
    } catch (const blowcone::ParseError&) {
      return false;
    }
    return true;
  }

  static handle cast(const mpq_class& src, return_value_policy, handle) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(blowcone::to_string(src)).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace blowcone;

BlowupSpace make_space(int n, const std::string& centers, int count) {
  if (centers == "lines") return BlowupSpace::lines(n, count);
  if (centers == "points") return BlowupSpace::points(n, count);
  throw std::invalid_argument("centers must be 'lines' or 'points'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nef cones, Seshadri constants and l-very ampleness on blow-ups of projective space";

  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_ValueError);
  py::register_exception<NotAmpleError>(m, "NotAmpleError", PyExc_ValueError);
  py::register_exception<NotNefError>(m, "NotNefError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<BlowupSpace>(m, "BlowupSpace")
      .def(py::init(&make_space), py::arg("n"), py::arg("centers"), py::arg("count"))
      .def_static("lines", &BlowupSpace::lines, py::arg("n"), py::arg("r"))
      .def_static("points", &BlowupSpace::points, py::arg("n"), py::arg("s"))
      .def_property_readonly("n", &BlowupSpace::dimension)
      .def_property_readonly("count", &BlowupSpace::center_count)
      .def_property_readonly("centers",
                             [](const BlowupSpace& s) { return s.has_line_centers() ? "lines" : "points"; })
      .def_property_readonly("supported", &BlowupSpace::line_theorem_supported)
      .def("__eq__", [](const BlowupSpace& a, const BlowupSpace& b) { return a == b; })
      .def("__repr__", &BlowupSpace::name);

  py::class_<DivisorClass>(m, "DivisorClass")
      .def(py::init([](mpq_class d, std::vector<mpq_class> mult) { return DivisorClass{d, mult}; }),
           py::arg("d"), py::arg("m"))
      .def_readonly("d", &DivisorClass::d)
      .def_readonly("m", &DivisorClass::m)
      .def("__eq__", [](const DivisorClass& a, const DivisorClass& b) { return a == b; })
      .def("__repr__", [](const DivisorClass& D) { return to_string(D); });

  py::class_<CurveClass>(m, "CurveClass")
      .def(py::init([](mpq_class a, std::vector<mpq_class> b, mpq_class mult) {
             return CurveClass{a, b, mult};
           }),
           py::arg("a"), py::arg("b"), py::arg("point_multiplicity"))
      .def_readonly("a", &CurveClass::a)
      .def_readonly("b", &CurveClass::b)
      .def_readonly("point_multiplicity", &CurveClass::point_multiplicity)
      .def("__eq__", [](const CurveClass& a, const CurveClass& b) { return a == b; })
      .def("__repr__", [](const CurveClass& C) { return to_string(C); });

  m.def("intersect", &intersect, py::arg("space"), py::arg("divisor"), py::arg("curve"));
  m.def("curve_catalog", &curve_catalog, py::arg("space"));
  m.def("scale", &scale, py::arg("divisor"), py::arg("c"));

  m.def(
      "cone_description",
      [](const BlowupSpace& space) {
        const auto& cone = cone_description(space);
        std::vector<std::string> facets;
        for (const auto& f : cone.facets()) facets.push_back(f.describe());
        return py::make_tuple(facets, cone.generators());
      },
      py::arg("space"), "(facet descriptions, generators)");
  m.def(
      "is_nef",
      [](const BlowupSpace& space, const DivisorClass& D) {
        const auto verdict = is_nef(space, D);
        const auto& facets = cone_description(space).facets();
        std::vector<std::string> tight;
        for (auto i : verdict.tight) tight.push_back(facets[i].describe());
        return py::make_tuple(verdict.nef, tight);
      },
      py::arg("space"), py::arg("divisor"), "(nef, tight facet descriptions)");
  m.def("is_ample", &is_ample, py::arg("space"), py::arg("divisor"));
  m.def(
      "decompose",
      [](const BlowupSpace& space, const DivisorClass& D) {
        std::vector<std::pair<DivisorClass, mpq_class>> terms;
        for (const auto& t : decompose(space, D).terms) terms.emplace_back(t.generator, t.weight);
        return terms;
      },
      py::arg("space"), py::arg("divisor"), "[(generator, weight), ...]");

  m.def(
      "seshadri_lines",
      [](const BlowupSpace& space, const DivisorClass& L, bool allow_non_ample) {
        const auto r = seshadri_lines(space, L, SeshadriOptions{allow_non_ample});
        return py::make_tuple(r.value, r.witnesses, r.ample);
      },
      py::arg("space"), py::arg("divisor"), py::arg("allow_non_ample") = false,
      "(value, witnesses, ample)");
  m.def("seshadri_upper_bound_points", &seshadri_upper_bound_points, py::arg("space"),
        py::arg("divisor"));
  m.def(
      "nth_root_bound",
      [](const BlowupSpace& space, const DivisorClass& L) {
        const auto b = nth_root_bound(space, L);
        return py::make_tuple(b.radicand, b.approx);
      },
      py::arg("space"), py::arg("divisor"), "(exact radicand L^n, approximate n-th root)");

  m.def(
      "compute_bl",
      [](int l, const BlowupSpace& space, const DivisorClass& L) {
        const auto bl = compute_bl(LvaQuery::make(l, space, L));
        return py::make_tuple(bl.value, to_string(bl.branch));
      },
      py::arg("l"), py::arg("space"), py::arg("divisor"));
  m.def(
      "is_l_very_ample",
      [](int l, const BlowupSpace& space, const DivisorClass& L) {
        const auto v = is_l_very_ample(LvaQuery::make(l, space, L));
        return py::make_tuple(v.applicable, v.applicable ? py::object(py::bool_(v.very_ample)) : py::none());
      },
      py::arg("l"), py::arg("space"), py::arg("divisor"),
      "(applicable, verdict or None when not applicable)");
  m.def(
      "seshadri_lower_bound",
      [](int l, const BlowupSpace& space, const DivisorClass& L, bool tail_at_most) {
        const auto r = seshadri_lower_bound(LvaQuery::make(l, space, L),
                                            tail_at_most ? TailMode::AtMost : TailMode::Equal);
        return r.bound;
      },
      py::arg("l"), py::arg("space"), py::arg("divisor"), py::arg("tail_at_most") = false);

  m.def(
      "run",
      [](const std::string& command, const std::string& problem, std::uint64_t seed,
         std::size_t samples) {
        cli::VerifyOptions options;
        options.seed = seed;
        options.samples = samples;
        nlohmann::json doc;
        try {
          doc = nlohmann::json::parse(problem);
        } catch (const nlohmann::json::parse_error& e) {
          throw ParseError(e.what());
        }
        const auto outcome = cli::run(command, doc, options);
        return py::make_tuple(outcome.document.dump(), outcome.exit_code);
      },
      py::arg("command"), py::arg("problem"), py::arg("seed") = 0, py::arg("samples") = 1000,
      "Run a CLI command on a JSON problem document; returns (json text, exit code).");
}
