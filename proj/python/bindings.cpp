#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cycalc/autoeq.hpp"
#include "cycalc/catalog.hpp"
#include "cycalc/constructions.hpp"
#include "cycalc/error.hpp"
#include "cycalc/hodge.hpp"
#include "cycalc/rational.hpp"
#include "cycalc/records.hpp"
#include "cycalc/serre_engine.hpp"

namespace py = pybind11;
using namespace cycalc;

namespace {

Parameters to_parameters(const py::dict& params) {
  Parameters out;
  for (const auto& [k, v] : params) out.emplace_back(py::cast<std::string>(k), py::cast<Int>(v));
  return out;
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

SweepBounds make_bounds(Int max_n, Int max_s, Int max_weight_sum, std::optional<std::vector<std::string>> families,
                        std::optional<std::vector<ConstructionKind>> kinds, bool include_variants) {
  SweepBounds b;
  b.max_n = max_n;
  b.max_s = max_s;
  b.max_weight_sum = max_weight_sum;
  if (families) b.families = *families;
  if (kinds) b.kinds = *kinds;
  b.include_variants = include_variants;
  return b;
}

}  // namespace

PYBIND11_MODULE(_cycalc, m) {
  m.doc() = "Serre functor powers of Kuznetsov components";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "CycalcError", PyExc_ValueError);

  py::enum_<ConstructionKind>(m, "ConstructionKind")
      .value("Divisor", ConstructionKind::Divisor)
      .value("DoubleCover", ConstructionKind::DoubleCover)
      .value("RootStack", ConstructionKind::RootStack);
  m.def("parse_construction", &parse_construction, py::arg("name"), py::arg("cover_degree") = 2);

  py::class_<Rational>(m, "Rational")
      .def(py::init<Int>())
      .def(py::init<Int, Int>())
      .def_static("parse", [](const std::string& s) { return Rational::parse(s); })
      .def_property_readonly("numerator", &Rational::numerator)
      .def_property_readonly("denominator", &Rational::denominator)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });

  py::class_<NormalForm>(m, "NormalForm")
      .def(py::init(&NormalForm::make), py::arg("shift") = 0, py::arg("ltwist") = 0, py::arg("tau") = 0,
           py::arg("chi") = 0)
      .def_readonly("shift", &NormalForm::shift)
      .def_readonly("ltwist", &NormalForm::ltwist)
      .def_readonly("tau", &NormalForm::tau)
      .def_readonly("chi", &NormalForm::chi)
      .def("is_identity", &NormalForm::is_identity)
      .def("is_pure_shift", &NormalForm::is_pure_shift)
      .def(py::self == py::self)
      .def("__repr__", [](const NormalForm& nf) { return "NormalForm(" + describe(nf) + ")"; });
  m.def("compose", &compose);
  m.def("power", &power);
  m.def("inverse", &inverse);
  m.def("describe", &describe);

  py::class_<LefschetzBase>(m, "LefschetzBase")
      .def_readonly("id", &LefschetzBase::id)
      .def_readonly("display_name", &LefschetzBase::display_name)
      .def_readonly("dim_m", &LefschetzBase::dim_m)
      .def_readonly("length_m", &LefschetzBase::length_m)
      .def_readonly("rank_b", &LefschetzBase::rank_b)
      .def_readonly("line_bundle_note", &LefschetzBase::line_bundle_note)
      .def_readonly("omega_is_l_minus_m", &LefschetzBase::omega_is_l_minus_m)
      .def_readonly("parameters", &LefschetzBase::parameters)
      .def_readonly("hodge_supported", &LefschetzBase::hodge_supported)
      .def("__repr__", [](const LefschetzBase& b) { return "LefschetzBase(" + b.display_name + ")"; });
  m.def("builtin_ids", &builtin_ids);
  m.def(
      "builtin", [](const std::string& id, const py::dict& params) { return builtin(id, to_parameters(params)); },
      py::arg("id"), py::arg("params") = py::dict());
  m.def("builtin_weighted", &builtin_weighted, py::arg("weights"));
  m.def("fonarev_rank", &fonarev_rank, py::arg("k"), py::arg("n"));

  py::class_<SubstitutionTable>(m, "SubstitutionTable")
      .def_readonly("kind", &SubstitutionTable::kind)
      .def_readonly("d", &SubstitutionTable::d)
      .def_readonly("m", &SubstitutionTable::m)
      .def_readonly("dim_x", &SubstitutionTable::dim_x)
      .def_property_readonly("twist", [](const SubstitutionTable& t) { return t.at(Generator::SphericalTwistX); })
      .def_property_readonly("serre", [](const SubstitutionTable& t) { return t.at(Generator::SerreX); })
      .def_property_readonly("rho", [](const SubstitutionTable& t) { return t.at(Generator::Rho); })
      .def_property_readonly("sigma", [](const SubstitutionTable& t) { return t.at(Generator::Sigma); });
  m.def("substitution_table", &substitution_table, py::arg("kind"), py::arg("d"), py::arg("base"));

  py::class_<FractionalCYWitness>(m, "FractionalCYWitness")
      .def_readonly("p", &FractionalCYWitness::p)
      .def_readonly("q", &FractionalCYWitness::q)
      .def(py::self == py::self)
      .def("__repr__", [](const FractionalCYWitness& w) {
        return "FractionalCYWitness(p=" + std::to_string(w.p) + ", q=" + std::to_string(w.q) + ")";
      });

  py::class_<CaseResult>(m, "CaseResult")
      .def_readonly("base", &CaseResult::base)
      .def_readonly("kind", &CaseResult::kind)
      .def_readonly("d", &CaseResult::d)
      .def_readonly("c", &CaseResult::c)
      .def_readonly("q0", &CaseResult::q0)
      .def_readonly("serre_power", &CaseResult::serre_power_nf)
      .def_readonly("witness", &CaseResult::witness)
      .def_readonly("cy_dimension", &CaseResult::cy_dimension)
      .def_readonly("is_integer_cy", &CaseResult::is_integer_cy)
      .def_readonly("component_is_whole", &CaseResult::component_is_whole)
      .def_readonly("dim_x", &CaseResult::dim_x)
      .def_readonly("error", &CaseResult::error)
      .def("serre_text", &CaseResult::serre_text)
      .def("to_dict", [](const CaseResult& r) { return json_to_py(case_to_json(r)); });

  m.def("serre_power", &serre_power, py::arg("base"), py::arg("kind"), py::arg("d"));
  m.def("closed_form", &closed_form, py::arg("base"), py::arg("kind"), py::arg("d"));
  m.def("extract_witness", &extract_witness, py::arg("nf"), py::arg("q0"));
  m.def("analyze", &analyze, py::arg("base"), py::arg("kind"), py::arg("d"));

  m.def(
      "sweep",
      [](std::optional<std::string> cy_dim, bool integer_cy, bool include_whole, Int max_n, Int max_s,
         Int max_weight_sum, std::optional<std::vector<std::string>> families,
         std::optional<std::vector<ConstructionKind>> kinds, bool include_variants) {
        CaseFilter f;
        if (cy_dim)
          f = CaseFilter::dimension(Rational::parse(*cy_dim));
        else if (integer_cy)
          f = CaseFilter::integer_cy();
        f.include_whole = include_whole;
        const auto bounds = make_bounds(max_n, max_s, max_weight_sum, families, kinds, include_variants);
        py::gil_scoped_release release;
        return sweep(f, bounds);
      },
      py::arg("cy_dim") = py::none(), py::arg("integer_cy") = false, py::arg("include_whole") = false,
      py::arg("max_n") = 30, py::arg("max_s") = 5, py::arg("max_weight_sum") = 30, py::arg("families") = py::none(),
      py::arg("kinds") = py::none(), py::arg("include_variants") = false);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("cases", &VerifyReport::cases)
      .def_readonly("mismatches", &VerifyReport::mismatches)
      .def_readonly("integer_cy_cases", &VerifyReport::integer_cy_cases)
      .def_readonly("dimension_bound_violations", &VerifyReport::dimension_bound_violations)
      .def_readonly("negative_cy_cases", &VerifyReport::negative_cy_cases);
  m.def(
      "verify",
      [](bool full, Int max_n, std::optional<std::vector<std::string>> families) {
        auto bounds = full ? SweepBounds::full() : SweepBounds{};
        bounds.max_n = max_n;
        if (families) bounds.families = *families;
        py::gil_scoped_release release;
        return verify(bounds);
      },
      py::arg("full") = true, py::arg("max_n") = 30, py::arg("families") = py::none());

  py::class_<PoincareSeries>(m, "PoincareSeries")
      .def_readonly("coefficients", &PoincareSeries::coefficients)
      .def("at", &PoincareSeries::at)
      .def("top_degree", &PoincareSeries::top_degree);
  m.def(
      "jacobian_poincare", [](std::vector<Int> w, Int degree) { return jacobian_poincare(w, degree); },
      py::arg("weights"), py::arg("degree"));
  m.def(
      "brute_force_jacobian_dim",
      [](std::vector<Int> w, Int degree, Int a) { return brute_force_jacobian_dim(w, degree, a); },
      py::arg("weights"), py::arg("degree"), py::arg("a"));

  py::class_<HodgeDiamond>(m, "HodgeDiamond")
      .def_property_readonly("dim_x", &HodgeDiamond::dim_x)
      .def("at", &HodgeDiamond::at, py::arg("p"), py::arg("q"))
      .def("total", &HodgeDiamond::total)
      .def("middle_row", &HodgeDiamond::middle_row);
  m.def("hodge_hypersurface", &hodge_hypersurface, py::arg("n"), py::arg("d"));
  m.def("hodge_double_cover", &hodge_double_cover, py::arg("n"), py::arg("d"));

  py::class_<HHProfile>(m, "HHProfile")
      .def(py::init<>())
      .def_readonly("dims", &HHProfile::dims)
      .def("at", &HHProfile::at)
      .def("total", &HHProfile::total)
      .def("__repr__", [](const HHProfile& p) { return "HHProfile(" + render_profile(p) + ")"; });
  m.def("hkr", &hkr, py::arg("diamond"));
  m.def("hh_component", &hh_component, py::arg("hh_x"), py::arg("base"), py::arg("d"));

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("cy_dimension", &CheckReport::cy_dimension)
      .def_readonly("value", &CheckReport::value)
      .def_readonly("nonvanishing", &CheckReport::nonvanishing)
      .def_readonly("component_vanishes", &CheckReport::component_vanishes)
      .def_readonly("value_is_one", &CheckReport::value_is_one);
  m.def("cy_hh_check", &cy_hh_check, py::arg("result"), py::arg("hh_a"));

  py::class_<HHReport>(m, "HHReport")
      .def_readonly("result", &HHReport::result)
      .def_readonly("diamond", &HHReport::diamond)
      .def_readonly("hh_x", &HHReport::hh_x)
      .def_readonly("hh_a", &HHReport::hh_a)
      .def_readonly("check", &HHReport::check)
      .def("to_dict", [](const HHReport& r) { return json_to_py(hh_to_json(r)); });
  m.def("hh_pipeline", &hh_pipeline, py::arg("base"), py::arg("kind"), py::arg("d"));
}
