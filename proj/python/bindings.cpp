#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotsurgery/family.hpp"
#include "knotsurgery/json_io.hpp"
#include "knotsurgery/knot.hpp"
#include "knotsurgery/laurent.hpp"
#include "knotsurgery/surgery.hpp"

namespace py = pybind11;
using namespace knotsurgery;

namespace {

py::object to_pyint(const Integer& c)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::list terms_of(const LaurentPoly& a)
{
    py::list out;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
        out.append(py::make_tuple(py::tuple(py::cast(it->first)), to_pyint(it->second)));
    return out;
}

py::dict row_to_dict(const FamilyRow& row)
{
    py::dict d;
    d["p"] = row.p;
    d["lower_bound"] = row.lower_bound;
    d["lemma63_ok"] = row.lemma63_ok;
    d["genus"] = row.genus;
    d["span"] = row.span;
    d["delta_gamma"] = row.delta_gamma;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Alexander and Seiberg-Witten invariants of the knot-surgery family X_p";

    py::register_exception<Error>(m, "KnotSurgeryError", PyExc_ValueError);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init([](const std::string& text, std::optional<std::vector<std::string>> variables) {
                 return variables ? parse_poly(text, VariableSet(*variables)) : parse_poly(text);
             }),
             py::arg("text"), py::arg("variables") = py::none())
        .def_property_readonly("variables", [](const LaurentPoly& a) { return a.variables().names(); })
        .def_property_readonly("terms", &terms_of, "(exponents, coefficient) pairs, highest first")
        .def("term_count", &LaurentPoly::term_count)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("to_json", [](const LaurentPoly& a) { return to_json(a).dump(); })
        .def_static("from_json", [](const std::string& s) { return poly_from_json(Json::parse(s)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const LaurentPoly& a, std::uint64_t k) { return pow(a, k); })
        .def("__str__", [](const LaurentPoly& a) { return to_string(a); })
        .def("__repr__", [](const LaurentPoly& a) { return "LaurentPoly('" + to_string(a) + "')"; });

    m.def("substitute",
          [](const LaurentPoly& a, const std::vector<std::string>& target,
             const std::map<std::string, Exponents>& images) {
              MonomialImages imgs(images.begin(), images.end());
              return substitute(a, VariableSet(target), imgs);
          },
          py::arg("poly"), py::arg("target"), py::arg("images"));
    m.def("evaluate_at_one", [](const LaurentPoly& a, const std::string& v) { return evaluate_at_one(a, v); });
    m.def("exact_divide", &exact_divide);
    m.def("symmetrize", &symmetrize);
    m.def("equal_up_to_units", &equal_up_to_units);

    m.def("alexander_torus",
          [](std::int64_t p, std::int64_t q, const std::string& var) { return alexander_torus(TorusKnotSpec(p, q), var); },
          py::arg("p"), py::arg("q"), py::arg("var") = "t");
    m.def("alexander",
          [](const std::string& expr, const std::string& var) { return alexander_expr(parse_knot_expr(expr), var); },
          py::arg("expr"), py::arg("var") = "t", "Alexander polynomial of a knot expression such as 'sum(torus(2,3),unknot)'");
    m.def("alexander_fox_torus",
          [](std::int64_t p, std::int64_t q) {
              const TorusKnotSpec k(p, q);
              return alexander_fox_oracle(torus_knot_presentation(k), torus_knot_abelianization(k));
          },
          py::arg("p"), py::arg("q"));
    m.def("genus_torus", [](std::int64_t p, std::int64_t q) { return genus_torus(TorusKnotSpec(p, q)); });

    m.def("torres_specialize", &torres_specialize, py::arg("delta_gamma"), py::arg("lk"));
    m.def("sw_link_surgery",
          [](std::int64_t n, std::int64_t p, const LaurentPoly& delta_l) {
              return sw_link_surgery(SurgerySpec(n, LinkFamilyMember(p)), delta_l);
          },
          py::arg("n"), py::arg("p"), py::arg("delta_l"));
    m.def("sw_specialized",
          [](std::int64_t p, std::int64_t n, std::optional<LaurentPoly> delta_l) {
              const SWResult r = sw_specialized(SurgerySpec(n, LinkFamilyMember(p)), delta_l);
              py::dict d;
              d["p"] = r.p;
              d["n"] = r.n;
              d["specialization"] = r.specialization_at_tK1;
              d["lower_bound"] = r.basic_class_lower_bound;
              d["full_polynomial"] = r.polynomial ? py::cast(*r.polynomial) : py::none();
              return d;
          },
          py::arg("p"), py::arg("n") = 1, py::arg("delta_l") = py::none());
    m.def("basic_class_lower_bound", &basic_class_lower_bound);

    m.def("analyze_family",
          [](std::int64_t n, std::int64_t p_min, std::int64_t p_max, std::int64_t p_cap) {
              FamilyReport r;
              {
                  py::gil_scoped_release release;
                  r = analyze_family(n, p_min, p_max, p_cap);
              }
              py::list rows;
              for (const auto& row : r.rows)
                  rows.append(row_to_dict(row));
              return rows;
          },
          py::arg("n"), py::arg("p_min"), py::arg("p_max"), py::arg("p_cap") = kDefaultPCap);
    m.def("family_csv", [](std::int64_t n, std::int64_t p_min, std::int64_t p_max) {
        return to_csv(analyze_family(n, p_min, p_max));
    });

    py::class_<UnboundednessCertificate>(m, "Certificate")
        .def_readonly("target", &UnboundednessCertificate::target)
        .def_property_readonly("witnesses",
                               [](const UnboundednessCertificate& c) {
                                   std::vector<std::pair<std::int64_t, std::size_t>> out;
                                   for (const auto& w : c.witnesses)
                                       out.emplace_back(w.p, w.lower_bound);
                                   return out;
                               })
        .def("to_json", [](const UnboundednessCertificate& c) { return to_json(c).dump(2); })
        .def_static("from_json", [](const std::string& s) { return certificate_from_json(Json::parse(s)); });
    m.def("certify_unbounded", &certify_unbounded, py::arg("target"), py::arg("p_cap") = kDefaultPCap);
    m.def("verify_certificate", &verify_certificate, py::arg("certificate"), py::arg("n") = 1);
}
