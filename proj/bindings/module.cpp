#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockcas/classify.hpp"
#include "fockcas/element_io.hpp"
#include "fockcas/identities.hpp"
#include "fockcas/modules.hpp"
#include "fockcas/series.hpp"
#include "fockcas/vertex.hpp"

namespace py = pybind11;
using namespace fockcas;

namespace {

// Exact scalars cross the boundary as fractions.Fraction / int / "p/q" strings;
// floats are rejected to keep the no-floating-point contract visible.
py::object to_fraction(const Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

Rational to_rational(py::handle h) {
    if (py::isinstance<py::float_>(h)) {
        throw py::type_error("floating-point scalars are not accepted; pass Fraction, int or 'p/q'");
    }
    return Rational::from_string(py::str(h).cast<std::string>());
}

std::vector<Rational> to_rational_list(py::handle seq) {
    std::vector<Rational> out;
    for (py::handle item : py::iter(seq)) out.push_back(to_rational(item));
    return out;
}

Sector to_sector(const std::string& name) {
    if (name == "untwisted") return Sector::Untwisted;
    if (name == "twisted") return Sector::Twisted;
    throw py::value_error("sector must be 'untwisted' or 'twisted'");
}

HalfInt to_halfint(py::handle h) {
    if (py::isinstance<py::int_>(h)) return HalfInt::whole(h.cast<long long>());
    return parse_halfint(py::str(h).cast<std::string>());
}

py::dict report_dict(const RelationReport& rep) {
    py::dict d;
    d["name"] = rep.name;
    d["pass"] = rep.pass;
    d["detail"] = rep.detail;
    d["residual_terms"] = rep.residual_terms();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Fock-space computations for the rank-1 free boson, its Z2 orbifold and "
              "their Whittaker modules";

    py::register_exception<SectorError>(m, "SectorError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DegenerateType>(m, "DegenerateType", PyExc_ValueError);
    py::register_exception<NotWhittaker>(m, "NotWhittaker", PyExc_ValueError);
    py::register_exception<IrrationalParameter>(m, "IrrationalParameter", PyExc_ValueError);
    py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);

    py::class_<FockVector>(m, "FockVector")
        .def_static(
            "parse",
            [](const std::string& text, py::object sector, const std::string& symbol) {
                std::optional<Sector> s;
                if (!sector.is_none()) s = to_sector(sector.cast<std::string>());
                return parse_element(text, s, symbol);
            },
            py::arg("text"), py::arg("sector") = py::none(), py::arg("symbol") = "vac")
        .def_static(
            "vacuum", [](const std::string& sector) { return FockVector::vacuum(to_sector(sector)); },
            py::arg("sector") = "untwisted")
        .def_property_readonly("sector",
                               [](const FockVector& v) { return sector_name(v.sector()); })
        .def("is_zero", &FockVector::is_zero)
        .def("terms",
             [](const FockVector& v) {
                 py::list out;
                 const char* symbol = v.sector() == Sector::Untwisted ? "vac" : "u";
                 for (const auto& [mono, coeff] : v.terms()) {
                     out.append(py::make_tuple(format_monomial(mono, symbol), to_fraction(coeff)));
                 }
                 return out;
             })
        .def("weight_decompose",
             [](const FockVector& v) {
                 py::dict out;
                 for (const auto& [w, comp] : weight_decompose(v)) {
                     out[py::cast(w.str())] = comp;
                 }
                 return out;
             })
        .def("theta", [](const FockVector& v) { return theta(v); })
        .def("max_weight", [](const FockVector& v) { return v.max_weight().str(); })
        .def("__add__", [](const FockVector& a, const FockVector& b) { return a + b; })
        .def("__sub__", [](const FockVector& a, const FockVector& b) { return a - b; })
        .def("__neg__", [](const FockVector& a) { return -a; })
        .def("__mul__", [](const FockVector& a, py::handle c) { return a * to_rational(c); })
        .def("__rmul__", [](const FockVector& a, py::handle c) { return a * to_rational(c); })
        .def("__eq__", [](const FockVector& a, const FockVector& b) { return a == b; })
        .def("__str__",
             [](const FockVector& v) {
                 return format_element(v, v.sector() == Sector::Untwisted ? "vac" : "u");
             })
        .def("__repr__", [](const FockVector& v) {
            return "FockVector('" + format_element(v, v.sector() == Sector::Untwisted ? "vac" : "u") +
                   "')";
        });

    m.def("parse", [](const std::string& text) { return parse_element(text); }, py::arg("text"));
    m.def(
        "create",
        [](py::handle i, const FockVector& v) { return create(to_halfint(i), v); },
        py::arg("i"), py::arg("v"));
    m.def(
        "annihilate",
        [](py::handle i, const FockVector& v) { return annihilate(to_halfint(i), v); },
        py::arg("i"), py::arg("v"));
    m.def("generator", &generator, py::arg("name"));
    m.def("omega", &virasoro);
    m.def("jay", &jay);
    m.def(
        "graded_dim",
        [](long n, const std::string& parity) {
            Parity p = parity == "even" ? Parity::Even : parity == "odd" ? Parity::Odd : Parity::All;
            if (parity != "even" && parity != "odd" && parity != "all") {
                throw py::value_error("parity must be 'even', 'odd' or 'all'");
            }
            return py::module_::import("builtins").attr("int")(graded_dim(n, p).get_str());
        },
        py::arg("n"), py::arg("parity") = "all");

    m.def("nth_product", &nth_product, py::arg("u"), py::arg("n"), py::arg("v"));
    m.def("translate", &translate, py::arg("u"));
    m.def(
        "commutator_expansion",
        [](const FockVector& u, long long i, const FockVector& v, long long j) {
            py::list out;
            for (const auto& t : commutator_expansion(u, i, v, j)) {
                py::dict d;
                d["k"] = t.k;
                d["coeff"] = to_fraction(t.coeff);
                d["element"] = t.element;
                d["mode"] = t.mode;
                out.append(d);
            }
            return out;
        },
        py::arg("u"), py::arg("i"), py::arg("v"), py::arg("j"));
    m.def("verify_borcherds", &verify_borcherds, py::arg("u"), py::arg("v"), py::arg("w"),
          py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "cmn_table",
        [](long maxdeg) {
            CmnTable t = cmn_table(maxdeg);
            py::dict out;
            for (long mm = 0; mm <= maxdeg; ++mm) {
                for (long nn = 0; mm + nn <= maxdeg; ++nn) {
                    out[py::make_tuple(mm, nn)] = to_fraction(t.at(mm, nn));
                }
            }
            return out;
        },
        py::arg("maxdeg"));
    m.def(
        "exp_delta",
        [](const FockVector& u) {
            py::dict out;
            XGradedFock x = exp_delta(u);
            for (const auto& [d, comp] : x.components()) out[py::cast(d)] = comp;
            return out;
        },
        py::arg("u"));

    py::class_<WhittakerParams>(m, "WhittakerParams")
        .def(py::init([](const std::string& sector, py::handle zeta) {
                 return WhittakerParams(to_sector(sector), to_rational_list(zeta));
             }),
             py::arg("sector"), py::arg("zeta"))
        .def_property_readonly("sector",
                               [](const WhittakerParams& p) { return sector_name(p.sector); })
        .def_property_readonly("zeta",
                               [](const WhittakerParams& p) {
                                   py::list out;
                                   for (const auto& z : p.zeta) out.append(to_fraction(z));
                                   return out;
                               })
        .def_property_readonly("r", &WhittakerParams::r)
        .def("__eq__", [](const WhittakerParams& a, const WhittakerParams& b) { return a == b; })
        .def("__str__", &WhittakerParams::str)
        .def("__repr__", [](const WhittakerParams& p) { return "WhittakerParams(" + p.str() + ")"; });

    m.def(
        "cyclic_vector",
        [](const WhittakerParams& p) { return ModuleVector::cyclic(p).vec; },
        py::arg("params"));
    m.def(
        "module_mode_action",
        [](const FockVector& u, py::handle n, const WhittakerParams& params, py::object w) {
            FockVector wv = w.is_none() ? FockVector::vacuum(params.sector) : w.cast<FockVector>();
            return module_mode_action(u, to_halfint(n), ModuleVector{params, wv}).vec;
        },
        py::arg("u"), py::arg("n"), py::arg("params"), py::arg("w") = py::none());

    py::class_<WhittakerType>(m, "WhittakerType")
        .def(py::init([](long long s, py::handle lam) {
                 return WhittakerType(s, to_rational_list(lam));
             }),
             py::arg("s"), py::arg("lam"))
        .def_readonly("s", &WhittakerType::s)
        .def_property_readonly("lam",
                               [](const WhittakerType& t) {
                                   py::list out;
                                   for (const auto& l : t.lambda) out.append(to_fraction(l));
                                   return out;
                               })
        .def("__eq__", [](const WhittakerType& a, const WhittakerType& b) { return a == b; })
        .def("__str__", &WhittakerType::str)
        .def("__repr__", [](const WhittakerType& t) { return "WhittakerType(" + t.str() + ")"; });

    m.def("whittaker_type_of", &whittaker_type_of, py::arg("params"));
    m.def(
        "j_eigenvalues",
        [](const WhittakerParams& p) {
            py::dict out;
            for (const auto& [i, value] : j_eigenvalues(p)) out[py::cast(i)] = to_fraction(value);
            return out;
        },
        py::arg("params"));

    py::class_<ModuleDescriptor>(m, "ModuleDescriptor")
        .def_readonly("params", &ModuleDescriptor::params)
        .def_readonly("canonical", &ModuleDescriptor::canonical)
        .def("__str__", &ModuleDescriptor::str)
        .def("__repr__", [](const ModuleDescriptor& d) { return d.str(); });

    m.def("params_from_type", &fockcas::params_from_type, py::arg("type"));
    m.def("canonicalize", &fockcas::canonicalize, py::arg("params"));
    m.def("classify", &fockcas::classify, py::arg("type"));
    m.def("fiber_check", &fockcas::fiber_check, py::arg("p"), py::arg("q"));

    m.def("assemble_relation", [](const std::string& name) { return report_dict(assemble_relation(name)); },
          py::arg("name"));
    m.def("verify_lie_oj",
          [](long long i_lo, long long i_hi, long long j_lo, long long j_hi, long long basis_weight) {
              return report_dict(verify_lie_oj(i_lo, i_hi, j_lo, j_hi, basis_weight));
          },
          py::arg("i_lo") = -1, py::arg("i_hi") = 3, py::arg("j_lo") = -1, py::arg("j_hi") = 3,
          py::arg("basis_weight") = 6);
    m.def("verify_jj_commutator", []() { return report_dict(verify_jj_commutator()); });
    m.def("central_charge", []() { return to_fraction(central_charge()); });
    m.def(
        "verify_determinant_lemma",
        [](long n, py::handle xs, py::handle ys) {
            return report_dict(verify_determinant_lemma(n, to_rational_list(xs), to_rational_list(ys)));
        },
        py::arg("n"), py::arg("xs"), py::arg("ys"));
}
