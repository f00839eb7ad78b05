#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slopestab/catalog.hpp"
#include "slopestab/chow.hpp"
#include "slopestab/oracle_suite.hpp"
#include "slopestab/spec_doc.hpp"
#include "slopestab/summation.hpp"

namespace py = pybind11;
namespace ss = slopestab;

namespace pybind11::detail {

// Rat <-> fractions.Fraction (ints and "p/q" strings load too).
template <>
struct type_caster<ss::Rat> {
public:
    PYBIND11_TYPE_CASTER(ss::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (isinstance<py::float_>(src)) return false;  // never silently approximate
        try {
            if (isinstance<py::int_>(src) || isinstance<py::str>(src)) {
                value = ss::Rat::parse(py::str(src).cast<std::string>());
                return true;
            }
            if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
                mpz_class n(py::str(src.attr("numerator")).cast<std::string>());
                mpz_class d(py::str(src.attr("denominator")).cast<std::string>());
                value = ss::Rat(n, d);
                return true;
            }
        } catch (...) {
            return false;
        }
        return false;
    }

    static handle cast(const ss::Rat& r, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(py::str(r.str())).release();
    }
};

// Poly <-> list of Fractions (index = power of x).
template <>
struct type_caster<ss::Poly> {
public:
    PYBIND11_TYPE_CASTER(ss::Poly, const_name("list[Fraction]"));

    bool load(handle src, bool convert) {
        if (!isinstance<py::sequence>(src) || isinstance<py::str>(src)) return false;
        std::vector<ss::Rat> coeffs;
        for (handle item : src.cast<py::sequence>()) {
            type_caster<ss::Rat> c;
            if (!c.load(item, convert)) return false;
            coeffs.push_back(static_cast<ss::Rat&>(c));
        }
        value = ss::Poly(std::move(coeffs));
        return true;
    }

    static handle cast(const ss::Poly& p, return_value_policy policy, handle parent) {
        list out;
        for (const ss::Rat& c : p.coeffs())
            out.append(reinterpret_steal<object>(
                type_caster<ss::Rat>::cast(c, policy, parent)));
        return out.release();
    }
};

}  // namespace pybind11::detail

namespace {

py::object json_to_py(const ss::json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(py::str(j.dump()));
}

py::dict verdict_dict(const ss::StabilityVerdict& v, const ss::HSModel& h) {
    return json_to_py(ss::verdict_to_json(v, h)).cast<py::dict>();
}

ss::NewtonDiagram hull_from_pairs(const std::vector<std::pair<long, long>>& pts) {
    std::vector<ss::LatticePoint> raw;
    for (const auto& [p, i] : pts) raw.push_back({p, i});
    return ss::concave_hull(raw);
}

ss::oracle::ToricCase toric(const std::string& ambient, long d, long m) {
    ss::oracle::ToricCase tc;
    if (ambient == "P1") tc.ambient = ss::oracle::ToricCase::Ambient::P1;
    else if (ambient == "P2") tc.ambient = ss::oracle::ToricCase::Ambient::P2;
    else throw std::invalid_argument("ambient must be \"P1\" or \"P2\"");
    tc.d = d;
    tc.m = m;
    return tc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact slope-stability invariants of polarised varieties";

    py::class_<ss::HSModel>(m, "HSModel")
        .def_readonly("n", &ss::HSModel::n)
        .def_readonly("a0", &ss::HSModel::a0)
        .def_readonly("a1", &ss::HSModel::a1)
        .def_readonly("a0_const", &ss::HSModel::a0_const)
        .def_readonly("a1_const", &ss::HSModel::a1_const)
        .def_readonly("eps", &ss::HSModel::eps)
        .def_readwrite("saturates_at_eps", &ss::HSModel::saturates_at_eps)
        .def_readonly("label", &ss::HSModel::label)
        .def("__repr__", [](const ss::HSModel& h) {
            return "<HSModel n=" + std::to_string(h.n) + " a0=" + h.a0.str() +
                   " a1=" + h.a1.str() + " eps=" + h.eps.str() + ">";
        });

    m.def("point_on_smooth", &ss::hs_point_on_smooth, py::arg("n"), py::arg("Ln"),
          py::arg("KLn1"), py::arg("eps"), py::arg("saturates") = false,
          "Hilbert-Samuel model of a point on a smooth polarised n-fold");
    m.def("divisor_on_curve", &ss::hs_divisor_on_curve, py::arg("g"), py::arg("d"),
          py::arg("degZ"), "divisor of the given degree on a smooth curve");
    m.def("curve_subscheme", &ss::hs_curve_subscheme, py::arg("g"), py::arg("d"),
          py::arg("e"), py::arg("rho"), py::arg("eps"),
          "curve subscheme with Hilbert-Samuel data e x k - rho");
    m.def("p2_fat_point", &ss::hs_p2_fat_point, py::arg("d"), py::arg("m"));
    m.def("combine_disjoint", &ss::combine_disjoint);
    m.def("thicken", &ss::thicken, py::arg("h"), py::arg("m"));
    m.def("scale_polarisation", &ss::scale_polarisation, py::arg("h"), py::arg("r"));
    m.def("quotient_of", [](const ss::HSModel& h) {
        ss::QuotientHS q = ss::quotient_of(h);
        return py::make_tuple(q.t0, q.t1);
    });

    m.def("mu_X", &ss::mu_X);
    m.def("mu_c_ideal", &ss::mu_c_ideal, py::arg("h"), py::arg("c"));
    m.def("mu_c_quotient", &ss::mu_c_quotient, py::arg("h"), py::arg("c"));
    m.def("futaki", &ss::futaki, py::arg("h"), py::arg("c"));
    m.def("margin_poly", &ss::margin_poly);
    m.def("decide", [](const ss::HSModel& h) { return verdict_dict(ss::decide(h), h); });
    m.def("cy_canonical_check", &ss::cy_canonical_check, py::arg("h"), py::arg("alpha"));

    m.def("normal_cone_weight", [](const ss::HSModel& h, const ss::Rat& c) {
        return json_to_py(ss::weight_to_json(ss::normal_cone_weight(h, c)));
    });
    m.def("concave_hull", [](const std::vector<std::pair<long, long>>& pts) {
        return json_to_py(ss::diagram_to_json(hull_from_pairs(pts)));
    });
    m.def("divisor_tc_weight",
          [](const std::vector<std::pair<long, long>>& pts, const ss::HSModel& hD,
             bool ample) {
              return json_to_py(
                  ss::weight_to_json(ss::divisor_tc_weight(hull_from_pairs(pts), hD, ample)));
          },
          py::arg("points"), py::arg("divisor"), py::arg("ample") = true);
    m.def("seshadri_of_chain", &ss::seshadri_of_chain);
    m.def("normalized_weight",
          [](const ss::Rat& c, long r, long k, const std::function<ss::Rat(long, long)>& f) {
              return ss::normalized_weight(c, r, k, f);
          },
          py::arg("c"), py::arg("r"), py::arg("k"), py::arg("counts"));

    m.def("bernoulli_beta", &ss::bernoulli_beta);
    m.def("euler_maclaurin_sum", &ss::euler_maclaurin_sum, py::arg("f"), py::arg("c"),
          py::arg("r"));
    m.def("sign_on_interval",
          [](const ss::Poly& p, const ss::Rat& lo, const ss::Rat& hi, bool include_hi) {
              ss::SignAnalysis a = ss::sign_on_interval(p, lo, hi, include_hi);
              py::list roots;
              for (const auto& w : a.roots) roots.append(py::str(w.str()));
              py::dict d;
              d["verdict"] = ss::to_string(a.verdict);
              d["roots"] = roots;
              return d;
          },
          py::arg("p"), py::arg("lo"), py::arg("hi"), py::arg("include_hi") = true);

    m.def("uniform_constant_curve", &ss::uniform_constant_curve, py::arg("g"), py::arg("d"));
    m.def("chow_threshold_curve", &ss::chow_threshold_curve, py::arg("g"), py::arg("d"));
    m.def("decide_asymptotic_chow_curve", &ss::decide_asymptotic_chow_curve, py::arg("g"),
          py::arg("d"));
    m.def("eta_coeffs", [](const ss::HSModel& h, const ss::Rat& c) {
        return ss::eta(h, c).coeffs;
    });
    m.def("eta_X", &ss::eta_X, py::arg("h"), py::arg("r"));

    m.def("h0_count", [](const std::string& ambient, long d, long m, long k, long j) {
        return ss::oracle::h0_count(toric(ambient, d, m), k, j);
    });
    m.def("brute_normal_cone_weight",
          [](const std::string& ambient, long d, long m, const ss::Rat& c, long k) {
              return static_cast<long long>(
                  ss::oracle::brute_normal_cone_weight(toric(ambient, d, m), c, k));
          });
    m.def("brute_graded_weight",
          [](const std::string& ambient, long d, const std::vector<long>& layers, long k) {
              return static_cast<long long>(
                  ss::oracle::brute_graded_weight({toric(ambient, d, 1), layers}, k));
          });
    m.def("fit_weight_poly", &ss::oracle::fit_weight_poly);
    m.def("curve_local_rho",
          [](const std::vector<std::tuple<ss::Rat, long, ss::Rat, long>>& gens, long kmax) {
              std::vector<ss::oracle::LocalGen> gs;
              for (const auto& [a, p, b, q] : gens) gs.push_back({a, p, b, q});
              return ss::oracle::curve_local_rho(gs, kmax);
          },
          py::arg("gens"), py::arg("kmax") = 12);

    m.def("run_oracle_suite", [](const std::string& scope) {
        ss::oracle::SuiteReport rep = ss::oracle::run_suite(scope);
        py::list rows;
        for (const auto& r : rep.rows) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["details"] = r.details;
            rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["all_pass"] = rep.all_pass();
        return out;
    });

    m.def("catalog_ids", []() {
        py::list ids;
        for (const auto& e : ss::catalog()) ids.append(e.id);
        return ids;
    });
    m.def("catalog_run", [](const std::string& id) {
        const ss::CatalogEntry* e = ss::catalog_find(id);
        if (!e) throw std::invalid_argument("no catalog entry \"" + id + "\"");
        return json_to_py(ss::catalog_run(*e).report);
    });

    m.def("run_spec", [](const std::string& doc_json) {
        ss::VarietySpecDoc doc = ss::VarietySpecDoc::from_json(ss::json::parse(doc_json));
        ss::HSModel h = doc.model();
        return verdict_dict(ss::decide(h), h);
    });
}
