#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relmin/absolute_value.hpp"
#include "relmin/cayley_dickson.hpp"
#include "relmin/heisenberg.hpp"
#include "relmin/json_io.hpp"
#include "relmin/unitriangular.hpp"
#include "relmin/verify.hpp"
#include "relmin/witness.hpp"

namespace py = pybind11;
using namespace relmin;

namespace {

Rational rational_from_object(const py::object& obj) {
    if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
    if (py::isinstance<py::int_>(obj)) return Rational(Int(py::str(obj).cast<std::string>()));
    if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
    throw py::type_error("expected a Rational, int, or 'p/q' string");
}

CDElement cd_from_object(int level, const py::object& obj) {
    if (py::isinstance<CDElement>(obj)) return obj.cast<CDElement>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        std::vector<Rational> coeffs;
        for (const auto& item : obj.cast<py::sequence>()) coeffs.push_back(rational_from_object(py::reinterpret_borrow<py::object>(item)));
        return CDElement(level, std::move(coeffs));
    }
    return CDElement::scalar(level, rational_from_object(obj));
}

std::vector<CDElement> cd_vector_from_object(int level, const py::sequence& seq) {
    std::vector<CDElement> out;
    for (const auto& item : seq) out.push_back(cd_from_object(level, py::reinterpret_borrow<py::object>(item)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Cayley-Dickson algebras, generalized Heisenberg groups, and unitriangular matrix groups";

    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError", PyExc_ZeroDivisionError);
    py::register_exception<NotInvertibleError>(m, "NotInvertibleError", PyExc_ZeroDivisionError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& obj) { return rational_from_object(obj); }))
        .def(py::init([](long num, long den) { return Rational(num, den); }))
        .def_property_readonly("numerator", [](const Rational& r) { return py::int_(py::str(r.numerator().get_str())); })
        .def_property_readonly("denominator", [](const Rational& r) { return py::int_(py::str(r.denominator().get_str())); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__add__", [](const Rational& a, const py::object& b) { return a + rational_from_object(b); })
        .def("__sub__", [](const Rational& a, const py::object& b) { return a - rational_from_object(b); })
        .def("__mul__", [](const Rational& a, const py::object& b) { return a * rational_from_object(b); })
        .def("__truediv__", [](const Rational& a, const py::object& b) { return a / rational_from_object(b); })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__eq__", [](const Rational& a, const py::object& b) { return a == rational_from_object(b); })
        .def("__lt__", [](const Rational& a, const py::object& b) { return a < rational_from_object(b); })
        .def("__le__", [](const Rational& a, const py::object& b) { return a <= rational_from_object(b); })
        .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); });

    m.def("sqrt_sum_leq", [](const py::object& q, const py::object& s, const py::object& t) {
        return sqrt_sum_leq(rational_from_object(q), rational_from_object(s), rational_from_object(t));
    }, py::arg("q"), py::arg("s"), py::arg("t"),
       "Exactly decide sqrt(q) <= sqrt(s) + sqrt(t) for nonnegative rationals");

    py::class_<CDElement>(m, "CDElement")
        .def(py::init([](int level, const py::object& coeffs) { return cd_from_object(level, coeffs); }),
             py::arg("level"), py::arg("coeffs"))
        .def_static("scalar", [](int level, const py::object& v) { return CDElement::scalar(level, rational_from_object(v)); })
        .def_static("basis", &CDElement::basis)
        .def_property_readonly("level", &CDElement::level)
        .def_property_readonly("coeffs", [](const CDElement& x) {
            py::list out;
            for (const Rational& c : x.coeffs()) out.append(c);
            return out;
        })
        .def("is_zero", &CDElement::is_zero)
        .def("__eq__", [](const CDElement& a, const CDElement& b) { return a == b; })
        .def("__add__", [](const CDElement& a, const CDElement& b) { return a + b; })
        .def("__sub__", [](const CDElement& a, const CDElement& b) { return a - b; })
        .def("__neg__", [](const CDElement& a) { return -a; })
        .def("__mul__", [](const CDElement& a, const CDElement& b) { return cd_mul(a, b); })
        .def("__repr__", [](const CDElement& x) { return cd_to_json(x).dump(); });

    m.def("cd_mul", &cd_mul);
    m.def("cd_conjugate", &cd_conjugate);
    m.def("cd_norm_form", &cd_norm_form);
    m.def("cd_invert", &cd_invert);
    m.def("cd_associator", &cd_associator);
    m.def("find_composition_violation", &find_composition_violation,
          py::arg("level"), py::arg("coeff_bound"));

    m.def("padic_abs", [](const py::object& q, long p) { return padic_abs(rational_from_object(q), Int(p)); },
          py::arg("q"), py::arg("p"));
    m.def("archimedean_witness_euclidean", [](int level, long bound) -> std::optional<long> {
        const auto w = archimedean_witness(AbsValueDescriptor::euclidean(level), Int(bound));
        if (!w) return std::nullopt;
        return w->get_si();
    }, py::arg("level"), py::arg("bound"));
    m.def("archimedean_witness_padic", [](long p, long bound) -> std::optional<long> {
        const auto w = archimedean_witness(AbsValueDescriptor::padic(Int(p)), Int(bound));
        if (!w) return std::nullopt;
        return w->get_si();
    }, py::arg("p"), py::arg("bound"));

    py::enum_<PairingOrder>(m, "PairingOrder")
        .value("x_then_f", PairingOrder::x_then_f)
        .value("f_then_x", PairingOrder::f_then_x);

    py::class_<BiadditiveMap>(m, "BiadditiveMap")
        .def(py::init<int, std::size_t, PairingOrder>(), py::arg("scalar_level"), py::arg("dim"),
             py::arg("order") = PairingOrder::x_then_f)
        .def_readonly("scalar_level", &BiadditiveMap::scalar_level)
        .def_readonly("dim", &BiadditiveMap::dim)
        .def_readonly("order", &BiadditiveMap::order);

    py::class_<HeisenbergElement>(m, "HeisenbergElement")
        .def(py::init([](const BiadditiveMap& w, const py::object& a, const py::sequence& x, const py::sequence& f) {
                 HeisenbergElement u{cd_from_object(w.scalar_level, a),
                                     cd_vector_from_object(w.scalar_level, x),
                                     cd_vector_from_object(w.scalar_level, f)};
                 validate_element(w, u);
                 return u;
             }),
             py::arg("w"), py::arg("a"), py::arg("x"), py::arg("f"))
        .def_readonly("a", &HeisenbergElement::a)
        .def_readonly("x", &HeisenbergElement::x)
        .def_readonly("f", &HeisenbergElement::f)
        .def("__eq__", [](const HeisenbergElement& a, const HeisenbergElement& b) { return a == b; });

    m.def("w_eval", [](const BiadditiveMap& w, const py::sequence& x, const py::sequence& f) {
        return w_eval(w, cd_vector_from_object(w.scalar_level, x), cd_vector_from_object(w.scalar_level, f));
    });
    m.def("h_identity", &h_identity);
    m.def("h_mul", &h_mul);
    m.def("h_inverse", &h_inverse);
    m.def("h_commutator", &h_commutator);
    m.def("separatedness_witness", [](const BiadditiveMap& w, const py::sequence& x0, const py::sequence& f0) {
        return separatedness_witness(w, cd_vector_from_object(w.scalar_level, x0),
                                     cd_vector_from_object(w.scalar_level, f0));
    });

    py::enum_<SubgroupFamily>(m, "SubgroupFamily")
        .value("center_A", SubgroupFamily::center_A)
        .value("A_cross_E", SubgroupFamily::A_cross_E)
        .value("A_cross_F", SubgroupFamily::A_cross_F)
        .value("E_only", SubgroupFamily::E_only)
        .value("F_only", SubgroupFamily::F_only)
        .value("E_cross_F", SubgroupFamily::E_cross_F);
    m.def("subgroup_membership", &subgroup_membership);

    py::class_<UniTriMatrix>(m, "UniTriMatrix")
        .def_static("identity", &UniTriMatrix::identity, py::arg("size"), py::arg("level") = 0)
        .def_property_readonly("size", &UniTriMatrix::size)
        .def_property_readonly("level", &UniTriMatrix::level)
        .def("at", &UniTriMatrix::at, py::arg("row"), py::arg("col"))
        .def("set_upper", [](UniTriMatrix& m_, std::size_t r, std::size_t c, const py::object& v) {
            m_.set_upper(r, c, cd_from_object(m_.level(), v));
        })
        .def("__eq__", [](const UniTriMatrix& a, const UniTriMatrix& b) { return a == b; })
        .def("__mul__", &ut_mul)
        .def("__repr__", [](const UniTriMatrix& m_) { return ut_to_json(m_).dump(); });

    m.def("ut_mul", &ut_mul);
    m.def("ut_inverse", &ut_inverse);
    m.def("heisenberg_realization", &heisenberg_realization);
    m.def("corner_elem", [](std::size_t n, std::size_t i, std::size_t j, const py::object& a) {
        return corner_elem(n, i, j, cd_from_object(0, a));
    }, py::arg("n"), py::arg("i"), py::arg("j"), py::arg("a"));
    m.def("tilde_membership", &tilde_membership);
    m.def("delete_reduction", &delete_reduction);

    m.def("break_compatibility", [](const BiadditiveMap& w, const py::sequence& xbar, const py::object& eps0) {
        return break_compatibility(w, cd_vector_from_object(w.scalar_level, xbar), rational_from_object(eps0));
    }, py::arg("w"), py::arg("x"), py::arg("eps0"));
    m.def("kronecker_escalate", [](const py::object& d1, const py::object& d2, long n0, unsigned m_, const py::object& r) {
        const KroneckerOracle oracle(rational_from_object(d1), rational_from_object(d2));
        return escalate_unbounded(oracle, oracle.initial(), EscalationRequest(Int(n0), m_, rational_from_object(r)));
    }, py::arg("delta1"), py::arg("delta2"), py::arg("n0"), py::arg("m"), py::arg("r"));
    m.def("coset_projection_eq", [](const py::sequence& g, const py::sequence& g2, std::size_t j, int level) {
        return coset_projection_eq(cd_vector_from_object(level, g), cd_vector_from_object(level, g2), j);
    }, py::arg("g"), py::arg("g2"), py::arg("j"), py::arg("level") = 0);

    m.def("run_verify", [](const std::string& suite, long samples, std::uint64_t seed, int level,
                           std::size_t dim, long coeff_magnitude) {
        VerifyConfig config;
        config.suite = suite_from_name(suite);
        config.samples = samples;
        config.seed = seed;
        config.level = level;
        config.dim = dim;
        config.coeff_magnitude = coeff_magnitude;
        const SuiteReport report = run_verify(config);
        return py::make_tuple(report.exit_code(), report_to_json(report).dump(2));
    }, py::arg("suite"), py::arg("samples") = 500, py::arg("seed") = 1, py::arg("level") = 0,
       py::arg("dim") = 1, py::arg("coeff_magnitude") = 10,
       "Run a property suite; returns (exit_code, report_json)");
}
