#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "majdes/checks.hpp"
#include "majdes/formulas.hpp"
#include "majdes/perm.hpp"
#include "majdes/qpoly.hpp"
#include "majdes/serialize.hpp"
#include "majdes/tableaux.hpp"

namespace py = pybind11;
using namespace majdes;

namespace {

py::object to_pyint(const Int& x) {
    PyObject* obj = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::list coeff_list(const QPolynomial& p) {
    py::list out;
    for (const Int& c : p.coefficients()) out.append(to_pyint(c));
    return out;
}

py::dict stats_dict(const PermStats& st) {
    py::dict d;
    d["descent_set"] = st.descent_set;
    d["des"] = st.des;
    d["maj"] = st.maj;
    return d;
}

py::dict report_dict(const ShapeReport& r) {
    py::dict d;
    d["symmetric"] = r.symmetric;
    d["unimodal"] = r.unimodal;
    d["center_times_two"] = r.center_times_two;
    d["coefficient_sum"] = to_pyint(r.coefficient_sum);
    return d;
}

Permutation as_perm(const std::vector<int>& values) { return Permutation(values); }

StandardYoungTableau as_syt(const std::vector<std::vector<int>>& rows) {
    return StandardYoungTableau(rows);
}

Transform parse_transform(const std::string& which) {
    if (which == "reverse") return Transform::Reverse;
    if (which == "complement") return Transform::Complement;
    if (which == "reverse_complement") return Transform::ReverseComplement;
    throw std::invalid_argument("transform must be reverse, complement or reverse_complement");
}

}  // namespace

PYBIND11_MODULE(_majdes, m) {
    m.doc() = "Exact maj/des generating functions for pattern-avoiding permutations "
              "and standard Young tableaux";

    py::class_<QPolynomial>(m, "QPolynomial")
        .def(py::init([](long min_degree, const std::vector<std::string>& coeffs) {
                 std::vector<Int> c;
                 for (const auto& s : coeffs) c.emplace_back(s);
                 return QPolynomial(min_degree, std::move(c));
             }),
             py::arg("min_degree"), py::arg("coeffs"))
        .def("is_zero", &QPolynomial::is_zero)
        .def("min_degree", &QPolynomial::min_degree)
        .def("max_degree", &QPolynomial::max_degree)
        .def("coefficients", &coeff_list)
        .def("coefficient", [](const QPolynomial& p, long d) { return to_pyint(p.coefficient(d)); })
        .def("value_at_one", [](const QPolynomial& p) { return to_pyint(p.value_at_one()); })
        .def("text", &QPolynomial::text)
        .def("json", [](const QPolynomial& p) { return to_json(p).dump(); })
        .def("__repr__", &QPolynomial::text)
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self);

    py::class_<BivariatePolynomial>(m, "BivariatePolynomial")
        .def("term", &BivariatePolynomial::term)
        .def("terms", &BivariatePolynomial::terms)
        .def("max_descents", &BivariatePolynomial::max_descents)
        .def("text", &BivariatePolynomial::text)
        .def("__repr__", &BivariatePolynomial::text)
        .def(py::self == py::self);

    m.def("exact_divide", &exact_divide, py::arg("num"), py::arg("den"));
    m.def("q_binomial", &q_binomial, py::arg("M"), py::arg("N"));
    m.def("q_binomial_tb", &q_binomial_tb, py::arg("top"), py::arg("bottom"));
    m.def("q_pochhammer", &q_pochhammer, py::arg("n"));
    m.def("shape_report", [](const QPolynomial& p) { return report_dict(shape_report(p)); });
    m.def("reverse_within", &reverse_within, py::arg("p"), py::arg("window"));

    m.def("statistics",
          [](const std::vector<int>& p) { return stats_dict(statistics(as_perm(p))); });
    m.def("contains_pattern", [](const std::vector<int>& p, const std::vector<int>& pattern) {
        return contains_pattern(as_perm(p), as_perm(pattern));
    });
    m.def("enumerate_avoiders", [](int n, const std::vector<int>& pattern) {
        py::list out;
        for_each_avoider(n, as_perm(pattern),
                         [&](const Permutation& p) { out.append(p.values()); });
        return out;
    });
    m.def("distribution", [](int n, const std::vector<int>& pattern) {
        return distribution(n, as_perm(pattern));
    });
    m.def("transform", [](const std::vector<int>& p, const std::string& which) {
        return transform(as_perm(p), parse_transform(which)).values();
    });

    m.def("hook_lengths",
          [](const std::vector<int>& parts) { return hook_lengths(Shape(parts)); });
    m.def("frt_count",
          [](const std::vector<int>& parts) { return to_pyint(frt_count(Shape(parts))); });
    m.def("frt_multiplicity",
          [](int n, int k) { return to_pyint(frt_multiplicity(n, k)); });
    m.def("enumerate_syt", [](const std::vector<int>& parts) {
        py::list out;
        for_each_syt(Shape(parts),
                     [&](const StandardYoungTableau& t) { out.append(t.rows()); });
        return out;
    });
    m.def("tableau_statistics", [](const std::vector<std::vector<int>>& rows) {
        return stats_dict(tableau_statistics(as_syt(rows)));
    });
    m.def("stanley_maj_gf",
          [](const std::vector<int>& parts) { return stanley_maj_gf(Shape(parts)); });
    m.def("maj_distribution_by_descents", [](const std::vector<int>& parts) {
        return maj_distribution_by_descents(Shape(parts));
    });
    m.def("rsk", [](const std::vector<int>& p) {
        auto [insertion, recording] = rsk(as_perm(p));
        return py::make_tuple(insertion.rows(), recording.rows());
    });
    m.def("syt_to_lattice_path", [](const std::vector<std::vector<int>>& rows) {
        LatticePath path = syt_to_lattice_path(as_syt(rows));
        py::dict d;
        d["steps"] = path.steps();
        d["peaks"] = path.peaks();
        return d;
    });
    m.def("lattice_path_to_syt", [](const std::string& steps) {
        return lattice_path_to_syt(LatticePath::from_steps(steps)).rows();
    });

    m.def("f_two_row", [](int n, int k, int i) { return f_two_row({n, k, i}); });
    m.def("f_two_row_recurrence",
          [](int n, int k, int i) { return f_two_row_recurrence({n, k, i}); });
    m.def("a_polynomial", &a_polynomial, py::arg("n"), py::arg("i"));
    m.def("f_three_row", [](int m_, int k, int i) { return f_three_row({m_, k, i}); });
    m.def("f_three_row_recurrence",
          [](int m_, int k, int i) { return f_three_row_recurrence({m_, k, i}); });
    m.def("qbinomial_identity_check", [](int which, long p1, long p2) {
        auto [lhs, rhs] = qbinomial_identity_check(which, {p1, p2});
        return py::make_tuple(lhs, rhs);
    });
    m.def("catalan_top_term", &catalan_top_term, py::arg("n"));
    m.def("related_distribution", &related_distribution, py::arg("pattern"), py::arg("n"));
    m.def("g132_low_coefficients", [](int n) {
        auto a = g132_low_coefficients(n);
        return py::make_tuple(to_pyint(a[0]), to_pyint(a[1]), to_pyint(a[2]));
    });
    m.def("mk1_bijection", [](const std::vector<std::vector<int>>& rows) {
        return mk1_bijection(as_syt(rows)).rows();
    });
    m.def("mk1_bijection_inverse", [](const std::vector<std::vector<int>>& rows) {
        return mk1_bijection_inverse(as_syt(rows)).rows();
    });

    m.def("run_suite", [](const std::string& suite, int max_n, int threads) {
        return to_json(run_suite(suite, max_n, threads)).dump();
    }, py::arg("suite"), py::arg("max_n"), py::arg("threads") = 0);
    m.def("suite_names", &suite_names);
    m.def("catalan_number", [](long j) { return to_pyint(catalan_number(j)); });
}
