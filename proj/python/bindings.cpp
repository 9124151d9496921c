#include <qfourier/distributions.hpp>
#include <qfourier/qcore.hpp>
#include <qfourier/transform.hpp>
#include <qfourier/verify.hpp>

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qfourier;

PYBIND11_MODULE(_core, m) {
    m.doc() = "q^2-Fourier transform on the lattice {+-q^(2m)}";

    auto base = py::register_exception<Error>(m, "Error");
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<PoleProximity>(m, "PoleProximity", domain.ptr());
    py::register_exception<NonIntegrable>(m, "NonIntegrable", domain.ptr());
    py::register_exception<OutOfStrip>(m, "OutOfStrip", domain.ptr());

    py::class_<QParams>(m, "QParams")
        .def(py::init<double, double, int, double>(), py::arg("q") = 0.5, py::arg("series_tol") = 1e-15,
             py::arg("lattice_depth") = 48, py::arg("pole_guard") = 1e-8)
        .def_property_readonly("q", &QParams::q)
        .def_property_readonly("q2", &QParams::q2)
        .def_property_readonly("series_tol", &QParams::series_tol)
        .def_property_readonly("lattice_depth", &QParams::lattice_depth)
        .def("lattice_point", &QParams::lattice_point)
        .def("__repr__", [](const QParams& p) { return "QParams(q=" + std::to_string(p.q()) + ")"; });

    py::class_<Window>(m, "Window")
        .def(py::init<int, int>(), py::arg("m_min"), py::arg("m_max"))
        .def_readonly("m_min", &Window::m_min)
        .def_readonly("m_max", &Window::m_max)
        .def("size", &Window::size)
        .def("__eq__", [](const Window& a, const Window& b) { return a == b; })
        .def("__repr__", [](const Window& w) {
            return "Window(" + std::to_string(w.m_min) + ", " + std::to_string(w.m_max) + ")";
        });

    py::enum_<Sign>(m, "Sign").value("plus", Sign::plus).value("minus", Sign::minus);
    py::enum_<Direction>(m, "Direction").value("forward", Direction::forward).value("inverse", Direction::inverse);

    py::class_<Skeleton>(m, "Skeleton")
        .def(py::init<QParams, Window, std::vector<cplx>, std::vector<cplx>>(), py::arg("params"),
             py::arg("window"), py::arg("pos"), py::arg("neg"))
        .def_property_readonly("params", &Skeleton::params)
        .def_property_readonly("window", &Skeleton::window)
        .def_property_readonly("pos", &Skeleton::pos)
        .def_property_readonly("neg", &Skeleton::neg)
        .def("at", &Skeleton::at)
        .def("max_abs", &Skeleton::max_abs)
        .def("restrict", &Skeleton::restrict)
        .def("to_json", [](const Skeleton& s) { return to_json(s); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__mul__", [](const Skeleton& s, cplx c) { return s * c; })
        .def("__rmul__", [](const Skeleton& s, cplx c) { return s * c; });

    m.def("skeleton_from_json", &skeleton_from_json);
    m.def("sample", &sample, py::arg("f"), py::arg("window"), py::arg("params"));
    m.def("basis", &basis, py::arg("n"), py::arg("sign"), py::arg("window"), py::arg("params"));
    m.def("shift_lambda", &shift_lambda);
    m.def("q_derivative", &q_derivative, py::arg("phi"), py::arg("k") = 1);
    m.def("jackson_integral", [](const Skeleton& s) { return jackson_integral(s).value; });
    m.def("value_at_zero", &value_at_zero);

    m.def("e_q2", &e_q2);
    m.def("E_q2", &E_q2);
    m.def("cos_q2", [](cplx z, const QParams& p) { return small_trig(z, p).cos; });
    m.def("sin_q2", [](cplx z, const QParams& p) { return small_trig(z, p).sin; });
    m.def("Cos_q2", [](cplx z, const QParams& p) { return big_trig(z, p).cos; });
    m.def("Sin_q2", [](cplx z, const QParams& p) { return big_trig(z, p).sin; });
    m.def("phi01", &phi01);
    m.def("theta", &theta_lattice);
    m.def("bigQ", &bigQ);
    m.def("theta0", &theta0);
    m.def("c_nu", &c_nu);

    m.def("fourier_forward", &fourier_forward, py::arg("phi"), py::arg("threads") = 0);
    m.def("fourier_inverse", &fourier_inverse, py::arg("psi"), py::arg("threads") = 0);
    m.def("orthogonality_diagonal", &orthogonality_diagonal);
    m.def(
        "commutation_check",
        [](const Skeleton& phi, const std::string& relation, std::optional<Window> compare) {
            return commutation_check(phi, relation_from_string(relation), compare);
        },
        py::arg("phi"), py::arg("relation"), py::arg("compare") = py::none());

    py::class_<Distribution>(m, "Distribution")
        .def_static("delta", &Distribution::delta)
        .def_static("theta_plus", &Distribution::theta_plus)
        .def_static("theta_minus", &Distribution::theta_minus)
        .def_static("pow_int", &Distribution::pow_int)
        .def_static("delta_pow", &Distribution::delta_pow)
        .def_static("pow_plus_nu", &Distribution::pow_plus_nu)
        .def_static("pow_minus_nu", &Distribution::pow_minus_nu)
        .def_static("regular", py::overload_cast<PointFunction, std::string>(&Distribution::regular),
                    py::arg("f"), py::arg("label") = "f")
        .def("label", &Distribution::label)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__mul__", [](const Distribution& d, cplx c) { return d * c; })
        .def("__rmul__", [](const Distribution& d, cplx c) { return d * c; });
    m.def("pair", [](const Distribution& f, const Skeleton& phi) { return pair(f, phi); });
    m.def("dist_derivative", &dist_derivative);

    py::class_<TransformTableEntry>(m, "TransformTableEntry")
        .def_readonly("source", &TransformTableEntry::source)
        .def_readonly("image", &TransformTableEntry::image)
        .def_readonly("source_label", &TransformTableEntry::source_label)
        .def_readonly("image_label", &TransformTableEntry::image_label)
        .def_readonly("constant", &TransformTableEntry::constant)
        .def_readonly("n", &TransformTableEntry::n)
        .def_readonly("nu", &TransformTableEntry::nu);
    m.def("transform_table", &transform_table, py::arg("params"), py::arg("n") = 1,
          py::arg("nu") = py::none());
    m.def("parseval_check", &parseval_check, py::arg("entry"), py::arg("psi"), py::arg("threads") = 0);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("suite", &CheckResult::suite)
        .def_readonly("name", &CheckResult::name)
        .def_readonly("residual", &CheckResult::residual)
        .def_readonly("tolerance", &CheckResult::tolerance)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("exact", &CheckResult::exact)
        .def_readonly("known_false", &CheckResult::known_false)
        .def_readonly("detail", &CheckResult::detail);
    m.def(
        "run_verify",
        [](const std::string& suite, const QParams& p, std::optional<double> nu) {
            return run_verify(suite, VerifyConfig{p, std::nullopt, nu, 0});
        },
        py::arg("suite"), py::arg("params"), py::arg("nu") = py::none());
    m.def("verify_passed", &verify_passed);
    m.def("default_pairing_window", &default_pairing_window);
    m.def("default_transform_window", &default_transform_window);
}
