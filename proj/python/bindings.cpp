#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubiso/cubiso.hpp"

namespace py = pybind11;
using namespace cubiso;

namespace {

IsolateOptions make_options(const std::string& harness, const std::string& bounds, double tol_rel, double tol_abs) {
    IsolateOptions opt;
    opt.tol = {tol_rel, tol_abs};
    if (harness == "off") opt.harness = HarnessMode::Off;
    else if (harness == "min") opt.harness = HarnessMode::Min;
    else if (harness == "demo") opt.harness = HarnessMode::Demo;
    else throw py::value_error("harness must be 'min', 'off' or 'demo'");
    if (bounds == "figure") opt.bounds = BoundsMode::Figure;
    else if (bounds == "generic") opt.bounds = BoundsMode::Generic;
    else throw py::value_error("bounds must be 'figure' or 'generic'");
    return opt;
}

MonicCubic from_tuple(const py::tuple& t) {
    if (t.size() != 3) throw py::value_error("expected (a, b, c)");
    return {t[0].cast<double>(), t[1].cast<double>(), t[2].cast<double>()};
}

}  // namespace

PYBIND11_MODULE(_cubiso, m) {
    m.doc() = "Cubic root classification and isolation with closed-form landmarks";

    py::register_exception<Error>(m, "CubisoError");

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init<double, double>(), py::arg("rel") = 1e-10, py::arg("abs") = 1e-12)
        .def_readwrite("rel", &Tolerance::rel)
        .def_readwrite("abs", &Tolerance::abs);

    py::class_<GeneralCubic>(m, "GeneralCubic")
        .def(py::init<double, double, double, double>(), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"))
        .def_readwrite("A", &GeneralCubic::A)
        .def_readwrite("B", &GeneralCubic::B)
        .def_readwrite("C", &GeneralCubic::C)
        .def_readwrite("D", &GeneralCubic::D);

    py::class_<MonicCubic>(m, "MonicCubic")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"))
        .def(py::init(&from_tuple))
        .def_readwrite("a", &MonicCubic::a)
        .def_readwrite("b", &MonicCubic::b)
        .def_readwrite("c", &MonicCubic::c)
        .def("__iter__", [](const MonicCubic& c) { return py::iter(py::make_tuple(c.a, c.b, c.c)); })
        .def("__repr__", [](const MonicCubic& c) { return "MonicCubic(" + format_cubic(c) + ")"; });
    py::implicitly_convertible<py::tuple, MonicCubic>();

    py::class_<DepressedCubic>(m, "DepressedCubic")
        .def(py::init<double, double, double>(), py::arg("p"), py::arg("q"), py::arg("shift") = 0.0)
        .def_readonly("p", &DepressedCubic::p)
        .def_readonly("q", &DepressedCubic::q)
        .def_readonly("shift", &DepressedCubic::shift);

    py::class_<Landmarks>(m, "Landmarks")
        .def_readonly("c0", &Landmarks::c0)
        .def_readonly("c1", &Landmarks::c1)
        .def_readonly("c2", &Landmarks::c2)
        .def_readonly("mu1", &Landmarks::mu1)
        .def_readonly("mu2", &Landmarks::mu2)
        .def_readonly("xi1", &Landmarks::xi1)
        .def_readonly("xi2", &Landmarks::xi2)
        .def_readonly("rho0", &Landmarks::rho0)
        .def_readonly("rho1", &Landmarks::rho1)
        .def_readonly("rho2", &Landmarks::rho2)
        .def_readonly("lambda1", &Landmarks::lambda1)
        .def_readonly("lambda2", &Landmarks::lambda2)
        .def_readonly("ab", &Landmarks::ab)
        .def_readonly("c_over_b", &Landmarks::c_over_b)
        .def_readonly("sqrt_neg_b", &Landmarks::sqrt_neg_b);

    py::class_<Harness>(m, "Harness").def_readonly("lower", &Harness::lower).def_readonly("upper", &Harness::upper);

    py::class_<Regime>(m, "Regime")
        .def_property_readonly("kind", [](const Regime& r) { return std::string(kind_name(r.kind)); })
        .def_property_readonly("a_sign", [](const Regime& r) { return static_cast<int>(r.a_sign); })
        .def_readonly("figure_id", &Regime::figure_id)
        .def_readonly("boundary_flags", &Regime::boundary_flags);

    py::class_<RootCount>(m, "RootCount")
        .def_property_readonly("kind", [](const RootCount& r) { return std::string(count_name(r.kind)); })
        .def_readonly("double_at", &RootCount::double_at)
        .def_readonly("simple_at", &RootCount::simple_at)
        .def_readonly("triple_at", &RootCount::triple_at);

    py::class_<SignPattern>(m, "SignPattern")
        .def_readonly("n_pos", &SignPattern::n_pos)
        .def_readonly("n_neg", &SignPattern::n_neg)
        .def_readonly("n_zero", &SignPattern::n_zero)
        .def_readonly("complex_pair", &SignPattern::complex_pair)
        .def_property_readonly("table_id", [](const SignPattern& s) { return std::string(table_name(s.table_id)); });

    py::class_<Classification>(m, "Classification")
        .def_readonly("cubic", &Classification::m)
        .def_readonly("regime", &Classification::regime)
        .def_readonly("count", &Classification::count)
        .def_readonly("signs", &Classification::signs)
        .def_readonly("c_slot", &Classification::c_slot)
        .def_readonly("zero_root", &Classification::zero_root)
        .def_readonly("landmarks", &Classification::landmarks);

    py::class_<Endpoint>(m, "Endpoint")
        .def_readonly("value", &Endpoint::value)
        .def_readonly("closed", &Endpoint::closed)
        .def_property_readonly("tag", [](const Endpoint& e) { return to_string(e.provenance); });

    py::class_<Interval>(m, "Interval")
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def_readonly("multiplicity", &Interval::multiplicity)
        .def("contains", &Interval::contains)
        .def("__repr__", &format_interval);

    py::class_<RootBound>(m, "RootBound")
        .def_readonly("B_L", &RootBound::B_L)
        .def_readonly("B_U", &RootBound::B_U)
        .def_readonly("H", &RootBound::H)
        .def_readonly("k", &RootBound::k);

    py::class_<RootIsolation>(m, "RootIsolation")
        .def_readonly("intervals", &RootIsolation::intervals)
        .def_readonly("figure_id", &RootIsolation::figure_id)
        .def_readonly("case_id", &RootIsolation::case_id)
        .def_readonly("harness_applied", &RootIsolation::harness_applied)
        .def_readonly("bounds", &RootIsolation::bounds)
        .def_property_readonly("citation", [](const RootIsolation& r) { return citation(r.figure_id, r.case_id); });

    py::class_<Root>(m, "Root").def_readonly("value", &Root::value).def_readonly("multiplicity", &Root::multiplicity);

    py::class_<RootReport>(m, "RootReport")
        .def_readonly("roots", &RootReport::roots)
        .def_readonly("residuals", &RootReport::residuals)
        .def_property_readonly("values", [](const RootReport& r) {
            std::vector<double> v;
            for (const auto& x : r.roots) v.push_back(x.value);
            return v;
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("passed", &VerificationReport::pass)
        .def_readonly("roots", &VerificationReport::roots)
        .def_readonly("signs_ok", &VerificationReport::signs_ok)
        .def_readonly("harness_ok", &VerificationReport::harness_ok)
        .def_readonly("bounds_ok", &VerificationReport::bounds_ok)
        .def_readonly("diagnostics", &VerificationReport::diagnostics);

    py::class_<Boundary>(m, "Boundary")
        .def_readonly("t", &Boundary::t)
        .def_readonly("identity", &Boundary::gap)
        .def_readonly("residual", &Boundary::residual)
        .def_readonly("classification_changed", &Boundary::classification_changed);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("a0", &SweepConfig::a0)
        .def_readwrite("a1", &SweepConfig::a1)
        .def_readwrite("b0", &SweepConfig::b0)
        .def_readwrite("b1", &SweepConfig::b1)
        .def_readwrite("c0", &SweepConfig::c0)
        .def_readwrite("c1", &SweepConfig::c1)
        .def_readwrite("t_lo", &SweepConfig::t_lo)
        .def_readwrite("t_hi", &SweepConfig::t_hi)
        .def_readwrite("samples", &SweepConfig::samples)
        .def_readwrite("boundary_refine_tol", &SweepConfig::boundary_refine_tol)
        .def_readwrite("physical", &SweepConfig::physical)
        .def_readwrite("threads", &SweepConfig::threads);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("boundaries", &SweepReport::boundaries)
        .def_readonly("verified", &SweepReport::verified)
        .def_readonly("failed", &SweepReport::failed)
        .def_property_readonly("anomalies", [](const SweepReport& r) {
            std::vector<std::string> v;
            for (const auto& a : r.anomalies) v.push_back(a.message);
            return v;
        })
        .def("to_json", [](const SweepReport& r) { return sweep_json(r).dump(); });

    m.def("monicize", &monicize, py::arg("g"));
    m.def("depress", &depress, py::arg("m"));
    m.def("discriminant", &discriminant, py::arg("m"));
    m.def("depressed_discriminant", &depressed_discriminant, py::arg("d"));
    m.def("evaluate", &evaluate, py::arg("m"), py::arg("x"));
    m.def("landmarks", &landmarks, py::arg("a"), py::arg("b"), py::arg("c") = py::none(),
          py::arg("tol") = Tolerance{});
    m.def("harness", &harness, py::arg("a"), py::arg("b"), py::arg("tol") = Tolerance{});
    m.def("regime", &regime, py::arg("a"), py::arg("b"), py::arg("tol") = Tolerance{});
    m.def("classify", &classify, py::arg("m"), py::arg("tol") = Tolerance{});
    m.def("upper_lower_bounds", &upper_lower_bounds, py::arg("m"));
    m.def(
        "isolate",
        [](const MonicCubic& c, const std::string& harness, const std::string& bounds, double tol_rel, double tol_abs) {
            return isolate(c, make_options(harness, bounds, tol_rel, tol_abs));
        },
        py::arg("m"), py::arg("harness") = "min", py::arg("bounds") = "figure", py::arg("tol_rel") = 1e-10,
        py::arg("tol_abs") = 1e-12);
    m.def("solve_all", &solve_all, py::arg("m"), py::arg("tol") = Tolerance{});
    m.def("verify", &verify, py::arg("m"), py::arg("cls"), py::arg("iso"), py::arg("tol") = Tolerance{});
    m.def(
        "check",
        [](const MonicCubic& c, const std::string& harness, const std::string& bounds) {
            IsolateOptions opt = make_options(harness, bounds, 1e-10, 1e-12);
            return verify(c, classify(c, opt.tol), isolate(c, opt), opt.tol);
        },
        py::arg("m"), py::arg("harness") = "min", py::arg("bounds") = "figure",
        "Classify, isolate and verify in one call");
    m.def(
        "to_json",
        [](const MonicCubic& c, bool with_verification) {
            Classification cls = classify(c);
            RootIsolation ri = isolate(c);
            std::optional<VerificationReport> ver;
            if (with_verification) ver = verify(c, cls, ri);
            return document(cls, ri, ver).dump();
        },
        py::arg("m"), py::arg("verify") = true);
    m.def("rayleigh_preset", &rayleigh_preset);
    m.def("run_sweep", &run_sweep, py::arg("config"), py::call_guard<py::gil_scoped_release>());
}
