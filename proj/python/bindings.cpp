#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcmullen/certify.hpp"
#include "mcmullen/features.hpp"
#include "mcmullen/render.hpp"
#include "mcmullen/suites.hpp"

namespace py = pybind11;
using namespace mcm;

namespace {

py::bytes render_to_ppm(const Plane& plane, std::tuple<double, double, double, double> viewport, int width,
                        int height, int max_iter, std::optional<double> escape_radius, int threads) {
    RenderSpec spec{plane, {std::get<0>(viewport), std::get<1>(viewport), std::get<2>(viewport),
                            std::get<3>(viewport)},
                    width, height};
    spec.settings = {max_iter, escape_radius};
    ImageBuffer img;
    {
        py::gil_scoped_release release;
        img = render(spec, threads);
    }
    return py::bytes(encode_ppm(img));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dynamics, regions, certificates and renders for z^n + a/z^n + c";

    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

    py::class_<MapParams>(m, "MapParams")
        .def(py::init<int, Complex, Complex>(), py::arg("n"), py::arg("a"), py::arg("c"))
        .def_property_readonly("n", &MapParams::n)
        .def_property_readonly("a", &MapParams::a)
        .def_property_readonly("c", &MapParams::c)
        .def_property_readonly("psi", &MapParams::psi)
        .def("__repr__", [](const MapParams& p) {
            return "MapParams(n=" + std::to_string(p.n()) + ", a=" + py::repr(py::cast(p.a())).cast<std::string>() +
                   ", c=" + py::repr(py::cast(p.c())).cast<std::string>() + ")";
        });

    py::class_<EscapeSettings>(m, "EscapeSettings")
        .def(py::init([](double r, int it) {
                 EscapeSettings s{r, it};
                 s.validate();
                 return s;
             }),
             py::arg("escape_radius") = 2.0, py::arg("max_iter") = kRenderMaxIter)
        .def_readonly("escape_radius", &EscapeSettings::escape_radius)
        .def_readonly("max_iter", &EscapeSettings::max_iter);

    py::class_<OrbitOutcome>(m, "OrbitOutcome")
        .def_property_readonly("escaped", &OrbitOutcome::escaped)
        .def_property_readonly("bounded", &OrbitOutcome::bounded)
        .def_readonly("steps", &OrbitOutcome::steps)
        .def_readonly("modulus", &OrbitOutcome::modulus)
        .def_readonly("final_point", &OrbitOutcome::final_point)
        .def("__repr__", [](const OrbitOutcome& o) {
            return std::string(o.escaped() ? "Escaped(step=" : "Bounded(steps=") + std::to_string(o.steps) + ")";
        });

    m.def("eval_map", &eval_map, py::arg("params"), py::arg("z"));
    m.def("critical_points", &critical_points, py::arg("params"));
    m.def("critical_values", [](const MapParams& p) {
        const CriticalValues v = critical_values(p);
        return py::make_tuple(v.minus, v.plus);
    }, py::arg("params"), "Returns (v_minus, v_plus).");
    m.def("involution", &involution, py::arg("params"), py::arg("z"));
    m.def("default_escape_radius", &default_escape_radius, py::arg("params"));
    m.def("iterate_orbit", &iterate_orbit, py::arg("params"), py::arg("z0"), py::arg("settings"));
    m.def("mandelbrot_classify", &mandelbrot_classify, py::arg("c"), py::arg("settings"));

    py::enum_<Regime>(m, "Regime").value("Standard", Regime::Standard).value("Tight", Regime::Tight);

    py::class_<SectorAnnulus>(m, "SectorAnnulus")
        .def_readonly("r_in", &SectorAnnulus::r_in)
        .def_readonly("r_out", &SectorAnnulus::r_out)
        .def_readonly("theta_lo", &SectorAnnulus::theta_lo)
        .def_readonly("theta_hi", &SectorAnnulus::theta_hi)
        .def("contains", [](const SectorAnnulus& s, Complex z) {
            const Membership mem = contains(s, z);
            return py::make_tuple(mem.inside, mem.margin);
        });
    m.def("make_uprime", &make_uprime, py::arg("params"), py::arg("k") = 0, py::arg("regime") = Regime::Standard);

    py::class_<ParamWindow>(m, "ParamWindow")
        .def_readonly("n", &ParamWindow::n)
        .def_readonly("k", &ParamWindow::k)
        .def_readonly("mod_lo", &ParamWindow::mod_lo)
        .def_readonly("mod_hi", &ParamWindow::mod_hi)
        .def_readonly("arg_lo", &ParamWindow::arg_lo)
        .def_readonly("arg_hi", &ParamWindow::arg_hi)
        .def("describe", &ParamWindow::describe);
    m.def("make_aplane_window", &make_aplane_window, py::arg("n"), py::arg("c"));
    m.def("make_cplane_window", &make_cplane_window, py::arg("n"), py::arg("a"), py::arg("k") = 0);
    m.def("make_tight_window", &make_tight_window, py::arg("n"), py::arg("a"));
    m.def("cplane_containment_a_bound", &cplane_containment_a_bound, py::arg("n"));

    py::class_<CertificateReport>(m, "CertificateReport")
        .def_readonly("check_name", &CertificateReport::check_name)
        .def_readonly("subject", &CertificateReport::subject)
        .def_readonly("margin", &CertificateReport::margin)
        .def_readonly("samples_used", &CertificateReport::samples_used)
        .def_readonly("children", &CertificateReport::children)
        .def_readonly("note", &CertificateReport::note)
        .def_property_readonly("passed", &CertificateReport::passed)
        .def_property_readonly("verdict", [](const CertificateReport& r) { return to_string(r.verdict); })
        .def("metric", &CertificateReport::metric)
        .def("to_lines", &CertificateReport::to_lines)
        .def("to_json", &CertificateReport::to_json, py::arg("indent") = 2);

    m.def("certify_escape_bounds", &certify_escape_bounds, py::arg("params"), py::arg("settings"), py::arg("m"),
          py::call_guard<py::gil_scoped_release>());
    m.def("certify_uprime_subset_u", &certify_uprime_subset_u, py::arg("params"), py::arg("k"), py::arg("regime"),
          py::arg("m") = 4096, py::arg("delta") = 0.0, py::call_guard<py::gil_scoped_release>());
    m.def("certify_two_to_one", &certify_two_to_one, py::arg("params"), py::arg("k"), py::arg("regime"),
          py::arg("m") = 256, py::call_guard<py::gil_scoped_release>());
    m.def("certify_winding", &certify_winding, py::arg("window"), py::arg("m") = 4096,
          py::call_guard<py::gil_scoped_release>());
    m.def("certify_polynomial_like", &certify_polynomial_like, py::arg("params"), py::arg("k"), py::arg("regime"),
          py::arg("boundary_samples") = 4096, py::arg("targets") = 256, py::call_guard<py::gil_scoped_release>());
    m.def("certify_symmetries", &certify_symmetries, py::arg("params"), py::arg("m_iter") = 20,
          py::arg("samples") = 100, py::arg("seed") = 0x5eed, py::call_guard<py::gil_scoped_release>());

    m.def("baby_center", [](int n, double a, const std::string& which) {
        if (which != "plus" && which != "minus") throw std::invalid_argument("which must be 'plus' or 'minus'");
        return baby_center(n, a, which == "plus" ? CenterSide::Plus : CenterSide::Minus);
    }, py::arg("n"), py::arg("a"), py::arg("which") = "plus");
    m.def("overlap_parameter", &overlap_parameter, py::arg("n"));
    m.def("interval_positions", [](int n, double a) {
        const IntervalPair ip = interval_positions(n, a);
        py::dict d;
        d["omega1"] = ip.omega1;
        d["omega2"] = ip.omega2;
        d["i1"] = py::make_tuple(ip.i1.lo, ip.i1.hi);
        d["i2"] = py::make_tuple(ip.i2.lo, ip.i2.hi);
        d["ordering"] = to_string(ip.ordering);
        return d;
    }, py::arg("n"), py::arg("a"));
    m.def("scan_boundedness_locus", [](const ParamWindow& w, int density, int max_iter) {
        ScanResult r;
        {
            py::gil_scoped_release release;
            r = scan_boundedness_locus(w, density, {max_iter, std::nullopt});
        }
        py::dict d;
        d["nonempty"] = r.nonempty;
        d["locus_size"] = r.locus_size;
        d["components"] = r.components;
        d["center"] = r.center;
        d["contains_center"] = r.contains_center;
        d["csv"] = r.to_csv();
        return d;
    }, py::arg("window"), py::arg("density") = 128, py::arg("max_iter") = kCertifyMaxIter);

    m.def("render_julia_ppm", [](const MapParams& p, std::tuple<double, double, double, double> vp, int w, int h,
                                 int max_iter, std::optional<double> radius, int threads) {
        return render_to_ppm(DynamicalPlane{p}, vp, w, h, max_iter, radius, threads);
    }, py::arg("params"), py::arg("viewport") = std::make_tuple(-2.0, 2.0, -2.0, 2.0), py::arg("width") = 512,
       py::arg("height") = 512, py::arg("max_iter") = kRenderMaxIter, py::arg("escape_radius") = py::none(),
       py::arg("threads") = 0);
    m.def("render_aplane_ppm", [](int n, Complex c, std::tuple<double, double, double, double> vp, int w, int h,
                                  int max_iter, std::optional<double> radius, int threads) {
        return render_to_ppm(APlane{n, c}, vp, w, h, max_iter, radius, threads);
    }, py::arg("n"), py::arg("c"), py::arg("viewport") = std::make_tuple(-2.0, 2.0, -2.0, 2.0),
       py::arg("width") = 512, py::arg("height") = 512, py::arg("max_iter") = kRenderMaxIter,
       py::arg("escape_radius") = py::none(), py::arg("threads") = 0);
    m.def("render_cplane_ppm", [](int n, Complex a, std::tuple<double, double, double, double> vp, int w, int h,
                                  int max_iter, std::optional<double> radius, int threads) {
        return render_to_ppm(CPlane{n, a}, vp, w, h, max_iter, radius, threads);
    }, py::arg("n"), py::arg("a"), py::arg("viewport") = std::make_tuple(-2.0, 2.0, -2.0, 2.0),
       py::arg("width") = 512, py::arg("height") = 512, py::arg("max_iter") = kRenderMaxIter,
       py::arg("escape_radius") = py::none(), py::arg("threads") = 0);
}
