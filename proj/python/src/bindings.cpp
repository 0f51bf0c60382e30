#include <cmath>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relbell/chsh.hpp"
#include "relbell/decoherence.hpp"
#include "relbell/errors.hpp"
#include "relbell/figures.hpp"
#include "relbell/relkin.hpp"
#include "relbell/spinor.hpp"
#include "relbell/wavepacket.hpp"

namespace py = pybind11;
using namespace relbell;

namespace {

relkin::Rapidity rap(double a) { return relkin::Rapidity{a}; }

py::dict records_to_columns(const std::vector<figures::SweepRecord>& records) {
    std::vector<double> phi, f, alpha, k, w, v;
    for (const auto& r : records) {
        phi.push_back(r.phi);
        f.push_back(r.f);
        alpha.push_back(r.alpha);
        k.push_back(r.k);
        w.push_back(r.w);
        v.push_back(r.v);
    }
    py::dict d;
    d["phi"] = phi;
    d["f"] = f;
    d["alpha"] = alpha;
    d["k"] = k;
    d["w"] = w;
    d["v"] = v;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "CHSH correlations of a fermion singlet seen by relativistically moving detectors";

    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<NotReachableError>(m, "NotReachableError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    // relkin
    py::class_<relkin::FourMomentum>(m, "FourMomentum")
        .def(py::init(&relkin::FourMomentum::on_shell), py::arg("qx"), py::arg("qy"), py::arg("qz"))
        .def_static("from_components", &relkin::FourMomentum::from_components)
        .def_property_readonly("q0", &relkin::FourMomentum::q0)
        .def_property_readonly("qx", &relkin::FourMomentum::qx)
        .def_property_readonly("qy", &relkin::FourMomentum::qy)
        .def_property_readonly("qz", &relkin::FourMomentum::qz)
        .def("__repr__", [](const relkin::FourMomentum& p) {
            return py::str("FourMomentum({}, {}, {}, {})").format(p.q0(), p.qx(), p.qy(), p.qz());
        });

    m.def("rapidity_from_velocity", [](double v) { return relkin::rapidity_from_velocity(v).value; },
          py::arg("v"));
    m.def("velocity_from", [](double a) { return relkin::velocity_from(rap(a)); }, py::arg("alpha"));
    m.def("apply_boost",
          [](double alpha, const relkin::FourMomentum& p) { return relkin::LorentzBoost{rap(alpha)}.apply(p); },
          py::arg("alpha"), py::arg("p"));
    m.def("wigner_matrix",
          [](double alpha, const relkin::FourMomentum& p) {
              return Eigen::Matrix2cd(relkin::wigner_matrix(rap(alpha), p).entries);
          },
          py::arg("alpha"), py::arg("p"));

    py::enum_<relkin::Side>(m, "Side").value("A", relkin::Side::A).value("B", relkin::Side::B);
    m.def("spinor_coefficients",
          [](double alpha, const relkin::FourMomentum& p, const wavepacket::PacketSpec& packet, relkin::Side side) {
              const auto c = relkin::spinor_coefficients(rap(alpha), p, packet, side);
              return py::make_tuple(c.first, c.second);
          },
          py::arg("alpha"), py::arg("p"), py::arg("packet"), py::arg("side"));

    // wavepacket
    py::class_<wavepacket::PacketSpec>(m, "PacketSpec")
        .def(py::init<double, double>(), py::arg("k"), py::arg("w"))
        .def_property_readonly("k", &wavepacket::PacketSpec::k)
        .def_property_readonly("w", &wavepacket::PacketSpec::w)
        .def("__repr__", [](const wavepacket::PacketSpec& p) {
            return py::str("PacketSpec(k={}, w={})").format(p.k(), p.w());
        });
    py::enum_<wavepacket::Spin>(m, "Spin").value("Up", wavepacket::Spin::Up).value("Down", wavepacket::Spin::Down);
    m.def("gaussian_amplitude", &wavepacket::gaussian_amplitude, py::arg("p"), py::arg("packet"));
    m.def("singlet_amplitude", &wavepacket::singlet_amplitude, py::arg("pA"), py::arg("pB"), py::arg("sA"),
          py::arg("sB"), py::arg("kmag"), py::arg("w"));

    // decoherence
    py::class_<quadrature::QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &quadrature::QuadratureConfig::rel_tol)
        .def_readwrite("abs_tol", &quadrature::QuadratureConfig::abs_tol)
        .def_readwrite("truncation_sigmas", &quadrature::QuadratureConfig::truncation_sigmas)
        .def_readwrite("max_subdivisions", &quadrature::QuadratureConfig::max_subdivisions);
    py::class_<decoherence::McConfig>(m, "McConfig")
        .def(py::init([](std::uint64_t samples, std::uint64_t seed) { return decoherence::McConfig{samples, seed}; }),
             py::arg("samples") = 1'000'000, py::arg("seed") = 0x5eed)
        .def_readwrite("samples", &decoherence::McConfig::samples)
        .def_readwrite("seed", &decoherence::McConfig::seed);
    py::class_<decoherence::DecoherenceFactor>(m, "DecoherenceFactor")
        .def_readonly("value", &decoherence::DecoherenceFactor::value)
        .def_readonly("error", &decoherence::DecoherenceFactor::error)
        .def("__float__", [](const decoherence::DecoherenceFactor& d) { return d.value; });
    py::class_<decoherence::McEstimate>(m, "McEstimate")
        .def_readonly("estimate", &decoherence::McEstimate::estimate)
        .def_readonly("std_error", &decoherence::McEstimate::std_error);

    const quadrature::QuadratureConfig default_cfg;
    m.def("decoherence_integrand",
          [](double qx, double qr, double k, double w, double alpha) {
              return decoherence::decoherence_integrand(qx, qr, k, w, rap(alpha));
          },
          py::arg("qx"), py::arg("qr"), py::arg("k"), py::arg("w"), py::arg("alpha"));
    m.def("decoherence_factor",
          [](double alpha, const wavepacket::PacketSpec& packet, const quadrature::QuadratureConfig& cfg) {
              return decoherence::decoherence_factor(rap(alpha), packet, cfg);
          },
          py::arg("alpha"), py::arg("packet"), py::arg("cfg") = default_cfg);
    m.def("decoherence_factor_ultra", &decoherence::decoherence_factor_ultra, py::arg("packet"),
          py::arg("cfg") = default_cfg);
    m.def("decoherence_factor_smallwidth",
          [](double alpha, double w) { return decoherence::decoherence_factor_smallwidth(rap(alpha), w); },
          py::arg("alpha"), py::arg("w"));
    m.def("mc_decoherence_factor",
          [](double alpha, const wavepacket::PacketSpec& packet, const decoherence::McConfig& mc) {
              py::gil_scoped_release release;
              return decoherence::mc_decoherence_factor(rap(alpha), packet, mc);
          },
          py::arg("alpha"), py::arg("packet"), py::arg("mc") = decoherence::McConfig{});

    // chsh
    py::class_<chsh::Direction>(m, "Direction")
        .def(py::init([](double theta) { return chsh::Direction{theta}; }), py::arg("theta"))
        .def_readwrite("theta", &chsh::Direction::theta)
        .def("unit", &chsh::Direction::unit);
    py::class_<chsh::ChshSetting>(m, "ChshSetting")
        .def(py::init([](double a1, double a2, double b1, double b2) {
                 return chsh::ChshSetting{{a1}, {a2}, {b1}, {b2}};
             }),
             py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"));
    py::class_<chsh::ThresholdResult>(m, "ThresholdResult")
        .def_readonly("parameter", &chsh::ThresholdResult::parameter)
        .def_readonly("lo", &chsh::ThresholdResult::lo)
        .def_readonly("hi", &chsh::ThresholdResult::hi)
        .def_readonly("iterations", &chsh::ThresholdResult::iterations);
    py::class_<chsh::SampleEstimate>(m, "SampleEstimate")
        .def_readonly("estimate", &chsh::SampleEstimate::estimate)
        .def_readonly("std_error", &chsh::SampleEstimate::std_error);

    m.def("violation_threshold_v", &chsh::violation_threshold_v);
    m.def("reduced_density_matrix",
          [](double V, double W) { return Eigen::Matrix4cd(chsh::reduced_density_matrix(V, W).matrix); },
          py::arg("V"), py::arg("W"));
    m.def("pair_expectation",
          [](double V, double W, double tu, double tv) {
              return chsh::pair_expectation(V, W, chsh::Direction{tu}, chsh::Direction{tv});
          },
          py::arg("V"), py::arg("W"), py::arg("theta_u"), py::arg("theta_v"));
    m.def("chsh_value", &chsh::chsh_value, py::arg("V"), py::arg("W"), py::arg("setting"));
    m.def("chsh_constrained", &chsh::chsh_constrained, py::arg("V"), py::arg("W"), py::arg("phi"));
    m.def("chsh_smallwidth",
          [](double alpha, double w, double phi) { return chsh::chsh_smallwidth(rap(alpha), w, phi); },
          py::arg("alpha"), py::arg("w"), py::arg("phi"));
    m.def("chsh_bound_check", &chsh::chsh_bound_check, py::arg("value"));
    m.def("sample_outcomes",
          [](double V, double W, double theta_a, double theta_b, std::uint64_t n, std::uint64_t seed) {
              return chsh::sample_outcomes(chsh::reduced_density_matrix(V, W), chsh::Direction{theta_a},
                                           chsh::Direction{theta_b}, n, seed);
          },
          py::arg("V"), py::arg("W"), py::arg("theta_a"), py::arg("theta_b"), py::arg("n"), py::arg("seed"));
    m.def("threshold_rapidity", &chsh::threshold_rapidity, py::arg("packet"), py::arg("tol") = 1e-3,
          py::arg("cfg") = default_cfg);
    m.def("threshold_width", &chsh::threshold_width, py::arg("k"), py::arg("tol") = 1e-3,
          py::arg("cfg") = default_cfg);

    // figure data as column dicts
    m.def("rapidity_sweep",
          [](double k, double w, const std::vector<double>& alphas, int phi_points) {
              return records_to_columns(figures::rapidity_sweep(k, w, alphas, phi_points));
          },
          py::arg("k"), py::arg("w"), py::arg("alphas"), py::arg("phi_points") = figures::kDefaultPhiPoints);
    m.def("width_sweep",
          [](double k, const std::vector<double>& widths, int phi_points) {
              return records_to_columns(figures::width_sweep(k, widths, phi_points));
          },
          py::arg("k"), py::arg("widths"), py::arg("phi_points") = figures::kDefaultPhiPoints);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
