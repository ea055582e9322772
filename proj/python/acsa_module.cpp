#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acsa/analytic.hpp"
#include "acsa/config.hpp"
#include "acsa/dynamics.hpp"
#include "acsa/error.hpp"
#include "acsa/model.hpp"
#include "acsa/scan.hpp"
#include "acsa/steady.hpp"

namespace py = pybind11;

namespace {

py::dict table_to_dict(const acsa::ScanTable& t) {
    const std::size_t n = t.records.size();
    py::array_t<double> dp(n), dphi(n), aa(n), bb(n), cc(n), res(n);
    py::array_t<std::complex<double>> ab(n), ac(n);
    py::list status;
    auto dp_m = dp.mutable_unchecked<1>(), dphi_m = dphi.mutable_unchecked<1>(), aa_m = aa.mutable_unchecked<1>(),
         bb_m = bb.mutable_unchecked<1>(), cc_m = cc.mutable_unchecked<1>(), res_m = res.mutable_unchecked<1>();
    auto ab_m = ab.mutable_unchecked<1>(), ac_m = ac.mutable_unchecked<1>();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& r = t.records[k];
        const auto i = static_cast<py::ssize_t>(k);
        dp_m(i) = r.delta_p;
        dphi_m(i) = r.delta_phi;
        ab_m(i) = r.rho_ab;
        ac_m(i) = r.rho_ac;
        aa_m(i) = r.pop_a;
        bb_m(i) = r.pop_b;
        cc_m(i) = r.pop_c;
        res_m(i) = r.residual;
        status.append(r.ok() ? std::string("ok") : std::string(acsa::to_string(*r.error)));
    }
    py::dict d;
    d["delta_p_axis"] = t.delta_p_axis;
    d["delta_phi_axis"] = t.delta_phi_axis;
    d["delta_p"] = dp;
    d["delta_phi"] = dphi;
    d["rho_ab"] = ab;
    d["rho_ac"] = ac;
    d["rho_aa"] = aa;
    d["rho_bb"] = bb;
    d["rho_cc"] = cc;
    d["residual"] = res;
    d["status"] = status;
    return d;
}

}  // namespace

PYBIND11_MODULE(_acsa, m) {
    m.doc() = "Driven Lambda system: steady states, phase maps and spectra of the ac-Stark allowed transition";

    py::register_exception<acsa::Error>(m, "AcsaError");

    py::class_<acsa::SystemParams>(m, "SystemParams")
        .def(py::init([](double omega_p, double omega_l, double phi_p, double phi_l, double delta_p, double delta_l,
                         double gamma_ca, double gamma_cb) {
                 return acsa::SystemParams{omega_p, omega_l, phi_p, phi_l, delta_p, delta_l, gamma_ca, gamma_cb};
             }),
             py::arg("omega_p") = 0.0, py::arg("omega_l") = 0.0, py::arg("phi_p") = 0.0, py::arg("phi_l") = 0.0,
             py::arg("delta_p") = 0.0, py::arg("delta_l") = 0.0, py::arg("gamma_ca") = 1.0, py::arg("gamma_cb") = 1.0)
        .def_readwrite("omega_p", &acsa::SystemParams::omega_p)
        .def_readwrite("omega_l", &acsa::SystemParams::omega_l)
        .def_readwrite("phi_p", &acsa::SystemParams::phi_p)
        .def_readwrite("phi_l", &acsa::SystemParams::phi_l)
        .def_readwrite("delta_p", &acsa::SystemParams::delta_p)
        .def_readwrite("delta_l", &acsa::SystemParams::delta_l)
        .def_readwrite("gamma_ca", &acsa::SystemParams::gamma_ca)
        .def_readwrite("gamma_cb", &acsa::SystemParams::gamma_cb)
        .def_property_readonly("delta_phi", &acsa::SystemParams::delta_phi)
        .def("__repr__", [](const acsa::SystemParams& p) {
            std::ostringstream s;
            s << "SystemParams(omega_p=" << p.omega_p << ", omega_l=" << p.omega_l << ", phi_p=" << p.phi_p
              << ", phi_l=" << p.phi_l << ", delta_p=" << p.delta_p << ", delta_l=" << p.delta_l
              << ", gamma_ca=" << p.gamma_ca << ", gamma_cb=" << p.gamma_cb << ")";
            return s.str();
        });

    m.def("validate_params", &acsa::validate_params);
    m.def("build_hamiltonian", &acsa::build_hamiltonian);
    m.def("build_liouvillian", &acsa::build_liouvillian);

    m.def("steady_state", [](const acsa::SystemParams& p) {
        acsa::validate_params(p);
        const auto r = acsa::steady_state(acsa::build_liouvillian(p));
        return py::make_tuple(r.rho, r.residual);
    }, "Steady-state density matrix (basis order c, b, a) and its Liouvillian residual.");

    m.def("coherence", [](const acsa::Matrix3& rho, const std::string& pair) {
        if (pair == "ab") return acsa::coherence(rho, acsa::CoherencePair::ab);
        if (pair == "ac") return acsa::coherence(rho, acsa::CoherencePair::ac);
        if (pair == "bc") return acsa::coherence(rho, acsa::CoherencePair::bc);
        throw py::value_error("pair must be 'ab', 'ac' or 'bc'");
    });

    auto branch = [](const std::string& b) {
        if (b == "+") return acsa::analytic::Branch::plus;
        if (b == "-") return acsa::analytic::Branch::minus;
        throw py::value_error("branch must be '+' or '-'");
    };
    m.def("generalized_rabi", &acsa::analytic::generalized_rabi);
    m.def("dressed_states", [](const acsa::SystemParams& p) {
        const auto d = acsa::analytic::dressed_states(p);
        return py::make_tuple(d.plus, d.minus, d.r);
    });
    m.def("rho_ac_weak", &acsa::analytic::rho_ac_weak);
    m.def("rho_ab_weak", &acsa::analytic::rho_ab_weak);
    m.def("rho_ab_bare", &acsa::analytic::rho_ab_bare);
    m.def("rho_ab_dressed", [branch](const acsa::SystemParams& p, const std::string& b) {
        return acsa::analytic::rho_ab_dressed(p, branch(b));
    }, py::arg("params"), py::arg("branch"));
    m.def("rho_ac_dressed", [branch](const acsa::SystemParams& p, const std::string& b) {
        return acsa::analytic::rho_ac_dressed(p, branch(b));
    }, py::arg("params"), py::arg("branch"));

    m.def("sweep_detuning", [](const acsa::SystemParams& p, double start, double stop, std::size_t points,
                               std::size_t workers) {
        py::gil_scoped_release release;
        auto t = acsa::sweep_detuning(p, {start, stop, points}, {workers});
        py::gil_scoped_acquire acquire;
        return table_to_dict(t);
    }, py::arg("params"), py::arg("start") = -20.0, py::arg("stop") = 20.0, py::arg("points") = 401,
       py::arg("workers") = 0);

    m.def("map_phase_detuning", [](const acsa::SystemParams& p, std::tuple<double, double, std::size_t> dp_grid,
                                   std::tuple<double, double, std::size_t> phi_grid, std::size_t workers) {
        const acsa::Grid1D gdp{std::get<0>(dp_grid), std::get<1>(dp_grid), std::get<2>(dp_grid)};
        const acsa::Grid1D gphi{std::get<0>(phi_grid), std::get<1>(phi_grid), std::get<2>(phi_grid)};
        py::gil_scoped_release release;
        auto t = acsa::map_phase_detuning(p, gdp, gphi, {workers});
        py::gil_scoped_acquire acquire;
        return table_to_dict(t);
    }, py::arg("params"), py::arg("delta_p_grid"), py::arg("delta_phi_grid"), py::arg("workers") = 0);

    m.def("evolve", [](const acsa::SystemParams& p, const std::string& initial, double t_final, double dt, double tol) {
        const auto state = acsa::parse_initial_state(initial);
        if (!state) throw py::value_error("initial must be one of a, b, c, mixed");
        const auto traj = acsa::evolve(p, acsa::initial_density(*state), acsa::TimeGrid::covering(t_final, dt), tol,
                                       initial);
        return py::make_tuple(traj.times, traj.coherence(acsa::CoherencePair::ab), traj.states.back());
    }, py::arg("params"), py::arg("initial") = "a", py::arg("t_final") = 102.35, py::arg("dt") = 0.05,
       py::arg("tol") = 1e-12, "Returns (times, rho_ab samples, final density matrix).");

    m.def("spectrum", [](const std::vector<std::complex<double>>& samples, double dt, double carrier,
                         const std::string& window) {
        const auto w = acsa::parse_window(window);
        if (!w) throw py::value_error("window must be 'rectangular' or 'hann'");
        const auto s = acsa::spectrum(samples, dt, carrier, *w);
        return py::make_tuple(s.nu, s.amplitude, s.resolution);
    }, py::arg("samples"), py::arg("dt"), py::arg("carrier") = 0.0, py::arg("window") = "rectangular");

    m.def("find_peaks", [](const std::vector<double>& nu, const std::vector<double>& amplitude, double resolution,
                           double min_prominence) {
        acsa::Spectrum s;
        s.nu = nu;
        s.amplitude = amplitude;
        s.resolution = resolution;
        py::list out;
        for (const auto& p : acsa::find_peaks(s, min_prominence)) {
            py::dict d;
            d["nu_center"] = p.nu_center;
            d["height"] = p.height;
            d["fwhm"] = p.fwhm;
            d["prominence"] = p.prominence;
            out.append(d);
        }
        return out;
    });

    m.def("parse_config", [](const std::string& text) { return acsa::serialize_config(acsa::parse_config(text)); },
          "Validates a configuration and returns its canonical flat form.");
    m.def("preset_config", [](const std::string& id) {
        auto c = acsa::expand_preset(id);
        if (!c) throw py::value_error("unknown preset " + id);
        return acsa::serialize_config(*c);
    });
    m.def("preset_ids", [] {
        std::vector<std::string> ids;
        for (auto id : acsa::preset_ids()) ids.emplace_back(id);
        return ids;
    });
}
