// bindings.cpp — python module exposing the main operations of the ring
// simulator: parameter records, polariton spectra, resonance atlas, Keldysh
// observables, the master-equation oracle and the device solver.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "optoring/device.hpp"
#include "optoring/keldysh.hpp"
#include "optoring/lindblad.hpp"
#include "optoring/params.hpp"
#include "optoring/polaritons.hpp"
#include "optoring/resonances.hpp"

namespace py = pybind11;
using namespace optoring;

namespace {

Process as_process(const std::string& label) {
    if (label.size() == 1) {
        if (auto p = process_from_label(label[0])) return *p;
    }
    throw py::value_error("process must be one of 'a'..'e'");
}

ProcessSet as_process_set(const std::vector<std::string>& labels) {
    if (labels.empty()) return ProcessSet::all();
    ProcessSet ps = ProcessSet::none();
    for (const auto& l : labels) ps.active[int(as_process(l))] = true;
    return ps;
}

py::dict mode_dict(const ModeData& b) {
    py::dict d;
    d["k"] = b.k;
    d["G_k"] = b.coupling.magnitude;
    d["phi_k"] = b.coupling.phase;
    d["theta_k"] = b.transform.theta_k;
    d["omega"] = std::vector<double>{b.omega[0], b.omega[1]};
    d["kappa_eff"] = std::vector<double>{b.kappa_eff[0], b.kappa_eff[1]};
    d["n_occ"] = std::vector<double>{b.n_occ[0], b.n_occ[1]};
    d["T_eff"] = std::vector<double>{b.T_eff[0], b.T_eff[1]};
    return d;
}

}  // namespace

PYBIND11_MODULE(_optoring, m) {
    m.doc() = "four-mode optomechanical ring: polaritons, resonances, Keldysh "
              "self-energies, OMIT, master-equation oracle, Fabry-Perot designer";

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_static("from_gpm", &SystemParams::from_gpm, py::arg("delta"),
                    py::arg("g_plus"), py::arg("g_minus"), py::arg("kappa"),
                    py::arg("gamma"), py::arg("g1_bare") = 0.0, py::arg("T") = 0.0,
                    py::arg("N") = 2, py::arg("kappa_cp") = 0.0)
        .def_readwrite("omega_m", &SystemParams::omega_m)
        .def_readwrite("delta", &SystemParams::delta)
        .def_readwrite("kappa", &SystemParams::kappa)
        .def_readwrite("gamma", &SystemParams::gamma)
        .def_readwrite("G1", &SystemParams::G1)
        .def_readwrite("G2", &SystemParams::G2)
        .def_readwrite("g1", &SystemParams::g1)
        .def_readwrite("g2", &SystemParams::g2)
        .def_readwrite("T", &SystemParams::T)
        .def_readwrite("N", &SystemParams::N)
        .def_readwrite("kappa_cp", &SystemParams::kappa_cp);

    m.def("validate", [](const SystemParams& p) { return validate(p).violations; });
    m.def("critical_coupling", &critical_coupling);
    m.def("stability_check", &stability_check);
    m.def("polariton_frequencies", [](const SystemParams& p, double G_k) {
        const auto w = polariton_frequencies(p, G_k);
        return std::make_pair(w[0], w[1]);
    });
    m.def("mixing_angle", &mixing_angle);
    m.def("many_photon_coupling", [](const SystemParams& p, double k) {
        const auto mp = many_photon_coupling(p, k);
        return std::make_pair(mp.magnitude, mp.phase);
    });

    py::class_<PolaritonSpectrum>(m, "PolaritonSpectrum")
        .def(py::init<const SystemParams&>())
        .def_property_readonly("n_cells", &PolaritonSpectrum::n_cells)
        .def("block",
             [](const PolaritonSpectrum& s, int j) { return mode_dict(s.block(j)); })
        .def("linear_dos",
             [](const PolaritonSpectrum& s, double w) { return linear_cavity_dos(s, w); })
        .def("linear_dos", [](const PolaritonSpectrum& s, const std::vector<double>& ws) {
            std::vector<double> out;
            out.reserve(ws.size());
            for (double w : ws) out.push_back(linear_cavity_dos(s, w));
            return out;
        });

    m.def("effective_couplings", [](const PolaritonSpectrum& s) {
        const auto g = effective_couplings(s);
        py::dict d;
        for (Process p : kAllProcesses)
            d[py::str(std::string(1, process_label(p)))] = g[p];
        return d;
    });

    m.def(
        "nonlinear_dos",
        [](const PolaritonSpectrum& s, const std::vector<double>& ws,
           const std::vector<std::string>& processes) {
            const auto g = effective_couplings(s);
            const auto ps = as_process_set(processes);
            std::vector<double> out;
            out.reserve(ws.size());
            for (double w : ws) out.push_back(nonlinear_cavity_dos(s, g, w, ps));
            return out;
        },
        py::arg("spectrum"), py::arg("omegas"),
        py::arg("processes") = std::vector<std::string>{});

    m.def(
        "nonlinearity_strength",
        [](const PolaritonSpectrum& s, const std::vector<std::string>& processes) {
            return nonlinearity_strength(s, effective_couplings(s),
                                         as_process_set(processes));
        },
        py::arg("spectrum"), py::arg("processes") = std::vector<std::string>{});

    m.def("effective_cooperativity", [](const PolaritonSpectrum& s) {
        return effective_cooperativity(s, effective_couplings(s));
    });

    m.def(
        "omit_reflectivity",
        [](const PolaritonSpectrum& s, double omega_p, double kappa_cp) {
            const auto r = omit_reflectivity(s, effective_couplings(s), omega_p, kappa_cp);
            return std::make_pair(r.linear, r.nonlinear);
        },
        py::arg("spectrum"), py::arg("omega_p"), py::arg("kappa_cp"));

    m.def(
        "resonant_gplus",
        [](const std::string& process, double delta, double g_minus) {
            return resonant_gplus(as_process(process), delta, g_minus);
        },
        py::arg("process"), py::arg("delta"), py::arg("g_minus"));

    m.def(
        "allowed_region",
        [](const std::string& process,
           double delta) -> std::optional<std::pair<double, double>> {
            const auto r = allowed_region(as_process(process), delta);
            if (!r) return std::nullopt;
            return std::make_pair(r->g_minus_min, r->g_minus_max);
        },
        py::arg("process"), py::arg("delta"));

    m.def("resonance_residual", [](const SystemParams& p, const std::string& process) {
        return resonance_residual(p, as_process(process));
    });

    m.def(
        "two_mode_comparison",
        [](const SystemParams& four_mode, double two_mode_delta) {
            const auto c = two_mode_comparison(four_mode, two_mode_delta);
            py::dict d;
            d["G"] = c.G;
            d["g_tilde_sq"] = c.g_tilde_sq;
            d["kappa_minus"] = c.kappa_minus;
            d["n_minus"] = c.n_minus_exact;
            d["C_eff_full"] = c.c_eff_full;
            d["C_eff_two_mode"] = c.c_eff_two_mode;
            d["enhancement_ratio"] = c.enhancement_ratio;
            return d;
        },
        py::arg("four_mode_params"), py::arg("two_mode_delta") = -1.99);

    m.def(
        "oracle_compare",
        [](const SystemParams& p, int n_max_1, int n_max_2, int points,
           double window_kappas) {
            PolaritonSpectrum s(p);
            const auto g = effective_couplings(s);
            LindbladOracle oracle(build_reduced_model(s, g, n_max_1, n_max_2));
            const auto ss = oracle.steady_state();
            const double w0 = s.two_pi_block().omega[0];
            const double kap = s.two_pi_block().kappa_eff[0];
            std::vector<double> grid;
            for (int i = 0; i < points; ++i)
                grid.push_back(w0 - window_kappas * kap +
                               2.0 * window_kappas * kap * i / (points - 1));
            const auto spec = oracle_cavity_dos(s, g, oracle, ss, grid);
            py::dict d;
            d["omega"] = spec.omega;
            d["dos_oracle"] = spec.dos_oracle;
            d["dos_keldysh"] = spec.dos_keldysh;
            d["top_population_1"] = ss.top_population_1;
            d["top_population_2"] = ss.top_population_2;
            return d;
        },
        py::arg("params"), py::arg("n_max_1") = 12, py::arg("n_max_2") = 6,
        py::arg("points") = 21, py::arg("window_kappas") = 4.0);

    m.def(
        "solve_device",
        [](double transmission, std::optional<std::vector<double>> guess) {
            device::SymmetricGuess g = device::default_symmetric_guess();
            if (guess) {
                if (guess->size() != 4)
                    throw py::value_error("guess must be [k1, k2, q1, q2]");
                g = {(*guess)[0], (*guess)[1], (*guess)[2], (*guess)[3]};
            }
            const auto sol = device::solve_symmetric_configuration(1.0, transmission, g);
            py::dict d;
            d["k1L"] = sol.k1;
            d["k2L"] = sol.k2;
            d["q1_over_L"] = sol.q1;
            d["q2_over_L"] = sol.q2;
            d["g11"] = sol.g11;
            d["g12"] = sol.g12;
            d["ratio_gminus_gplus"] = sol.ratio_gminus_gplus;
            d["converged"] = sol.converged;
            return d;
        },
        py::arg("transmission") = 0.85, py::arg("guess") = py::none());
}
