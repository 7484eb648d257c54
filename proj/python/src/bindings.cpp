#include "ptcubic/errors.hpp"
#include "ptcubic/io.hpp"
#include "ptcubic/series_analysis.hpp"
#include "ptcubic/series_engine.hpp"
#include "ptcubic/spectral.hpp"
#include "ptcubic/wkb.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace ptcubic;

namespace {

PadeForm parse_form(const std::string& form) {
    if (form == "subtracted") return PadeForm::OnceSubtracted;
    if (form == "direct") return PadeForm::Direct;
    throw InvalidArgument("form must be 'subtracted' or 'direct'");
}

std::vector<std::pair<std::string, std::string>> as_pairs(const std::vector<ExactRational>& values) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : values) out.emplace_back(v.numerator_string(), v.denominator_string());
    return out;
}

py::dict spectrum_dict(const SpectrumResult& r) {
    py::dict d;
    d["eigenvalues"] = r.eigenvalues;
    d["converged"] = r.converged;
    d["cutoff_change"] = r.cutoff_change;
    d["max_abs_imag_low"] = r.max_abs_imag_low;
    d["cutoff_used"] = r.cutoff_used;
    d["comparison_cutoff"] = r.comparison_cutoff;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ptcubic, m) {
    m.doc() = "Perturbation series, Padé sums, spectra and tunneling constants of complex cubic oscillators";
    m.attr("__version__") = kToolVersion;

    static py::exception<ComputationAnomaly> anomaly(m, "ComputationAnomaly", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidArgument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ComputationAnomaly& e) {
            anomaly(e.what());
        }
    });

    m.attr("models") = std::vector<std::string>{"c1d", "xy2", "xyz", "hh"};

    m.def("default_series_order", [](const std::string& model) { return default_series_order(parse_model(model)); },
          py::arg("model"));

    m.def(
        "energy_series",
        [](const std::string& model, int orders) {
            const ModelId id = parse_model(model);
            EnergySeries s;
            {
                py::gil_scoped_release release;
                s = compute_energy_series(id, orders < 0 ? default_series_order(id) : orders);
            }
            return as_pairs(s.coefficients);
        },
        py::arg("model"), py::arg("orders") = -1,
        "Exact c_n as (numerator, denominator) decimal strings, n = 0..orders.");

    m.def(
        "wavefunction_tensor_json",
        [](const std::string& model, int max_order) {
            return tensor_to_json(compute_wavefunction_coefficients(build_model(parse_model(model)), max_order)).dump();
        },
        py::arg("model"), py::arg("max_order"));

    m.def(
        "pade_curve",
        [](const std::string& model, int L, int M, const std::vector<double>& g, const std::string& form) {
            const ModelId id = parse_model(model);
            const PadeForm f = parse_form(form);
            std::vector<CurvePoint> points;
            {
                py::gil_scoped_release release;
                points = energy_curve(id, L, M, g, f);
            }
            py::list out;
            for (const auto& p : points)
                out.append(py::make_tuple(p.g, p.pole ? py::object(py::none()) : py::float_(static_cast<double>(p.energy)),
                                          p.pole));
            return out;
        },
        py::arg("model"), py::arg("L") = 9, py::arg("M") = 9, py::arg("g"), py::arg("form") = "subtracted",
        "Padé-summed ground energy as (g, E or None at a pole, pole flag) tuples.");

    m.def(
        "low_levels",
        [](const std::string& model, double g, int cutoff, int levels, double tolerance) {
            const SpectralProblem problem{parse_model(model), g, cutoff};
            SpectrumResult r;
            {
                py::gil_scoped_release release;
                r = low_levels(problem, levels, {0, tolerance});
            }
            return spectrum_dict(r);
        },
        py::arg("model"), py::arg("g"), py::arg("cutoff") = 20, py::arg("levels") = 3, py::arg("tolerance") = 1e-6);

    m.def(
        "massless_cubic_levels",
        [](int cutoff, double omega, int levels) {
            SpectrumResult r;
            {
                py::gil_scoped_release release;
                r = massless_cubic_levels(cutoff, omega, levels, {8, 1e-6});
            }
            return spectrum_dict(r);
        },
        py::arg("cutoff") = 100, py::arg("omega") = 2.5, py::arg("levels") = 10);

    m.def("zeta_exact", [] { return static_cast<double>(zeta_exact<HighFloat>()); });

    m.def(
        "large_order",
        [](const std::string& model, int orders, int richardson_k) {
            const ModelId id = parse_model(model);
            py::dict d;
            std::vector<IndexedValue> ratios;
            LargeOrderLaw law;
            {
                py::gil_scoped_release release;
                const EnergySeries s = compute_energy_series(id, orders < 0 ? default_series_order(id) : orders);
                law = large_order_law(id, wkb_constants(), &s);
                ratios = ratio_to_asymptote(s, law);
            }
            std::vector<std::pair<int, double>> rows;
            for (const auto& r : ratios) rows.emplace_back(r.n, static_cast<double>(r.value));
            d["amplitude"] = static_cast<double>(law.amplitude);
            d["base"] = py::make_tuple(law.base.numerator_string(), law.base.denominator_string());
            d["ratios"] = rows;
            d["richardson"] = static_cast<double>(richardson(ratios, richardson_k));
            return d;
        },
        py::arg("model"), py::arg("orders") = -1, py::arg("richardson") = 3);

    m.def("wkb_constants", [] {
        const WkbConstants c = wkb_constants();
        py::dict d;
        d["nu"] = c.nu;
        d["f0"] = c.f0;
        d["a0"] = c.a0;
        d["flux_amplitude"] = static_cast<double>(flux_amplitude_2d(c));
        return d;
    });

    m.def("riccati_solve", [](double eps, double tolerance) {
        const RiccatiProfile p = riccati_solve(eps, tolerance);
        return py::make_tuple(p.f0, p.a0, p.f_crossed_zero);
    }, py::arg("eps") = 1e-6, py::arg("tolerance") = 1e-13);

    m.def(
        "tunneling_integral",
        [](double g, const std::string& mode) {
            if (mode != "geometric" && mode != "physical") throw InvalidArgument("mode must be 'geometric' or 'physical'");
            return tunneling_integral(g, mode == "geometric" ? TunnelingMode::Geometric : TunnelingMode::Physical).value;
        },
        py::arg("g"), py::arg("mode") = "geometric");

    m.def("mpep_directions", [](const std::string& model) {
        const ModelId id = parse_model(model);
        const MpepSet s = mpep_directions(id);
        const int d = build_model(id).dimension;
        std::vector<std::vector<double>> dirs;
        for (const auto& u : s.directions) dirs.emplace_back(u.begin(), u.begin() + d);
        return dirs;
    }, py::arg("model"));

    m.def(
        "potential_grid",
        [](const std::string& model, double g, double extent, int resolution) {
            const PotentialGrid grid = potential_grid(parse_model(model), g, extent, resolution);
            py::array_t<double> out({grid.ny, grid.nx});
            std::copy(grid.values.begin(), grid.values.end(), out.mutable_data());
            return out;
        },
        py::arg("model"), py::arg("g"), py::arg("extent") = 3.0, py::arg("resolution") = 101,
        "Escape potential on a (resolution x resolution) grid, rows indexed by y.");
}
