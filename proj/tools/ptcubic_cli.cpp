// Command-line front end: series, pade, spectrum, largeorder, wkb, grid, zeta.
//
// Exit codes: 0 success, 2 bad arguments, 3 computation anomaly (suppressed
// by --allow-warn, in which case the anomaly is only reported on stderr).

#include "ptcubic/errors.hpp"
#include "ptcubic/io.hpp"
#include "ptcubic/precision.hpp"
#include "ptcubic/series_analysis.hpp"
#include "ptcubic/series_engine.hpp"
#include "ptcubic/spectral.hpp"
#include "ptcubic/wkb.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ptcubic;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitAnomaly = 3;

struct CommonOptions {
    std::string out = "-";
    std::string format = "csv";
    int digits = 30;
    bool allow_warn = false;
};

/// Collects anomalies raised while producing an otherwise complete output.
struct Report {
    std::vector<std::string> anomalies;
    void flag(std::string message) { anomalies.push_back(std::move(message)); }
};

void emit(const CommonOptions& common, const std::string& text) {
    if (common.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(common.out, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + common.out + "'");
    file << text;
    if (!file) throw Error("failed writing output file '" + common.out + "'");
}

std::string dump_json(const json& config, const json& data) { return envelope(config, data).dump(2) + "\n"; }

std::string fixed_double(double v, int digits) {
    std::ostringstream os;
    os << std::setprecision(std::min(digits, 17)) << v;
    return os.str();
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    if (steps < 1) throw InvalidArgument("--steps must be at least 1");
    if (!(std::isfinite(lo) && std::isfinite(hi)) || hi < lo) throw InvalidArgument("need finite g-min <= g-max");
    std::vector<double> grid;
    if (steps == 1) return {lo};
    for (int i = 0; i < steps; ++i) grid.push_back(lo + (hi - lo) * i / (steps - 1));
    return grid;
}

json base_config(const std::string& subcommand, const CommonOptions& common) {
    return json{{"subcommand", subcommand}, {"format", common.format}, {"digits", common.digits}};
}

// ---- series ------------------------------------------------------------------

struct SeriesArgs {
    std::string model = "c1d";
    int orders = -1;
};

Report run_series(const SeriesArgs& a, const CommonOptions& common) {
    const ModelId id = parse_model(a.model);
    const int orders = a.orders < 0 ? default_series_order(id) : a.orders;
    const EnergySeries series = compute_energy_series(id, orders);
    json config = base_config("series", common);
    config["model"] = a.model;
    config["orders"] = orders;
    if (common.format == "json") {
        json data = series_to_json(series);
        json decimals = json::array();
        for (const auto& c : series.coefficients) decimals.push_back(format_real(to_real(c), 50));
        data["decimal"] = decimals;
        emit(common, dump_json(config, data));
    } else {
        std::ostringstream os;
        os << "n,num,den,decimal\n";
        for (int n = 0; n <= series.max_order(); ++n) {
            const auto& c = series.coefficients[static_cast<std::size_t>(n)];
            os << n << ',' << c.numerator_string() << ',' << c.denominator_string() << ','
               << format_real(to_real(c), 50) << '\n';
        }
        emit(common, os.str());
    }
    return {};
}

// ---- pade --------------------------------------------------------------------

struct PadeArgs {
    std::string model = "c1d";
    int L = 9;
    int M = 9;
    double g_min = 0.0;
    double g_max = 1.0;
    int steps = 21;
    std::string form = "subtracted";
};

Report run_pade(const PadeArgs& a, const CommonOptions& common) {
    if (a.L < 0 || a.M < 0) throw InvalidArgument("--L and --M must be non-negative");
    const ModelId id = parse_model(a.model);
    const PadeForm form = a.form == "direct" ? PadeForm::Direct : PadeForm::OnceSubtracted;
    const auto grid = linear_grid(a.g_min, a.g_max, a.steps);
    const auto points = energy_curve(id, a.L, a.M, grid, form);

    Report report;
    for (const auto& p : points) {
        if (p.pole) report.flag("Padé pole at g = " + fixed_double(p.g, 17));
    }
    json config = base_config("pade", common);
    config.update({{"model", a.model}, {"L", a.L}, {"M", a.M}, {"g_min", a.g_min}, {"g_max", a.g_max},
                   {"steps", a.steps}, {"form", a.form}});
    if (common.format == "json") {
        json data = json::array();
        for (const auto& p : points)
            data.push_back({{"g", p.g}, {"E", p.pole ? json(nullptr) : json(format_real(p.energy, common.digits))},
                            {"pole", p.pole}});
        emit(common, dump_json(config, data));
    } else {
        std::ostringstream os;
        os << "g,E\n";
        for (const auto& p : points)
            os << fixed_double(p.g, 17) << ',' << (p.pole ? std::string("nan") : format_real(p.energy, common.digits))
               << '\n';
        emit(common, os.str());
    }
    return report;
}

// ---- spectrum ----------------------------------------------------------------

struct SpectrumArgs {
    std::string model = "xy2";
    std::optional<double> g;
    double g_min = 0.0;
    double g_max = 0.5;
    int steps = 11;
    int cutoff = 20;
    int levels = 3;
    double tolerance = 1e-6;
    double reality_tolerance = 1e-8;
};

Report run_spectrum(const SpectrumArgs& a, const CommonOptions& common) {
    const ModelId id = parse_model(a.model);
    const auto grid = a.g ? std::vector<double>{*a.g} : linear_grid(a.g_min, a.g_max, a.steps);
    std::vector<SpectrumResult> results;
    std::vector<std::vector<std::complex<double>>> raw;
    for (double g : grid) {
        results.push_back(low_levels({id, g, a.cutoff}, a.levels, {0, a.tolerance}));
        raw.push_back(results.back().eigenvalues);
    }
    const auto tracked = track_levels(raw);

    Report report;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& r = results[i];
        for (std::size_t j = 0; j < r.eigenvalues.size(); ++j) {
            if (!r.converged[j])
                report.flag("level " + std::to_string(j) + " not converged at g = " + fixed_double(grid[i], 17));
            else if (std::abs(r.eigenvalues[j].imag()) >= a.reality_tolerance)
                report.flag("level " + std::to_string(j) + " has |Im E| above tolerance at g = " +
                            fixed_double(grid[i], 17));
        }
    }
    // Convergence flags follow their eigenvalue through the tracking permutation.
    auto flag_for = [&](std::size_t point, const std::complex<double>& e) {
        const auto& r = results[point];
        for (std::size_t j = 0; j < r.eigenvalues.size(); ++j)
            if (r.eigenvalues[j] == e) return static_cast<bool>(r.converged[j]);
        return false;
    };

    json config = base_config("spectrum", common);
    config.update({{"model", a.model}, {"cutoff", a.cutoff}, {"levels", a.levels}, {"tolerance", a.tolerance}});
    if (a.g) config["g"] = *a.g;
    else config.update({{"g_min", a.g_min}, {"g_max", a.g_max}, {"steps", a.steps}});

    if (common.format == "json") {
        json data = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            json levels = json::array();
            for (std::size_t j = 0; j < tracked[i].size(); ++j) {
                const auto e = tracked[i][j];
                levels.push_back({{"level_index", j}, {"re", e.real()}, {"im", e.imag()}, {"converged", flag_for(i, e)}});
            }
            data.push_back({{"g", grid[i]},
                            {"cutoff_used", results[i].cutoff_used},
                            {"comparison_cutoff", results[i].comparison_cutoff},
                            {"levels", levels}});
        }
        emit(common, dump_json(config, data));
    } else {
        std::ostringstream os;
        os << "g,level_index,re,im,converged\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t j = 0; j < tracked[i].size(); ++j) {
                const auto e = tracked[i][j];
                os << fixed_double(grid[i], 17) << ',' << j << ',' << fixed_double(e.real(), common.digits) << ','
                   << fixed_double(e.imag(), common.digits) << ',' << (flag_for(i, e) ? 1 : 0) << '\n';
            }
        }
        emit(common, os.str());
    }
    return report;
}

// ---- largeorder ----------------------------------------------------------------

struct LargeOrderArgs {
    std::string model = "c1d";
    int orders = -1;
    int richardson_k = 3;
};

Report run_largeorder(const LargeOrderArgs& a, const CommonOptions& common) {
    if (a.richardson_k < 0) throw InvalidArgument("--richardson must be non-negative");
    const ModelId id = parse_model(a.model);
    const int orders = a.orders < 0 ? default_series_order(id) : a.orders;
    if (orders < 1) throw InvalidArgument("--orders must be at least 1");
    const EnergySeries series = compute_energy_series(id, orders);
    const LargeOrderLaw law = large_order_law(id, wkb_constants(), &series);
    const auto ratios = ratio_to_asymptote(series, law);

    // table[k][i]: Richardson of order k+1 on ratios[0..i]
    std::vector<std::vector<std::optional<HighFloat>>> table(static_cast<std::size_t>(a.richardson_k));
    for (int k = 1; k <= a.richardson_k; ++k) {
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            if (static_cast<int>(i) < k) {
                table[static_cast<std::size_t>(k - 1)].push_back(std::nullopt);
                continue;
            }
            std::vector<IndexedValue> prefix(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            table[static_cast<std::size_t>(k - 1)].push_back(richardson(prefix, k));
        }
    }

    json config = base_config("largeorder", common);
    config.update({{"model", a.model}, {"orders", orders}, {"richardson", a.richardson_k}});
    if (common.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            json row{{"n", ratios[i].n}, {"ratio", format_real(ratios[i].value, common.digits)}};
            for (int k = 1; k <= a.richardson_k; ++k) {
                const auto& v = table[static_cast<std::size_t>(k - 1)][i];
                row["richardson_k" + std::to_string(k)] = v ? json(format_real(*v, common.digits)) : json(nullptr);
            }
            rows.push_back(row);
        }
        json data{{"model", a.model},
                  {"K", format_real(law.amplitude, common.digits)},
                  {"B", law.base.to_string()},
                  {"rows", rows}};
        emit(common, dump_json(config, data));
    } else {
        std::ostringstream os;
        os << "n,ratio";
        for (int k = 1; k <= a.richardson_k; ++k) os << ",richardson_k" << k;
        os << '\n';
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            os << ratios[i].n << ',' << format_real(ratios[i].value, common.digits);
            for (int k = 1; k <= a.richardson_k; ++k) {
                const auto& v = table[static_cast<std::size_t>(k - 1)][i];
                os << ',' << (v ? format_real(*v, common.digits) : std::string());
            }
            os << '\n';
        }
        emit(common, os.str());
    }
    return {};
}

// ---- wkb -------------------------------------------------------------------------

struct WkbArgs {
    std::string model = "xy2";
};

Report run_wkb(const WkbArgs& a, const CommonOptions& common) {
    const ModelId id = parse_model(a.model);
    Report report;
    const WkbConstants c = wkb_constants();
    const RiccatiProfile ode = riccati_solve();
    const LargeOrderLaw law = large_order_law(id, c);
    const MpepSet mpeps = mpep_directions(id);

    const double identity = c.a0 * c.a0 / std::sqrt(c.f0);
    const double identity_error = std::abs(identity - transverse_identity_value());
    const double f0_error = std::abs(ode.f0 - c.f0);
    const double a0_error = std::abs(ode.a0 - c.a0);
    const HighFloat flux_vs_closed = abs(flux_amplitude_2d(c) - closed_amplitude_2d()) / closed_amplitude_2d();
    if (identity_error > 1e-10) report.flag("A(0)^2/sqrt(f(0)) identity off by " + fixed_double(identity_error, 6));
    if (f0_error > 1e-6 || a0_error > 1e-6) report.flag("ODE constants disagree with the closed forms");
    if (ode.f_crossed_zero) report.flag("Riccati solution f crossed zero");

    json checks = json::array();
    for (double g : {0.5, 0.1, 0.05}) {
        const auto q = tunneling_integral(g, TunnelingMode::Geometric);
        const double exact = 18.0 / (5.0 * g * g);
        const double rel = std::abs(q.value - exact) / exact;
        if (rel > 1e-10) report.flag("geometric exponent quadrature off at g = " + fixed_double(g, 6));
        const auto ph = tunneling_integral(g, TunnelingMode::Physical);
        checks.push_back({{"g", g},
                          {"geometric", q.value},
                          {"geometric_exact", exact},
                          {"physical", ph.value},
                          {"physical_expansion", physical_exponent_expansion(g)}});
    }
    json directions = json::array();
    for (const auto& u : mpeps.directions) {
        json dir = json::array();
        for (int i = 0; i < build_model(id).dimension; ++i) dir.push_back(u[i]);
        directions.push_back({{"direction", dir}, {"barrier_exponent_g1", barrier_exponent(id, u, 1.0).value}});
    }

    json config = base_config("wkb", common);
    config["model"] = a.model;
    json data{{"model", a.model},
              {"K", format_real(law.amplitude, common.digits)},
              {"B", law.base.to_string()},
              {"f0", c.f0},
              {"a0", c.a0},
              {"nu_re", c.nu.real()},
              {"nu_im", c.nu.imag()},
              {"consistency",
               {{"identity", identity},
                {"identity_expected", transverse_identity_value()},
                {"f0_ode", ode.f0},
                {"a0_ode", ode.a0},
                {"flux_vs_closed_amplitude_relative", format_real(flux_vs_closed, 6)},
                {"exponents", checks}}},
              {"mpeps", {{"radial_cubic_coefficient", mpeps.radial_cubic_coefficient}, {"channels", directions}}}};
    if (common.format == "json") {
        emit(common, dump_json(config, data));
    } else {
        std::ostringstream os;
        os << "model,K,B,f0,a0,nu_re,nu_im\n"
           << a.model << ',' << format_real(law.amplitude, common.digits) << ',' << law.base.to_string() << ','
           << fixed_double(c.f0, 17) << ',' << fixed_double(c.a0, 17) << ',' << fixed_double(c.nu.real(), 17) << ','
           << fixed_double(c.nu.imag(), 17) << '\n';
        emit(common, os.str());
    }
    return report;
}

// ---- grid ------------------------------------------------------------------------

struct GridArgs {
    std::string model = "xy2";
    double g = 1.0;
    double extent = 3.0;
    int resolution = 101;
    std::string prefix = "grid";
};

Report run_grid(const GridArgs& a, const CommonOptions& common) {
    const PotentialGrid grid = potential_grid(parse_model(a.model), a.g, a.extent, a.resolution);
    {
        std::ofstream csv(a.prefix + ".csv");
        if (!csv) throw Error("cannot open '" + a.prefix + ".csv'");
        csv << "x,y,V\n";
        for (int iy = 0; iy < grid.ny; ++iy)
            for (int ix = 0; ix < grid.nx; ++ix)
                csv << fixed_double(grid.x_at(ix), 17) << ',' << fixed_double(grid.y_at(iy), 17) << ','
                    << fixed_double(grid.values[static_cast<std::size_t>(iy * grid.nx + ix)], common.digits) << '\n';
    }
    {
        std::ofstream bin(a.prefix + ".bin", std::ios::binary);
        if (!bin) throw Error("cannot open '" + a.prefix + ".bin'");
        write_grid_binary(grid, bin);
    }
    {
        std::ofstream side(a.prefix + ".json");
        if (!side) throw Error("cannot open '" + a.prefix + ".json'");
        side << grid_sidecar(grid).dump(2) << '\n';
    }
    return {};
}

// ---- zeta ------------------------------------------------------------------------

struct ZetaArgs {
    int cutoff = 100;
    double omega = 0.0;  // 0: choose from a small grid
    int levels = 10;
    double tolerance = 1e-6;
};

Report run_zeta(const ZetaArgs& a, const CommonOptions& common) {
    if (a.levels < 1) throw InvalidArgument("--levels must be at least 1");
    const ConvergenceOptions opts{8, a.tolerance};
    const double omega =
        a.omega > 0.0 ? a.omega : choose_massless_scale(a.cutoff, {1.0, 1.5, 2.0, 2.5, 3.0, 3.5}, opts);
    const SpectrumResult r = massless_cubic_levels(a.cutoff, omega, a.levels, opts);
    const HighFloat zeta = zeta_exact<HighFloat>();

    Report report;
    double partial = 0.0;
    std::vector<double> sums;
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
        const double e = r.eigenvalues[k].real();
        if (!r.converged[k]) report.flag("massless level " + std::to_string(k) + " not converged");
        if (!(e > 0.0)) report.flag("massless level " + std::to_string(k) + " not positive");
        const double next = partial + 1.0 / e;
        if (k > 0 && !(next > partial)) report.flag("partial sums not increasing at k = " + std::to_string(k));
        partial = next;
        if (!(HighFloat(partial) < zeta)) report.flag("partial sum exceeds Z(1) at k = " + std::to_string(k));
        sums.push_back(partial);
    }

    json config = base_config("zeta", common);
    config.update({{"cutoff", a.cutoff}, {"omega", omega}, {"levels", a.levels}, {"tolerance", a.tolerance}});
    if (common.format == "json") {
        json rows = json::array();
        for (std::size_t k = 0; k < sums.size(); ++k)
            rows.push_back({{"k", k + 1},
                            {"E_re", r.eigenvalues[k].real()},
                            {"E_im", r.eigenvalues[k].imag()},
                            {"converged", static_cast<bool>(r.converged[k])},
                            {"partial_sum", sums[k]}});
        emit(common, dump_json(config, json{{"zeta", format_real(zeta, common.digits)}, {"rows", rows}}));
    } else {
        std::ostringstream os;
        os << "k,E_re,E_im,partial_sum,zeta\n";
        for (std::size_t k = 0; k < sums.size(); ++k)
            os << k + 1 << ',' << fixed_double(r.eigenvalues[k].real(), common.digits) << ','
               << fixed_double(r.eigenvalues[k].imag(), common.digits) << ',' << fixed_double(sums[k], common.digits)
               << ',' << format_real(zeta, common.digits) << '\n';
        emit(common, os.str());
    }
    return report;
}

void add_common(CLI::App* sub, CommonOptions& common) {
    sub->add_option("-o,--out", common.out, "Output file ('-' for stdout)");
    sub->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", common.digits, "Significant digits in decimal output")->check(CLI::Range(1, 50));
    sub->add_flag("--allow-warn", common.allow_warn, "Exit 0 even when anomalies are flagged");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbation series, Padé sums, spectra and tunneling constants of complex cubic oscillators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CommonOptions common;
    const auto models = CLI::IsMember({"c1d", "xy2", "xyz", "hh"});

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Exact ground-state energy coefficients c_n of g^{2n}");
    series->add_option("--model", series_args.model, "c1d, xy2, xyz or hh")->check(models);
    series->add_option("--orders", series_args.orders, "Highest n (default: 60/45/30/45)")->check(CLI::NonNegativeNumber);
    add_common(series, common);

    PadeArgs pade_args;
    auto* pade_cmd = app.add_subcommand("pade", "Padé-summed ground-state energy on a g grid");
    pade_cmd->add_option("--model", pade_args.model)->check(models);
    pade_cmd->add_option("--L", pade_args.L, "Numerator degree")->check(CLI::Range(0, 60));
    pade_cmd->add_option("--M", pade_args.M, "Denominator degree")->check(CLI::Range(0, 60));
    pade_cmd->add_option("--g-min", pade_args.g_min);
    pade_cmd->add_option("--g-max", pade_args.g_max);
    pade_cmd->add_option("--steps", pade_args.steps)->check(CLI::Range(1, 100000));
    pade_cmd->add_option("--form", pade_args.form, "subtracted or direct")->check(CLI::IsMember({"subtracted", "direct"}));
    add_common(pade_cmd, common);

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "Low levels by oscillator-basis diagonalization");
    spectrum->add_option("--model", spectrum_args.model)->check(models);
    spectrum->add_option("--g", spectrum_args.g, "Single coupling (overrides the grid)");
    spectrum->add_option("--g-min", spectrum_args.g_min);
    spectrum->add_option("--g-max", spectrum_args.g_max);
    spectrum->add_option("--steps", spectrum_args.steps)->check(CLI::Range(1, 100000));
    spectrum->add_option("--cutoff", spectrum_args.cutoff, "Basis states per coordinate")->check(CLI::Range(2, 400));
    spectrum->add_option("--levels", spectrum_args.levels)->check(CLI::Range(1, 1000));
    spectrum->add_option("--tolerance", spectrum_args.tolerance, "Cutoff-convergence tolerance")
        ->check(CLI::PositiveNumber);
    add_common(spectrum, common);

    LargeOrderArgs lo_args;
    auto* largeorder = app.add_subcommand("largeorder", "Ratios of c_n to the large-order law with Richardson columns");
    largeorder->add_option("--model", lo_args.model)->check(models);
    largeorder->add_option("--orders", lo_args.orders)->check(CLI::PositiveNumber);
    largeorder->add_option("--richardson", lo_args.richardson_k, "Highest Richardson order")->check(CLI::Range(0, 20));
    add_common(largeorder, common);

    WkbArgs wkb_args;
    auto* wkb = app.add_subcommand("wkb", "Tunneling constants and consistency report");
    wkb->add_option("--model", wkb_args.model)->check(models);
    add_common(wkb, common);

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "Escape potential on a square grid (CSV, binary, JSON sidecar)");
    grid->add_option("--model", grid_args.model)->check(CLI::IsMember({"c1d", "xy2", "hh"}));
    grid->add_option("--g", grid_args.g);
    grid->add_option("--extent", grid_args.extent)->check(CLI::PositiveNumber);
    grid->add_option("--resolution", grid_args.resolution)->check(CLI::Range(2, 10000));
    grid->add_option("--prefix", grid_args.prefix, "Output path prefix");
    add_common(grid, common);

    ZetaArgs zeta_args;
    auto* zeta = app.add_subcommand("zeta", "Z(1) of p^2 + i x^3 against partial sums of inverse levels");
    zeta->add_option("--cutoff", zeta_args.cutoff)->check(CLI::Range(8, 600));
    zeta->add_option("--omega", zeta_args.omega, "Basis scale (0 = pick automatically)")->check(CLI::NonNegativeNumber);
    zeta->add_option("--levels", zeta_args.levels)->check(CLI::Range(1, 100));
    zeta->add_option("--tolerance", zeta_args.tolerance)->check(CLI::PositiveNumber);
    add_common(zeta, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        Report report;
        if (*series) report = run_series(series_args, common);
        else if (*pade_cmd) report = run_pade(pade_args, common);
        else if (*spectrum) report = run_spectrum(spectrum_args, common);
        else if (*largeorder) report = run_largeorder(lo_args, common);
        else if (*wkb) report = run_wkb(wkb_args, common);
        else if (*grid) report = run_grid(grid_args, common);
        else if (*zeta) report = run_zeta(zeta_args, common);
        for (const auto& a : report.anomalies) std::cerr << "anomaly: " << a << '\n';
        if (!report.anomalies.empty() && !common.allow_warn) return kExitAnomaly;
        return kExitOk;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const ComputationAnomaly& e) {
        std::cerr << "anomaly: " << e.what() << '\n';
        return kExitAnomaly;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAnomaly;
    }
}
