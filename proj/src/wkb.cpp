#include "ptcubic/wkb.hpp"

#include "ptcubic/complex_gamma.hpp"
#include "ptcubic/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ptcubic {

namespace {

using std::numbers::pi;

constexpr double kQuadratureTolerance = 1e-14;
constexpr unsigned kQuadratureDepth = 20;

// ---- polynomial W on the unit sphere ---------------------------------------

double w_value(const ModelSpec& model, const UnitVector& u) { return model.evaluate_perturbation(u); }

UnitVector w_gradient(const ModelSpec& model, const UnitVector& u) {
    UnitVector grad{};
    for (const auto& term : model.perturbation) {
        const double c = term.coefficient.to_double();
        for (int i = 0; i < model.dimension; ++i) {
            if (term.exponents[i] == 0) continue;
            double v = c * term.exponents[i];
            for (int j = 0; j < model.dimension; ++j)
                v *= std::pow(u[j], j == i ? term.exponents[j] - 1 : term.exponents[j]);
            grad[i] += v;
        }
    }
    return grad;
}

using Matrix3 = std::array<std::array<double, kMaxDimension>, kMaxDimension>;

Matrix3 w_hessian(const ModelSpec& model, const UnitVector& u) {
    Matrix3 h{};
    for (const auto& term : model.perturbation) {
        const double c = term.coefficient.to_double();
        for (int i = 0; i < model.dimension; ++i) {
            for (int j = 0; j < model.dimension; ++j) {
                MultiIndex e = term.exponents;
                double v = c * e[i];
                e[i] -= 1;
                if (e[i] < 0) continue;
                v *= e[j];
                e[j] -= 1;
                if (e[j] < 0 || v == 0.0) continue;
                for (int k = 0; k < model.dimension; ++k) v *= std::pow(u[k], e[k]);
                h[i][j] += v;
            }
        }
    }
    return h;
}

double dot(const UnitVector& a, const UnitVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

UnitVector normalized(UnitVector v) {
    const double n = std::sqrt(dot(v, v));
    for (double& x : v) x /= n;
    return v;
}

double distance(const UnitVector& a, const UnitVector& b) {
    UnitVector d{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    return std::sqrt(dot(d, d));
}

/// Orthonormal basis of the tangent space at u (dimension - 1 vectors).
std::vector<UnitVector> tangent_basis(const UnitVector& u, int dimension) {
    std::vector<UnitVector> basis;
    for (int axis = 0; axis < dimension && static_cast<int>(basis.size()) < dimension - 1; ++axis) {
        UnitVector e{};
        e[axis] = 1.0;
        const double p = dot(e, u);
        for (int i = 0; i < kMaxDimension; ++i) e[i] -= p * u[i];
        for (const auto& b : basis) {
            const double q = dot(e, b);
            for (int i = 0; i < kMaxDimension; ++i) e[i] -= q * b[i];
        }
        if (std::sqrt(dot(e, e)) > 1e-6) basis.push_back(normalized(e));
    }
    return basis;
}

/// Local maximizer of W on the unit sphere: gradient ascent, then Riemannian Newton.
UnitVector maximize_on_sphere(const ModelSpec& model, UnitVector u) {
    const int d = model.dimension;
    for (int it = 0; it < 400; ++it) {
        const UnitVector g = w_gradient(model, u);
        const double radial = dot(g, u);
        UnitVector next = u;
        for (int i = 0; i < d; ++i) next[i] += 0.05 * (g[i] - radial * u[i]);
        u = normalized(next);
    }
    for (int it = 0; it < 50; ++it) {
        const auto basis = tangent_basis(u, d);
        if (basis.empty()) break;
        const UnitVector g = w_gradient(model, u);
        const Matrix3 h = w_hessian(model, u);
        const double radial = dot(g, u);
        const std::size_t m = basis.size();
        double rg[2] = {0, 0};
        double rh[2][2] = {{0, 0}, {0, 0}};
        for (std::size_t a = 0; a < m; ++a) {
            rg[a] = dot(basis[a], g);
            for (std::size_t b = 0; b < m; ++b) {
                double v = 0;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) v += basis[a][i] * h[i][j] * basis[b][j];
                rh[a][b] = v - (a == b ? radial : 0.0);
            }
        }
        double step[2] = {0, 0};
        if (m == 1) {
            if (rh[0][0] == 0.0) break;
            step[0] = -rg[0] / rh[0][0];
        } else {
            const double det = rh[0][0] * rh[1][1] - rh[0][1] * rh[1][0];
            if (det == 0.0) break;
            step[0] = -(rh[1][1] * rg[0] - rh[0][1] * rg[1]) / det;
            step[1] = -(-rh[1][0] * rg[0] + rh[0][0] * rg[1]) / det;
        }
        UnitVector next = u;
        for (std::size_t a = 0; a < m; ++a)
            for (int i = 0; i < d; ++i) next[i] += step[a] * basis[a][i];
        next = normalized(next);
        const double moved = distance(next, u);
        u = next;
        if (moved < 1e-15) break;
    }
    return u;
}

std::vector<UnitVector> starting_points(int dimension) {
    std::vector<UnitVector> starts;
    if (dimension == 1) return {UnitVector{1, 0, 0}, UnitVector{-1, 0, 0}};
    if (dimension == 2) {
        for (int k = 0; k < 72; ++k) {
            const double t = 2 * pi * (k + 0.5) / 72;
            starts.push_back({std::cos(t), std::sin(t), 0});
        }
        return starts;
    }
    const int count = 400;
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
        const double z = 1.0 - 2.0 * (k + 0.5) / count;
        const double r = std::sqrt(1.0 - z * z);
        starts.push_back({r * std::cos(golden * k), r * std::sin(golden * k), z});
    }
    return starts;
}

std::vector<UnitVector> analytic_directions(ModelId model) {
    switch (model) {
        case ModelId::Cubic1D: return {{1, 0, 0}};
        case ModelId::XY2_2D: {
            const double c = 1 / std::sqrt(3.0);
            const double s = std::sqrt(2.0 / 3.0);
            return {{c, s, 0}, {c, -s, 0}};
        }
        case ModelId::XYZ_3D: {
            const double c = 1 / std::sqrt(3.0);
            return {{c, c, c}, {c, -c, -c}, {-c, c, -c}, {-c, -c, c}};
        }
        case ModelId::HenonHeiles2D: {
            const double s = std::sqrt(3.0) / 2;
            return {{0.5, s, 0}, {0.5, -s, 0}, {-1, 0, 0}};
        }
    }
    throw InvalidArgument("unknown model");
}

// 2 * int_0^{1/lambda} sqrt(r^2 - lambda r^3) dr with r = T (1 - w^2):
// r^2 - lambda r^3 = lambda r^2 (T - r) = r^2 w^2, dr = -2 T w dw.
QuadratureResult geometric_integral(double lambda) {
    const double turning = 1.0 / lambda;
    auto integrand = [turning](double w) {
        const double r = turning * (1.0 - w * w);
        return r * w * 2.0 * turning * w;
    };
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, 1.0, kQuadratureDepth, kQuadratureTolerance, &error);
    return {2.0 * value, 2.0 * error};
}

double newton_root(double lambda, double start) {
    double s = start;
    for (int it = 0; it < 200; ++it) {
        const double p = s * s - lambda * s * s * s - 1.0;
        const double dp = 2.0 * s - 3.0 * lambda * s * s;
        const double next = s - p / dp;
        if (std::abs(next - s) <= 1e-15 * std::abs(s)) return next;
        s = next;
    }
    throw ComputationAnomaly("turning-point Newton iteration did not converge");
}

}  // namespace

double MpepSet::turning_radius(double g) const {
    if (g <= 0.0) throw InvalidArgument("turning radius needs g > 0");
    return 1.0 / (radial_cubic_coefficient * g);
}

MpepSet mpep_directions(ModelId id) {
    const ModelSpec model = build_model(id);
    MpepSet set{id, analytic_directions(id), {}, 0.0, {}};
    set.radial_cubic_coefficient = w_value(model, set.directions.front());
    for (const auto& u : set.directions) {
        if (std::abs(w_value(model, u) - set.radial_cubic_coefficient) > 1e-14)
            throw ComputationAnomaly("analytic escape directions have unequal barrier coefficients");
    }
    if (model.dimension <= 2) {
        for (const auto& u : set.directions) set.angles.push_back(std::atan2(u[1], u[0]));
    }

    std::vector<UnitVector> maxima;
    for (const auto& start : starting_points(model.dimension)) {
        const UnitVector u = maximize_on_sphere(model, start);
        if (w_value(model, u) < set.radial_cubic_coefficient - 1e-10) continue;
        if (std::none_of(maxima.begin(), maxima.end(), [&](const UnitVector& m) { return distance(m, u) < 1e-6; }))
            maxima.push_back(u);
    }
    for (const auto& u : maxima) {
        if (w_value(model, u) > set.radial_cubic_coefficient + 1e-12)
            throw ComputationAnomaly("optimizer found a direction with a lower barrier than the analytic escape paths");
        const auto match = std::find_if(set.directions.begin(), set.directions.end(),
                                        [&](const UnitVector& a) { return distance(a, u) < 1e-8; });
        if (match == set.directions.end())
            throw ComputationAnomaly("optimized escape direction matches no analytic candidate");
    }
    if (maxima.size() != set.directions.size())
        throw ComputationAnomaly("optimizer found " + std::to_string(maxima.size()) + " escape directions, expected " +
                                 std::to_string(set.directions.size()));
    for (const auto& a : set.directions) {
        const auto match = std::find_if(maxima.begin(), maxima.end(),
                                        [&](const UnitVector& u) { return distance(a, u) < 1e-8; });
        set.optimized_directions.push_back(*match);
    }
    return set;
}

CriticalPoint critical_point(double alpha) {
    if (alpha == 0.0 || !std::isfinite(alpha)) throw InvalidArgument("critical point needs a nonzero cubic coefficient");
    return {2.0 / (3.0 * alpha), 4.0 / (27.0 * alpha * alpha)};
}

QuadratureResult tunneling_integral(double g, TunnelingMode mode) {
    if (!(g > 0.0 && g <= 0.5)) throw InvalidArgument("tunneling integral needs 0 < g <= 0.5");
    const double lambda = 2.0 * g / (3.0 * std::sqrt(3.0));
    if (mode == TunnelingMode::Geometric) return geometric_integral(lambda);

    // s^2 - lambda s^3 - 1 = lambda (s - s1)(s2 - s)(s - s3), s3 < 0 < s1 < s2.
    const double s1 = newton_root(lambda, 1.0);
    const double s2 = newton_root(lambda, 1.0 / lambda);
    const double s3 = 1.0 / lambda - s1 - s2;
    const double half_width = 0.5 * (s2 - s1);
    auto integrand = [=](double theta) {
        const double s = s1 + half_width * (1.0 - std::cos(theta));
        const double sin_t = std::sin(theta);
        return std::sqrt(lambda * (s - s3)) * half_width * half_width * sin_t * sin_t;
    };
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, pi, kQuadratureDepth, kQuadratureTolerance, &error);
    if (!std::isfinite(value)) throw ComputationAnomaly("physical-optics quadrature did not converge");
    return {2.0 * value, 2.0 * error};
}

double physical_exponent_expansion(double g) {
    return 18.0 / (5.0 * g * g) - std::log(12.0 * std::sqrt(3.0)) + std::log(g) - 0.5;
}

QuadratureResult barrier_exponent(ModelId model, const UnitVector& u, double g) {
    if (g <= 0.0) throw InvalidArgument("barrier exponent needs g > 0");
    const double c = w_value(build_model(model), u);
    if (c <= 0.0) throw InvalidArgument("direction carries no tunneling barrier (W <= 0)");
    return geometric_integral(c * g);
}

RiccatiProfile riccati_solve(double eps, double tolerance) {
    namespace odeint = boost::numeric::odeint;
    if (!(eps > 0.0 && eps <= 1e-3)) throw InvalidArgument("Riccati start offset must lie in (0, 1e-3]");
    if (!(tolerance > 0.0)) throw InvalidArgument("ODE tolerance must be positive");

    using State = std::array<double, 2>;  // {f, A}
    auto system = [](const State& y, State& dy, double v) {
        const double w = 1.0 - v * v;
        dy[0] = (2.0 * y[0] * y[0] - 5.0 + 3.0 * v * v) / w;
        dy[1] = (y[0] - 1.0) * y[1] / w;
    };

    RiccatiProfile profile;
    profile.start_offset = eps;
    profile.tolerance = tolerance;
    // Local series at v = 1 - delta: f = 1 + delta + O(delta^2), A = 1 - delta/2 + O(delta^2).
    State y{1.0 + eps, 1.0 - 0.5 * eps};
    auto observer = [&profile](const State& s, double v) {
        if (!std::isfinite(s[0]) || !std::isfinite(s[1]))
            throw ComputationAnomaly("Riccati/transport integration diverged at v = " + std::to_string(v));
        if (s[0] <= 0.0) profile.f_crossed_zero = true;
        profile.samples.push_back({v, s[0], s[1]});
    };
    auto stepper = odeint::make_controlled(tolerance, tolerance, odeint::runge_kutta_dopri5<State>());
    profile.steps = odeint::integrate_adaptive(stepper, system, y, 1.0 - eps, 0.0, -eps, observer);
    if (profile.samples.empty() || std::abs(profile.samples.back().v) > 1e-12)
        throw ComputationAnomaly("Riccati integration stopped before v = 0");
    profile.f0 = y[0];
    profile.a0 = y[1];
    return profile;
}

std::complex<double> legendre_degree(bool upper_root) {
    const double im = std::sqrt(23.0) / 2.0;
    return {-0.5, upper_root ? im : -im};
}

namespace {

std::complex<double> checked_gamma(std::complex<double> z) {
    if (reflection_residual(z) > 1e-12)
        throw ComputationAnomaly("complex Gamma outside its accuracy envelope");
    return complex_gamma(z);
}

ClosedForm to_closed_form(std::complex<double> z) {
    const double residue = std::abs(z.imag()) / std::abs(z.real());
    if (residue > 1e-12) throw ComputationAnomaly("closed form has a non-negligible imaginary part");
    return {z.real(), residue};
}

}  // namespace

ClosedForm f0_closed_form(std::complex<double> nu) {
    const std::complex<double> h = nu / 2.0;
    const std::complex<double> value = -std::tan(pi * h) * checked_gamma(h) * checked_gamma(2.0 + h) /
                                       (checked_gamma(h - 0.5) * checked_gamma(h + 1.5));
    return to_closed_form(value);
}

ClosedForm a0_closed_form(std::complex<double> nu) {
    const std::complex<double> h = nu / 2.0;
    const std::complex<double> value =
        std::pow(pi, -0.25) * std::sqrt(2.0 * checked_gamma(2.0 + h) * checked_gamma(1.5 - h));
    return to_closed_form(value);
}

double transverse_identity_value() { return std::sqrt(24.0 * pi / std::cosh(pi * std::sqrt(23.0) / 2.0)); }

WkbConstants wkb_constants() {
    WkbConstants c;
    c.nu = legendre_degree();
    c.f0 = f0_closed_form(c.nu).value;
    c.a0 = a0_closed_form(c.nu).value;
    if (!(c.f0 > 0.0 && c.a0 > 0.0)) throw ComputationAnomaly("transverse constants are not positive");
    c.flux_prefactor = 12.0 * std::sqrt(3.0) * c.a0 * c.a0 * std::sqrt(pi / c.f0);
    return c;
}

HighFloat flux_amplitude_2d(const WkbConstants& constants) {
    using boost::multiprecision::sqrt;
    const HighFloat p = boost::math::constants::pi<HighFloat>();
    const HighFloat a0 = constants.a0;
    return 12 * sqrt(HighFloat(3)) * a0 * a0 / (p * sqrt(p * HighFloat(constants.f0)));
}

HighFloat closed_amplitude_2d() {
    const HighFloat p = boost::math::constants::pi<HighFloat>();
    return 72 * sqrt(HighFloat(2)) / (p * sqrt(cosh(p * sqrt(HighFloat(23)) / 2)));
}

HighFloat closed_amplitude_3d() {
    const HighFloat p = boost::math::constants::pi<HighFloat>();
    return 1152 * sqrt(HighFloat(3)) / (sqrt(p) * cosh(p * sqrt(HighFloat(23)) / 2));
}

HighFloat closed_amplitude_1d() {
    const HighFloat p = boost::math::constants::pi<HighFloat>();
    return 4 / (p * sqrt(p));
}

LargeOrderLaw large_order_law(ModelId model, const WkbConstants& constants, const EnergySeries* hh_series,
                              int hh_richardson_order) {
    switch (model) {
        case ModelId::Cubic1D: return {model, closed_amplitude_1d(), large_order_base(model)};
        case ModelId::XY2_2D: {
            const HighFloat closed = closed_amplitude_2d();
            const HighFloat from_flux = flux_amplitude_2d(constants);
            if (abs(from_flux - closed) / closed > HighFloat("1e-9"))
                throw ComputationAnomaly("flux amplitude disagrees with the closed-form 2D amplitude");
            return {model, closed, large_order_base(model)};
        }
        case ModelId::XYZ_3D: return {model, closed_amplitude_3d(), large_order_base(model)};
        case ModelId::HenonHeiles2D: {
            if (hh_series != nullptr) {
                if (hh_series->model.id != model) throw InvalidArgument("Henon-Heiles fit needs the hh series");
                return {model, fit_amplitude(*hh_series, large_order_base(model), hh_richardson_order),
                        large_order_base(model)};
            }
            const EnergySeries series = compute_energy_series(model, default_series_order(model));
            return {model, fit_amplitude(series, large_order_base(model), hh_richardson_order),
                    large_order_base(model)};
        }
    }
    throw InvalidArgument("unknown model");
}

double PotentialGrid::x_at(int ix) const { return -extent + 2.0 * extent * ix / (nx - 1); }
double PotentialGrid::y_at(int iy) const { return -extent + 2.0 * extent * iy / (ny - 1); }

PotentialGrid potential_grid(ModelId id, double g, double extent, int resolution) {
    if (resolution < 2) throw InvalidArgument("grid resolution must be at least 2");
    if (!(extent > 0.0) || !std::isfinite(extent)) throw InvalidArgument("grid extent must be positive");
    if (!std::isfinite(g)) throw InvalidArgument("coupling must be finite");
    const ModelSpec model = build_model(id);
    if (model.dimension > 2) throw InvalidArgument("potential grids are drawn for the planar models only");
    PotentialGrid grid{id, g, extent, resolution, resolution, {}};
    grid.values.resize(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const double x = grid.x_at(ix);
            const double y = grid.y_at(iy);
            grid.values[static_cast<std::size_t>(iy) * static_cast<std::size_t>(resolution) + static_cast<std::size_t>(ix)] =
                x * x + y * y - g * model.evaluate_perturbation({x, y, 0.0});
        }
    }
    return grid;
}

}  // namespace ptcubic
