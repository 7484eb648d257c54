#pragma once

// Tunneling analysis of the reversed-sign potentials r^2 - g W: escape-path
// geometry, barrier exponents, the transverse Riccati/transport equations
// along the escape path, and the resulting large-order constants.

#include "ptcubic/model.hpp"
#include "ptcubic/series_analysis.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace ptcubic {

using UnitVector = std::array<double, kMaxDimension>;

/// Most probable escape paths of V = r^2 - g W.
struct MpepSet {
    ModelId model;
    /// Unit directions of the escape channels.
    std::vector<UnitVector> directions;
    /// Polar angles of the directions (planar models only; empty in 3D).
    std::vector<double> angles;
    /// lambda in V_eff(r) = r^2 - lambda g r^3, i.e. max of W on the unit sphere.
    double radial_cubic_coefficient = 0.0;
    /// Numerically located maximizers, each matched to an entry of `directions`.
    std::vector<UnitVector> optimized_directions;

    /// Outer turning point 1/(lambda g) of the effective radial barrier.
    [[nodiscard]] double turning_radius(double g) const;
};

MpepSet mpep_directions(ModelId model);

struct CriticalPoint {
    double radius;
    double value;
};

/// Maximum of r^2 - alpha r^3 over r > 0.
CriticalPoint critical_point(double alpha);

enum class TunnelingMode {
    Geometric,  ///< 2 * int_0^{T} sqrt(r^2 - lambda r^3) dr, lambda = 2g/(3 sqrt 3)
    Physical,   ///< 2 * int sqrt(s^2 - lambda s^3 - 1) ds between its turning points
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

QuadratureResult tunneling_integral(double g, TunnelingMode mode);

/// Asymptotic form 18/(5g^2) - ln(12 sqrt 3) + ln g - 1/2 of the physical integral.
double physical_exponent_expansion(double g);

/// 2 * int_0^{T} sqrt(r^2 - c g r^3) dr along the direction `u` of a model,
/// with c = W(u); analytically 8/(15 g^2 c^2).
QuadratureResult barrier_exponent(ModelId model, const UnitVector& u, double g);

struct RiccatiSample {
    double v;
    double f;
    double a;
};

struct RiccatiProfile {
    std::vector<RiccatiSample> samples;  // ordered from v = 1 - eps down to v = 0
    double start_offset = 0.0;
    double tolerance = 0.0;
    double f0 = 0.0;
    double a0 = 0.0;
    std::size_t steps = 0;
    bool f_crossed_zero = false;
};

/// Integrates (1-v^2) f' = 2 f^2 - 5 + 3 v^2 and (1-v^2) A' = (f - 1) A from
/// v = 1 - eps to v = 0, starting from f(1) = A(1) = 1 via the local series.
RiccatiProfile riccati_solve(double eps = 1e-6, double tolerance = 1e-13);

/// nu = (-1 + i sqrt 23)/2, the upper root of nu(nu+1) = -6.
std::complex<double> legendre_degree(bool upper_root = true);

struct ClosedForm {
    double value;
    /// |Im| / |Re| of the complex evaluation.
    double imaginary_residue;
};

ClosedForm f0_closed_form(std::complex<double> nu = legendre_degree());
ClosedForm a0_closed_form(std::complex<double> nu = legendre_degree());

/// sqrt(24 pi / cosh(pi sqrt(23) / 2)).
double transverse_identity_value();

struct WkbConstants {
    std::complex<double> nu;
    double f0 = 0.0;
    double a0 = 0.0;
    /// 12 sqrt(3) A(0)^2 sqrt(pi / f(0)): coefficient of g^{-1} e^{-18/(5 g^2)} in the outward flux.
    double flux_prefactor = 0.0;
};

WkbConstants wkb_constants();

/// Amplitude from the two-channel flux: 12 sqrt(3) A(0)^2 / (pi sqrt(pi f(0))).
HighFloat flux_amplitude_2d(const WkbConstants& constants);
/// 72 sqrt 2 / (pi sqrt(cosh(pi sqrt(23)/2))).
HighFloat closed_amplitude_2d();
/// 1152 sqrt 3 / (sqrt(pi) cosh(pi sqrt(23)/2)).
HighFloat closed_amplitude_3d();
/// 4 / pi^{3/2}.
HighFloat closed_amplitude_1d();

/// Large-order law per model. The Henon-Heiles amplitude has no closed form and
/// is fitted from `hh_series` (computed at default depth when absent).
LargeOrderLaw large_order_law(ModelId model, const WkbConstants& constants,
                              const EnergySeries* hh_series = nullptr, int hh_richardson_order = 3);

struct PotentialGrid {
    ModelId model;
    double g;
    double extent;
    int nx;
    int ny;
    /// Row-major, y outer: values[iy * nx + ix] at x = -extent + ix*h, y = -extent + iy*h.
    std::vector<double> values;

    [[nodiscard]] double x_at(int ix) const;
    [[nodiscard]] double y_at(int iy) const;
};

/// Escape potential r^2 - g W on a square grid. One-dimensional models are
/// drawn with y as a spectator oscillator coordinate.
PotentialGrid potential_grid(ModelId model, double g, double extent, int resolution);

}  // namespace ptcubic
