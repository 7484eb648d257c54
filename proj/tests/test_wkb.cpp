#include "ptcubic/complex_gamma.hpp"
#include "ptcubic/errors.hpp"
#include "ptcubic/wkb.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ptcubic;

TEST_CASE("complex Gamma") {
    CHECK(std::abs(complex_gamma({5.0, 0.0}) - 24.0) < 1e-12);
    CHECK(std::abs(complex_gamma({0.5, 0.0}) - std::sqrt(std::numbers::pi)) < 1e-14);
    // Gamma(-1/2) = -2 sqrt(pi), through the reflection branch.
    CHECK(std::abs(complex_gamma({-0.5, 0.0}) + 2.0 * std::sqrt(std::numbers::pi)) < 1e-13);
    // |Gamma(i)|^2 = pi / sinh(pi)
    const double modulus2 = std::norm(complex_gamma({0.0, 1.0}));
    CHECK(modulus2 == doctest::Approx(std::numbers::pi / std::sinh(std::numbers::pi)).epsilon(1e-13));
    CHECK(reflection_residual({0.3, 1.7}) < 1e-13);
    CHECK(reflection_residual({-1.3, 2.4}) < 1e-12);
}

TEST_CASE("escape paths") {
    const MpepSet xy2 = mpep_directions(ModelId::XY2_2D);
    REQUIRE(xy2.angles.size() == 2);
    const double theta = std::asin(std::sqrt(2.0 / 3.0));
    CHECK(xy2.angles[0] == doctest::Approx(theta));
    CHECK(xy2.angles[1] == doctest::Approx(-theta));
    CHECK(xy2.radial_cubic_coefficient == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))));

    const MpepSet hh = mpep_directions(ModelId::HenonHeiles2D);
    REQUIRE(hh.angles.size() == 3);
    CHECK(hh.angles[0] == doctest::Approx(std::numbers::pi / 3));
    CHECK(hh.angles[1] == doctest::Approx(-std::numbers::pi / 3));
    CHECK(hh.angles[2] == doctest::Approx(std::numbers::pi));
    CHECK(hh.radial_cubic_coefficient == doctest::Approx(1.0 / 3.0));

    const MpepSet xyz = mpep_directions(ModelId::XYZ_3D);
    REQUIRE(xyz.directions.size() == 4);
    CHECK(xyz.angles.empty());
    for (const auto& u : xyz.directions) {
        for (int i = 0; i < 3; ++i) CHECK(std::abs(u[i]) == doctest::Approx(1.0 / std::sqrt(3.0)));
        CHECK(u[0] * u[1] * u[2] > 0.0);
    }
    for (std::size_t i = 0; i < xyz.directions.size(); ++i)
        for (int c = 0; c < 3; ++c) CHECK(std::abs(xyz.optimized_directions[i][c] - xyz.directions[i][c]) < 1e-8);
    // Closed under flipping the signs of any two coordinates.
    for (const auto& u : xyz.directions) {
        const UnitVector flipped{-u[0], -u[1], u[2]};
        int found = 0;
        for (const auto& v : xyz.directions) found += std::abs(v[0] - flipped[0]) + std::abs(v[1] - flipped[1]) +
                                                          std::abs(v[2] - flipped[2]) < 1e-12;
        CHECK(found == 1);
    }
    CHECK(mpep_directions(ModelId::Cubic1D).directions.size() == 1);
    CHECK(xy2.turning_radius(0.5) == doctest::Approx(1.0 / (0.5 * xy2.radial_cubic_coefficient)));
}

TEST_CASE("critical points") {
    const CriticalPoint a = critical_point(2.0 / 3.0);
    CHECK(a.radius == doctest::Approx(1.0));
    CHECK(a.value == doctest::Approx(1.0 / 3.0));
    const CriticalPoint b = critical_point(1.0);
    CHECK(b.radius == doctest::Approx(2.0 / 3.0));
    CHECK(b.value == doctest::Approx(4.0 / 27.0));
    CHECK_THROWS_AS(critical_point(0.0), InvalidArgument);
}

TEST_CASE("tunneling integrals") {
    for (double g : {0.5, 0.1, 0.05}) {
        const double exact = 18.0 / (5.0 * g * g);
        CHECK(std::abs(tunneling_integral(g, TunnelingMode::Geometric).value - exact) / exact < 1e-10);
    }
    double previous = 1e300;
    for (double g : {0.2, 0.1, 0.05}) {
        const double residual =
            std::abs(tunneling_integral(g, TunnelingMode::Physical).value - physical_exponent_expansion(g));
        CHECK(residual < previous);
        previous = residual;
    }
    CHECK_THROWS_AS(tunneling_integral(0.0, TunnelingMode::Geometric), InvalidArgument);
    CHECK_THROWS_AS(tunneling_integral(0.7, TunnelingMode::Physical), InvalidArgument);

    const MpepSet hh = mpep_directions(ModelId::HenonHeiles2D);
    const double along_a = barrier_exponent(ModelId::HenonHeiles2D, hh.directions[0], 0.1).value;
    const double along_c = barrier_exponent(ModelId::HenonHeiles2D, hh.directions[2], 0.1).value;
    CHECK(std::abs(along_a - along_c) < 1e-12 * along_a);
    CHECK(along_a == doctest::Approx(8.0 / (15.0 * 0.01 / 9.0)));
    CHECK_THROWS_AS(barrier_exponent(ModelId::HenonHeiles2D, {1, 0, 0}, 0.1), InvalidArgument);
}

TEST_CASE("transverse Riccati and transport equations") {
    const RiccatiProfile p = riccati_solve();
    CHECK_FALSE(p.f_crossed_zero);
    REQUIRE(p.samples.size() > 10);
    // f ~ 2 - v and A ~ 1 near v = 1.
    const auto& s0 = p.samples[0];
    const auto& s1 = p.samples[1];
    CHECK((s1.f - s0.f) / (s1.v - s0.v) == doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(s0.a == doctest::Approx(1.0).epsilon(1e-5));

    const ClosedForm f0 = f0_closed_form();
    const ClosedForm a0 = a0_closed_form();
    CHECK(f0.value == doctest::Approx(1.5589006817797559).epsilon(1e-14));
    CHECK(a0.value == doctest::Approx(0.59550781781005679).epsilon(1e-14));
    CHECK(std::abs(p.f0 - f0.value) < 1e-6);
    CHECK(std::abs(p.a0 - a0.value) < 1e-6);
    CHECK(std::abs(a0.value * a0.value / std::sqrt(f0.value) - transverse_identity_value()) < 1e-10);

    // The conjugate root gives the same real constants.
    CHECK(f0_closed_form(legendre_degree(false)).value == doctest::Approx(f0.value).epsilon(1e-13));
    CHECK_THROWS_AS(riccati_solve(0.0), InvalidArgument);
    CHECK_THROWS_AS(riccati_solve(1e-6, -1.0), InvalidArgument);
}

TEST_CASE("large-order amplitudes") {
    const WkbConstants c = wkb_constants();
    CHECK(abs(flux_amplitude_2d(c) - closed_amplitude_2d()) / closed_amplitude_2d() < HighFloat("1e-9"));
    CHECK(static_cast<double>(closed_amplitude_2d()) == doctest::Approx(1.0601877342757).epsilon(1e-12));
    const LargeOrderLaw l1 = large_order_law(ModelId::Cubic1D, c);
    CHECK(l1.base == ExactRational(15, 8));
    CHECK(static_cast<double>(l1.amplitude) == doctest::Approx(4.0 / std::pow(std::numbers::pi, 1.5)));
    CHECK(large_order_law(ModelId::XYZ_3D, c).base == ExactRational(5, 72));

    WkbConstants broken = c;
    broken.a0 *= 1.001;
    CHECK_THROWS_AS(large_order_law(ModelId::XY2_2D, broken), ComputationAnomaly);

    const EnergySeries c1d = compute_energy_series(ModelId::Cubic1D, 6);
    CHECK_THROWS_AS(large_order_law(ModelId::HenonHeiles2D, c, &c1d), InvalidArgument);
}

TEST_CASE("potential grids") {
    const PotentialGrid xy2 = potential_grid(ModelId::XY2_2D, 1.0, 2.0, 41);
    CHECK(xy2.values[20 * 41 + 20] == 0.0);
    CHECK(xy2.x_at(0) == -2.0);
    CHECK(xy2.y_at(40) == 2.0);
    const double x = xy2.x_at(30), y = xy2.y_at(7);
    CHECK(xy2.values[7 * 41 + 30] == doctest::Approx(x * x + y * y - x * y * y));

    const PotentialGrid hh = potential_grid(ModelId::HenonHeiles2D, 1.0, 3.0, 31);
    for (int iy = 0; iy < 31; ++iy)
        for (int ix = 0; ix < 31; ++ix)
            CHECK(hh.values[static_cast<std::size_t>(iy * 31 + ix)] ==
                  doctest::Approx(hh.values[static_cast<std::size_t>((30 - iy) * 31 + ix)]));
    CHECK_THROWS_AS(potential_grid(ModelId::XYZ_3D, 1.0, 2.0, 10), InvalidArgument);
    CHECK_THROWS_AS(potential_grid(ModelId::XY2_2D, 1.0, 2.0, 1), InvalidArgument);
}
