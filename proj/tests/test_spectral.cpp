#include "ptcubic/errors.hpp"
#include "ptcubic/series_analysis.hpp"
#include "ptcubic/spectral.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace ptcubic;

TEST_CASE("oscillator matrix elements") {
    const Eigen::MatrixXd x = position_matrix(2, 1.0);
    CHECK(x(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(x(1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(x(0, 0) == 0.0);

    // Exact truncation: <0|x^2|0> = 1/(2 Omega) even when N = 2 (the squared
    // truncated matrix agrees here) and <1|x^2|1> = 3/(2 Omega) (it does not).
    const Eigen::MatrixXd x2 = position_power_matrix(2, 2.0, 2);
    CHECK(x2(0, 0) == doctest::Approx(0.25));
    CHECK(x2(1, 1) == doctest::Approx(0.75));

    // p^2 + Omega^2 x^2 is diagonal with entries Omega (2n + 1).
    const double omega = 1.7;
    const Eigen::MatrixXd h = momentum_squared_matrix(6, omega) + omega * omega * position_power_matrix(6, omega, 2);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(h(i, j) == doctest::Approx(i == j ? omega * (2 * i + 1) : 0.0));
    CHECK_THROWS_AS(position_matrix(1, 1.0), InvalidArgument);
    CHECK_THROWS_AS(position_matrix(4, 0.0), InvalidArgument);
}

TEST_CASE("Hamiltonian assembly") {
    const Eigen::MatrixXcd h0 = build_hamiltonian({ModelId::XY2_2D, 0.0, 8});
    CHECK((h0 - Eigen::MatrixXcd(h0.diagonal().asDiagonal())).norm() < 1e-12);
    CHECK(h0.diagonal().real().minCoeff() == doctest::Approx(2.0));

    const Eigen::MatrixXcd h3 = build_hamiltonian({ModelId::XYZ_3D, 0.3, 6});
    CHECK((h3 - h3.transpose()).norm() == 0.0);
    CHECK(h3.rows() == 216);

    SpectralProblem big{ModelId::XYZ_3D, 0.1, 30};
    CHECK_THROWS_AS(build_hamiltonian(big), InvalidArgument);
    CHECK_THROWS_AS(build_hamiltonian({ModelId::Cubic1D, 0.1, 1}), InvalidArgument);
}

TEST_CASE("parity sectors partition the basis") {
    for (ModelId id : kAllModels) {
        const int n = 5;
        const auto sectors = parity_sectors(id, n);
        std::size_t total = 0;
        for (const auto& s : sectors) total += s.size();
        CHECK(total == static_cast<std::size_t>(std::pow(n, build_model(id).dimension)));
        const Eigen::MatrixXcd h = build_hamiltonian({id, 0.7, n});
        for (std::size_t a = 0; a < sectors.size(); ++a)
            for (std::size_t b = 0; b < sectors.size(); ++b) {
                if (a == b) continue;
                for (auto i : sectors[a])
                    for (auto j : sectors[b]) CHECK(std::abs(h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) == 0.0);
            }
    }
}

TEST_CASE("unperturbed levels") {
    const SpectrumResult r = low_levels({ModelId::XYZ_3D, 0.0, 6}, 4);
    REQUIRE(r.eigenvalues.size() == 4);
    CHECK(r.eigenvalues[0].real() == doctest::Approx(3.0));
    for (int i = 1; i < 4; ++i) CHECK(r.eigenvalues[static_cast<std::size_t>(i)].real() == doctest::Approx(5.0));
    CHECK(r.all_converged());
    CHECK_THROWS_AS(low_levels({ModelId::XYZ_3D, 0.0, 2}, 9), InvalidArgument);
    CHECK_THROWS_AS(low_levels({ModelId::XYZ_3D, 0.0, 4}, 0), InvalidArgument);
}

TEST_CASE("1D ground level against the Padé sum") {
    const SpectrumResult r = low_levels({ModelId::Cubic1D, 0.5, 40}, 1);
    const auto curve = energy_curve(ModelId::Cubic1D, 9, 9, {0.5});
    CHECK(std::abs(r.eigenvalues[0].real() - static_cast<double>(curve[0].energy)) < 1e-6);
}

TEST_CASE("XY2 levels at g = 0.4") {
    const SpectrumResult r = low_levels({ModelId::XY2_2D, 0.4, 20}, 3);
    REQUIRE(r.all_converged());
    CHECK(r.max_abs_imag_low < 1e-8);
    const auto curve = energy_curve(ModelId::XY2_2D, 9, 9, {0.4});
    CHECK(std::abs(r.eigenvalues[0].real() - static_cast<double>(curve[0].energy)) < 1e-4);
    CHECK(r.eigenvalues[1].real() > 4.0);
    CHECK(r.eigenvalues[2].real() > 4.0);
    CHECK(r.eigenvalues[2].real() - r.eigenvalues[1].real() > 1e-3);
}

TEST_CASE("spectrum is even in g") {
    for (ModelId id : {ModelId::Cubic1D, ModelId::XY2_2D, ModelId::HenonHeiles2D}) {
        const int n = build_model(id).dimension == 1 ? 30 : 14;
        auto plus = all_levels({id, 0.3, n});
        auto minus = all_levels({id, -0.3, n});
        auto by_re = [](auto a, auto b) { return a.real() < b.real(); };
        std::sort(plus.begin(), plus.end(), by_re);
        std::sort(minus.begin(), minus.end(), by_re);
        for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(plus[i] - minus[i]) < 1e-9);
    }
}

TEST_CASE("perturbative slope") {
    const double expected[] = {11.0 / 16.0, 5.0 / 48.0, 1.0 / 48.0, 1.0 / 18.0};
    int i = 0;
    for (ModelId id : kAllModels) {
        CAPTURE(model_name(id));
        const int d = build_model(id).dimension;
        const int n = d == 1 ? 30 : d == 2 ? 14 : 8;
        auto slope = [&](double g) {
            return (low_levels({id, g, n}, 1).eigenvalues[0].real() - d) / (g * g);
        };
        const double extrapolated = (4.0 * slope(0.025) - slope(0.05)) / 3.0;
        CHECK(std::abs(extrapolated - expected[i++]) < 1e-3);
    }
}

TEST_CASE("massless cubic and the zeta constant") {
    CHECK(static_cast<double>(zeta_exact<HighFloat>()) == doctest::Approx(2.8350949339717897).epsilon(1e-14));
    CHECK(abs(zeta_exact<HighFloat100>() - HighFloat100(zeta_exact<HighFloat>())) < HighFloat100("1e-45"));

    const SpectrumResult r = massless_cubic_levels(80, 2.5, 4, {8, 1e-6});
    REQUIRE(r.all_converged());
    CHECK(r.eigenvalues[0].real() == doctest::Approx(1.15627).epsilon(1e-5));
    CHECK(r.eigenvalues[1].real() == doctest::Approx(4.10923).epsilon(1e-5));
    CHECK(std::abs(r.eigenvalues[0].imag()) < 1e-8);

    const double omega = choose_massless_scale(60, {0.5, 2.5}, {8, 1e-6});
    CHECK(omega == 2.5);
    CHECK_THROWS_AS(choose_massless_scale(60, {}), InvalidArgument);
}

TEST_CASE("level tracking") {
    using C = std::complex<double>;
    const std::vector<std::vector<C>> levels{{C(1, 0), C(2, 0)}, {C(2.1, 0), C(1.1, 0)}, {C(1.2, 0), C(2.2, 0)}};
    const auto tracked = track_levels(levels);
    CHECK(tracked[1][0] == C(1.1, 0));
    CHECK(tracked[1][1] == C(2.1, 0));
    CHECK(tracked[2][0] == C(1.2, 0));
}
