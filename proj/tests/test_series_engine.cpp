#include "ptcubic/errors.hpp"
#include "ptcubic/series_engine.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace ptcubic;

namespace {

// Brute-force oracle: solve the order-g and order-g^2 equations
//   L P1 + W = E1,   L P2 + W P1 = E2 + E1 P1,   L = 2 x.grad - laplacian,
// for general polynomials P1 (degree <= 3) and P2 (degree <= 6) with zero
// constant term, by dense Gaussian elimination over the monomial coefficients.

using Poly = std::map<MultiIndex, ExactRational>;

void add_to(Poly& p, const MultiIndex& m, const ExactRational& c) {
    if (c.is_zero()) return;
    auto& slot = p[m];
    slot += c;
    if (slot.is_zero()) p.erase(m);
}

std::vector<MultiIndex> monomials_up_to(int d, int degree) {
    std::vector<MultiIndex> out;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; b <= (d > 1 ? degree : 0); ++b)
            for (int c = 0; c <= (d > 2 ? degree : 0); ++c)
                if (a + b + c <= degree && a + b + c > 0) out.push_back({a, b, c});
    return out;
}

Poly apply_L(const Poly& p, int d) {
    Poly out;
    for (const auto& [m, c] : p) {
        int deg = 0;
        for (int i = 0; i < d; ++i) deg += m[i];
        add_to(out, m, c * ExactRational(2 * deg, 1));
        for (int i = 0; i < d; ++i) {
            if (m[i] < 2) continue;
            MultiIndex lower = m;
            lower[i] -= 2;
            add_to(out, lower, -c * ExactRational(static_cast<long>(m[i]) * (m[i] - 1), 1));
        }
    }
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) add_to(out, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
}

Poly perturbation(const ModelSpec& model) {
    Poly w;
    for (const auto& mono : model.perturbation) add_to(w, mono.exponents, mono.coefficient);
    return w;
}

struct Solved {
    Poly p;
    ExactRational energy;
};

// Solves L P - E = rhs for P (no constant term, degree <= max_degree) and E.
Solved solve_order(const Poly& rhs, int d, int max_degree) {
    const auto unknowns = monomials_up_to(d, max_degree);
    const std::size_t nu = unknowns.size() + 1;  // last unknown is E
    std::map<MultiIndex, std::vector<ExactRational>> rows;
    auto row = [&](const MultiIndex& m) -> std::vector<ExactRational>& {
        auto it = rows.find(m);
        if (it == rows.end()) it = rows.emplace(m, std::vector<ExactRational>(nu + 1)).first;
        return it->second;
    };
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const Poly image = apply_L(Poly{{unknowns[k], ExactRational(1, 1)}}, d);
        for (const auto& [m, c] : image) row(m)[k] += c;
    }
    row({0, 0, 0})[nu - 1] += ExactRational(-1, 1);
    for (const auto& [m, c] : rhs) row(m)[nu] += c;
    for (const auto& m : unknowns) row(m);

    std::vector<std::vector<ExactRational>> a;
    for (auto& [m, r] : rows) a.push_back(r);
    std::vector<std::optional<std::size_t>> pivot_row(nu);
    std::size_t r = 0;
    for (std::size_t col = 0; col < nu && r < a.size(); ++col) {
        std::size_t p = r;
        while (p < a.size() && a[p][col].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            const ExactRational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j <= nu; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_row[col] = r++;
    }
    for (std::size_t i = r; i < a.size(); ++i) REQUIRE(a[i][nu].is_zero());
    Solved s;
    for (std::size_t k = 0; k < nu; ++k) {
        REQUIRE(pivot_row[k].has_value());
        const auto& pr = a[*pivot_row[k]];
        const ExactRational v = pr[nu] / pr[k];
        if (k + 1 == nu) s.energy = v;
        else add_to(s.p, unknowns[k], v);
    }
    return s;
}

struct OracleResult {
    Poly p1;
    ExactRational e1, e2;
};

OracleResult second_order_oracle(ModelId id) {
    const ModelSpec model = build_model(id);
    const Poly w = perturbation(model);
    Poly rhs1;
    for (const auto& [m, c] : w) add_to(rhs1, m, -c);
    const Solved first = solve_order(rhs1, model.dimension, 3);
    Poly rhs2;
    for (const auto& [m, c] : multiply(w, first.p)) add_to(rhs2, m, -c);
    for (const auto& [m, c] : first.p) add_to(rhs2, m, first.energy * c);
    const Solved second = solve_order(rhs2, model.dimension, 6);
    return {first.p, first.energy, second.energy};
}

std::vector<std::string> as_strings(const EnergySeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coefficients) out.push_back(c.to_string());
    return out;
}

}  // namespace

TEST_CASE("model presets") {
    const ModelSpec c1d = build_model(ModelId::Cubic1D);
    CHECK(c1d.dimension == 1);
    CHECK(c1d.unperturbed_energy == ExactRational(1, 1));
    const ModelSpec xyz = build_model(ModelId::XYZ_3D);
    CHECK(xyz.dimension == 3);
    CHECK(xyz.unperturbed_energy == ExactRational(3, 1));
    const ModelSpec hh = build_model(ModelId::HenonHeiles2D);
    CHECK(hh.dimension == 2);
    CHECK(hh.unperturbed_energy == ExactRational(2, 1));
    REQUIRE(hh.perturbation.size() == 2);
    CHECK(hh.evaluate_perturbation({1.0, 1.0, 0.0}) == doctest::Approx(2.0 / 3.0));
    for (ModelId id : kAllModels) {
        for (const auto& mono : build_model(id).perturbation)
            CHECK(mono.exponents[0] + mono.exponents[1] + mono.exponents[2] == 3);
        CHECK(parse_model(model_name(id)) == id);
    }
    CHECK_THROWS_AS(parse_model("quartic"), InvalidArgument);
}

TEST_CASE("exact rationals stay canonical") {
    const ExactRational a = ExactRational::parse("6/-8");
    CHECK(a.to_string() == "-3/4");
    CHECK(a.denominator_string() == "4");
    CHECK((a + ExactRational(3, 4)).to_string() == "0");
    CHECK((ExactRational(1, 3) * ExactRational(3, 1)).to_string() == "1");
    CHECK(ExactRational(1, 3) < ExactRational(1, 2));
    CHECK_THROWS_AS(ExactRational(1, 1) / ExactRational(), InvalidArgument);
    CHECK_THROWS_AS(ExactRational::parse("1/0"), InvalidArgument);
    CHECK_THROWS(ExactRational::parse("abc"));
}

TEST_CASE("order zero and first order of the 3D recursion") {
    const ModelSpec xyz = build_model(ModelId::XYZ_3D);
    const CoefficientTensor t = compute_wavefunction_coefficients(xyz, 1);
    CHECK(t.at(0, {0, 0, 0}) == ExactRational(1, 1));
    CHECK(t.at(1, {1, 1, 1}) == ExactRational(-1, 6));
    int nonzero_order1 = 0;
    t.for_each_nonzero([&](int n, const MultiIndex&, const ExactRational&) { nonzero_order1 += n == 1; });
    CHECK(nonzero_order1 == 1);

    // Hand substitution of P1 = c xyz: 2*3*c xyz - 0 + xyz = E1 forces c = -1/6, E1 = 0.
    const ExactRational c = t.at(1, {1, 1, 1});
    CHECK(ExactRational(6, 1) * c + ExactRational(1, 1) == ExactRational());
    CHECK(real_coupling_energies(t)[1].is_zero());

    for (ModelId id : kAllModels) {
        const auto tensor = compute_wavefunction_coefficients(build_model(id), 2);
        CHECK(tensor.at(0, {0, 0, 0}) == ExactRational(1, 1));
        CHECK(tensor.at(1, {0, 0, 0}).is_zero());
        CHECK(tensor.at(2, {0, 0, 0}).is_zero());
    }
    CHECK_THROWS_AS(compute_wavefunction_coefficients(xyz, 0), InvalidArgument);
}

TEST_CASE("second-order oracle agrees with the recursion") {
    for (ModelId id : kAllModels) {
        CAPTURE(model_name(id));
        const OracleResult oracle = second_order_oracle(id);
        const auto tensor = compute_wavefunction_coefficients(build_model(id), 2);
        for (const auto& [m, c] : oracle.p1) CHECK(tensor.at(1, m) == c);
        CHECK(oracle.e1.is_zero());
        const EnergySeries s = energy_series(tensor, 1);
        CHECK(s.coefficients[1] == -oracle.e2);
    }
    CHECK(compute_energy_series(ModelId::HenonHeiles2D, 1).coefficients[1].to_string() == "1/18");
}

TEST_CASE("golden energy coefficients") {
    const std::vector<std::string> c1d{"1", "11/16", "-465/256", "39709/4096", "-19250805/262144", "2944491879/4194304"};
    const std::vector<std::string> xy2{"2",           "5/48",           "-223/6912", "114407/4976640",
                                       "-346266143/14332723200", "2360833242959/72236924928000"};
    const std::vector<std::string> xyz{"3",           "1/48",           "-7/4608", "5069/19906560",
                                       "-2441189/38220595200", "8034211571/385263599616000"};
    CHECK(as_strings(compute_energy_series(ModelId::Cubic1D, 5)) == c1d);
    CHECK(as_strings(compute_energy_series(ModelId::XY2_2D, 5)) == xy2);
    CHECK(as_strings(compute_energy_series(ModelId::XYZ_3D, 5)) == xyz);
    CHECK(as_strings(compute_energy_series(ModelId::HenonHeiles2D, 0)) == std::vector<std::string>{"2"});
}

TEST_CASE("energy assembly preconditions") {
    const auto tensor = compute_wavefunction_coefficients(build_model(ModelId::Cubic1D), 4);
    CHECK_NOTHROW(energy_series(tensor, 2));
    CHECK_THROWS_AS(energy_series(tensor, 3), InvalidArgument);
    CHECK_THROWS_AS(energy_series(tensor, -1), InvalidArgument);
}

TEST_CASE("parity pruning and evaluation order do not change the tensor") {
    for (ModelId id : kAllModels) {
        CAPTURE(model_name(id));
        const ModelSpec model = build_model(id);
        const int order = id == ModelId::XYZ_3D ? 6 : 8;
        const auto pruned = compute_wavefunction_coefficients(model, order, {true, std::nullopt});
        const auto full = compute_wavefunction_coefficients(model, order, {false, std::nullopt});
        const auto shuffled = compute_wavefunction_coefficients(model, order, {true, 12345u});
        CHECK(pruned == full);
        CHECK(pruned == shuffled);
        CHECK(pruned.nonzero_count() == full.nonzero_count());
    }
}

TEST_CASE("symmetry of the coefficients") {
    const auto xyz = compute_wavefunction_coefficients(build_model(ModelId::XYZ_3D), 6);
    xyz.for_each_nonzero([&](int n, const MultiIndex& m, const ExactRational& v) {
        MultiIndex p = m;
        std::sort(p.begin(), p.end());
        do {
            CHECK(xyz.at(n, p) == v);
        } while (std::next_permutation(p.begin(), p.end()));
    });
    const auto xy2 = compute_wavefunction_coefficients(build_model(ModelId::XY2_2D), 8);
    xy2.for_each_nonzero([&](int, const MultiIndex& m, const ExactRational&) { CHECK(m[1] % 2 == 0); });
}

TEST_CASE("tensor support is enforced") {
    CoefficientTensor t(build_model(ModelId::Cubic1D), 2);
    CHECK_THROWS(t.set(1, {5, 0, 0}, ExactRational(1, 1)));
    CHECK_NOTHROW(t.set(1, {3, 0, 0}, ExactRational(1, 1)));
    CHECK(t.at(1, {3, 0, 0}) == ExactRational(1, 1));
    CHECK(t.at(1, {2, 0, 0}).is_zero());
}

TEST_CASE("alternation and growth") {
    for (ModelId id : kAllModels) {
        CAPTURE(model_name(id));
        const EnergySeries s = compute_energy_series(id, id == ModelId::XYZ_3D ? 10 : 14);
        for (int n = 1; n <= s.max_order(); ++n) CHECK(s.coefficients[static_cast<std::size_t>(n)].sign() == (n % 2 ? 1 : -1));
        const auto& c = s.coefficients;
        const std::size_t last = c.size() - 1;
        const double r1 = std::abs(c[last].to_double() / c[last - 1].to_double());
        const double r0 = std::abs(c[last - 1].to_double() / c[last - 2].to_double());
        CHECK(r1 > r0);
    }
}
