#include "ptcubic/series_analysis.hpp"

#include "ptcubic/errors.hpp"

#include <algorithm>
#include <string>

namespace ptcubic {

namespace {

template <class T>
T horner(const std::vector<ExactRational>& coeffs, const T& x) {
    T acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_real<T>(*it);
    return acc;
}

/// Solves A q = b exactly by Bareiss fraction-free elimination on the
/// integer matrix obtained by clearing each row's denominators.
/// Returns false when A is singular.
bool solve_fraction_free(std::vector<std::vector<ExactRational>> a, std::vector<ExactRational> b,
                         std::vector<ExactRational>& x) {
    const std::size_t n = b.size();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a[i][j].raw().get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = a[i][j].raw() * scale;
            m[i][j] = v.get_num();
        }
        mpq_class v = b[i].raw() * scale;
        m[i][n] = v.get_num();
    }

    mpz_class prev_pivot = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }

    x.assign(n, ExactRational());
    for (std::size_t ii = n; ii-- > 0;) {
        mpq_class acc(m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= mpq_class(m[ii][j]) * x[j].raw();
        acc /= mpq_class(m[ii][ii]);
        x[ii] = ExactRational(acc);
    }
    return true;
}

}  // namespace

PadeApproximant::Value PadeApproximant::evaluate(const HighFloat& u) const {
    Value out;
    const HighFloat p = horner(numerator, u);
    out.denominator = horner(denominator, u);
    HighFloat scale = 0;
    HighFloat power = 1;
    for (const auto& q : denominator) {
        scale += abs(to_real(q)) * power;
        power *= abs(u);
    }
    out.pole = abs(out.denominator) <= scale * HighFloat("1e-30");
    out.value = out.pole ? HighFloat(0) : p / out.denominator;
    return out;
}

ExactRational PadeApproximant::evaluate_exact(const ExactRational& u) const {
    ExactRational p;
    for (auto it = numerator.rbegin(); it != numerator.rend(); ++it) p = p * u + *it;
    ExactRational q;
    for (auto it = denominator.rbegin(); it != denominator.rend(); ++it) q = q * u + *it;
    if (q.is_zero()) throw ComputationAnomaly("Padé denominator vanishes at the evaluation point");
    return p / q;
}

std::vector<ExactRational> PadeApproximant::taylor(int order) const {
    // t = P/Q  <=>  t_k = p_k - sum_{j>=1} q_j t_{k-j}
    std::vector<ExactRational> t(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        ExactRational v = k <= L ? numerator[static_cast<std::size_t>(k)] : ExactRational();
        for (int j = 1; j <= std::min(k, M); ++j)
            v -= denominator[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(k - j)];
        t[static_cast<std::size_t>(k)] = v;
    }
    return t;
}

std::vector<ExactRational> once_subtract(const EnergySeries& series) {
    if (series.coefficients.empty()) throw InvalidArgument("empty energy series");
    if (series.coefficients.size() < 2) throw InvalidArgument("once-subtraction needs at least c_0 and c_1");
    return {series.coefficients.begin() + 1, series.coefficients.end()};
}

PadeApproximant pade(const std::vector<ExactRational>& coeffs, int L, int M) {
    if (L < 0 || M < 0) throw InvalidArgument("Padé degrees must be non-negative");
    if (static_cast<int>(coeffs.size()) < L + M + 1)
        throw InvalidArgument("Padé [" + std::to_string(L) + "/" + std::to_string(M) + "] needs " +
                              std::to_string(L + M + 1) + " coefficients, got " + std::to_string(coeffs.size()));
    auto f = [&](int k) { return k < 0 ? ExactRational() : coeffs[static_cast<std::size_t>(k)]; };

    PadeApproximant approx;
    approx.L = L;
    for (int m = M; m >= 0; --m) {
        std::vector<ExactRational> q(static_cast<std::size_t>(m) + 1);
        q[0] = ExactRational(1);
        if (m > 0) {
            // sum_{j=1}^{m} q_j f_{L+i-j} = -f_{L+i},  i = 1..m
            std::vector<std::vector<ExactRational>> a(static_cast<std::size_t>(m),
                                                      std::vector<ExactRational>(static_cast<std::size_t>(m)));
            std::vector<ExactRational> rhs(static_cast<std::size_t>(m));
            for (int i = 1; i <= m; ++i) {
                for (int j = 1; j <= m; ++j) a[i - 1][j - 1] = f(L + i - j);
                rhs[i - 1] = -f(L + i);
            }
            std::vector<ExactRational> sol;
            if (!solve_fraction_free(std::move(a), std::move(rhs), sol)) {
                ++approx.degenerate_reductions;
                continue;
            }
            std::copy(sol.begin(), sol.end(), q.begin() + 1);
        }
        approx.M = m;
        approx.denominator = std::move(q);
        approx.numerator.assign(static_cast<std::size_t>(L) + 1, ExactRational());
        for (int i = 0; i <= L; ++i) {
            ExactRational p;
            for (int j = 0; j <= std::min(i, m); ++j) p += approx.denominator[static_cast<std::size_t>(j)] * f(i - j);
            approx.numerator[static_cast<std::size_t>(i)] = p;
        }
        return approx;
    }
    throw ComputationAnomaly("Padé construction failed at every denominator degree");
}

std::vector<CurvePoint> energy_curve(const EnergySeries& series, int L, int M, const std::vector<double>& g_grid,
                                     PadeForm form) {
    std::vector<ExactRational> input;
    if (form == PadeForm::OnceSubtracted) {
        input = once_subtract(series);
    } else {
        input = series.coefficients;
        input[0] = ExactRational();
    }
    const PadeApproximant approx = pade(input, L, M);
    const HighFloat e0 = to_real(series.coefficients[0]);

    std::vector<CurvePoint> points;
    points.reserve(g_grid.size());
    HighFloat previous_den = 0;
    for (std::size_t i = 0; i < g_grid.size(); ++i) {
        const double g = g_grid[i];
        if (!std::isfinite(g)) throw InvalidArgument("non-finite coupling on the grid");
        const HighFloat u = HighFloat(g) * HighFloat(g);
        const auto v = approx.evaluate(u);
        CurvePoint point{g, 0, v.pole};
        // A sign change of Q between neighbours means a pole was stepped over.
        if (i > 0 && !v.pole && sign(v.denominator) * sign(previous_den) < 0) point.pole = true;
        previous_den = v.denominator;
        if (!point.pole) point.energy = form == PadeForm::OnceSubtracted ? e0 + u * v.value : e0 + v.value;
        points.push_back(std::move(point));
    }
    return points;
}

std::vector<CurvePoint> energy_curve(ModelId model, int L, int M, const std::vector<double>& g_grid,
                                     PadeForm form) {
    return energy_curve(compute_energy_series(model, L + M + 1), L, M, g_grid, form);
}

HighFloat LargeOrderLaw::predict(int n) const {
    const HighFloat half = HighFloat(1) / 2;
    HighFloat value = amplitude * pow(to_real(base), HighFloat(n) + half) * tgamma(HighFloat(n) + half);
    return (n + 1) % 2 == 0 ? value : HighFloat(-value);
}

ExactRational large_order_base(ModelId model) {
    switch (model) {
        case ModelId::Cubic1D: return {15, 8};
        case ModelId::XY2_2D: return {5, 18};
        case ModelId::XYZ_3D: return {5, 72};
        case ModelId::HenonHeiles2D: return {5, 24};
    }
    throw InvalidArgument("unknown model");
}

std::vector<IndexedValue> ratio_to_asymptote(const EnergySeries& series, const LargeOrderLaw& law) {
    if (series.model.id != law.model)
        throw InvalidArgument("large-order law for model '" + std::string(model_name(law.model)) +
                              "' applied to series of model '" + std::string(model_name(series.model.id)) + "'");
    std::vector<IndexedValue> out;
    for (int n = 1; n <= series.max_order(); ++n)
        out.push_back({n, to_real(series.coefficients[static_cast<std::size_t>(n)]) / law.predict(n)});
    return out;
}

HighFloat richardson(const std::vector<IndexedValue>& seq, int k) {
    if (k < 0) throw InvalidArgument("Richardson order must be non-negative");
    if (static_cast<int>(seq.size()) < k + 1)
        throw InvalidArgument("Richardson order " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                              " entries, got " + std::to_string(seq.size()));
    const std::size_t start = seq.size() - static_cast<std::size_t>(k) - 1;
    const int n0 = seq[start].n;
    HighFloat total = 0;
    HighFloat factorial_j = 1;
    HighFloat factorial_kj = boost::multiprecision::tgamma(HighFloat(k + 1));
    for (int j = 0; j <= k; ++j) {
        const auto& entry = seq[start + static_cast<std::size_t>(j)];
        if (entry.n != n0 + j) throw InvalidArgument("Richardson tail must have consecutive indices");
        if (j > 0) {
            factorial_j *= j;
            factorial_kj /= (k - j + 1);
        }
        HighFloat term = entry.value * pow(HighFloat(entry.n), k) / (factorial_j * factorial_kj);
        if ((k + j) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

HighFloat fit_amplitude(const EnergySeries& series, const ExactRational& base, int k) {
    if (base.sign() <= 0) throw InvalidArgument("large-order base must be positive");
    if (series.max_order() < k + 1) throw InvalidArgument("series too short for the requested Richardson order");
    std::vector<IndexedValue> seq;
    const HighFloat b = to_real(base);
    const HighFloat half = HighFloat(1) / 2;
    for (int n = 1; n <= series.max_order(); ++n) {
        const ExactRational& c = series.coefficients[static_cast<std::size_t>(n)];
        const int expected = (n + 1) % 2 == 0 ? 1 : -1;
        if (c.sign() != expected)
            throw ComputationAnomaly("series coefficient c_" + std::to_string(n) + " breaks sign alternation");
        HighFloat value = abs(to_real(c)) / (pow(b, HighFloat(n) + half) * tgamma(HighFloat(n) + half));
        seq.push_back({n, value});
    }
    return richardson(seq, k);
}

}  // namespace ptcubic
