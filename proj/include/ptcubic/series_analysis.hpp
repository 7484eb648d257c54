#pragma once

#include "ptcubic/model.hpp"
#include "ptcubic/precision.hpp"
#include "ptcubic/rational.hpp"
#include "ptcubic/series_engine.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ptcubic {

/// Rational function P(u)/Q(u) in u = g^2 with Q(0) = 1.
struct PadeApproximant {
    int L = 0;
    int M = 0;
    std::vector<ExactRational> numerator;    // length L+1
    std::vector<ExactRational> denominator;  // length M+1, denominator[0] == 1
    /// How many times M was lowered because the linear system was singular.
    int degenerate_reductions = 0;

    struct Value {
        HighFloat value;
        HighFloat denominator;
        bool pole = false;
    };
    [[nodiscard]] Value evaluate(const HighFloat& u) const;
    [[nodiscard]] ExactRational evaluate_exact(const ExactRational& u) const;
    /// Taylor coefficients of P/Q through u^order.
    [[nodiscard]] std::vector<ExactRational> taylor(int order) const;
};

/// F-coefficients of F(u) = (E(u) - c_0)/u, i.e. c_1, c_2, ...
std::vector<ExactRational> once_subtract(const EnergySeries& series);

/// [L/M] approximant from exact coefficients; lowers M on a singular system.
PadeApproximant pade(const std::vector<ExactRational>& coeffs, int L, int M);

enum class PadeForm {
    OnceSubtracted,  ///< E = c_0 + u * [L/M]((E - c_0)/u)
    Direct,          ///< E = c_0 + [L/M](E - c_0), numerator forced to vanish at u = 0
};

struct CurvePoint {
    double g;
    HighFloat energy;
    bool pole = false;
};

std::vector<CurvePoint> energy_curve(const EnergySeries& series, int L, int M,
                                     const std::vector<double>& g_grid,
                                     PadeForm form = PadeForm::OnceSubtracted);
std::vector<CurvePoint> energy_curve(ModelId model, int L, int M, const std::vector<double>& g_grid,
                                     PadeForm form = PadeForm::OnceSubtracted);

/// c_n ~ K (-1)^{n+1} B^{n+1/2} Gamma(n + 1/2).
struct LargeOrderLaw {
    ModelId model;
    HighFloat amplitude;
    ExactRational base;

    [[nodiscard]] HighFloat predict(int n) const;
};

/// Tabulated base B per model: 15/8, 5/18, 5/72, 5/24.
ExactRational large_order_base(ModelId model);

struct IndexedValue {
    int n;
    HighFloat value;
};

std::vector<IndexedValue> ratio_to_asymptote(const EnergySeries& series, const LargeOrderLaw& law);

/// k-th order Richardson extrapolant built on the last k+1 entries of `seq`
/// (consecutive n), annihilating corrections 1/n, ..., 1/n^k.
HighFloat richardson(const std::vector<IndexedValue>& seq, int k);

/// Richardson estimate of K = lim c_n (-1)^{n+1} B^{-n-1/2} / Gamma(n+1/2).
HighFloat fit_amplitude(const EnergySeries& series, const ExactRational& base, int k);

}  // namespace ptcubic
