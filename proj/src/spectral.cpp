#include "ptcubic/spectral.hpp"

#include "ptcubic/errors.hpp"
#include "ptcubic/precision.hpp"

#include <boost/math/constants/constants.hpp>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace ptcubic {

namespace {

using Complex = std::complex<double>;

struct OperatorTerm {
    Complex coefficient;
    std::array<Eigen::MatrixXd, kMaxDimension> factors;  // one 1D operator per coordinate
};

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Multi-index of a product-basis state; coordinate 0 varies slowest.
std::array<int, kMaxDimension> unpack(std::size_t index, int cutoff, int dimension) {
    std::array<int, kMaxDimension> n{};
    for (int i = dimension - 1; i >= 0; --i) {
        n[i] = static_cast<int>(index % static_cast<std::size_t>(cutoff));
        index /= static_cast<std::size_t>(cutoff);
    }
    return n;
}

/// Sum of Kronecker products, evaluated only on the given basis subset.
Eigen::MatrixXcd assemble(const std::vector<OperatorTerm>& terms, const std::vector<std::size_t>& basis, int cutoff,
                          int dimension) {
    const auto size = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(size, size);
    std::vector<std::array<int, kMaxDimension>> states;
    states.reserve(basis.size());
    for (std::size_t b : basis) states.push_back(unpack(b, cutoff, dimension));
    for (Eigen::Index r = 0; r < size; ++r) {
        const auto& nr = states[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < size; ++c) {
            const auto& nc = states[static_cast<std::size_t>(c)];
            Complex value = 0.0;
            for (const auto& term : terms) {
                double prod = 1.0;
                for (int i = 0; i < dimension && prod != 0.0; ++i) prod *= term.factors[i](nr[i], nc[i]);
                if (prod != 0.0) value += term.coefficient * prod;
            }
            h(r, c) = value;
        }
    }
    return h;
}

/// Terms of sum_i (p_i^2 + mass * x_i^2) + i g W.
std::vector<OperatorTerm> hamiltonian_terms(const ModelSpec& model, double g, int cutoff, double omega, bool mass) {
    const int d = model.dimension;
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(cutoff, cutoff);
    Eigen::MatrixXd single = momentum_squared_matrix(cutoff, omega);
    if (mass) single += position_power_matrix(cutoff, omega, 2);

    std::vector<OperatorTerm> terms;
    for (int i = 0; i < d; ++i) {
        OperatorTerm t{1.0, {}};
        for (int j = 0; j < d; ++j) t.factors[j] = (j == i) ? single : identity;
        terms.push_back(std::move(t));
    }
    if (g != 0.0) {
        for (const auto& mono : model.perturbation) {
            OperatorTerm t{Complex(0.0, g * mono.coefficient.to_double()), {}};
            for (int j = 0; j < d; ++j) t.factors[j] = position_power_matrix(cutoff, omega, mono.exponents[j]);
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

void check_problem(const SpectralProblem& p) {
    if (p.cutoff < 2) throw InvalidArgument("basis cutoff must be at least 2");
    if (!(p.scale > 0.0) || !std::isfinite(p.scale)) throw InvalidArgument("basis scale must be positive");
    if (!std::isfinite(p.g)) throw InvalidArgument("coupling must be finite");
    const int d = build_model(p.model).dimension;
    const double size = std::pow(static_cast<double>(p.cutoff), d);
    if (size > static_cast<double>(p.dimension_cap))
        throw InvalidArgument("matrix dimension " + std::to_string(static_cast<long long>(size)) +
                              " exceeds the configured cap " + std::to_string(p.dimension_cap));
}

std::vector<Complex> solve_sectors(const ModelSpec& model, double g, int cutoff, double omega, bool mass) {
    const auto terms = hamiltonian_terms(model, g, cutoff, omega, mass);
    std::vector<Complex> all;
    for (const auto& sector : parity_sectors(model.id, cutoff)) {
        Eigen::MatrixXcd h = assemble(terms, sector, cutoff, model.dimension);
        const auto n = static_cast<lapack_int>(h.rows());
        Eigen::VectorXcd w(h.rows());
        const lapack_int info =
            LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(h.data()), n,
                          reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1, nullptr, 1);
        if (info != 0)
            throw ComputationAnomaly("complex eigensolver (zgeev) failed with info = " + std::to_string(info));
        for (Eigen::Index i = 0; i < w.size(); ++i) all.push_back(w(i));
    }
    // Truncation artifacts come in conjugate pairs with small real part and
    // huge imaginary part; ordering by modulus keeps them out of the low levels.
    std::sort(all.begin(), all.end(), [](Complex a, Complex b) {
        const double ma = std::abs(a);
        const double mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return all;
}

SpectrumResult compare_cutoffs(const std::vector<Complex>& base, const std::vector<Complex>& refined, int k,
                               int cutoff, int comparison, double tolerance) {
    if (k < 1) throw InvalidArgument("level count must be at least 1");
    if (static_cast<std::size_t>(k) > base.size())
        throw InvalidArgument("requested " + std::to_string(k) + " levels from a basis of " +
                              std::to_string(base.size()) + " states");
    SpectrumResult result;
    result.cutoff_used = cutoff;
    result.comparison_cutoff = comparison;
    for (int j = 0; j < k; ++j) {
        const Complex e = base[static_cast<std::size_t>(j)];
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& r : refined) best = std::min(best, std::abs(r - e));
        result.eigenvalues.push_back(e);
        result.cutoff_change.push_back(best);
        result.converged.push_back(best < tolerance);
        result.max_abs_imag_low = std::max(result.max_abs_imag_low, std::abs(e.imag()));
    }
    return result;
}

int default_step(int dimension, const ConvergenceOptions& options) {
    if (options.cutoff_step > 0) return options.cutoff_step;
    return dimension >= 3 ? 2 : 4;
}

}  // namespace

bool SpectrumResult::all_converged() const {
    return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

Eigen::MatrixXd position_matrix(int n, double omega) {
    if (n < 2) throw InvalidArgument("position matrix needs at least two states");
    if (!(omega > 0.0)) throw InvalidArgument("oscillator scale must be positive");
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double v = std::sqrt(k / (2.0 * omega));
        x(k - 1, k) = v;
        x(k, k - 1) = v;
    }
    return x;
}

Eigen::MatrixXd position_power_matrix(int n, double omega, int power) {
    if (power == 0) return Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd x = position_matrix(n + power, omega);
    Eigen::MatrixXd result = x;
    for (int i = 1; i < power; ++i) result = result * x;
    return result.topLeftCorner(n, n);
}

Eigen::MatrixXd momentum_squared_matrix(int n, double omega) {
    if (n < 2) throw InvalidArgument("momentum matrix needs at least two states");
    Eigen::MatrixXd p2 = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        p2(k, k) = 0.5 * omega * (2 * k + 1);
        if (k + 2 < n) {
            const double v = -0.5 * omega * std::sqrt(static_cast<double>((k + 1) * (k + 2)));
            p2(k, k + 2) = v;
            p2(k + 2, k) = v;
        }
    }
    return p2;
}

std::vector<std::vector<std::size_t>> parity_sectors(ModelId id, int cutoff) {
    const ModelSpec model = build_model(id);
    const int d = model.dimension;
    // Coordinate sign flips that leave W invariant commute with H.
    std::vector<unsigned> symmetries;
    for (unsigned mask = 1; mask < (1U << d); ++mask) {
        bool invariant = true;
        for (const auto& mono : model.perturbation) {
            int flips = 0;
            for (int i = 0; i < d; ++i)
                if (mask & (1U << i)) flips += mono.exponents[i];
            if (flips % 2 != 0) invariant = false;
        }
        if (invariant) symmetries.push_back(mask);
    }
    std::map<unsigned, std::vector<std::size_t>> sectors;
    const std::size_t size = ipow(static_cast<std::size_t>(cutoff), d);
    for (std::size_t index = 0; index < size; ++index) {
        const auto n = unpack(index, cutoff, d);
        unsigned key = 0;
        for (std::size_t s = 0; s < symmetries.size(); ++s) {
            int parity = 0;
            for (int i = 0; i < d; ++i)
                if (symmetries[s] & (1U << i)) parity += n[i];
            if (parity % 2 != 0) key |= 1U << s;
        }
        sectors[key].push_back(index);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, states] : sectors) out.push_back(std::move(states));
    return out;
}

Eigen::MatrixXcd build_hamiltonian(const SpectralProblem& problem) {
    check_problem(problem);
    const ModelSpec model = build_model(problem.model);
    std::vector<std::size_t> basis(ipow(static_cast<std::size_t>(problem.cutoff), model.dimension));
    for (std::size_t i = 0; i < basis.size(); ++i) basis[i] = i;
    return assemble(hamiltonian_terms(model, problem.g, problem.cutoff, problem.scale, true), basis, problem.cutoff,
                    model.dimension);
}

std::vector<Complex> all_levels(const SpectralProblem& problem) {
    check_problem(problem);
    return solve_sectors(build_model(problem.model), problem.g, problem.cutoff, problem.scale, true);
}

SpectrumResult low_levels(const SpectralProblem& problem, int k, const ConvergenceOptions& options) {
    check_problem(problem);
    const ModelSpec model = build_model(problem.model);
    SpectralProblem refined = problem;
    refined.cutoff = problem.cutoff + default_step(model.dimension, options);
    check_problem(refined);
    const auto base = all_levels(problem);
    const auto better = all_levels(refined);
    return compare_cutoffs(base, better, k, problem.cutoff, refined.cutoff, options.tolerance);
}

SpectrumResult massless_cubic_levels(int cutoff, double omega, int k, const ConvergenceOptions& options) {
    if (cutoff < 2) throw InvalidArgument("basis cutoff must be at least 2");
    if (!(omega > 0.0)) throw InvalidArgument("basis scale must be positive");
    const ModelSpec model = build_model(ModelId::Cubic1D);
    const int comparison = cutoff + default_step(1, options);
    const auto base = solve_sectors(model, 1.0, cutoff, omega, false);
    const auto better = solve_sectors(model, 1.0, comparison, omega, false);
    return compare_cutoffs(base, better, k, cutoff, comparison, options.tolerance);
}

double choose_massless_scale(int cutoff, const std::vector<double>& candidates, const ConvergenceOptions& options) {
    if (candidates.empty()) throw InvalidArgument("no candidate basis scales");
    double best_scale = candidates.front();
    double best_change = std::numeric_limits<double>::infinity();
    for (double omega : candidates) {
        const auto r = massless_cubic_levels(cutoff, omega, 1, options);
        if (r.cutoff_change[0] < best_change) {
            best_change = r.cutoff_change[0];
            best_scale = omega;
        }
    }
    return best_scale;
}

template <class Real>
Real zeta_exact() {
    const Real pi = boost::math::constants::pi<Real>();
    const Real s = sin(pi / 5);
    const Real g15 = tgamma(Real(1) / 5);
    return 4 * s * s * g15 * g15 / (pow(Real(5), Real(6) / 5) * tgamma(Real(3) / 5));
}

template HighFloat zeta_exact<HighFloat>();
template HighFloat100 zeta_exact<HighFloat100>();
template double zeta_exact<double>();

std::vector<std::vector<Complex>> track_levels(const std::vector<std::vector<Complex>>& levels_per_point) {
    std::vector<std::vector<Complex>> tracked;
    if (levels_per_point.empty()) return tracked;
    tracked.push_back(levels_per_point.front());
    for (std::size_t p = 1; p < levels_per_point.size(); ++p) {
        const auto& prev = tracked.back();
        std::vector<Complex> pool = levels_per_point[p];
        std::vector<Complex> next(prev.size());
        std::vector<bool> taken(pool.size(), false);
        for (std::size_t j = 0; j < prev.size() && j < pool.size(); ++j) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < pool.size(); ++c) {
                if (taken[c]) continue;
                const double dist = std::abs(pool[c] - prev[j]);
                if (dist < best_d) {
                    best_d = dist;
                    best = c;
                }
            }
            taken[best] = true;
            next[j] = pool[best];
        }
        next.resize(std::min(prev.size(), pool.size()));
        tracked.push_back(std::move(next));
    }
    return tracked;
}

}  // namespace ptcubic
