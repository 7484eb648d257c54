#pragma once

#include "ptcubic/model.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace ptcubic {

/// H = sum_i (p_i^2 + x_i^2) + i g W truncated to the product basis of the
/// oscillator p^2 + Omega^2 x^2, states 0..N-1 per coordinate.
struct SpectralProblem {
    ModelId model = ModelId::Cubic1D;
    double g = 0.0;
    int cutoff = 2;
    double scale = 1.0;
    /// Largest matrix dimension N^d accepted by build_hamiltonian.
    std::size_t dimension_cap = 8000;
};

struct SpectrumResult {
    /// Lowest levels ordered by modulus (equal to real-part order for a real spectrum).
    std::vector<std::complex<double>> eigenvalues;
    std::vector<bool> converged;
    /// |E(N) - E(N + step)| per level.
    std::vector<double> cutoff_change;
    double max_abs_imag_low = 0.0;
    int cutoff_used = 0;
    int comparison_cutoff = 0;

    [[nodiscard]] bool all_converged() const;
};

/// <m|x|n> for the oscillator p^2 + Omega^2 x^2.
Eigen::MatrixXd position_matrix(int n, double omega);
/// Exact truncation of x^power (not the power of the truncated matrix).
Eigen::MatrixXd position_power_matrix(int n, double omega, int power);
/// Exact truncation of p^2.
Eigen::MatrixXd momentum_squared_matrix(int n, double omega);

Eigen::MatrixXcd build_hamiltonian(const SpectralProblem& problem);

/// Groups of basis indices that the Hamiltonian never couples (parity sectors).
std::vector<std::vector<std::size_t>> parity_sectors(ModelId model, int cutoff);

/// All eigenvalues of the truncated Hamiltonian, ordered by modulus.
std::vector<std::complex<double>> all_levels(const SpectralProblem& problem);

struct ConvergenceOptions {
    /// Extra basis states per coordinate for the comparison solve; 0 picks
    /// 4 for one and two dimensions and 2 in three dimensions.
    int cutoff_step = 0;
    double tolerance = 1e-6;
};

SpectrumResult low_levels(const SpectralProblem& problem, int k, const ConvergenceOptions& options = {});

/// Lowest k levels of the massless cubic p^2 + i x^3.
SpectrumResult massless_cubic_levels(int cutoff, double omega, int k, const ConvergenceOptions& options = {});

/// Omega from `candidates` whose ground level moves least between cutoff N and N + step.
double choose_massless_scale(int cutoff, const std::vector<double>& candidates, const ConvergenceOptions& options = {});

/// 4 sin^2(pi/5) Gamma(1/5)^2 / (5^{6/5} Gamma(3/5)), the sum of inverse
/// eigenvalues of p^2 + i x^3.
template <class Real>
Real zeta_exact();

/// Reorders per-point levels so that level j at point i+1 is the one closest to
/// level j at point i (greedy nearest assignment).
std::vector<std::vector<std::complex<double>>> track_levels(
    const std::vector<std::vector<std::complex<double>>>& levels_per_point);

}  // namespace ptcubic
