#include "ptcubic/complex_gamma.hpp"

#include "ptcubic/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace ptcubic {

namespace {

constexpr int kLanczosG = 7;
constexpr std::array<double, 9> kLanczosCoefficients{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> lanczos_sum(std::complex<double> z) {
    using std::numbers::pi;
    z -= 1.0;
    std::complex<double> x = kLanczosCoefficients[0];
    for (int i = 1; i < kLanczosG + 2; ++i) x += kLanczosCoefficients[static_cast<std::size_t>(i)] / (z + double(i));
    const std::complex<double> t = z + (kLanczosG + 0.5);
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Gamma via upward recurrence instead of reflection: Gamma(z) = Gamma(z+k) / (z (z+1) ... (z+k-1)).
std::complex<double> gamma_by_shift(std::complex<double> z) {
    std::complex<double> divisor = 1.0;
    while (z.real() < 0.5) {
        divisor *= z;
        z += 1.0;
    }
    return lanczos_sum(z) / divisor;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    using std::numbers::pi;
    if (z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real())
        throw InvalidArgument("Gamma has a pole at non-positive integers");
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    return lanczos_sum(z);
}

double reflection_residual(std::complex<double> z) {
    using std::numbers::pi;
    return std::abs(gamma_by_shift(z) * gamma_by_shift(1.0 - z) * std::sin(pi * z) / pi - 1.0);
}

}  // namespace ptcubic
