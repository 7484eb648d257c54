#pragma once

#include <complex>

namespace ptcubic {

/// Gamma function for complex arguments (Lanczos, g = 7, nine terms), with the
/// reflection formula for Re z < 1/2. About 14-15 significant digits away from
/// the poles.
std::complex<double> complex_gamma(std::complex<double> z);

/// |Gamma(z) Gamma(1-z) sin(pi z) / pi - 1| with both factors taken from the
/// Lanczos sum plus upward recurrence, so the reflection branch is not used.
double reflection_residual(std::complex<double> z);

}  // namespace ptcubic
