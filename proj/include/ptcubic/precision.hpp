#pragma once

#include "ptcubic/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace ptcubic {

/// 50-significant-digit float used wherever exact rationals meet
/// transcendental functions (Gamma, powers, Padé evaluation).
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                                boost::multiprecision::et_off>;
using HighFloat100 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                                   boost::multiprecision::et_off>;

template <class Real = HighFloat>
Real to_real(const ExactRational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

/// Scientific rendering with `digits` significant digits.
template <class Real>
std::string format_real(const Real& value, int digits) {
    return value.str(digits > 1 ? digits - 1 : 0, std::ios_base::scientific);
}

}  // namespace ptcubic
