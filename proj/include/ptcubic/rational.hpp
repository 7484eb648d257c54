#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ptcubic {

/// Arbitrary-precision rational kept in canonical form (reduced, positive
/// denominator). Thin value wrapper over GMP's mpq_class.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(long num, long den);
    explicit ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "p/q" or separate decimal numerator/denominator strings.
    static ExactRational parse(std::string_view text);
    static ExactRational from_parts(std::string_view num, std::string_view den);

    [[nodiscard]] std::string numerator_string() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_string() const { return value_.get_den().get_str(); }
    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] mpq_class& raw() { return value_; }

    ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.value_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

}  // namespace ptcubic
