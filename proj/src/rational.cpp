#include "ptcubic/rational.hpp"

#include "ptcubic/errors.hpp"

#include <cctype>

namespace ptcubic {

namespace {

mpz_class parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidArgument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidArgument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw InvalidArgument("malformed integer literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
}

}  // namespace

ExactRational::ExactRational(long num, long den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_parts(text, "1");
    return from_parts(text.substr(0, slash), text.substr(slash + 1));
}

ExactRational ExactRational::from_parts(std::string_view num, std::string_view den) {
    mpz_class n = parse_integer(num);
    mpz_class d = parse_integer(den);
    if (d == 0) throw InvalidArgument("zero denominator");
    return ExactRational(mpq_class(n, d));
}

std::string ExactRational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero rational");
    value_ /= o.value_;
    return *this;
}

}  // namespace ptcubic
