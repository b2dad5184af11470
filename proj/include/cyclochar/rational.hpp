#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cyclochar {

// Exact arithmetic only. cpp_rational keeps values in lowest terms with a
// positive denominator, so canonical form is maintained by construction.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational rat(long long num, long long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

// "p" or "p/q", no decimal forms
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << '/' << denominator(r);
    return os.str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

}  // namespace cyclochar
