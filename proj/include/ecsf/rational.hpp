#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ecsf/errors.hpp"

namespace ecsf {

// Exact arithmetic everywhere.  cpp_rational keeps the fraction reduced
// with a positive denominator, which is exactly the invariant we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "3", "-1/2" style rendering; denominator omitted when 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw parse_error("bad rational literal: " + s);
    }
}

// Throws unless r is an integer.
inline Integer to_integer(const Rational& r) {
    if (denominator(r) != 1) throw domain_error("expected an integer, got " + to_string(r));
    return numerator(r);
}

} // namespace ecsf
