#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace loopcalc {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical "p" / "p/q" rendering, reduced, q > 0.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline unsigned log2_exact(std::uint64_t v) {
    unsigned k = 0;
    while (v > 1) { v >>= 1; ++k; }
    return k;
}

} // namespace loopcalc
