#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace simint {

// Exact rational arithmetic for interval endpoints. Denominators grow with
// the bisection depth of the unit placement, so fixed-width integers are
// not enough.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Normalized "p/q" rendering, q > 0, gcd(p, q) = 1. Integers render as "p/1".
inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

// A closed interval [lo, hi] with exact endpoints.
struct Interval {
    Rat lo;
    Rat hi;

    bool intersects(const Interval& o) const {
        return !(hi < o.lo) && !(o.hi < lo);
    }
    // True when o is strictly inside *this (equality of both ends is not
    // containment).
    bool properly_contains(const Interval& o) const {
        if (lo > o.lo || hi < o.hi) return false;
        return lo < o.lo || hi > o.hi;
    }
    Rat length() const { return hi - lo; }
    bool operator==(const Interval& o) const = default;
};

}  // namespace simint
