#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gns {

// Exact arithmetic types used throughout. No floating point is allowed on
// any decision path; rationals are always kept in lowest terms by the
// backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroDivisorError : public Error {
public:
    explicit ZeroDivisorError(const std::string& what = "element is a zero divisor")
        : Error(what) {}
};

class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& what = "exact division failed")
        : Error(what) {}
};

class SpecError : public Error {
public:
    explicit SpecError(const std::string& what) : Error(what) {}
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Mathematical modulus: result in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
    Int m = a % b;
    if (m < 0) m += abs_int(b);
    return m;
}

inline Int rat_floor(const Rat& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Renders a rational as "p" or "p/q"; parse_rat accepts both forms.
inline std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw SpecError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw SpecError("malformed rational: " + s);
    }
}

}  // namespace gns
