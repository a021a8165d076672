#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nilrep {

// Exact integers and rationals. Index products and normal-form transforms
// overflow 64-bit quickly, so everything arithmetic is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Shared error taxonomy.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InfiniteIndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// For facts that are theorems of the setting: a violation is an
// implementation bug and must stop the run in every build type.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division/remainder; b > 0 gives remainder in [0, b).
inline Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floormod(const Int& a, const Int& b) { return a - floordiv(a, b) * b; }

// g = gcd(a,b) together with p*a + q*b = g.
inline Int xgcd(const Int& a, const Int& b, Int& p, Int& q) {
    Int old_r = a, r = b;
    Int old_p = 1, pp = 0;
    Int old_q = 0, qq = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int t = old_r - quot * r; old_r = r; r = t;
        t = old_p - quot * pp; old_p = pp; pp = t;
        t = old_q - quot * qq; old_q = qq; qq = t;
    }
    if (old_r < 0) { old_r = -old_r; old_p = -old_p; old_q = -old_q; }
    p = old_p;
    q = old_q;
    return old_r;
}

inline std::string to_string(const Int& a) { return a.str(); }

// Rational as "p/q" in lowest terms, q >= 1.
inline std::string to_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

} // namespace nilrep
