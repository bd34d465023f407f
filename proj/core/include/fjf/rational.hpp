#pragma once

#include <gmpxx.h>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fjf {

using Rat = mpq_class;
using Int = mpz_class;

/// Raised when a requested computation needs more series precision than
/// the operands carry (or than rank stability can certify).
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a mathematically asserted invariant fails on real data.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat ratFromString(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string ratToString(const Rat& r) { return r.get_str(); }

/// num/den in canonical form.  The two-argument mpq_class constructor does
/// not reduce, and GMP comparisons assume canonical operands.
inline Rat ratFrac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline long lcmLong(long a, long b) { return std::lcm(a, b); }

inline double ratToDouble(const Rat& r) { return r.get_d(); }

}  // namespace fjf
