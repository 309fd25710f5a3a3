#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fmzv {

// Exact arbitrary-precision integers and rationals. Every coefficient in the
// symbolic layer is a Rat; the numeric layer reduces Ints mod p^N.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Renders "a" or "a/b"; boost's str() already does the right thing.
inline std::string to_string(const Rat& q) { return q.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace fmzv
