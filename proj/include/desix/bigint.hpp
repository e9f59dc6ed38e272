#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace desix {

using BigInt = boost::multiprecision::cpp_int;

// base^exp for non-negative exp.
inline BigInt big_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace desix
