#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace t3kit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long long num, long long den = 1) {
    return Rat(BigInt(num), BigInt(den));
}

inline Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

inline int rat_sign(const Rat& x) {
    if (x > Rat(0)) return 1;
    if (x < Rat(0)) return -1;
    return 0;
}

double to_double(const Rat& x);

// "3", "-3/2"
std::string format_rat(const Rat& x);

} // namespace t3kit
