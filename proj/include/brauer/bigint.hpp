#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace brauer {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline std::string to_string(const BigInt& a) { return a.str(); }

}  // namespace brauer
