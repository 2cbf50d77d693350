#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace sgr {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), exact.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= static_cast<std::uint64_t>(n - i);
        result /= static_cast<std::uint64_t>(i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

/// base^exp for nonnegative integer exponents.
inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// Exact quotient; throws std::logic_error if the division has a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::logic_error("exact_div: zero denominator");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("exact_div: non-integral quotient");
    return q;
}

} // namespace sgr
