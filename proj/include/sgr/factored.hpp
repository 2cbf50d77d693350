#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "sgr/bigint.hpp"
#include "sgr/errors.hpp"

namespace sgr {

/// Deterministic trial-division primality test for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        if (n % p == 0 || n % (p + 2) == 0) return false;
    }
    return true;
}

/**
 * A positive integer stored as a prime -> exponent map.
 *
 * The represented value is the product p^e over all entries; the empty map
 * is 1. Values of interest here (James numbers in particular) overflow
 * machine words quickly, so arithmetic stays on the exponents and the
 * decimal expansion is produced only on demand.
 */
class FactoredInteger {
public:
    using FactorMap = std::map<std::uint64_t, std::uint32_t>;

    FactoredInteger() = default;

    static FactoredInteger one() { return FactoredInteger{}; }

    static FactoredInteger prime_power(std::uint64_t p, std::uint32_t e) {
        FactoredInteger f;
        f.set_exponent(p, e);
        return f;
    }

    /// Factor a machine-word value (n >= 1).
    static FactoredInteger from_value(std::uint64_t n) {
        if (n == 0) throw DomainError("FactoredInteger: 0 has no factorization");
        FactoredInteger f;
        for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
            while (n % p == 0) {
                ++f.factors_[p];
                n /= p;
            }
        }
        if (n > 1) ++f.factors_[n];
        return f;
    }

    /// Sets the exponent of a prime; e = 0 removes the entry.
    void set_exponent(std::uint64_t p, std::uint32_t e) {
        if (!is_prime(p)) throw DomainError("FactoredInteger: key " + std::to_string(p) + " is not prime");
        if (e == 0) {
            factors_.erase(p);
        } else {
            factors_[p] = e;
        }
    }

    std::uint32_t exponent_of(std::uint64_t p) const {
        auto it = factors_.find(p);
        return it == factors_.end() ? 0u : it->second;
    }

    const FactorMap& factors() const { return factors_; }

    bool is_one() const { return factors_.empty(); }

    /// Expands to the represented integer. Display concern only; can be huge.
    BigInt value() const {
        BigInt v = 1;
        for (const auto& [p, e] : factors_) v *= ipow(BigInt(p), e);
        return v;
    }

    /// log10 of the value, without expanding it.
    double log10() const {
        double s = 0.0;
        for (const auto& [p, e] : factors_) s += static_cast<double>(e) * std::log10(static_cast<double>(p));
        return s;
    }

    /// Whether the represented value divides n. Decided per-prime on
    /// valuations, so the value is never expanded.
    bool divides(std::uint64_t n) const {
        if (n == 0) return true;
        for (const auto& [p, e] : factors_) {
            std::uint64_t m = n;
            std::uint32_t v = 0;
            while (m % p == 0) {
                m /= p;
                ++v;
                if (v >= e) break;
            }
            if (v < e) return false;
        }
        return true;
    }

    FactoredInteger& operator*=(const FactoredInteger& rhs) {
        for (const auto& [p, e] : rhs.factors_) factors_[p] += e;
        return *this;
    }

    friend FactoredInteger operator*(FactoredInteger lhs, const FactoredInteger& rhs) {
        lhs *= rhs;
        return lhs;
    }

    friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const FactoredInteger& a, const FactoredInteger& b) { return !(a == b); }

    /// "2^3 · 3" with primes ascending; "1" for the empty product.
    std::string factored_string() const {
        if (factors_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, e] : factors_) {
            if (!first) os << " · ";
            first = false;
            os << p;
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    /// "24 (2^3 · 3)". Above the 40-digit guard the decimal expansion is
    /// replaced by a power-of-ten estimate.
    std::string display_string() const {
        if (factors_.empty()) return "1";
        std::ostringstream os;
        double digits = log10();
        if (digits > 40.0) {
            os << "≈10^" << static_cast<long long>(digits);
        } else {
            os << value();
        }
        os << " (" << factored_string() << ")";
        return os.str();
    }

private:
    FactorMap factors_;
};

} // namespace sgr
