#pragma once

#include <cstdint>
#include <string>

#include "sgr/bigint.hpp"
#include "sgr/errors.hpp"
#include "sgr/factored.hpp"

namespace sgr {

// ============================================================================
// Sphere families
// ============================================================================

/// The three families of sphere fibrations, tagged by the base field
/// R, C, H of real dimension d = 1, 2, 4.
enum class SphereFamily { Real, Complex, Quaternionic };

constexpr int field_dim(SphereFamily f) {
    switch (f) {
        case SphereFamily::Real: return 1;
        case SphereFamily::Complex: return 2;
        case SphereFamily::Quaternionic: return 4;
    }
    return 0; // unreachable
}

constexpr const char* family_name(SphereFamily f) {
    switch (f) {
        case SphereFamily::Real: return "R";
        case SphereFamily::Complex: return "C";
        case SphereFamily::Quaternionic: return "H";
    }
    return "?";
}

// ============================================================================
// p-adic valuations
// ============================================================================

/// nu_p(n): the largest e with p^e | n. Rejects n = 0 (infinite valuation)
/// and non-prime p.
inline std::uint32_t nu_p(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw DomainError("nu_p: " + std::to_string(p) + " is not prime");
    if (n == 0) throw DomainError("nu_p: valuation of 0 is infinite");
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

inline std::uint32_t nu_p(std::uint64_t p, BigInt n) {
    if (!is_prime(p)) throw DomainError("nu_p: " + std::to_string(p) + " is not prime");
    if (n == 0) throw DomainError("nu_p: valuation of 0 is infinite");
    if (n < 0) n = -n;
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

// ============================================================================
// Hurwitz-Radon and James numbers
// ============================================================================

/// Exponent of 2 in a(r): the number of i in [1, r-1] with
/// i mod 8 in {0, 1, 2, 4}. Each full window of 8 contributes 4.
inline std::uint32_t hurwitz_radon_exponent(std::uint64_t r) {
    if (r == 0) throw DomainError("hurwitz_radon_a: r must be >= 1");
    std::uint64_t top = r - 1;
    std::uint64_t count = 4 * (top / 8);
    switch (top % 8) { // residues 1..top%8 that lie in {1, 2, 4}
        case 0: count += 0; break;
        case 1: count += 1; break;
        case 2:
        case 3: count += 2; break;
        default: count += 3; break; // 4..7
    }
    return static_cast<std::uint32_t>(count);
}

/// Hurwitz-Radon number a(r), a pure power of 2.
inline FactoredInteger hurwitz_radon_a(std::uint64_t r) {
    std::uint32_t e = hurwitz_radon_exponent(r);
    return e == 0 ? FactoredInteger::one() : FactoredInteger::prime_power(2, e);
}

/// nu_p(b(r)) = max{ i + nu_p(i) | 1 <= i <= (r-1)/(p-1) } for r >= p, else 0.
inline std::uint32_t james_b_exponent(std::uint64_t p, std::uint64_t r) {
    if (r == 0) throw DomainError("james_b: r must be >= 1");
    if (r < p) return 0;
    std::uint64_t top = (r - 1) / (p - 1);
    std::uint64_t best = 0;
    for (std::uint64_t i = 1; i <= top; ++i) {
        std::uint64_t cand = i + nu_p(p, i);
        if (cand > best) best = cand;
    }
    return static_cast<std::uint32_t>(best);
}

/// nu_2(c(r)) = max({2r-1} u { 2i + nu_2(i) | 1 <= i <= r-1 }).
inline std::uint32_t james_c_exponent2(std::uint64_t r) {
    if (r == 0) throw DomainError("james_c: r must be >= 1");
    std::uint64_t best = 2 * r - 1;
    for (std::uint64_t i = 1; i + 1 <= r; ++i) {
        std::uint64_t cand = 2 * i + nu_p(2, i);
        if (cand > best) best = cand;
    }
    return static_cast<std::uint32_t>(best);
}

/// Complex James number b(r).
inline FactoredInteger james_b(std::uint64_t r) {
    if (r == 0) throw DomainError("james_b: r must be >= 1");
    FactoredInteger f;
    for (std::uint64_t p = 2; p <= r; p += (p == 2 ? 1 : 2)) {
        if (!is_prime(p)) continue;
        f.set_exponent(p, james_b_exponent(p, r));
    }
    return f;
}

/// Quaternionic James number c(r): the 2-exponent has its own maximum
/// formula, the odd part coincides with b(2r).
inline FactoredInteger james_c(std::uint64_t r) {
    if (r == 0) throw DomainError("james_c: r must be >= 1");
    FactoredInteger f = FactoredInteger::prime_power(2, james_c_exponent2(r));
    for (std::uint64_t p = 3; p <= 2 * r; p += 2) {
        if (!is_prime(p)) continue;
        f.set_exponent(p, james_b_exponent(p, 2 * r));
    }
    return f;
}

/// t(r): the family-indexed James number, a(r) / b(r) / c(r).
inline FactoredInteger james_t(SphereFamily fam, std::uint64_t r) {
    switch (fam) {
        case SphereFamily::Real: return hurwitz_radon_a(r);
        case SphereFamily::Complex: return james_b(r);
        case SphereFamily::Quaternionic: return james_c(r);
    }
    throw DomainError("james_t: bad family");
}

/// Exponent of 2 in t(r) without computing the odd part.
inline std::uint32_t james_t_exponent2(SphereFamily fam, std::uint64_t r) {
    switch (fam) {
        case SphereFamily::Real: return hurwitz_radon_exponent(r);
        case SphereFamily::Complex: return james_b_exponent(2, r);
        case SphereFamily::Quaternionic: return james_c_exponent2(r);
    }
    throw DomainError("james_t_exponent2: bad family");
}

// ============================================================================
// Gap functions
// ============================================================================

/// j(n) = 2^beta + 8*gamma where n+1 = (2l+1) * 2^(beta + 4*gamma),
/// beta in {0,1,2,3}.
inline std::uint64_t j_real(std::uint64_t n) {
    if (n == 0) throw DomainError("j_real: n must be >= 1");
    std::uint32_t v = nu_p(2, n + 1);
    std::uint32_t beta = v % 4;
    std::uint32_t gamma = v / 4;
    return (std::uint64_t{1} << beta) + 8ull * gamma;
}

/**
 * j_2(n) (Complex, n = 2m-1) and j_4(n) (Quaternionic, n = 4m-1):
 * n+1 - d*k* where k* is the least k >= 1 with
 * m = 0 mod 2^(nu_2(t(m-k))), t = b or c.
 *
 * The divisibility gets weaker as k grows (t(r) | t(r+1)), so least-k
 * semantics makes "condition holds at k" equivalent to "d*k >= n+1 - j(n)".
 * In the quaternionic case the condition can fail for every k < m (e.g. m
 * odd, since nu_2(c(1)) = 1); the returned gap is then 0, which encodes
 * "no admissible k" in the same inequality form.
 */
inline std::uint64_t j_gap(std::uint64_t n, SphereFamily fam) {
    if (fam == SphereFamily::Real) throw DomainError("j_gap: use j_real for the real family");
    const std::uint64_t d = static_cast<std::uint64_t>(field_dim(fam));
    if ((n + 1) % d != 0 || n % 2 == 0)
        throw DomainError(std::string("j_gap: n must be ") +
                          (fam == SphereFamily::Complex ? "odd (n = 2m-1)" : "3 mod 4 (n = 4m-1)"));
    const std::uint64_t m = (n + 1) / d;
    const std::uint32_t vm = nu_p(2, m);
    // Find the largest r = m - k with nu_2(t(r)) <= nu_2(m); the exponent is
    // nondecreasing in r, so binary search applies.
    std::uint64_t lo = 1, hi = m - 1, best_r = 0;
    while (lo <= hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (james_t_exponent2(fam, mid) <= vm) {
            best_r = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    if (best_r == 0) return 0; // no k in [1, m-1] satisfies the condition
    std::uint64_t k_star = m - best_r;
    return n + 1 - d * k_star;
}

} // namespace sgr
