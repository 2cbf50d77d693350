#pragma once

#include <cstdint>

#include "sgr/bigint.hpp"
#include "sgr/errors.hpp"
#include "sgr/james.hpp"

namespace sgr {

// ============================================================================
// 2-local connective KO data of stunted real projective spectra
// ============================================================================

enum class KOStatus {
    Computed,          // order and psi^3 multiplier as listed
    ZeroProjection,    // the Z/2 group whose projection map is zero
    NotComputedByPaper // (n mod, k) combination outside the listed cases
};

constexpr const char* ko_status_name(KOStatus s) {
    switch (s) {
        case KOStatus::Computed: return "computed";
        case KOStatus::ZeroProjection: return "zero-projection";
        case KOStatus::NotComputedByPaper: return "not-computed-by-paper";
    }
    return "?";
}

/// Order data for the 2-local group in degree n of the spectrum truncated
/// below k. order = 0 doubles as the marker of the degenerate
/// Z/2-with-zero-projection case; status disambiguates.
struct KOGroupInfo {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    KOStatus status = KOStatus::NotComputedByPaper;
    BigInt order = 0;
    BigInt psi3_multiplier = 0;
};

namespace detail {

inline void check_ko_args(std::uint64_t n, std::uint64_t k) {
    if (n % 2 == 0) throw DomainError("ko_group: n must be odd");
    if (k < 1 || k > n) throw DomainError("ko_group: k must satisfy 1 <= k <= n");
}

} // namespace detail

/// Piecewise group data:
///   n+1 = 0 mod 8            -> cyclic of order 2 a(n+1-k), psi^3 = 3^((n+1)/2)
///   n+1 = 4 mod 8, k = n-4   -> Z/16, psi^3 = 3^((n+1)/2)
///   n+1 = 2 mod 4, k = n-2   -> Z/2 with zero projection
/// Other combinations are tagged NotComputedByPaper rather than guessed.
inline KOGroupInfo ko_group(std::uint64_t n, std::uint64_t k) {
    detail::check_ko_args(n, k);
    KOGroupInfo info;
    info.n = n;
    info.k = k;
    if ((n + 1) % 8 == 0) {
        info.status = KOStatus::Computed;
        info.order = 2 * hurwitz_radon_a(n + 1 - k).value();
        info.psi3_multiplier = ipow(3, (n + 1) / 2);
    } else if ((n + 1) % 8 == 4 && k == n - 4) {
        info.status = KOStatus::Computed;
        info.order = 16;
        info.psi3_multiplier = ipow(3, (n + 1) / 2);
    } else if ((n + 1) % 4 == 2 && k == n - 2) {
        info.status = KOStatus::ZeroProjection;
        info.order = 0;
    } else {
        info.status = KOStatus::NotComputedByPaper;
    }
    return info;
}

/// nu_2(3^s - 1) for even s, via the closed identity nu_2(s) + 2. The
/// cross-check against direct big-integer valuation lives in the tests.
inline std::uint32_t nu2_power3_minus1(std::uint64_t s) {
    if (s == 0 || s % 2 != 0)
        throw DomainError("nu2_power3_minus1: the identity applies to even s >= 2");
    return nu_p(2, s) + 2;
}

/**
 * Whether a generator fixed by psi^3 exists and projects onto the top cell:
 * for n+1 = 0 mod 8 this is the divisibility 3^((n+1)/2) - 1 = 0 mod
 * 2 a(n+1-k), decided purely on 2-adic valuations; for the other two parity
 * classes the projection argument leaves only k > n-4 (resp. k > n-2).
 */
inline bool fixed_generator_exists(std::uint64_t n, std::uint64_t k) {
    detail::check_ko_args(n, k);
    if ((n + 1) % 8 == 0) {
        // nu_2(3^((n+1)/2) - 1) = nu_2(n+1) + 1 >= 1 + nu_2(a(n+1-k))
        return nu_p(2, n + 1) >= hurwitz_radon_exponent(n + 1 - k);
    }
    const long long sk = static_cast<long long>(k), sn = static_cast<long long>(n);
    if ((n + 1) % 8 == 4) return sk > sn - 4;
    return sk > sn - 2; // n+1 = 2 mod 4
}

} // namespace sgr
