#pragma once

#include <optional>
#include <string>

#include "sgr/bigint.hpp"
#include "sgr/errors.hpp"
#include "sgr/weyl.hpp"

namespace sgr {

// ============================================================================
// Classical compact groups
// ============================================================================

enum class GroupFamily { SO, SU, Sp };

constexpr const char* group_family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::SO: return "SO";
        case GroupFamily::SU: return "SU";
        case GroupFamily::Sp: return "Sp";
    }
    return "?";
}

struct GroupDescriptor {
    GroupFamily family;
    int size;

    GroupDescriptor(GroupFamily f, int k) : family(f), size(k) {
        if (k < 1) throw DomainError("GroupDescriptor: size must be >= 1");
    }

    friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
        return a.family == b.family && a.size == b.size;
    }
    friend bool operator!=(const GroupDescriptor& a, const GroupDescriptor& b) { return !(a == b); }

    std::string name() const {
        return std::string(group_family_name(family)) + "(" + std::to_string(size) + ")";
    }
};

/// dim SO(k) = k(k-1)/2, dim SU(k) = k^2 - 1, dim Sp(k) = k(2k+1).
inline BigInt group_dim(const GroupDescriptor& g) {
    const long long k = g.size;
    switch (g.family) {
        case GroupFamily::SO: return BigInt(k) * (k - 1) / 2;
        case GroupFamily::SU: return BigInt(k) * k - 1;
        case GroupFamily::Sp: return BigInt(k) * (2 * k + 1);
    }
    throw DomainError("group_dim: bad family");
}

/// The algebra whose dominant weights index the group's irreducibles:
/// SO(2l+1) -> B_l (l >= 2), SO(2l) -> D_l (l >= 4), SU(k) -> A_(k-1)
/// (k >= 2), Sp(k) -> C_k (k >= 2). Sizes below these floors (including the
/// coincidences SO(6) = D_3, SO(4), SO(3)) are rejected.
inline AlgebraType group_algebra(const GroupDescriptor& g) {
    const int k = g.size;
    switch (g.family) {
        case GroupFamily::SO:
            if (k % 2 == 1) {
                if (k < 5) throw DomainError("group_algebra: SO(odd) requires k >= 5");
                return AlgebraType(AlgebraFamily::B, (k - 1) / 2);
            }
            if (k < 8) throw DomainError("group_algebra: SO(even) requires k >= 8");
            return AlgebraType(AlgebraFamily::D, k / 2);
        case GroupFamily::SU:
            if (k < 2) throw DomainError("group_algebra: SU requires k >= 2");
            return AlgebraType(AlgebraFamily::A, k - 1);
        case GroupFamily::Sp:
            if (k < 2) throw DomainError("group_algebra: Sp requires k >= 2");
            return AlgebraType(AlgebraFamily::C, k);
    }
    throw DomainError("group_algebra: bad family");
}

// ============================================================================
// Reality classification
// ============================================================================

/// Whether a complex irreducible is the complexification of a real one
/// (Real), or pairs with its conjugate into a real irreducible of doubled
/// dimension (ComplexType / QuaternionicType). UnspecifiedByPaper marks the
/// D_l, l odd, m_(l-1) != m_l corner where the source material pins only
/// "dim or 2 dim"; downstream consumers need just the lower bound.
enum class RealityType { Real, ComplexType, QuaternionicType, UnspecifiedByPaper };

constexpr const char* reality_name(RealityType t) {
    switch (t) {
        case RealityType::Real: return "REAL";
        case RealityType::ComplexType: return "COMPLEX_TYPE";
        case RealityType::QuaternionicType: return "QUATERNIONIC_TYPE";
        case RealityType::UnspecifiedByPaper: return "UNSPECIFIED_BY_PAPER";
    }
    return "?";
}

struct RealIrrepInfo {
    DominantWeight weight;
    RealityType reality;
    BigInt real_dim;
    bool real_dim_is_lower_bound = false;
};

namespace detail {

inline void check_weight_matches_group(const GroupDescriptor& g, const DominantWeight& w) {
    if (w.algebra != group_algebra(g))
        throw DomainError("weight algebra " + w.algebra.name() + " does not match group " + g.name());
}

} // namespace detail

/// Whether the highest weight exponentiates to the (non-simply-connected)
/// group itself: for SO(2l+1), m_l even; for SO(2l), m_(l-1) + m_l even.
/// Weights of SU(k) and Sp(k) always do.
inline bool descends_to_group(const GroupDescriptor& g, const DominantWeight& w) {
    detail::check_weight_matches_group(g, w);
    const int l = w.algebra.rank;
    switch (w.algebra.family) {
        case AlgebraFamily::B: return w.coeffs[l - 1] % 2 == 0;
        case AlgebraFamily::D: return (w.coeffs[l - 2] + w.coeffs[l - 1]) % 2 == 0;
        default: return true;
    }
}

/**
 * Reality type by the combinatorial weight criteria:
 *   SO(2l+1): m_l even (required to descend) -> Real.
 *   SO(2l):   l even -> Real; l odd with m_(l-1) = m_l -> Real, otherwise
 *             UnspecifiedByPaper.
 *   SU(k):    self-conjugate (m_i = m_(k-i)) -> Real, except k = 2 mod 4
 *             with m_(k/2) odd -> QuaternionicType; otherwise ComplexType.
 *   Sp(k):    sum of odd-indexed coefficients even -> Real, odd ->
 *             QuaternionicType.
 * Spin-only weights (failed descent) are hard errors, not reinterpreted.
 */
inline RealityType reality_type(const GroupDescriptor& g, const DominantWeight& w) {
    detail::check_weight_matches_group(g, w);
    const int l = w.algebra.rank;
    switch (w.algebra.family) {
        case AlgebraFamily::B:
            if (w.coeffs[l - 1] % 2 != 0)
                throw DomainError(w.to_string() + " is a spin-only weight, not a representation of " + g.name());
            return RealityType::Real;
        case AlgebraFamily::D: {
            if ((w.coeffs[l - 2] + w.coeffs[l - 1]) % 2 != 0)
                throw DomainError(w.to_string() + " is a spin-only weight, not a representation of " + g.name());
            if (l % 2 == 0) return RealityType::Real;
            return w.coeffs[l - 2] == w.coeffs[l - 1] ? RealityType::Real
                                                      : RealityType::UnspecifiedByPaper;
        }
        case AlgebraFamily::A: {
            const int k = g.size;
            bool self_conjugate = (w == w.conjugate());
            if (!self_conjugate) return RealityType::ComplexType;
            if (k % 4 == 2 && w.coeffs[k / 2 - 1] % 2 != 0) return RealityType::QuaternionicType;
            return RealityType::Real;
        }
        case AlgebraFamily::C: {
            long long odd_sum = 0;
            for (int i = 0; i < l; i += 2) odd_sum += w.coeffs[i]; // m_1, m_3, ...
            return odd_sum % 2 == 0 ? RealityType::Real : RealityType::QuaternionicType;
        }
    }
    throw DomainError("reality_type: bad family");
}

/// Real dimension of the real irreducible attached to w: dim_C for Real,
/// 2 dim_C for Complex/Quaternionic type. The UnspecifiedByPaper case
/// reports dim_C with the lower-bound flag set.
inline RealIrrepInfo real_irrep_info(const GroupDescriptor& g, const DominantWeight& w) {
    RealityType t = reality_type(g, w);
    BigInt dc = dim_generic(w);
    RealIrrepInfo info{w, t, dc, false};
    switch (t) {
        case RealityType::Real:
            break;
        case RealityType::ComplexType:
        case RealityType::QuaternionicType:
            info.real_dim = 2 * dc;
            break;
        case RealityType::UnspecifiedByPaper:
            info.real_dim_is_lower_bound = true;
            break;
    }
    return info;
}

// ============================================================================
// Dimension lower bounds
// ============================================================================

/// Minimum real dimension of an irreducible, non-trivial, non-standard real
/// representation: k(k-1)/2 for SO(k) (k >= 7), k(k-1) for SU(k) (k >= 5),
/// k(2k-1) - 1 for Sp(k) (k >= 3). Achieved by the exterior-square weights.
inline BigInt min_dim_nonstandard(const GroupDescriptor& g) {
    const long long k = g.size;
    switch (g.family) {
        case GroupFamily::SO:
            if (k < 7) throw DomainError("min_dim_nonstandard: SO requires k >= 7");
            return BigInt(k) * (k - 1) / 2;
        case GroupFamily::SU:
            if (k < 5) throw DomainError("min_dim_nonstandard: SU requires k >= 5");
            return BigInt(k) * (k - 1);
        case GroupFamily::Sp:
            if (k < 3) throw DomainError("min_dim_nonstandard: Sp requires k >= 3");
            return BigInt(k) * (2 * k - 1) - 1;
    }
    throw DomainError("min_dim_nonstandard: bad family");
}

/// Stated lower bound for representations not expressible through exterior
/// powers: defined for SO(k) with k = 0 mod 4 (value C(k/2, k/4)/2) and
/// SU(k) with k even (value C(k, k/2)); absent otherwise. No Sp clause:
/// every Sp class is a polynomial in exterior powers.
inline std::optional<BigInt> min_dim_nonexterior(const GroupDescriptor& g) {
    const long long k = g.size;
    switch (g.family) {
        case GroupFamily::SO:
            if (k % 4 != 0) return std::nullopt;
            return exact_div(binomial(k / 2, k / 4), 2);
        case GroupFamily::SU:
            if (k % 2 != 0) return std::nullopt;
            return binomial(k, k / 2);
        case GroupFamily::Sp:
            throw DomainError("min_dim_nonexterior: not defined for the Sp family");
    }
    throw DomainError("min_dim_nonexterior: bad family");
}

// ============================================================================
// Exterior-expressibility certificate (SU)
// ============================================================================

/**
 * Certificate for whether an SU(k) class is expressible as a
 * conjugation-symmetric polynomial in exterior powers. Only one implication
 * is available: failure requires k even with m_(k/2) >= 1. The certificate
 * records which branch decided, so consumers can tell "expressible" from
 * "not known to fail".
 */
struct Form43Certificate {
    bool expressible;
    std::string branch; // "k odd" | "m_(k/2) = 0" | "m_(k/2) >= 1"
    int k = 0;
    int m_half = 0;
};

inline Form43Certificate is_form_43(const GroupDescriptor& g, const DominantWeight& w) {
    if (g.family != GroupFamily::SU) throw DomainError("is_form_43: SU family only");
    detail::check_weight_matches_group(g, w);
    const int k = g.size;
    if (k % 2 != 0) return {true, "k odd", k, 0};
    const int m_half = w.coeffs[k / 2 - 1];
    if (m_half >= 1) return {false, "m_(k/2) >= 1", k, m_half};
    return {true, "m_(k/2) = 0", k, 0};
}

} // namespace sgr
