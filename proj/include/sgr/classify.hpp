#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgr/bigint.hpp"
#include "sgr/errors.hpp"
#include "sgr/factored.hpp"
#include "sgr/james.hpp"
#include "sgr/reality.hpp"

namespace sgr {

// ============================================================================
// Reduction queries and verdicts
// ============================================================================

/// Query: can the structure group of the sphere bundle over the target
/// family be reduced to the source group via some homomorphism?
struct ReductionQuery {
    GroupDescriptor target; // G_n, one of SO(n) / SU(n) / Sp(n)
    GroupDescriptor source; // G,   one of SO(k) / SU(k) / Sp(k)
};

/// Dimension of the sphere G_(n+1)/G_n: n, 2n+1, 4n+3.
inline long long sphere_dim(const GroupDescriptor& target) {
    const long long n = target.size;
    switch (target.family) {
        case GroupFamily::SO: return n;
        case GroupFamily::SU: return 2 * n + 1;
        case GroupFamily::Sp: return 4 * n + 3;
    }
    throw DomainError("sphere_dim: bad family");
}

/// The six family pairs with a divisibility criterion.
enum class ReductionCase { A, B, C, D, E, F };

constexpr char case_letter(ReductionCase c) {
    switch (c) {
        case ReductionCase::A: return 'A';
        case ReductionCase::B: return 'B';
        case ReductionCase::C: return 'C';
        case ReductionCase::D: return 'D';
        case ReductionCase::E: return 'E';
        case ReductionCase::F: return 'F';
    }
    return '?';
}

/// Case for a (target, source) family pair; nullopt for the pairs that
/// cannot occur (SO into SU/Sp, SU into Sp: the source would need more
/// coordinates than the target sphere allows).
inline std::optional<ReductionCase> reduction_case(GroupFamily target, GroupFamily source) {
    switch (target) {
        case GroupFamily::SO:
            switch (source) {
                case GroupFamily::SO: return ReductionCase::A;
                case GroupFamily::SU: return ReductionCase::B;
                case GroupFamily::Sp: return ReductionCase::C;
            }
            break;
        case GroupFamily::SU:
            switch (source) {
                case GroupFamily::SU: return ReductionCase::D;
                case GroupFamily::Sp: return ReductionCase::E;
                case GroupFamily::SO: return std::nullopt;
            }
            break;
        case GroupFamily::Sp:
            switch (source) {
                case GroupFamily::Sp: return ReductionCase::F;
                default: return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

/// n = d*m - 1 with d the ratio between target coordinates and source slots.
constexpr int case_d(ReductionCase c) {
    switch (c) {
        case ReductionCase::A: return 1;
        case ReductionCase::B: return 2;
        case ReductionCase::C: return 4;
        case ReductionCase::D: return 1;
        case ReductionCase::E: return 2;
        case ReductionCase::F: return 1;
    }
    return 0;
}

// ============================================================================
// Homomorphism descriptors
// ============================================================================

enum class HomKind { StandardInclusion, Su4SplitSo15, Sp3ExteriorSquareSo15 };

constexpr const char* hom_kind_name(HomKind k) {
    switch (k) {
        case HomKind::StandardInclusion: return "STANDARD_INCLUSION";
        case HomKind::Su4SplitSo15: return "SU4_SPLIT_SO15";
        case HomKind::Sp3ExteriorSquareSo15: return "SP3_EXTERIOR_SQUARE_SO15";
    }
    return "?";
}

struct Summand {
    std::string label;
    long long dim; // over the target's base field
};

/// An admissible homomorphism with its decomposition into irreducible
/// summands. Summand dimensions total the target size; at least two
/// summands in every admissible case (none is irreducible).
struct HomDescriptor {
    HomKind kind;
    std::vector<Summand> decomposition;

    long long total_dim() const {
        long long s = 0;
        for (const auto& part : decomposition) s += part.dim;
        return s;
    }
};

struct DivisibilityTrace {
    long long m = 0;
    int d = 0;
    FactoredInteger modulus;
    BigInt remainder;
};

struct ReductionVerdict {
    bool reducible = false;
    std::optional<ReductionCase> reduction_case;
    std::vector<HomDescriptor> homs;
    std::optional<DivisibilityTrace> trace;
    std::string reason; // human-readable explanation for NO verdicts
};

// ============================================================================
// Hypothesis validation
// ============================================================================

/// Checks the standing hypotheses; throws DomainError naming the violated
/// one. Queries outside the hypotheses get errors, never verdicts: nothing
/// is proved there.
inline void validate_query(const ReductionQuery& q) {
    if (sphere_dim(q.target) < 8)
        throw DomainError("hypothesis violated: sphere dimension " + std::to_string(sphere_dim(q.target)) +
                          " < 8 for target " + q.target.name());
    const int k = q.source.size;
    if (q.source.family == GroupFamily::SO && k < 4)
        throw DomainError("hypothesis violated: source SO(k) requires k >= 4, got k = " + std::to_string(k));
    if (q.source.family != GroupFamily::SO && k < 2)
        throw DomainError("hypothesis violated: source " + std::string(group_family_name(q.source.family)) +
                          "(k) requires k >= 2, got k = " + std::to_string(k));
    if (group_dim(q.source) >= group_dim(q.target))
        throw DomainError("hypothesis violated: dim " + q.source.name() + " >= dim " + q.target.name());
}

// ============================================================================
// Decomposition tables
// ============================================================================

namespace detail {

inline HomDescriptor standard_inclusion(const ReductionQuery& q) {
    const long long n = q.target.size;
    const long long k = q.source.size;
    HomDescriptor hom{HomKind::StandardInclusion, {}};
    long long standard_dim = k;
    std::string label = "standard";
    if (q.target.family == GroupFamily::SO && q.source.family == GroupFamily::SU) {
        standard_dim = 2 * k;
        label = "standard_real";
    } else if (q.target.family == GroupFamily::SO && q.source.family == GroupFamily::Sp) {
        standard_dim = 4 * k;
        label = "standard_real";
    } else if (q.target.family == GroupFamily::SU && q.source.family == GroupFamily::Sp) {
        standard_dim = 2 * k;
        label = "standard_complex";
    }
    hom.decomposition.push_back({label, standard_dim});
    for (long long i = standard_dim; i < n; ++i) hom.decomposition.push_back({"trivial", 1});
    return hom;
}

inline HomDescriptor su4_split_so15() {
    return HomDescriptor{HomKind::Su4SplitSo15,
                         {{"standard_real", 8}, {"exterior_square", 6}, {"trivial", 1}}};
}

inline HomDescriptor sp3_exterior_square_so15() {
    return HomDescriptor{HomKind::Sp3ExteriorSquareSo15,
                         {{"exterior_square_primitive", 14}, {"trivial", 1}}};
}

inline BigInt modulus_remainder(const FactoredInteger& modulus, long long m) {
    // Cheap path: a modulus with more than 19 decimal digits exceeds any
    // 64-bit m, so m itself is the remainder.
    if (modulus.log10() > 19.5) return BigInt(m);
    return BigInt(m) % modulus.value();
}

} // namespace detail

// ============================================================================
// The decision procedure
// ============================================================================

/**
 * Total decision procedure over (target family, n, source family, k).
 *
 * Verdict rules, for queries satisfying the hypotheses:
 *   - family pairs without a case: NO.
 *   - even n with SO/SU target: NO (no proper reduction exists there).
 *   - n not of the residue class d*m - 1 for the case: NO.
 *   - k too large for the standard inclusion to fit (m - k < 1): NO.
 *   - otherwise the case's divisibility test on m decides, with the modulus
 *     drawn from a(m-k) / b(m-k) / c(m-k) or their 2-parts:
 *       A: m = 0 mod a(m-k)            D: m = 0 mod b(m-k)
 *       B: m = 0 mod 2^nu_2(b(m-k))    E: m = 0 mod c(m-k)
 *       C: m = 0 mod 2^nu_2(c(m-k))    F: m = 0 mod c(m-k)
 *   - YES verdicts list the standard inclusion, plus the split SU(4) hom at
 *     (SO, 15, SU(4)) and the exterior square at (SO, 15, Sp(3)).
 */
inline ReductionVerdict classify(const ReductionQuery& q) {
    validate_query(q);
    ReductionVerdict verdict;

    auto rc = reduction_case(q.target.family, q.source.family);
    if (!rc) {
        verdict.reason = "no homomorphism case for target family " +
                         std::string(group_family_name(q.target.family)) + " with source family " +
                         std::string(group_family_name(q.source.family)) + " (the source cannot fit)";
        return verdict;
    }
    verdict.reduction_case = rc;

    const long long n = q.target.size;
    const long long k = q.source.size;

    if (q.target.family != GroupFamily::Sp && n % 2 == 0) {
        verdict.reason = "no proper reduction for even n";
        return verdict;
    }

    const int d = case_d(*rc);
    if ((n + 1) % d != 0) {
        verdict.reason = "n is not of the form " + std::to_string(d) + "m - 1";
        return verdict;
    }
    const long long m = (n + 1) / d;

    if (m - k < 1) {
        verdict.reason = "no standard inclusion fits: k >= m";
        return verdict;
    }
    const std::uint64_t r = static_cast<std::uint64_t>(m - k);

    FactoredInteger modulus;
    switch (*rc) {
        case ReductionCase::A: modulus = hurwitz_radon_a(r); break;
        case ReductionCase::B: modulus = FactoredInteger::prime_power(2, james_b_exponent(2, r)); break;
        case ReductionCase::C: modulus = FactoredInteger::prime_power(2, james_c_exponent2(r)); break;
        case ReductionCase::D: modulus = james_b(r); break;
        case ReductionCase::E: modulus = james_c(r); break;
        case ReductionCase::F: modulus = james_c(r); break;
    }

    DivisibilityTrace trace{m, d, modulus, detail::modulus_remainder(modulus, m)};
    verdict.trace = trace;

    if (!modulus.divides(static_cast<std::uint64_t>(m))) {
        verdict.reason = "divisibility fails: m = " + std::to_string(m) + " is not 0 mod " +
                         modulus.factored_string();
        return verdict;
    }

    verdict.reducible = true;
    verdict.homs.push_back(detail::standard_inclusion(q));
    if (q.target.family == GroupFamily::SO && n == 15) {
        if (q.source.family == GroupFamily::SU && k == 4)
            verdict.homs.push_back(detail::su4_split_so15());
        if (q.source.family == GroupFamily::Sp && k == 3)
            verdict.homs.push_back(detail::sp3_exterior_square_so15());
    }
    for (const auto& hom : verdict.homs) {
        if (hom.total_dim() != n || hom.decomposition.size() < 2)
            throw std::logic_error("classify: descriptor invariant violated for " +
                                   std::string(hom_kind_name(hom.kind)));
    }
    return verdict;
}

/**
 * Least k for which the reduction exists. Scans k upward from the source
 * family floor; for a source of the target's own family the scan ends at
 * the trivial k = n (identity), which always reduces. Cross-family scans
 * that exhaust all k with dim G < dim G_n return nullopt.
 */
inline std::optional<int> min_source_rank(const GroupDescriptor& target, GroupFamily source_family) {
    if (sphere_dim(target) < 8)
        throw DomainError("hypothesis violated: sphere dimension " + std::to_string(sphere_dim(target)) +
                          " < 8 for target " + target.name());
    const int floor_k = source_family == GroupFamily::SO ? 4 : 2;
    for (int k = floor_k;; ++k) {
        if (source_family == target.family && k == target.size) return k; // trivial reduction
        GroupDescriptor source(source_family, k);
        if (group_dim(source) >= group_dim(target)) return std::nullopt;
        if (classify({target, source}).reducible) return k;
    }
}

/// Whether the reduction can be achieved by an irreducible homomorphism:
/// always false under the hypotheses. Checked, not assumed: every descriptor
/// returned by classify must decompose into at least two summands whose
/// dimensions total the target size.
inline bool irreducible_reduction_exists(const ReductionQuery& q) {
    ReductionVerdict verdict = classify(q);
    for (const auto& hom : verdict.homs) {
        if (hom.decomposition.size() < 2)
            throw std::logic_error("irreducible_reduction_exists: descriptor with a single summand");
        if (hom.total_dim() != q.target.size)
            throw std::logic_error("irreducible_reduction_exists: summand dimensions do not total the target size");
    }
    return false;
}

} // namespace sgr
