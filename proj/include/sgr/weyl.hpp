#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sgr/bigint.hpp"
#include "sgr/errors.hpp"

namespace sgr {

// ============================================================================
// Classical algebras and dominant weights
// ============================================================================

/// The four classical families: A_l <-> su(l+1), B_l <-> so(2l+1),
/// C_l <-> sp(l), D_l <-> so(2l).
enum class AlgebraFamily { A, B, C, D };

constexpr char family_letter(AlgebraFamily f) {
    switch (f) {
        case AlgebraFamily::A: return 'A';
        case AlgebraFamily::B: return 'B';
        case AlgebraFamily::C: return 'C';
        case AlgebraFamily::D: return 'D';
    }
    return '?';
}

struct AlgebraType {
    AlgebraFamily family;
    int rank;

    AlgebraType(AlgebraFamily f, int r) : family(f), rank(r) {
        if (r < 1) throw DomainError("AlgebraType: rank must be >= 1");
        // D_l is treated for l >= 4 only; lower-rank coincidences (D_3 = A_3,
        // D_2 = A_1 x A_1) are rejected rather than aliased.
        if (f == AlgebraFamily::D && r < 4) throw DomainError("AlgebraType: D requires rank >= 4");
    }

    friend bool operator==(const AlgebraType& a, const AlgebraType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const AlgebraType& a, const AlgebraType& b) { return !(a == b); }

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

/// A dominant weight m_1 w_1 + ... + m_l w_l in fundamental-weight
/// coordinates. The zero vector is the trivial representation.
struct DominantWeight {
    AlgebraType algebra;
    std::vector<int> coeffs;

    DominantWeight(AlgebraType alg, std::vector<int> c) : algebra(alg), coeffs(std::move(c)) {
        if (static_cast<int>(coeffs.size()) != algebra.rank)
            throw DomainError("DominantWeight: coefficient count must equal the rank");
        for (int m : coeffs)
            if (m < 0) throw DomainError("DominantWeight: coefficients must be >= 0");
    }

    static DominantWeight zero(AlgebraType alg) {
        return DominantWeight(alg, std::vector<int>(alg.rank, 0));
    }

    /// w_i (1-based), optionally with multiplicity.
    static DominantWeight fundamental(AlgebraType alg, int i, int multiplicity = 1) {
        if (i < 1 || i > alg.rank) throw DomainError("DominantWeight: fundamental index out of range");
        std::vector<int> c(alg.rank, 0);
        c[i - 1] = multiplicity;
        return DominantWeight(alg, std::move(c));
    }

    bool is_zero() const {
        for (int m : coeffs)
            if (m != 0) return false;
        return true;
    }

    /// The conjugation image for A_(k-1): coefficients reversed. Identity for
    /// the other families as used here.
    DominantWeight conjugate() const {
        if (algebra.family != AlgebraFamily::A) return *this;
        std::vector<int> c(coeffs.rbegin(), coeffs.rend());
        return DominantWeight(algebra, std::move(c));
    }

    friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
        return a.algebra == b.algebra && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const DominantWeight& a, const DominantWeight& b) { return !(a == b); }

    std::string to_string() const {
        std::ostringstream os;
        os << algebra.name() << "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) os << ",";
            os << coeffs[i];
        }
        os << ")";
        return os.str();
    }
};

/// Coordinates of a weight vector in the epsilon basis, doubled so that the
/// half-integral spinor coordinates of B_l and D_l stay integral.
struct EpsilonVector {
    std::vector<long long> doubled;
};

// ============================================================================
// Epsilon coordinates
// ============================================================================

namespace detail {

/// Number of epsilon coordinates: rank for B/C/D, rank+1 for A (the last
/// coordinate of delta and of every dominant weight is 0 there).
inline int epsilon_count(const AlgebraType& alg) {
    return alg.family == AlgebraFamily::A ? alg.rank + 1 : alg.rank;
}

} // namespace detail

/// delta = w_1 + ... + w_l in (doubled) epsilon coordinates.
inline EpsilonVector delta_vector(const AlgebraType& alg) {
    const int l = alg.rank;
    EpsilonVector d;
    switch (alg.family) {
        case AlgebraFamily::A: // (k-1, k-2, ..., 1, 0) with k = l+1
            for (int i = 0; i <= l; ++i) d.doubled.push_back(2ll * (l - i));
            break;
        case AlgebraFamily::B: // (l - i + 1/2)
            for (int i = 1; i <= l; ++i) d.doubled.push_back(2ll * (l - i) + 1);
            break;
        case AlgebraFamily::C: // (l - i + 1)
            for (int i = 1; i <= l; ++i) d.doubled.push_back(2ll * (l - i + 1));
            break;
        case AlgebraFamily::D: // (l - i), ending in 0
            for (int i = 1; i <= l; ++i) d.doubled.push_back(2ll * (l - i));
            break;
    }
    return d;
}

/// Epsilon coordinates (doubled) of w + delta.
inline EpsilonVector weight_to_epsilon(const DominantWeight& w) {
    const AlgebraType& alg = w.algebra;
    const int l = alg.rank;
    EpsilonVector g = delta_vector(alg);
    switch (alg.family) {
        case AlgebraFamily::A:
            // w_j = e_1 + ... + e_j, so coordinate i accumulates m_j for j >= i.
            for (int j = 1; j <= l; ++j)
                for (int i = 0; i < j; ++i) g.doubled[i] += 2ll * w.coeffs[j - 1];
            break;
        case AlgebraFamily::B:
            for (int j = 1; j <= l - 1; ++j)
                for (int i = 0; i < j; ++i) g.doubled[i] += 2ll * w.coeffs[j - 1];
            for (int i = 0; i < l; ++i) g.doubled[i] += w.coeffs[l - 1]; // w_l is half the full sum
            break;
        case AlgebraFamily::C:
            for (int j = 1; j <= l; ++j)
                for (int i = 0; i < j; ++i) g.doubled[i] += 2ll * w.coeffs[j - 1];
            break;
        case AlgebraFamily::D:
            for (int j = 1; j <= l - 2; ++j)
                for (int i = 0; i < j; ++i) g.doubled[i] += 2ll * w.coeffs[j - 1];
            // w_(l-1) = (e_1 + ... + e_(l-1) - e_l)/2, w_l = (... + e_l)/2
            for (int i = 0; i < l - 1; ++i) g.doubled[i] += w.coeffs[l - 2] + w.coeffs[l - 1];
            g.doubled[l - 1] += w.coeffs[l - 1] - w.coeffs[l - 2];
            break;
    }
    return g;
}

// ============================================================================
// Positive roots and the dimension formula
// ============================================================================

namespace detail {

struct PositiveRoot {
    enum Kind { Diff, Sum, Single, DoubleSingle };
    Kind kind;
    int i; // 0-based
    int j; // unused for Single / DoubleSingle
};

inline std::vector<PositiveRoot> positive_roots(const AlgebraType& alg) {
    std::vector<PositiveRoot> roots;
    const int n = epsilon_count(alg);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.push_back({PositiveRoot::Diff, i, j});
    switch (alg.family) {
        case AlgebraFamily::A:
            break;
        case AlgebraFamily::B:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) roots.push_back({PositiveRoot::Sum, i, j});
            for (int i = 0; i < n; ++i) roots.push_back({PositiveRoot::Single, i, -1});
            break;
        case AlgebraFamily::C:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) roots.push_back({PositiveRoot::Sum, i, j});
            for (int i = 0; i < n; ++i) roots.push_back({PositiveRoot::DoubleSingle, i, -1});
            break;
        case AlgebraFamily::D:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) roots.push_back({PositiveRoot::Sum, i, j});
            break;
    }
    return roots;
}

inline long long root_pairing(const PositiveRoot& r, const std::vector<long long>& doubled) {
    switch (r.kind) {
        case PositiveRoot::Diff: return doubled[r.i] - doubled[r.j];
        case PositiveRoot::Sum: return doubled[r.i] + doubled[r.j];
        case PositiveRoot::Single: return doubled[r.i];
        case PositiveRoot::DoubleSingle: return 2 * doubled[r.i];
    }
    return 0;
}

} // namespace detail

/**
 * Weyl dimension formula, generic form: the product over positive roots of
 * <beta, w + delta> / <beta, delta>, accumulated as an exact big rational
 * (one numerator, one denominator, a single exact division at the end).
 * Throws std::logic_error if the quotient is not integral, which would
 * signal a root-list bug.
 */
inline BigInt dim_generic(const DominantWeight& w) {
    const auto roots = detail::positive_roots(w.algebra);
    const EpsilonVector g = weight_to_epsilon(w);
    const EpsilonVector d = delta_vector(w.algebra);
    BigInt num = 1, den = 1;
    for (const auto& r : roots) {
        num *= detail::root_pairing(r, g.doubled);
        den *= detail::root_pairing(r, d.doubled);
    }
    return exact_div(num, den);
}

/**
 * Weyl dimension formula, specialized per-family product over the
 * g_i = (w + delta, e_i) coordinates:
 *
 *   A: prod (g_i - g_j)/(j - i) * prod g_i/(k - i)
 *   B: prod (g_i - g_j)(g_i + g_j)/((j-i)(2l+1-i-j)) * prod 2g_i/(2l-2i+1)
 *   C: prod (g_i - g_j)(g_i + g_j)/((j-i)(2k+2-i-j)) * prod g_i/(k-i+1)
 *   D: prod (g_i - g_j)(g_i + g_j)/((j-i)(2l-i-j))
 *
 * Evaluated on the doubled coordinates, so each g factor carries a matching
 * power of 2 in the denominator.
 */
inline BigInt dim_specialized(const DominantWeight& w) {
    const int l = w.algebra.rank;
    const std::vector<long long>& d = weight_to_epsilon(w).doubled;
    BigInt num = 1, den = 1;
    switch (w.algebra.family) {
        case AlgebraFamily::A: {
            const int k = l + 1;
            for (int i = 1; i <= k - 1; ++i)
                for (int j = i + 1; j <= k - 1; ++j) {
                    num *= d[i - 1] - d[j - 1];
                    den *= 2ll * (j - i);
                }
            for (int i = 1; i <= k - 1; ++i) {
                num *= d[i - 1];
                den *= 2ll * (k - i);
            }
            break;
        }
        case AlgebraFamily::B: {
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) {
                    num *= (d[i - 1] - d[j - 1]) * (d[i - 1] + d[j - 1]);
                    den *= 4ll * (j - i) * (2 * l + 1 - i - j);
                }
            for (int i = 1; i <= l; ++i) {
                num *= d[i - 1]; // = 2 g_i
                den *= 2 * l - 2 * i + 1;
            }
            break;
        }
        case AlgebraFamily::C: {
            const int k = l;
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j) {
                    num *= (d[i - 1] - d[j - 1]) * (d[i - 1] + d[j - 1]);
                    den *= 4ll * (j - i) * (2 * k + 2 - i - j);
                }
            for (int i = 1; i <= k; ++i) {
                num *= d[i - 1];
                den *= 2ll * (k - i + 1);
            }
            break;
        }
        case AlgebraFamily::D: {
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) {
                    num *= (d[i - 1] - d[j - 1]) * (d[i - 1] + d[j - 1]);
                    den *= 4ll * (j - i) * (2 * l - i - j);
                }
            break;
        }
    }
    return exact_div(num, den);
}

// ============================================================================
// Tabulated closed forms
// ============================================================================

/// The dimension values with displayed closed forms, used as a third oracle
/// against both evaluators.
enum class ClosedForm {
    ExteriorPower,   // w_j (parameter j)
    TwoOmegaFirst,   // 2 w_1
    TwoOmegaLast,    // 2 w_l            (B, D)
    OmegaLastPair,   // w_(l-1) + w_l    (D)
    AdjointPair,     // w_1 + w_(k-1)    (A)
    SquarePair,      // w_2 + w_(k-2)    (A, k >= 5)
};

/// The dominant weight realizing a tabulated case.
inline DominantWeight closed_form_weight(const AlgebraType& alg, ClosedForm cf, int j = 0) {
    const int l = alg.rank;
    const int k = l + 1; // A-family group size
    switch (cf) {
        case ClosedForm::ExteriorPower:
            return DominantWeight::fundamental(alg, j);
        case ClosedForm::TwoOmegaFirst:
            return DominantWeight::fundamental(alg, 1, 2);
        case ClosedForm::TwoOmegaLast:
            if (alg.family != AlgebraFamily::B && alg.family != AlgebraFamily::D)
                throw DomainError("closed_form_weight: TwoOmegaLast needs B or D");
            return DominantWeight::fundamental(alg, l, 2);
        case ClosedForm::OmegaLastPair: {
            if (alg.family != AlgebraFamily::D)
                throw DomainError("closed_form_weight: OmegaLastPair needs D");
            std::vector<int> c(l, 0);
            c[l - 2] = 1;
            c[l - 1] = 1;
            return DominantWeight(alg, std::move(c));
        }
        case ClosedForm::AdjointPair: {
            if (alg.family != AlgebraFamily::A || k < 3)
                throw DomainError("closed_form_weight: AdjointPair needs A with k >= 3");
            std::vector<int> c(l, 0);
            c[0] = 1;
            c[l - 1] += 1;
            return DominantWeight(alg, std::move(c));
        }
        case ClosedForm::SquarePair: {
            if (alg.family != AlgebraFamily::A || k < 5)
                throw DomainError("closed_form_weight: SquarePair needs A with k >= 5");
            std::vector<int> c(l, 0);
            c[1] = 1;
            c[l - 2] += 1;
            return DominantWeight(alg, std::move(c));
        }
    }
    throw DomainError("closed_form_weight: unknown identifier");
}

/**
 * The tabulated closed-form value. For A with SquarePair the displayed
 * source expression lacks a factor (k - 3): the value k^2 (k+1) / 4 is not
 * an integer at k = 5 and disagrees with the Weyl product, which gives
 * k^2 (k+1)(k-3) / 4 (cross-checked against the decomposition of
 * lambda^2 (x) conj(lambda^2)); the corrected form is used here.
 */
inline BigInt closed_form_dim(const AlgebraType& alg, ClosedForm cf, int j = 0) {
    const long long l = alg.rank;
    const long long k_a = l + 1; // A-family group size
    switch (alg.family) {
        case AlgebraFamily::A:
            switch (cf) {
                case ClosedForm::ExteriorPower:
                    if (j < 1 || j > l) throw DomainError("closed_form_dim: j out of range");
                    return binomial(k_a, j);
                case ClosedForm::TwoOmegaFirst: return exact_div(BigInt(k_a) * (k_a + 1), 2);
                case ClosedForm::AdjointPair: return BigInt(k_a) * k_a - 1;
                case ClosedForm::SquarePair:
                    if (k_a < 5) throw DomainError("closed_form_dim: SquarePair needs k >= 5");
                    return exact_div(BigInt(k_a) * k_a * (k_a + 1) * (k_a - 3), 4);
                default: break;
            }
            break;
        case AlgebraFamily::B:
            switch (cf) {
                case ClosedForm::ExteriorPower:
                    if (j < 1 || j > l - 1) throw DomainError("closed_form_dim: j out of range");
                    return binomial(2 * l + 1, j);
                case ClosedForm::TwoOmegaLast: return binomial(2 * l + 1, l);
                case ClosedForm::TwoOmegaFirst: return BigInt(2 * l + 3) * l;
                default: break;
            }
            break;
        case AlgebraFamily::C:
            switch (cf) {
                case ClosedForm::ExteriorPower:
                    if (j < 1 || j > l) throw DomainError("closed_form_dim: j out of range");
                    return exact_div(binomial(2 * l + 1, j) * (2 * l - 2 * j + 2), 2 * l - j + 2);
                case ClosedForm::TwoOmegaFirst: return BigInt(2 * l + 1) * l;
                default: break;
            }
            break;
        case AlgebraFamily::D:
            switch (cf) {
                case ClosedForm::ExteriorPower:
                    if (j < 1 || j > l - 2) throw DomainError("closed_form_dim: j out of range");
                    return binomial(2 * l, j);
                case ClosedForm::OmegaLastPair: return binomial(2 * l, l - 1);
                case ClosedForm::TwoOmegaLast: return exact_div(binomial(2 * l, l), 2);
                case ClosedForm::TwoOmegaFirst: return BigInt(2 * l - 1) * (l + 1);
                default: break;
            }
            break;
    }
    throw DomainError("closed_form_dim: unknown identifier for this family");
}

} // namespace sgr
