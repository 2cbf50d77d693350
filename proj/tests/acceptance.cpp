// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "sgr/charclass.hpp"
#include "sgr/classify.hpp"
#include "sgr/enumerate.hpp"
#include "sgr/kocheck.hpp"
#include "sgr/verify.hpp"

using namespace sgr;

namespace {

int g_failures = 0;

void criterion(int num, const char* name, bool ok) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", num, name);
    if (!ok) ++g_failures;
}

// --------------------------------------------------------------------------
// 1. James / Hurwitz-Radon oracle equivalence, r <= 500
// --------------------------------------------------------------------------

std::uint32_t oracle_nu(std::uint64_t p, std::uint64_t n) {
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

bool check_james_oracles() {
    for (std::uint64_t r = 1; r <= 500; ++r) {
        // a(r): literal residue count
        std::uint32_t count = 0;
        for (std::uint64_t i = 1; i + 1 <= r; ++i) {
            std::uint64_t m = i % 8;
            if (m == 0 || m == 1 || m == 2 || m == 4) ++count;
        }
        if (hurwitz_radon_exponent(r) != count) return false;

        // b(r): literal max formula, every prime
        FactoredInteger b = james_b(r);
        for (std::uint64_t p = 2; p <= r + 1; ++p) {
            if (!is_prime(p)) continue;
            std::uint64_t best = 0;
            if (r >= p)
                for (std::uint64_t i = 1; i <= (r - 1) / (p - 1); ++i)
                    best = std::max(best, i + oracle_nu(p, i));
            if (b.exponent_of(p) != best) return false;
        }

        // c(r): literal 2-adic max plus the odd-prime cross-path rule
        FactoredInteger c = james_c(r);
        std::uint64_t best2 = 2 * r - 1;
        for (std::uint64_t i = 1; i + 1 <= r; ++i) best2 = std::max(best2, 2 * i + oracle_nu(2, i));
        if (c.exponent_of(2) != best2) return false;
        FactoredInteger b2r = james_b(2 * r);
        for (std::uint64_t p = 3; p <= 2 * r + 1; p += 2) {
            if (!is_prime(p)) continue;
            if (c.exponent_of(p) != b2r.exponent_of(p)) return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 2. Weyl double oracle + displayed closed forms
// --------------------------------------------------------------------------

bool sweep_vectors(const AlgebraType& alg, int max_entry) {
    std::vector<int> v(alg.rank, 0);
    while (true) {
        DominantWeight w(alg, v);
        if (dim_generic(w) != dim_specialized(w)) return false;
        int i = alg.rank - 1;
        while (i >= 0 && v[i] == max_entry) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return true;
}

bool check_weyl_double_oracle() {
    for (auto fam : {AlgebraFamily::A, AlgebraFamily::B, AlgebraFamily::C, AlgebraFamily::D}) {
        int lo = fam == AlgebraFamily::D ? 4 : 1;
        for (int rank = lo; rank <= 8; ++rank)
            if (!sweep_vectors(AlgebraType(fam, rank), 3)) return false;
    }

    // Displayed closed forms, ranks 2..8, against both evaluators.
    auto match = [](const AlgebraType& alg, ClosedForm cf, int j, const BigInt& expect) {
        DominantWeight w = closed_form_weight(alg, cf, j);
        return closed_form_dim(alg, cf, j) == expect && dim_generic(w) == expect &&
               dim_specialized(w) == expect;
    };
    for (int l = 2; l <= 8; ++l) {
        AlgebraType b(AlgebraFamily::B, l);
        for (int j = 1; j <= l - 1; ++j)
            if (!match(b, ClosedForm::ExteriorPower, j, binomial(2 * l + 1, j))) return false;
        if (!match(b, ClosedForm::TwoOmegaLast, 0, binomial(2 * l + 1, l))) return false;
        if (!match(b, ClosedForm::TwoOmegaFirst, 0, BigInt(2 * l + 3) * l)) return false;

        AlgebraType c(AlgebraFamily::C, l);
        for (int j = 1; j <= l; ++j) {
            BigInt expect = binomial(2 * l + 1, j) * (2 * l - 2 * j + 2) / (2 * l - j + 2);
            if (!match(c, ClosedForm::ExteriorPower, j, expect)) return false;
        }
        if (!match(c, ClosedForm::TwoOmegaFirst, 0, BigInt(2 * l + 1) * l)) return false;

        AlgebraType a(AlgebraFamily::A, l);
        const long long k = l + 1;
        for (int j = 1; j <= l; ++j)
            if (!match(a, ClosedForm::ExteriorPower, j, binomial(k, j))) return false;
        if (!match(a, ClosedForm::TwoOmegaFirst, 0, BigInt(k) * (k + 1) / 2)) return false;
        if (!match(a, ClosedForm::AdjointPair, 0, BigInt(k) * k - 1)) return false;
        // displayed as k^2(k+1)/4, which is not an integer at k = 5; the Weyl
        // product fixes the missing (k-3) factor
        if (k >= 5 && !match(a, ClosedForm::SquarePair, 0, BigInt(k) * k * (k + 1) * (k - 3) / 4))
            return false;
    }
    for (int l = 4; l <= 8; ++l) {
        AlgebraType d(AlgebraFamily::D, l);
        for (int j = 1; j <= l - 2; ++j)
            if (!match(d, ClosedForm::ExteriorPower, j, binomial(2 * l, j))) return false;
        if (!match(d, ClosedForm::OmegaLastPair, 0, binomial(2 * l, l - 1))) return false;
        if (!match(d, ClosedForm::TwoOmegaLast, 0, binomial(2 * l, l) / 2)) return false;
        if (!match(d, ClosedForm::TwoOmegaFirst, 0, BigInt(2 * l - 1) * (l + 1))) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// 3. Nonstandard minima by exhaustive enumeration
// --------------------------------------------------------------------------

bool check_nonstandard_minima() {
    struct Expect {
        GroupFamily family;
        int k;
        long long minimum;
    };
    const std::vector<Expect> table = {
        {GroupFamily::SO, 7, 21}, {GroupFamily::SO, 8, 28}, {GroupFamily::SO, 9, 36},
        {GroupFamily::SU, 5, 20}, {GroupFamily::SU, 6, 30},
        {GroupFamily::Sp, 3, 14}, {GroupFamily::Sp, 4, 27},
    };
    for (const auto& e : table) {
        GroupDescriptor g{e.family, e.k};
        if (min_dim_nonstandard(g) != e.minimum) return false;
        MinNonstandardReport rep = verify_min_nonstandard(g);
        if (!rep.passed || rep.bound != e.minimum) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// 4. Spot table of the decision procedure
// --------------------------------------------------------------------------

bool has_kinds(const ReductionVerdict& v, HomKind first, HomKind second) {
    return v.reducible && v.homs.size() == 2 && v.homs[0].kind == first && v.homs[1].kind == second;
}

bool check_spot_table() {
    if (min_source_rank({GroupFamily::SO, 15}, GroupFamily::SO) != 7) return false;
    if (min_source_rank({GroupFamily::SU, 11}, GroupFamily::SU) != 10) return false;
    if (min_source_rank({GroupFamily::Sp, 11}, GroupFamily::Sp) != 11) return false;

    ReductionVerdict su4 = classify({{GroupFamily::SO, 15}, {GroupFamily::SU, 4}});
    if (!has_kinds(su4, HomKind::StandardInclusion, HomKind::Su4SplitSo15)) return false;
    ReductionVerdict sp3 = classify({{GroupFamily::SO, 15}, {GroupFamily::Sp, 3}});
    if (!has_kinds(sp3, HomKind::StandardInclusion, HomKind::Sp3ExteriorSquareSo15)) return false;

    // even n with SO / SU target: always NO, for every admissible (source, k)
    for (int n = 10; n <= 30; n += 2) {
        for (GroupFamily tf : {GroupFamily::SO, GroupFamily::SU}) {
            GroupDescriptor target{tf, n};
            for (GroupFamily sf : {GroupFamily::SO, GroupFamily::SU, GroupFamily::Sp}) {
                if (!reduction_case(tf, sf)) continue;
                int floor_k = sf == GroupFamily::SO ? 4 : 2;
                for (int k = floor_k;; ++k) {
                    GroupDescriptor source{sf, k};
                    if (group_dim(source) >= group_dim(target)) break;
                    if (classify({target, source}).reducible) return false;
                }
            }
        }
    }

    // family pairs outside the case table: NO
    const std::vector<ReductionQuery> cross = {
        {{GroupFamily::SU, 9}, {GroupFamily::SO, 4}},
        {{GroupFamily::Sp, 9}, {GroupFamily::SO, 4}},
        {{GroupFamily::Sp, 9}, {GroupFamily::SU, 3}},
    };
    for (const auto& q : cross) {
        ReductionVerdict v = classify(q);
        if (v.reducible || v.reduction_case) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// 5. Fixed-generator equivalence sweep + valuation identity
// --------------------------------------------------------------------------

bool check_equiv_sweep() {
    for (long long n = 7; n <= 399; n += 8) {
        for (long long k = 1; k <= n; ++k) {
            bool fixed = fixed_generator_exists(n, k);
            bool divisible = hurwitz_radon_a(n + 1 - k).divides(n + 1);
            bool gap = k >= n - static_cast<long long>(j_real(n)) + 1;
            if (fixed != divisible || fixed != gap) return false;
        }
    }
    for (std::uint64_t s = 2; s <= 64; s += 2) {
        BigInt direct = ipow(3, s) - 1;
        if (nu2_power3_minus1(s) != nu_p(2, direct)) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// 6. Truncated-ring identity
// --------------------------------------------------------------------------

bool check_ring_identity() {
    try {
        TruncatedPoly w = verify_lemma_sp3();
        TruncatedPoly x = TruncatedPoly::monomial(0, 1, 0);
        TruncatedPoly ty = TruncatedPoly::monomial(1, 0, 1);
        TruncatedPoly expected =
            TruncatedPoly::one() + (x + x * x + x * x * x) * ty;
        return w == expected && w.graded_component(16) == x * x * x * ty &&
               !w.graded_component(16).is_zero();
    } catch (const std::exception&) {
        return false;
    }
}

// --------------------------------------------------------------------------
// 7. Pruning soundness: pruned == naive box scan, rank <= 4, bound 50
// --------------------------------------------------------------------------

bool check_pruning_soundness() {
    const long long bound = 50;
    for (auto fam : {AlgebraFamily::A, AlgebraFamily::B, AlgebraFamily::C, AlgebraFamily::D}) {
        int lo = fam == AlgebraFamily::D ? 4 : 1;
        for (int rank = lo; rank <= 4; ++rank) {
            AlgebraType alg(fam, rank);
            const auto roots = detail::positive_roots(alg);
            const auto delta = delta_vector(alg).doubled;
            double log_den = 0.0;
            for (const auto& r : roots) log_den += std::log(double(detail::root_pairing(r, delta)));

            // Box scan: entries <= 50. Any entry above the bound forces the
            // dimension above the bound, so the box is exhaustive. A floating
            // prefilter with a wide margin avoids exact evaluation off the
            // candidate set; candidates are confirmed exactly.
            std::set<std::vector<int>> naive;
            std::vector<int> v(rank, 0);
            while (true) {
                DominantWeight w(alg, v);
                const auto g = weight_to_epsilon(w).doubled;
                double log_num = 0.0;
                for (const auto& r : roots) log_num += std::log(double(detail::root_pairing(r, g)));
                if (log_num - log_den < std::log(60.0)) {
                    if (dim_generic(w) <= bound) naive.insert(v);
                }
                int i = rank - 1;
                while (i >= 0 && v[i] == bound) v[i--] = 0;
                if (i < 0) break;
                ++v[i];
            }

            EnumerationRequest req{alg, bound, std::nullopt};
            std::set<std::vector<int>> pruned;
            for (const auto& row : enumerate_weights(req)) pruned.insert(row.weight.coeffs);
            if (pruned != naive) return false;
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 8. Decomposability of every admissible homomorphism
// --------------------------------------------------------------------------

bool check_no_irreducible_reduction() {
    long long yes_count = 0;
    for (GroupFamily tf : {GroupFamily::SO, GroupFamily::SU, GroupFamily::Sp}) {
        for (int n = 2; n <= 99; ++n) {
            GroupDescriptor target{tf, n};
            if (sphere_dim(target) < 8) continue;
            for (GroupFamily sf : {GroupFamily::SO, GroupFamily::SU, GroupFamily::Sp}) {
                if (!reduction_case(tf, sf)) continue;
                int floor_k = sf == GroupFamily::SO ? 4 : 2;
                for (int k = floor_k;; ++k) {
                    GroupDescriptor source{sf, k};
                    if (group_dim(source) >= group_dim(target)) break;
                    ReductionQuery q{target, source};
                    ReductionVerdict v = classify(q);
                    if (irreducible_reduction_exists(q)) return false;
                    if (!v.reducible) continue;
                    ++yes_count;
                    for (const auto& hom : v.homs) {
                        if (hom.decomposition.size() < 2) return false;
                        if (hom.total_dim() != n) return false;
                    }
                }
            }
        }
    }
    return yes_count > 0;
}

} // namespace

int main() {
    criterion(1, "a(r), b(r), c(r) match the defining count/max formulas, r <= 500", check_james_oracles());
    criterion(2, "dim_generic == dim_specialized (ranks <= 8, coeffs <= 3) and all closed forms",
              check_weyl_double_oracle());
    criterion(3, "nonstandard minima 21/28/36/20/30/14/27 reproduced by enumeration",
              check_nonstandard_minima());
    criterion(4, "decision-procedure spot table (minimal k, both exceptional homs, even n, cross-family)",
              check_spot_table());
    criterion(5, "fixed-generator sweep (odd n <= 399) and the nu_2(3^s - 1) identity",
              check_equiv_sweep());
    criterion(6, "(1+x+ty)^3 (1+x)^-3 (1+ty)^-1 = 1 + (x+x^2+x^3)ty with x^3ty in degree 16",
              check_ring_identity());
    criterion(7, "pruned enumeration == naive box scan (rank <= 4, bound 50)", check_pruning_soundness());
    criterion(8, "every admissible homomorphism decomposes (>= 2 summands, dims total n), n <= 99",
              check_no_irreducible_reduction());

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
