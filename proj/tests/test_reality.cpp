#include <catch2/catch_amalgamated.hpp>

#include "sgr/reality.hpp"

using namespace sgr;

namespace {

DominantWeight weight_of(const GroupDescriptor& g, std::vector<int> coeffs) {
    return DominantWeight(group_algebra(g), std::move(coeffs));
}

} // namespace

TEST_CASE("group dimensions and algebra correspondence") {
    CHECK(group_dim({GroupFamily::SO, 6}) == 15);
    CHECK(group_dim({GroupFamily::SU, 4}) == 15);
    CHECK(group_dim({GroupFamily::Sp, 3}) == 21);

    CHECK(group_algebra({GroupFamily::SO, 7}) == AlgebraType(AlgebraFamily::B, 3));
    CHECK(group_algebra({GroupFamily::SO, 8}) == AlgebraType(AlgebraFamily::D, 4));
    CHECK(group_algebra({GroupFamily::SU, 4}) == AlgebraType(AlgebraFamily::A, 3));
    CHECK(group_algebra({GroupFamily::Sp, 3}) == AlgebraType(AlgebraFamily::C, 3));

    // low-rank coincidences rejected, not aliased
    CHECK_THROWS_AS(group_algebra({GroupFamily::SO, 6}), DomainError);
    CHECK_THROWS_AS(group_algebra({GroupFamily::SO, 4}), DomainError);
    CHECK_THROWS_AS(group_algebra({GroupFamily::SO, 3}), DomainError);
    CHECK_THROWS_AS(group_algebra({GroupFamily::Sp, 1}), DomainError);

    SECTION("adjoint cross-check: dim SO(2l+1) = dim V(w_2) of B_l") {
        for (int l = 3; l <= 6; ++l) {
            GroupDescriptor so{GroupFamily::SO, 2 * l + 1};
            CHECK(group_dim(so) ==
                  dim_generic(DominantWeight::fundamental(AlgebraType(AlgebraFamily::B, l), 2)));
        }
    }
}

TEST_CASE("reality types by family rule") {
    CHECK(reality_type({GroupFamily::SO, 7}, weight_of({GroupFamily::SO, 7}, {0, 1, 0})) ==
          RealityType::Real);
    CHECK(reality_type({GroupFamily::SU, 4}, weight_of({GroupFamily::SU, 4}, {1, 0, 0})) ==
          RealityType::ComplexType);
    CHECK(reality_type({GroupFamily::Sp, 3}, weight_of({GroupFamily::Sp, 3}, {1, 0, 0})) ==
          RealityType::QuaternionicType);

    SECTION("SU self-conjugate cases") {
        // k = 4: self-conjugate, no exception
        CHECK(reality_type({GroupFamily::SU, 4}, weight_of({GroupFamily::SU, 4}, {0, 1, 0})) ==
              RealityType::Real);
        // k = 6 = 2 mod 4 with odd middle coefficient: quaternionic
        CHECK(reality_type({GroupFamily::SU, 6}, weight_of({GroupFamily::SU, 6}, {0, 0, 1, 0, 0})) ==
              RealityType::QuaternionicType);
        CHECK(reality_type({GroupFamily::SU, 6}, weight_of({GroupFamily::SU, 6}, {1, 0, 0, 0, 1})) ==
              RealityType::Real);
        CHECK(reality_type({GroupFamily::SU, 2}, weight_of({GroupFamily::SU, 2}, {1})) ==
              RealityType::QuaternionicType);
        CHECK(reality_type({GroupFamily::SU, 2}, weight_of({GroupFamily::SU, 2}, {2})) ==
              RealityType::Real);
    }

    SECTION("Sp parity of odd-indexed coefficients") {
        CHECK(reality_type({GroupFamily::Sp, 3}, weight_of({GroupFamily::Sp, 3}, {0, 1, 0})) ==
              RealityType::Real);
        CHECK(reality_type({GroupFamily::Sp, 3}, weight_of({GroupFamily::Sp, 3}, {0, 0, 1})) ==
              RealityType::QuaternionicType);
        CHECK(reality_type({GroupFamily::Sp, 3}, weight_of({GroupFamily::Sp, 3}, {1, 0, 1})) ==
              RealityType::Real);
    }

    SECTION("SO(2l) split by parity of l") {
        CHECK(reality_type({GroupFamily::SO, 8}, weight_of({GroupFamily::SO, 8}, {0, 0, 1, 1})) ==
              RealityType::Real);
        CHECK(reality_type({GroupFamily::SO, 10}, weight_of({GroupFamily::SO, 10}, {0, 0, 0, 1, 1})) ==
              RealityType::Real);
        CHECK(reality_type({GroupFamily::SO, 10}, weight_of({GroupFamily::SO, 10}, {0, 0, 0, 0, 2})) ==
              RealityType::UnspecifiedByPaper);
    }

    SECTION("spin-only weights are hard errors") {
        CHECK_THROWS_AS(reality_type({GroupFamily::SO, 7}, weight_of({GroupFamily::SO, 7}, {0, 0, 1})),
                        DomainError);
        CHECK_THROWS_AS(
            reality_type({GroupFamily::SO, 10}, weight_of({GroupFamily::SO, 10}, {0, 0, 0, 1, 0})),
            DomainError);
        CHECK_FALSE(descends_to_group({GroupFamily::SO, 7}, weight_of({GroupFamily::SO, 7}, {0, 0, 1})));
        CHECK(descends_to_group({GroupFamily::SO, 7}, weight_of({GroupFamily::SO, 7}, {0, 0, 2})));
    }

    SECTION("mismatched algebra rejected") {
        DominantWeight w(AlgebraType(AlgebraFamily::B, 3), {1, 0, 0});
        CHECK_THROWS_AS(reality_type({GroupFamily::SU, 4}, w), DomainError);
    }
}

TEST_CASE("real dimensions") {
    RealIrrepInfo su4 = real_irrep_info({GroupFamily::SU, 4}, weight_of({GroupFamily::SU, 4}, {0, 1, 0}));
    CHECK(su4.real_dim == 6);
    CHECK(su4.reality == RealityType::Real);

    RealIrrepInfo su5 = real_irrep_info({GroupFamily::SU, 5}, weight_of({GroupFamily::SU, 5}, {0, 1, 0, 0}));
    CHECK(su5.real_dim == 20);
    CHECK(su5.reality == RealityType::ComplexType);

    RealIrrepInfo sp3 = real_irrep_info({GroupFamily::Sp, 3}, weight_of({GroupFamily::Sp, 3}, {0, 1, 0}));
    CHECK(sp3.real_dim == 14);
    CHECK(sp3.reality == RealityType::Real);

    SECTION("doubled dimension is even; lower-bound flag only when unspecified") {
        RealIrrepInfo q = real_irrep_info({GroupFamily::Sp, 3}, weight_of({GroupFamily::Sp, 3}, {1, 0, 0}));
        CHECK(q.real_dim == 12);
        CHECK(q.real_dim % 2 == 0);
        CHECK_FALSE(q.real_dim_is_lower_bound);

        RealIrrepInfo u =
            real_irrep_info({GroupFamily::SO, 10}, weight_of({GroupFamily::SO, 10}, {0, 0, 0, 0, 2}));
        CHECK(u.real_dim_is_lower_bound);
        CHECK(u.real_dim == dim_generic(u.weight));
    }

    SECTION("conjugate weights get the same reality type and real dimension") {
        GroupDescriptor su6{GroupFamily::SU, 6};
        for (std::vector<int> c : {std::vector<int>{1, 0, 2, 0, 0}, {0, 1, 0, 0, 1}, {2, 0, 0, 0, 1}}) {
            DominantWeight w = weight_of(su6, c);
            DominantWeight wc = w.conjugate();
            CHECK(reality_type(su6, w) == reality_type(su6, wc));
            CHECK(real_irrep_info(su6, w).real_dim == real_irrep_info(su6, wc).real_dim);
        }
    }
}

TEST_CASE("minimum dimension bounds") {
    CHECK(min_dim_nonstandard({GroupFamily::SO, 7}) == 21);
    CHECK(min_dim_nonstandard({GroupFamily::SU, 5}) == 20);
    CHECK(min_dim_nonstandard({GroupFamily::Sp, 3}) == 14);
    CHECK_THROWS_AS(min_dim_nonstandard({GroupFamily::SO, 6}), DomainError);
    CHECK_THROWS_AS(min_dim_nonstandard({GroupFamily::SU, 4}), DomainError);
    CHECK_THROWS_AS(min_dim_nonstandard({GroupFamily::Sp, 2}), DomainError);

    CHECK(min_dim_nonexterior({GroupFamily::SO, 8}) == BigInt(3));
    CHECK(min_dim_nonexterior({GroupFamily::SU, 8}) == BigInt(70));
    CHECK_FALSE(min_dim_nonexterior({GroupFamily::SO, 6}).has_value());
    CHECK_FALSE(min_dim_nonexterior({GroupFamily::SU, 5}).has_value());
    CHECK_THROWS_AS(min_dim_nonexterior({GroupFamily::Sp, 3}), DomainError);
}

TEST_CASE("exterior-expressibility certificates") {
    GroupDescriptor su4{GroupFamily::SU, 4};
    Form43Certificate fail4 = is_form_43(su4, weight_of(su4, {0, 1, 0}));
    CHECK_FALSE(fail4.expressible);
    CHECK(fail4.k == 4);
    CHECK(fail4.m_half == 1);

    Form43Certificate ok4 = is_form_43(su4, weight_of(su4, {1, 0, 0}));
    CHECK(ok4.expressible);
    CHECK(ok4.branch == "m_(k/2) = 0");

    GroupDescriptor su8{GroupFamily::SU, 8};
    CHECK_FALSE(is_form_43(su8, weight_of(su8, {0, 0, 0, 1, 0, 0, 0})).expressible);

    GroupDescriptor su5{GroupFamily::SU, 5};
    Form43Certificate odd = is_form_43(su5, weight_of(su5, {0, 1, 1, 0}));
    CHECK(odd.expressible);
    CHECK(odd.branch == "k odd");

    CHECK_THROWS_AS(is_form_43({GroupFamily::Sp, 3}, DominantWeight::zero(AlgebraType(AlgebraFamily::C, 3))),
                    DomainError);
}
