#include <gtest/gtest.h>

#include <random>

#include "hgf/charsums.hpp"
#include "test_util.hpp"

using namespace hgf;

namespace {

AlgebraPtr algebra(const FieldPtr& base, std::vector<FieldPtr> comps) {
    return std::make_shared<const SemisimpleAlgebra>(base, comps);
}

// Gauss sum summed over every nonzero element, not just powers of the generator.
CycloNum gauss_sum_by_elements(const FieldPtr& F, int64_t e, int64_t a) {
    MultChar chi(F, e);
    CycloNum s = CycloNum::zero(1);
    for (uint32_t c = 1; c < F->q(); ++c) s += chi(F->elem(c)) * add_char(*F, F->elem(c), a);
    return s;
}

} // namespace

TEST(Characters, MultiplicativeBasics) {
    auto F = make_field(3, 2);
    MultChar triv(F, 0), chi(F, 1);
    std::mt19937_64 rng(4);
    for (uint32_t c = 1; c < 9; ++c) EXPECT_EQ(triv(F->elem(c)), CycloNum::one(8));
    EXPECT_EQ(chi(F->generator()), CycloNum::root_of_unity(8, 1));
    for (uint32_t x = 1; x < 9; ++x)
        for (uint32_t y = 1; y < 9; ++y) {
            FqElem a = F->elem(x), b = F->elem(y);
            EXPECT_EQ(MultChar(F, 3)(F->mul(a, b)), MultChar(F, 3)(a) * MultChar(F, 3)(b));
        }
    EXPECT_HGF_ERROR(chi(F->zero()), ErrorKind::ZeroElement);
    EXPECT_EQ(MultChar(F, -1), chi.conj());
    EXPECT_EQ(MultChar(F, 9), chi);
}

TEST(Characters, AdditiveOrthogonality) {
    for (auto [p, f] : {std::pair{3, 2}, {5, 1}, {2, 3}}) {
        auto F = make_field(p, f);
        EXPECT_EQ(add_char(*F, F->zero()), CycloNum::one(p));
        CycloNum all = CycloNum::zero(p), units = CycloNum::zero(p);
        for (uint32_t c = 0; c < F->q(); ++c) {
            all += add_char(*F, F->elem(c));
            if (c) units += add_char(*F, F->elem(c));
        }
        EXPECT_TRUE(all.is_zero());
        EXPECT_EQ(units, CycloNum::from_rational(1, -1));
    }
}

TEST(GaussSum, TrivialAndQuadratic) {
    auto F5 = make_field(5, 1);
    EXPECT_EQ(gauss_sum(F5, 0), CycloNum::from_rational(1, -1));
    CycloNum g = gauss_sum(F5, 2);
    EXPECT_EQ(g * g.conj(), CycloNum::from_rational(1, 5));
    EXPECT_EQ(g * g, CycloNum::from_rational(1, 5));
}

TEST(GaussSum, MatchesElementwiseOracle) {
    for (auto [p, f] : {std::pair{3, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 1}})
        for (int64_t a = 1; a < p; ++a) {
            auto F = make_field(p, f);
            for (int64_t e = 0; e < F->q() - 1; ++e) {
                EXPECT_EQ(gauss_sum(F, e, a), gauss_sum_by_elements(F, e, a)) << p << "^" << f << " e=" << e;
                EXPECT_EQ(gauss_sum(F, e, a), gauss_sum_direct(*F, e, a));
            }
        }
}

TEST(GaussSum, PeriodicAndInverse) {
    auto F = make_field(7, 1);
    for (int64_t m = -6; m < 12; ++m) {
        EXPECT_EQ(gauss_sum(F, m), gauss_sum(F, m + 6));
        EXPECT_EQ(gauss_sum(F, m) * gauss_sum_inverse(MultChar(F, m)), CycloNum::one(1));
        if (mod(m, 6)) {
            EXPECT_EQ(gauss_sum(F, m) * gauss_sum(F, -m), CycloNum::root_of_unity(6, 3 * m) * Rational(7));
        }
    }
}

TEST(GaussSum, NormOfNontrivialIsQ) {
    for (auto [p, f] : {std::pair{3, 3}, {5, 2}, {11, 1}}) {
        auto F = make_field(p, f);
        for (int64_t e = 1; e < F->q() - 1; ++e) {
            CycloNum g = gauss_sum(F, e);
            EXPECT_EQ((g * g.conj()).as_rational(), Rational(F->q()));
        }
    }
}

TEST(Algebra, SplitNormAndTrace) {
    auto F = make_field(5, 1);
    auto A = algebra(F, {F, F, F});
    EXPECT_EQ(A->dimension(), 3);
    EXPECT_EQ(A->size(), 125);
    AlgebraElem x{{F->elem(2), F->elem(3), F->elem(4)}};
    EXPECT_EQ(algebra_norm_to_base(*A, x), F->elem(4));
    EXPECT_EQ(algebra_norm_to_prime(*A, x), 4);
    EXPECT_EQ(algebra_trace(*A, x), 4);
    AlgebraElem ones = algebra_scalar(*A, F->one());
    EXPECT_EQ(algebra_trace(*A, ones), 3);
    EXPECT_EQ(algebra_norm_to_base(*A, ones), F->one());
    for (int d = 1; d <= 4; ++d) {
        auto B = algebra(F, std::vector<FieldPtr>(d, F));
        EXPECT_EQ(algebra_norm_to_base(*B, algebra_scalar(*B, F->from_int(-1))), F->from_int(d % 2 ? -1 : 1));
    }
}

TEST(Algebra, MixedComponents) {
    auto F3 = make_field(3, 1), F9 = make_field(3, 2);
    auto A = algebra(F3, {F3, F9});
    EXPECT_EQ(A->dimension(), 3);
    EXPECT_EQ(A->character_conductor(), 8);
    AlgebraChar chi(A, {1, 3});
    AlgebraElem x{{F3->elem(2), F9->generator()}};
    EXPECT_EQ(algebra_char_eval(chi, x), CycloNum::root_of_unity(2, 1) * CycloNum::root_of_unity(8, 3));
    AlgebraElem bad{{F3->zero(), F9->one()}};
    EXPECT_HGF_ERROR(algebra_char_eval(chi, bad), ErrorKind::NotUnit);
    EXPECT_HGF_ERROR(AlgebraChar(A, {1}), ErrorKind::LengthMismatch);
    EXPECT_HGF_ERROR(algebra(F9, {F3}), ErrorKind::NotSubfield);
}

TEST(Algebra, GaussSumProductMatchesBruteForce) {
    auto F3 = make_field(3, 1), F9 = make_field(3, 2);
    auto A = algebra(F3, {F3, F9});
    for (int64_t e1 = 0; e1 < 2; ++e1)
        for (int64_t e2 = 0; e2 < 8; ++e2)
            for (int64_t a : {1, 2}) {
                AlgebraChar chi(A, {e1, e2});
                CycloNum g = algebra_gauss_sum(chi, a);
                EXPECT_EQ(g, algebra_gauss_sum_bruteforce(chi, a));
                EXPECT_EQ(g * algebra_gauss_sum_inverse(chi, a), CycloNum::one(1));
            }
    EXPECT_EQ(algebra_gauss_sum(AlgebraChar(A, {0, 0})), CycloNum::from_rational(1, 1));
    auto B = algebra(F3, {F3, F3, F3});
    EXPECT_EQ(algebra_gauss_sum(AlgebraChar(B, {0, 0, 0})), CycloNum::from_rational(1, -1));
}

TEST(Algebra, GaussNormExponent) {
    auto F5 = make_field(5, 1), F25 = make_field(5, 2);
    EXPECT_EQ(gauss_norm_exponent(AlgebraChar(algebra(F5, {F5, F5}), {0, 0})), 0);
    EXPECT_EQ(gauss_norm_exponent(AlgebraChar(algebra(F5, {F5, F5, F5}), {1, 2, 3})), 3);
    EXPECT_EQ(gauss_norm_exponent(AlgebraChar(algebra(F5, {F25}), {7})), 2);
    EXPECT_EQ(gauss_norm_exponent(AlgebraChar(algebra(F5, {F25, F5}), {7, 0})), 2);
}

TEST(Algebra, NormPowerTwist) {
    auto F3 = make_field(3, 1), F9 = make_field(3, 2);
    auto A = algebra(F3, {F3, F9});
    AlgebraChar chi(A, {0, 3});
    AlgebraChar tw = chi.times_norm_power(1);
    const auto& base = *A->base();
    for_each_unit(*A, [&](const std::vector<int64_t>& j) {
        AlgebraElem x{{F3->gen_pow(j[0]), F9->gen_pow(j[1])}};
        CycloNum omega_norm = CycloNum::root_of_unity(2, base.dlog(algebra_norm_to_base(*A, x)));
        EXPECT_EQ(algebra_char_eval(tw, x), algebra_char_eval(chi, x) * omega_norm);
    });
}
