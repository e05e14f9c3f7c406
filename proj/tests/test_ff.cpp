#include <gtest/gtest.h>

#include <random>

#include "hgf/ff.hpp"
#include "test_util.hpp"

using namespace hgf;

TEST(FiniteField, PrimeFieldGenerator) {
    auto F = make_field(5, 1);
    EXPECT_EQ(F->q(), 5);
    EXPECT_EQ(F->generator().code, 2u);
    EXPECT_EQ(make_field(7, 1)->generator().code, 3u);
    EXPECT_EQ(make_field(13, 1)->generator().code, 2u);
}

TEST(FiniteField, QuadraticOverF2) {
    auto F = make_field(2, 2);
    EXPECT_EQ(F->modulus(), (std::vector<int64_t>{1, 1, 1}));
    EXPECT_EQ(F->q(), 4);
}

TEST(FiniteField, Errors) {
    EXPECT_HGF_ERROR(make_field(4, 1), ErrorKind::NotPrime);
    EXPECT_HGF_ERROR(make_field(1, 1), ErrorKind::NotPrime);
    EXPECT_HGF_ERROR(make_field(3, 20), ErrorKind::FieldTooLarge);
    auto F = make_field(7, 1);
    EXPECT_HGF_ERROR(F->dlog(F->zero()), ErrorKind::ZeroElement);
    EXPECT_HGF_ERROR(F->elem(7), ErrorKind::NotSubfield);
}

TEST(FiniteField, CachedAndDeterministic) {
    EXPECT_EQ(make_field(3, 4).get(), make_field(3, 4).get());
    EXPECT_NE(make_field(3, 4)->generator().code, make_field(3, 4, {.generator_rank = 1})->generator().code);
}

TEST(FiniteField, DlogIsHomomorphism) {
    std::mt19937_64 rng(1);
    for (auto [p, f] : {std::pair{3, 3}, {5, 2}, {2, 5}, {7, 2}}) {
        auto F = make_field(p, f);
        const int64_t q = F->q();
        EXPECT_EQ(F->dlog(F->one()), 0);
        EXPECT_EQ(F->dlog(F->generator()), 1);
        std::uniform_int_distribution<uint32_t> pick(1, static_cast<uint32_t>(q - 1));
        for (int i = 0; i < 50; ++i) {
            FqElem x = F->elem(pick(rng)), y = F->elem(pick(rng));
            EXPECT_EQ(F->dlog(F->mul(x, y)), mod(F->dlog(x) + F->dlog(y), q - 1));
            EXPECT_EQ(F->mul(x, F->inv(x)), F->one());
            EXPECT_EQ(F->gen_pow(F->dlog(x)), x);
        }
    }
}

TEST(FiniteField, TraceAndNorm) {
    std::mt19937_64 rng(2);
    for (auto [p, f] : {std::pair{3, 2}, {5, 3}, {7, 2}, {2, 4}}) {
        auto F = make_field(p, f);
        EXPECT_EQ(F->trace_to_prime(F->one()), mod(f, p));
        const int64_t n = F->norm_to_prime(F->generator());
        EXPECT_EQ(mult_order(n, p), p - 1);
        std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(F->q() - 1));
        for (int i = 0; i < 50; ++i) {
            FqElem x = F->elem(pick(rng)), y = F->elem(pick(rng));
            EXPECT_EQ(F->trace_to_prime(F->add(x, y)), mod(F->trace_to_prime(x) + F->trace_to_prime(y), p));
            const int64_t c = static_cast<int64_t>(pick(rng) % p);
            EXPECT_EQ(F->trace_to_prime(F->mul(F->from_int(c), x)), mod(c * F->trace_to_prime(x), p));
        }
    }
}

TEST(FiniteField, GeneratorWithPrescribedNorm) {
    for (int64_t g : {2, 3}) {
        auto F = make_field(5, 2, {.norm_to_prime = g});
        EXPECT_EQ(F->norm_to_prime(F->generator()), g);
    }
}

TEST(FiniteField, FrobeniusFixesPrimeField) {
    auto F = make_field(3, 3);
    for (int64_t c = 0; c < 3; ++c) EXPECT_EQ(F->frobenius(F->from_int(c)), F->from_int(c));
    FqElem g = F->generator();
    EXPECT_EQ(F->frobenius(g, 3), g);
    EXPECT_NE(F->frobenius(g, 1), g);
}

TEST(FieldEmbedding, RespectsArithmetic) {
    FieldEmbedding emb(make_field(3, 2), make_field(3, 4));
    EXPECT_EQ(emb.degree(), 2);
    const auto& S = emb.small();
    const auto& B = emb.big();
    for (uint32_t a = 0; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b) {
            FqElem x = S.elem(a), y = S.elem(b);
            EXPECT_EQ(emb.to_big(S.add(x, y)), B.add(emb.to_big(x), emb.to_big(y)));
            EXPECT_EQ(emb.to_big(S.mul(x, y)), B.mul(emb.to_big(x), emb.to_big(y)));
        }
    int count = 0;
    for (uint32_t c = 0; c < 81; ++c) count += emb.in_subfield(B.elem(c));
    EXPECT_EQ(count, 9);
    FqElem g = B.generator();
    EXPECT_EQ(emb.norm(g), emb.to_small(B.pow(g, 10)));
    EXPECT_EQ(emb.norm(B.one()), S.one());
    EXPECT_HGF_ERROR(FieldEmbedding(make_field(3, 2), make_field(3, 3)), ErrorKind::NotSubfield);
}

TEST(FieldEmbedding, IndependentOfGenerators) {
    auto F9a = make_field(3, 2), F9b = make_field(3, 2, {.generator_rank = 2});
    FieldEmbedding self(F9b, F9b);
    for (uint32_t c = 0; c < 9; ++c) EXPECT_EQ(self.to_big(F9b->elem(c)).code, c);
    FieldEmbedding a(F9a, make_field(3, 4)), b(F9b, make_field(3, 4, {.generator_rank = 3}));
    for (uint32_t c = 0; c < 9; ++c) EXPECT_EQ(a.to_big(F9a->elem(c)).code, b.to_big(F9b->elem(c)).code);
}
