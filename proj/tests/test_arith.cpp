#include <gtest/gtest.h>

#include "hgf/arith.hpp"
#include "test_util.hpp"

using namespace hgf;

TEST(Arith, ModIsNonNegative) {
    EXPECT_EQ(mod(-1, 5), 4);
    EXPECT_EQ(mod(10, 5), 0);
    EXPECT_EQ(mod(-10, 3), 2);
}

TEST(Arith, PowmodAndInverse) {
    EXPECT_EQ(powmod(2, 10, 1000), 24u);
    EXPECT_EQ(powmod(3, 0, 7), 1u);
    for (int64_t a = 1; a < 13; ++a) EXPECT_EQ(mod(a * invmod(a, 13), 13), 1);
    EXPECT_HGF_ERROR(invmod(4, 8), ErrorKind::NotCoprime);
}

TEST(Arith, MulmodDoesNotOverflow) {
    const uint64_t m = (uint64_t{1} << 62) - 57;
    EXPECT_EQ(mulmod(m - 1, m - 1, m), 1u);
}

TEST(Arith, PrimesAndTotient) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(9973));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(prime_factors(360), (std::vector<int64_t>{2, 3, 5}));
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(units_mod(10), (std::vector<int64_t>{1, 3, 7, 9}));
    EXPECT_EQ(mult_order(2, 7), 3);
    EXPECT_EQ(divisors(12), (std::vector<int64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(Arith, FloorAndFractionalPart) {
    EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
    EXPECT_EQ(frac(Rational(-1, 3)), Rational(2, 3));
    EXPECT_EQ(frac(Rational(7, 2)), Rational(1, 2));
    EXPECT_EQ(frac(Rational(3)), Rational(0));
}

TEST(Arith, ParseRational) {
    EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
    EXPECT_EQ(parse_rational(" -3/4 "), Rational(-3, 4));
    EXPECT_EQ(parse_rational("+6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("5"), Rational(5));
    EXPECT_HGF_ERROR(parse_rational("1/0"), ErrorKind::Parse);
    EXPECT_HGF_ERROR(parse_rational("abc"), ErrorKind::Parse);
    EXPECT_HGF_ERROR(parse_rational(""), ErrorKind::Parse);
    EXPECT_HGF_ERROR(parse_rational("1/2/3"), ErrorKind::Parse);
    auto v = parse_rational_list("1/5, 2/5,3/5 ,4/5");
    ASSERT_EQ(v.size(), 4u);
    EXPECT_EQ(v[3], Rational(4, 5));
    EXPECT_HGF_ERROR(parse_rational_list("1/2,,1/3"), ErrorKind::Parse);
}

TEST(Arith, Valuation) {
    EXPECT_EQ(valuation(BigInt(250), 5), 3);
    EXPECT_EQ(valuation(BigInt(-7), 7), 1);
    EXPECT_EQ(valuation(BigInt(11), 3), 0);
}
