#include <gtest/gtest.h>

#include <random>

#include "hgf/io.hpp"
#include "test_util.hpp"

using namespace hgf;

TEST(Json, CycloRoundTrip) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int64_t N : {1, 4, 12, 35}) {
        CycloNum v = CycloNum::zero(N);
        for (int64_t k = 0; k < N; ++k) v += CycloNum::root_of_unity(N, k) * Rational(c(rng), 1 + std::abs(c(rng)));
        auto j = io::to_json(v);
        EXPECT_EQ(j.at("N"), N);
        EXPECT_EQ(io::cyclo_from_json(j), v);
        EXPECT_EQ(io::cyclo_from_json(io::json::parse(j.dump())), v);
    }
    auto r = io::to_json(CycloNum::from_rational(6, Rational(-7, 3)));
    EXPECT_EQ(r.at("rational"), "-7/3");
}

TEST(Json, PadicRoundTrip) {
    for (auto x : {PadicNum::from_rational(7, Rational(-3, 49), 6), PadicNum::from_integer(5, 123456, 8), PadicNum::zero(3, 5)}) {
        auto j = io::to_json(x);
        EXPECT_EQ(io::padic_from_json(j), x) << j.dump();
    }
    auto j = io::to_json(PadicNum::from_integer(5, 7, 3));
    EXPECT_EQ(j.dump(), R"({"p":5,"N":3,"valuation":0,"digits":[2,1,0]})");
    j["digits"] = io::json::array({9, 0, 0});
    EXPECT_HGF_ERROR(io::padic_from_json(j), ErrorKind::Parse);
    j["digits"] = io::json::array({1});
    EXPECT_HGF_ERROR(io::padic_from_json(j), ErrorKind::Parse);
}

TEST(Json, ParamsRoundTrip) {
    auto P = HGParams::parse("1/5,-1/5", "0,1/2");
    auto j = io::to_json(P);
    EXPECT_EQ(j.dump(), R"({"alpha":["1/5","4/5"],"beta":["0","1/2"]})");
    EXPECT_EQ(io::params_from_json(j), P);
}

TEST(Json, ReportAndDocument) {
    CheckReport r;
    r.check = "fourier";
    r.instance = "x";
    r.millis = 12.7;
    r.stat("k", "v");
    auto with = io::to_json(r);
    EXPECT_EQ(with.at("millis"), 12);
    auto without = io::to_json(r, false);
    EXPECT_FALSE(without.contains("millis"));
    EXPECT_FALSE(without.contains("witness"));
    EXPECT_EQ(without.dump(), R"({"check":"fourier","instance":"x","verdict":"pass","stats":{"k":"v"}})");
    r.fail_with("bad");
    EXPECT_EQ(io::to_json(r, false).at("witness"), "bad");
    auto doc = io::document("verify", io::json::array());
    EXPECT_EQ(doc.at("schema"), io::kSchema);
    EXPECT_EQ(doc.begin().key(), "schema");
}
