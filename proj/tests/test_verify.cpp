#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hgf/verify.hpp"
#include "test_util.hpp"

using namespace hgf;

namespace {

HGParams P(std::string_view a, std::string_view b) { return HGParams::parse(a, b); }

std::string stat_of(const CheckReport& r, const std::string& key) {
    for (const auto& [k, v] : r.stats)
        if (k == key) return v;
    return "";
}

#define EXPECT_PASSES(report)                                                                 \
    do {                                                                                      \
        const CheckReport r_ = (report);                                                      \
        EXPECT_TRUE(r_.pass) << r_.check << " " << r_.instance << ": " << r_.witness.value_or(""); \
    } while (0)

} // namespace

TEST(Report, KeepsFirstWitness) {
    CheckReport r;
    EXPECT_TRUE(r.pass);
    r.fail_with("first");
    r.fail_with("second");
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.witness, "first");
    EXPECT_EQ(r.failures(), 2);
}

TEST(Checks, FourierOnMixedAlgebra) {
    auto F3 = make_field(3, 1), F9 = make_field(3, 2);
    auto A = std::make_shared<const SemisimpleAlgebra>(F3, std::vector<FieldPtr>{F3, F9});
    auto B = std::make_shared<const SemisimpleAlgebra>(F3, std::vector<FieldPtr>{F3, F3, F3});
    std::mt19937_64 rng(2);
    for (int i = 0; i < 5; ++i) EXPECT_PASSES(check_fourier(HGAlgebraInstance(A, B, random_char(A, rng), random_char(B, rng))));
}

TEST(Checks, SplitRecovery) {
    for (const auto& Pm : standard_parameter_list())
        for (int64_t q : {5, 7, 13})
            if (assumption_holds(Pm, q)) EXPECT_PASSES(check_split_recovery(Pm, q));
}

TEST(Checks, GaussNorm) {
    std::mt19937_64 rng(5);
    for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        auto A = random_algebra(make_field(p, f), 729, rng);
        auto r = check_gauss_norm(random_char(A, rng));
        EXPECT_PASSES(r);
        EXPECT_FALSE(stat_of(r, "f").empty());
    }
}

TEST(Checks, ZetaPIndependence) {
    std::mt19937_64 rng(6);
    for (int64_t q : {5, 7, 9}) {
        auto F = make_field(q == 9 ? 3 : q, q == 9 ? 2 : 1);
        EXPECT_PASSES(check_zeta_p_independence(random_instance(F, 81, rng, true)));
    }
    auto F3 = make_field(3, 1);
    auto A = std::make_shared<const SemisimpleAlgebra>(F3, std::vector<FieldPtr>{F3});
    auto B = std::make_shared<const SemisimpleAlgebra>(F3, std::vector<FieldPtr>{F3, F3});
    EXPECT_HGF_ERROR(check_zeta_p_independence(HGAlgebraInstance(A, B, AlgebraChar(A, {1}), AlgebraChar(B, {0, 0}))),
                     ErrorKind::AssumptionFails);
}

TEST(Checks, OmegaIndependence) {
    for (auto Pm : {P("1/2,1/2", "0,0"), P("1/4,3/4", "0,0"), P("1/4,3/4", "0,1/2"), P("1/3,1/4", "0,1/2")}) {
        auto r = check_omega_independence(Pm, 13, 1);
        EXPECT_PASSES(r);
        EXPECT_EQ(stat_of(r, "defined_over_Q"), Pm.is_defined_over_Q() ? "true" : "false");
    }
    EXPECT_PASSES(check_omega_independence(P("1/4,3/4", "0,0"), 3, 2));
}

TEST(Checks, GeneratorSwapOnAlgebraInstances) {
    std::mt19937_64 rng(8);
    for (auto [p, f] : {std::pair{5, 1}, {7, 1}, {3, 2}, {2, 3}})
        for (int i = 0; i < 3; ++i) {
            auto I = random_instance(make_field(p, f), 81, rng, i % 2 == 0);
            EXPECT_PASSES(check_generator_swap(I));
            if (euler_phi(ipow(p, f) - 1) > 2) {
                EXPECT_PASSES(check_generator_swap(I, 2));
            }
        }
}

TEST(Checks, FixedFieldConductor) {
    EXPECT_EQ(detail::fixed_field_conductor({1, 4}, 5), 5);
    EXPECT_EQ(detail::fixed_field_conductor({1, 2, 3, 4}, 5), 1);
    EXPECT_EQ(detail::fixed_field_conductor({1, 3}, 8), 8);
    EXPECT_EQ(detail::fixed_field_conductor({1, 5}, 8), 4);
    EXPECT_EQ(detail::fixed_field_conductor({1, 11}, 20), 5);
    EXPECT_EQ(detail::fixed_field_conductor({1, 9}, 20), 20);
    EXPECT_EQ(detail::fixed_field_conductor({1, 3, 7, 9, 11, 13, 17, 19}, 20), 1);
    EXPECT_EQ(detail::fixed_field_conductor({1, 11}, 30), 5);
    EXPECT_EQ(detail::fixed_field_conductor({1}, 30), 15);
}

TEST(Checks, FixedField) {
    for (const auto& [Pm, p] : fixed_field_instances()) {
        auto r = check_fixed_field(Pm, p);
        EXPECT_PASSES(r);
        if (!Pm.is_defined_over_Q()) {
            EXPECT_NE(stat_of(r, "negative_controls"), "0") << Pm.to_string();
        }
    }
    auto r = check_fixed_field(P("1/5,4/5", "0,0"), 11);
    EXPECT_EQ(stat_of(r, "stabilizer_size"), "2");
    EXPECT_EQ(stat_of(r, "cyclotomic_conductor_of_K"), "5");
}

TEST(Checks, GpEqualsHp) {
    for (auto [Pm, p] : {std::pair{P("1/2,1/2", "0,0"), int64_t{13}}, {P("1/5,2/5,3/5,4/5", "0,0,0,0"), int64_t{7}},
                         {P("1/5,4/5", "0,0"), int64_t{11}}, {P("1/3,2/3", "0,0"), int64_t{5}}})
        EXPECT_PASSES(check_gp_equals_hp(Pm, p, 6));
}

TEST(Checks, IntegralityDelta) {
    auto r = check_integrality_delta(P("1/2", "0"), 13, 6);
    EXPECT_PASSES(r);
    EXPECT_EQ(stat_of(r, "delta"), "0");
    EXPECT_PASSES(check_integrality_delta(P("1/3", "1/4"), 29, 6));
}

TEST(Checks, AlgebraicIntegrality) {
    const std::vector<std::string> expected{"1,-2,1", "4,-4,1", "4,6,1"};
    for (int64_t t : {1, 2, 3}) {
        auto r = check_algebraic_integrality(P("1/5,4/5", "0,0"), 11, t, {6, 8});
        EXPECT_PASSES(r);
        EXPECT_EQ(stat_of(r, "degree"), "2");
        EXPECT_EQ(stat_of(r, "lifts_N6"), stat_of(r, "lifts_N8"));
        EXPECT_EQ(stat_of(r, "lifts_N8"), expected[t - 1]);
    }
    EXPECT_HGF_ERROR(check_algebraic_integrality(P("1/5,4/5", "0,0"), 7, 1, {6}), ErrorKind::DoesNotSplit);
}

TEST(Checks, DeltaGridAndOrbits) {
    for (const auto& Pm : standard_parameter_list()) EXPECT_PASSES(check_delta_grid(Pm));
    EXPECT_PASSES(check_delta_grid(P("1/7,2/7,4/7", "0,1/3,1/2")));
    EXPECT_PASSES(check_orbit_factorization(P("1/5,2/5,3/5,4/5", "0,0,0,0"), 7));
    EXPECT_PASSES(check_orbit_factorization(P("1/12,5/12,7/12,11/12", "0,0,0,0"), 29));
}

TEST(Instances, RandomAlgebraRespectsSizeBound) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        auto A = random_algebra(make_field(3, 1), 81, rng);
        EXPECT_LE(A->size(), 81);
        EXPECT_GE(A->rank(), 1u);
        EXPECT_LE(A->rank(), 3u);
    }
    auto I = random_instance(make_field(5, 1), 125, rng, true);
    EXPECT_TRUE(I.equidimensional());
}

TEST(Instances, PrimePowers) {
    std::vector<int64_t> qs;
    for (auto [p, f] : prime_powers_upto(9, 3)) qs.push_back(ipow(p, f));
    EXPECT_EQ(qs, (std::vector<int64_t>{3, 4, 5, 7, 8, 9}));
}

TEST(Suite, RejectsUnknownChecks) {
    SuiteConfig cfg;
    cfg.checks = {"nonsense"};
    EXPECT_HGF_ERROR(run_suite(cfg), ErrorKind::Parse);
    cfg.checks = {"all"};
    cfg.precisions = {};
    EXPECT_HGF_ERROR(run_suite(cfg), ErrorKind::Parse);
}

TEST(Suite, DeterministicInSeed) {
    SuiteConfig cfg;
    cfg.checks = {"fourier", "gauss_norm"};
    cfg.max_q = 5;
    auto a = run_suite(cfg), b = run_suite(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].instance, b[i].instance);
        EXPECT_EQ(a[i].pass, b[i].pass);
    }
    cfg.seed = 2;
    auto c = run_suite(cfg);
    bool differs = false;
    for (size_t i = 0; i < a.size() && i < c.size(); ++i) differs |= a[i].instance != c[i].instance;
    EXPECT_TRUE(differs);
}

TEST(Suite, FullDefaultSuitePasses) {
    int count = 0;
    auto reports = run_suite(SuiteConfig{}, [&](const CheckReport&) { ++count; });
    EXPECT_EQ(count, static_cast<int>(reports.size()));
    std::set<std::string> seen;
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass) << r.check << " " << r.instance << ": " << r.witness.value_or("");
        seen.insert(r.check);
    }
    EXPECT_EQ(seen.size(), check_names().size());
}
