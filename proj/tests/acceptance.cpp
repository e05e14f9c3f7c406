// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgf/verify.hpp"

using namespace hgf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string witness;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) witness = what;
        pass = pass && ok;
    }
    void require(const CheckReport& r) { require(r.pass, r.check + " " + r.instance + ": " + r.witness.value_or("")); }
};

HGParams P(std::string_view a, std::string_view b) { return HGParams::parse(a, b); }

// Parameters with distinct entries of denominator <= 12; about half are defined over Q.
HGParams random_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng)) {
        static const std::vector<int64_t> dens{3, 4, 5, 6, 8, 10, 12};
        const int64_t D = dens[std::uniform_int_distribution<size_t>(0, dens.size() - 1)(rng)];
        std::vector<Rational> a, b;
        for (int64_t k : units_mod(D)) a.emplace_back(k, D);
        for (size_t i = 0; i < a.size(); ++i) b.emplace_back(coin(rng), 2);
        for (auto& x : a) x.canonicalize();
        for (auto& x : b) x.canonicalize();
        return HGParams(a, b);
    }
    while (true) {
        const int d = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Rational> a, b;
        auto draw = [&] {
            const int64_t den = std::uniform_int_distribution<int64_t>(1, 12)(rng);
            Rational x(std::uniform_int_distribution<int64_t>(0, den - 1)(rng), den);
            x.canonicalize();
            return x;
        };
        for (int i = 0; i < d; ++i) a.push_back(draw());
        for (int i = 0; i < d; ++i) b.push_back(draw());
        try {
            return HGParams(a, b);
        } catch (const Error&) {
        }
    }
}

std::vector<FieldPtr> fields(std::initializer_list<int64_t> qs) {
    std::vector<FieldPtr> out;
    for (int64_t q : qs) {
        for (auto [p, f] : prime_powers_upto(q, q)) out.push_back(make_field(p, f));
    }
    return out;
}

Outcome fourier_identity() {
    Outcome o;
    std::mt19937_64 rng(101);
    const auto bases = fields({3, 5, 7, 9});
    int instances = 0;
    long t_values = 0;
    for (int i = 0; i < 24; ++i) {
        const auto& F = bases[i % bases.size()];
        auto r = check_fourier(random_instance(F, 81, rng));
        o.require(r);
        ++instances;
        t_values += F->q() - 1;
    }
    o.detail = std::to_string(instances) + " instances, " + std::to_string(t_values) + " (instance, t) pairs";
    return o;
}

Outcome split_recovery() {
    Outcome o;
    int runs = 0;
    for (const auto& Pm : standard_parameter_list())
        for (int64_t q : {5, 7, 13})
            if (assumption_holds(Pm, q)) {
                o.require(check_split_recovery(Pm, q));
                ++runs;
            }
    o.require(runs > 0, "no parameter set satisfied the divisibility assumption");
    o.detail = std::to_string(runs) + " (P, q) pairs, all t";
    return o;
}

Outcome gauss_norms() {
    Outcome o;
    std::mt19937_64 rng(303);
    const auto bases = fields({3, 4, 5, 7, 8, 9});
    for (int i = 0; i < 50; ++i) {
        auto A = random_algebra(bases[i % bases.size()], 729, rng);
        o.require(check_gauss_norm(random_char(A, rng)));
    }
    o.detail = "50 random algebra characters";
    return o;
}

Outcome independence() {
    Outcome o;
    std::mt19937_64 rng(404);
    const auto bases = fields({5, 7, 9});
    for (int i = 0; i < 10; ++i) {
        auto I = random_instance(bases[i % bases.size()], 81, rng, true);
        o.require(check_zeta_p_independence(I));
        o.require(check_generator_swap(I));
    }
    int classic = 0;
    for (const auto& Pm : standard_parameter_list())
        for (int64_t q : {5, 7, 13})
            if (assumption_holds(Pm, q)) {
                o.require(check_omega_independence(Pm, q, 1));
                ++classic;
            }
    o.detail = "10 equidimensional instances (twist sweep and generator swap), " + std::to_string(classic) +
               " classical (P, q) generator swaps";
    return o;
}

Outcome fixed_field() {
    Outcome o;
    int controls = 0;
    for (const auto& [Pm, p] : fixed_field_instances()) {
        auto r = check_fixed_field(Pm, p);
        o.require(r);
        for (const auto& [k, v] : r.stats)
            if (k == "negative_controls") controls += std::stoi(v);
    }
    o.require(controls > 0, "no negative control was exercised");
    o.detail = std::to_string(fixed_field_instances().size()) + " parameter sets, " + std::to_string(controls) +
               " non-stabilizer twists moved a value";
    return o;
}

Outcome gross_koblitz_end_to_end() {
    Outcome o;
    const int N = 6;
    int compared = 0;
    for (const auto& Pm : standard_parameter_list())
        for (int64_t p : {5, 13}) {
            if (!assumption_holds(Pm, p)) continue;
            auto F = make_field(p, 1);
            const int tol = N - static_cast<int>(Pm.delta());
            const auto exact = hq_classic_all(Pm, F);
            for (int64_t j = 0; j < p - 1; ++j) {
                const int64_t t = F->gen_pow(j).code;
                const auto lhs = embed_value(exact[j], p, N);
                const auto rhs = g_p_direct(Pm, p, t, N);
                o.require(lhs.agrees_mod(rhs, tol), Pm.to_string() + " p=" + std::to_string(p) + " t=" + std::to_string(t) +
                                                        ": " + lhs.to_string() + " vs " + rhs.to_string());
                ++compared;
            }
        }
    const auto Q = P("1/5,2/5,3/5,4/5", "0,0,0,0");
    for (int64_t t = 1; t < 7; ++t) {
        const auto a = g_p_direct(Q, 7, t, N), b = g_p_via_algebra(Q, 7, t, N);
        o.require(a.agrees_mod(b, N - static_cast<int>(Q.delta())), "via algebra t=" + std::to_string(t));
        ++compared;
    }
    o.detail = std::to_string(compared) + " comparisons at N=6";
    return o;
}

Outcome integrality() {
    Outcome o;
    std::mt19937_64 rng(707);
    std::vector<int64_t> primes;
    for (int64_t p = 3; p < 60; ++p)
        if (is_prime(p)) primes.push_back(p);
    const int N = 6;
    int triples = 0, via_algebra = 0, lambdas = 0;
    int64_t max_delta = 0;
    while (triples < 100) {
        const HGParams Pm = random_params(rng);
        const int64_t p = primes[std::uniform_int_distribution<size_t>(0, primes.size() - 1)(rng)];
        if (Pm.common_denominator() % p == 0) continue;
        const int64_t t = std::uniform_int_distribution<int64_t>(1, p - 1)(rng);
        const int64_t delta = Pm.delta();
        max_delta = std::max(max_delta, delta);
        const std::string inst = Pm.to_string() + " p=" + std::to_string(p) + " t=" + std::to_string(t);
        try {
            const auto g = g_p_direct(Pm, p, t, N);
            o.require(g.is_zero() || g.valuation() >= -delta, inst + ": valuation " + std::to_string(g.valuation()));
            for (int64_t m = 0; m < p - 1; ++m) {
                const Rational lf = Pm.lambda_fractional(p, m);
                o.require(lf.get_den() == 1 && lf == Rational(Pm.lambda(p, m)), inst + ": Lambda(" + std::to_string(m) + ")");
                ++lambdas;
            }
            if (Pm.splits_in_K(p)) {
                const auto h = g_p_via_algebra(Pm, p, t, N);
                o.require(h.agrees_mod(g, N - static_cast<int>(delta)), inst + ": algebra route disagrees");
                ++via_algebra;
            }
        } catch (const Error& e) {
            o.require(false, inst + ": " + e.what());
        }
        ++triples;
    }
    o.detail = std::to_string(triples) + " random triples (" + std::to_string(via_algebra) + " also via algebra), " +
               std::to_string(lambdas) + " Lambda values, delta up to " + std::to_string(max_delta);
    return o;
}

Outcome algebraic_integrality() {
    Outcome o;
    std::ostringstream shown;
    for (int64_t p : {11, 19})
        for (int64_t t : {1, 2, 3}) {
            auto r = check_algebraic_integrality(P("1/5,4/5", "0,0"), p, t, {6, 8});
            o.require(r);
            for (const auto& [k, v] : r.stats)
                if (k == "lifts_N8") shown << " p=" << p << ",t=" << t << ":[" << v << "]";
        }
    for (int64_t t : {1, 2, 3}) {
        auto r = check_algebraic_integrality(P("1/2,1/2", "0,0"), 13, t, {6, 8});
        o.require(r);
        for (const auto& [k, v] : r.stats) {
            if (k == "degree") o.require(v == "1", "defined-over-Q polynomial is not linear");
            if (k == "lifts_N8") shown << " Q-case t=" << t << ":[" << v << "]";
        }
    }
    o.detail = "stable lifts" + shown.str();
    return o;
}

Outcome delta_grid() {
    Outcome o;
    auto sets = standard_parameter_list();
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"1/5,4/5", "0,0"}, {"1/3", "1/4"}, {"1/7,2/7,4/7", "0,0,1/2"}, {"1/8,3/8", "0,0"}, {"1/2,2/3,3/4", "1/5,1/7,1/9"},
             {"1/5,2/5", "1/3,0"}, {"1/12,5/12", "1/3,0"}, {"1/10,3/10,7/10,9/10", "1/3,2/3,0,1/2"}, {"2/9,5/9,8/9", "1/6,1/2,5/6"},
             {"5/6,3/4", "1/12,1/8"}})
        sets.push_back(P(a, b));
    std::set<int64_t> deltas;
    for (const auto& Pm : sets) {
        o.require(check_delta_grid(Pm));
        deltas.insert(Pm.delta());
    }
    std::string ds;
    for (auto d : deltas) ds += (ds.empty() ? "" : ",") + std::to_string(d);
    o.detail = std::to_string(sets.size()) + " parameter sets, delta values {" + ds + "}";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Fourier expansion equals the direct algebra sum", fourier_identity},
        {"split algebra reproduces the classical sum", split_recovery},
        {"algebra Gauss sums have norm q^f", gauss_norms},
        {"independence of the additive twist and of the generator", independence},
        {"values are fixed exactly by the parameter stabilizer", fixed_field},
        {"Gross-Koblitz: embedded finite sum equals the p-adic function", gross_koblitz_end_to_end},
        {"p^delta G_p is integral and Lambda is an integer", integrality},
        {"conjugate product has precision-stable integer coefficients", algebraic_integrality},
        {"delta agrees with a brute-force grid maximum", delta_grid},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.witness = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char time_buf[32];
        std::snprintf(time_buf, sizeof time_buf, "%.1fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
                  << "; " << time_buf << ")";
        if (!o.pass) std::cout << " -- " << o.witness;
        std::cout << std::endl;
        failed += !o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
