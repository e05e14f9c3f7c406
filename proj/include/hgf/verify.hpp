#pragma once

// Executable checks of the identities relating the finite sums, the algebra
// sums and the p-adic function. Each check runs both sides on explicit
// instances and returns a CheckReport; a failing comparison is a verdict.

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hgf/hq.hpp"
#include "hgf/padic.hpp"

namespace hgf {

struct CheckReport {
    std::string check;
    std::string instance;
    bool pass = true;
    std::optional<std::string> witness;
    double millis = 0;
    std::vector<std::pair<std::string, std::string>> stats;

    /// Records the first failure; later ones only bump the count.
    void fail_with(std::string w) {
        if (pass) witness = std::move(w);
        pass = false;
        ++failures_;
    }
    void stat(std::string key, std::string value) { stats.emplace_back(std::move(key), std::move(value)); }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

namespace detail {

template <class Fn>
CheckReport timed(std::string name, std::string instance, Fn&& body) {
    CheckReport r;
    r.check = std::move(name);
    r.instance = std::move(instance);
    auto start = std::chrono::steady_clock::now();
    body(r);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::string pair_witness(const std::string& what, const std::string& lhs, const std::string& rhs) {
    return what + ": " + lhs + " != " + rhs;
}

/// Smallest M | D whose kernel {k = 1 mod M} lies in H: Q(zeta_M) is the least cyclotomic field containing K.
inline int64_t fixed_field_conductor(const std::vector<int64_t>& H, int64_t D) {
    for (int64_t M : divisors(D)) {
        bool ok = true;
        for (int64_t k : units_mod(D)) {
            if (mod(k, M) != mod(1, M)) continue;
            if (std::find(H.begin(), H.end(), D == 1 ? 1 : k) == H.end()) {
                ok = false;
                break;
            }
        }
        if (ok) return M;
    }
    return D;
}

/// An integer congruent to k mod D and coprime to n (n a multiple of D).
inline int64_t lift_unit(int64_t k, int64_t D, int64_t n) {
    for (int64_t x = mod(k, D); x < n + D; x += D)
        if (x > 0 && std::gcd(x, n) == 1) return x;
    fail(ErrorKind::InternalInconsistency, "no unit lift");
}

} // namespace detail

// Algebra sums ---------------------------------------------------------------

/// Direct character sum equals the Fourier expansion for every t in F_q^x.
inline CheckReport check_fourier(const HGAlgebraInstance& I) {
    return detail::timed("fourier", I.describe(), [&](CheckReport& r) {
        const auto& F = I.base();
        const auto fourier = hq_algebra_fourier_all(I);
        for (int64_t j = 0; j < F->q() - 1; ++j) {
            FqElem t = F->gen_pow(j);
            const CycloNum d = hq_algebra_direct(I, t);
            const CycloNum& f = fourier[j];
            if (d != f) r.fail_with(detail::pair_witness("t=" + F->format(t), d.to_string(), f.to_string()));
        }
        r.stat("t_values", std::to_string(F->q() - 1));
    });
}

/// The split algebra instance reproduces the classical sum for every t.
inline CheckReport check_split_recovery(const HGParams& P, int64_t q) {
    return detail::timed("split_recovery", P.to_string() + " q=" + std::to_string(q), [&](CheckReport& r) {
        int64_t p = 0;
        int f = 0;
        for (int64_t c = 2; c <= q; ++c)
            if (is_prime(c)) {
                int64_t x = q;
                int e = 0;
                while (x % c == 0) {
                    x /= c;
                    ++e;
                }
                if (x == 1) {
                    p = c;
                    f = e;
                    break;
                }
            }
        if (p == 0) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
        auto F = make_field(p, f);
        auto I = split_instance(P, F);
        const auto classic = hq_classic_all(P, F), fourier = hq_algebra_fourier_all(I);
        for (int64_t j = 0; j < q - 1; ++j) {
            FqElem t = F->gen_pow(j);
            const CycloNum a = hq_algebra_direct(I, t);
            const CycloNum &b = classic[j], &c = fourier[j];
            if (a != b) r.fail_with(detail::pair_witness("direct t=" + F->format(t), a.to_string(), b.to_string()));
            if (c != b) r.fail_with(detail::pair_witness("fourier t=" + F->format(t), c.to_string(), b.to_string()));
        }
    });
}

/// g_A(chi) conj(g_A(chi)) = q^f with f the base-degree count of nontrivial components.
inline CheckReport check_gauss_norm(const AlgebraChar& chi) {
    std::string inst = chi.algebra->describe() + " chi=(";
    for (size_t i = 0; i < chi.exps.size(); ++i) inst += (i ? "," : "") + std::to_string(chi.exps[i]);
    inst += ")";
    return detail::timed("gauss_norm", inst, [&](CheckReport& r) {
        CycloNum g = algebra_gauss_sum(chi);
        CycloNum n = g * g.conj();
        int expected = 0;
        for (size_t i = 0; i < chi.exps.size(); ++i)
            if (chi.exps[i] != 0) expected += chi.algebra->components()[i].degree;
        BigInt qf;
        mpz_ui_pow_ui(qf.get_mpz_t(), static_cast<unsigned long>(chi.algebra->base()->q()), static_cast<unsigned long>(expected));
        if (n != CycloNum::from_rational(1, Rational(qf)))
            r.fail_with(detail::pair_witness("|g|^2", n.to_string(), qf.get_str()));
        // the product formula must also match the brute-force sum when the algebra is small
        if (chi.algebra->size() <= 4096) {
            CycloNum b = algebra_gauss_sum_bruteforce(chi);
            if (b != g) r.fail_with(detail::pair_witness("product formula", g.to_string(), b.to_string()));
        }
        r.stat("f", std::to_string(expected));
    });
}

/// Values do not depend on the additive twist a in F_p^x (equal dimensions required).
inline CheckReport check_zeta_p_independence(const HGAlgebraInstance& I) {
    if (!I.equidimensional())
        fail(ErrorKind::AssumptionFails, "twist independence needs dim A = dim B");
    return detail::timed("zeta_p_independence", I.describe(), [&](CheckReport& r) {
        const auto& F = I.base();
        for (int64_t j = 0; j < F->q() - 1; ++j) {
            FqElem t = F->gen_pow(j);
            CycloNum ref = hq_algebra_direct(I, t, 1);
            for (int64_t a = 2; a < F->p(); ++a) {
                CycloNum v = hq_algebra_direct(I, t, a);
                if (v != ref)
                    r.fail_with(detail::pair_witness("t=" + F->format(t) + " a=" + std::to_string(a), v.to_string(), ref.to_string()));
            }
        }
    });
}

/// Recomputes the classical sum with omega built on another generator g' = g^j.
/// Such an omega' equals omega^k with k = j^-1 mod q-1, so the value must be
/// H(k alpha, k beta | t) computed with the original omega; for parameters
/// defined over Q this is the original value.
inline CheckReport check_omega_independence(const HGParams& P, int64_t p, int f, int generator_rank = 1) {
    return detail::timed("omega_independence", P.to_string() + " q=" + std::to_string(ipow(p, f)) + " rank=" +
                                                   std::to_string(generator_rank),
                         [&](CheckReport& r) {
        auto F0 = make_field(p, f);
        auto F1 = make_field(p, f, FieldOptions{.generator_rank = generator_rank});
        const int64_t q = F0->q();
        const int64_t j = F0->dlog(F0->elem(F1->generator().code));
        const int64_t k = invmod(j, q - 1);
        const HGParams Pk = P.conjugate(k);
        const bool over_Q = P.is_defined_over_Q();
        for (int64_t c = 1; c < q; ++c) {
            CycloNum v1 = hq_classic(P, F1, F1->elem(static_cast<uint32_t>(c)));
            CycloNum vk = hq_classic(Pk, F0, F0->elem(static_cast<uint32_t>(c)));
            if (v1 != vk) r.fail_with(detail::pair_witness("t=" + std::to_string(c), v1.to_string(), vk.to_string()));
            if (over_Q) {
                CycloNum v0 = hq_classic(P, F0, F0->elem(static_cast<uint32_t>(c)));
                if (v1 != v0) r.fail_with(detail::pair_witness("over Q, t=" + std::to_string(c), v1.to_string(), v0.to_string()));
            }
        }
        r.stat("k", std::to_string(k));
        r.stat("defined_over_Q", over_Q ? "true" : "false");
    });
}

/// Rebuilds the instance over the base field with another generator and compares the
/// Fourier-form values at every t. Characters stay the same functions: components equal
/// to the base field get their exponents rescaled to the new generator.
inline CheckReport check_generator_swap(const HGAlgebraInstance& I, int generator_rank = 1) {
    return detail::timed("omega_independence", "algebra " + I.describe() + " rank=" + std::to_string(generator_rank), [&](CheckReport& r) {
        const FieldPtr& F0 = I.base();
        const auto F1 = make_field(F0->p(), F0->f(), FieldOptions{.generator_rank = generator_rank});
        const int64_t q = F0->q();
        const int64_t j = F0->dlog(F0->elem(F1->generator().code));
        auto rebuild = [&](const AlgebraChar& chi) {
            std::vector<FieldPtr> comps;
            std::vector<int64_t> exps;
            for (size_t i = 0; i < chi.exps.size(); ++i) {
                const FieldPtr& C = chi.algebra->components()[i].field;
                const bool is_base = C == F0;
                comps.push_back(is_base ? F1 : C);
                exps.push_back(is_base ? chi.exps[i] * j : chi.exps[i]);
            }
            auto A = std::make_shared<const SemisimpleAlgebra>(F1, comps);
            return std::make_pair(A, AlgebraChar(A, exps));
        };
        auto [A1, chiA1] = rebuild(I.chiA);
        auto [B1, chiB1] = rebuild(I.chiB);
        const HGAlgebraInstance I1(A1, B1, chiA1, chiB1);
        const auto v0 = hq_algebra_fourier_all(I);
        const auto v1 = hq_algebra_fourier_all(I1);
        for (int64_t c = 1; c < q; ++c) {
            const auto code = static_cast<uint32_t>(c);
            const CycloNum& a = v0[F0->dlog(F0->elem(code))];
            const CycloNum& b = v1[F1->dlog(F1->elem(code))];
            if (a != b) r.fail_with(detail::pair_witness("t=" + std::to_string(c), b.to_string(), a.to_string()));
        }
        r.stat("generator_log", std::to_string(j));
    });
}

/// Galois action on the values of the algebra instance built from the p-orbits:
///  * sigma_k(H(chi|t)) = H(chi^k|t) for every unit k;
///  * sigma_k fixes every value when k mod D lies in the stabilizer;
///  * (negative control) some value moves under some k outside the stabilizer when K != Q;
///  * every value lies in the least cyclotomic field containing K, and in Q when K = Q.
inline CheckReport check_fixed_field(const HGParams& P, int64_t p) {
    return detail::timed("fixed_field", P.to_string() + " p=" + std::to_string(p), [&](CheckReport& r) {
        const HGAlgebraInstance I = orbit_instance(P, p);
        const auto& F = I.base();
        const int64_t D = P.common_denominator();
        const auto H = P.galois_stabilizer();
        const int64_t M = detail::fixed_field_conductor(H, D);
        const int64_t L = std::lcm(I.A->character_conductor(), I.B->character_conductor()) * p;
        const bool over_Q = P.is_defined_over_Q();
        auto in_H = [&](int64_t k) { return std::find(H.begin(), H.end(), D == 1 ? 1 : mod(k, D)) != H.end(); };

        const auto values = hq_algebra_fourier_all(I);
        auto tname = [&](int64_t j) { return "t=" + F->format(F->gen_pow(j)); };
        for (int64_t j = 0; j < p - 1; ++j) {
            const CycloNum& v = values[j];
            if (!v.in_subfield(M)) r.fail_with(tname(j) + ": value " + v.to_string() + " not in Q(zeta_" + std::to_string(M) + ")");
            if (over_Q && !v.as_rational()) r.fail_with(tname(j) + ": value " + v.to_string() + " not rational");
        }

        int moved_outside = 0, tested_outside = 0;
        for (int64_t k0 : units_mod(D)) {
            const int64_t k = detail::lift_unit(D == 1 ? 1 : k0, D, L);
            const auto conjugates = hq_algebra_fourier_all(I.power(k), k);
            bool moved = false;
            for (int64_t j = 0; j < p - 1; ++j) {
                const CycloNum& v = values[j];
                const CycloNum s = v.galois(k);
                const CycloNum& conj = conjugates[j];
                if (s != conj)
                    r.fail_with(detail::pair_witness("sigma_" + std::to_string(k) + " vs chi^k, " + tname(j), s.to_string(), conj.to_string()));
                if (s != v) moved = true;
            }
            if (in_H(k0) && moved) r.fail_with("stabilizer element k=" + std::to_string(k) + " moves a value");
            if (!in_H(k0)) {
                ++tested_outside;
                if (moved) ++moved_outside;
            }
        }
        if (!over_Q && moved_outside != tested_outside)
            r.fail_with("negative control: " + std::to_string(tested_outside - moved_outside) +
                        " twists outside the stabilizer fix every value");
        r.stat("stabilizer_size", std::to_string(H.size()));
        r.stat("cyclotomic_conductor_of_K", std::to_string(M));
        r.stat("negative_controls", std::to_string(tested_outside));
    });
}

// p-adic side ----------------------------------------------------------------

/// Compares the p-adic function with the embedded complex values mod p^(N - delta).
/// Routes: classical sum when (p-1) alpha, (p-1) beta are integral; the orbit algebra
/// sum when p splits and the algebra is small; and the Gross-Koblitz algebra route.
inline CheckReport check_gp_equals_hp(const HGParams& P, int64_t p, int N, int64_t max_conductor = 4000) {
    return detail::timed("gp_equals_hp", P.to_string() + " p=" + std::to_string(p) + " N=" + std::to_string(N), [&](CheckReport& r) {
        const int k = N - static_cast<int>(P.delta());
        const bool classic = assumption_holds(P, p);
        const bool splits = P.splits_in_K(p);
        std::optional<HGAlgebraInstance> I;
        if (splits) {
            auto cand = orbit_instance(P, p);
            if (std::lcm(cand.A->character_conductor(), cand.B->character_conductor()) * p <= max_conductor) I = cand;
        }
        auto F = make_field(p, 1);
        std::vector<CycloNum> classic_vals, algebra_vals;
        if (classic) classic_vals = hq_classic_all(P, F);
        if (I) algebra_vals = hq_algebra_fourier_all(*I);
        std::string routes;
        for (int64_t j = 0; j < p - 1; ++j) {
            const int64_t t = F->gen_pow(j).code;
            PadicNum g = g_p_direct(P, p, t, N);
            auto compare = [&](const std::string& route, const PadicNum& other) {
                if (!g.agrees_mod(other, k))
                    r.fail_with(detail::pair_witness(route + " t=" + std::to_string(t), g.to_string(), other.to_string()));
            };
            if (classic) compare("classic", embed_value(classic_vals[j], p, N));
            if (I) compare("algebra", embed_value(algebra_vals[j], p, N));
            if (splits) compare("gross_koblitz", g_p_via_algebra(P, p, t, N));
        }
        if (classic) routes += "classic ";
        if (I) routes += "algebra ";
        if (splits) routes += "gross_koblitz";
        if (!classic && !splits) r.fail_with("no comparison route: p does not split in K");
        r.stat("routes", routes);
        r.stat("compared_mod_p^", std::to_string(k));
    });
}

/// valuation(G_p) >= -delta for all t, and Lambda(m) is an integer from both forms.
inline CheckReport check_integrality_delta(const HGParams& P, int64_t p, int N) {
    return detail::timed("integrality_delta", P.to_string() + " p=" + std::to_string(p) + " N=" + std::to_string(N), [&](CheckReport& r) {
        const int64_t delta = P.delta();
        int worst = PadicNum::kExact;
        for (int64_t t = 1; t < p; ++t) {
            PadicNum g = g_p_direct(P, p, t, N);
            worst = std::min(worst, g.valuation());
            if (g.valuation() < -delta)
                r.fail_with("t=" + std::to_string(t) + ": valuation " + std::to_string(g.valuation()) + " < -" + std::to_string(delta));
        }
        for (int64_t m = 0; m < p - 1; ++m) {
            Rational lf = P.lambda_fractional(p, m);
            if (lf.get_den() != 1 || lf != Rational(P.lambda(p, m)))
                r.fail_with("Lambda(" + std::to_string(m) + ") = " + to_string(lf) + " vs floor form " + std::to_string(P.lambda(p, m)));
        }
        if (P.splits_in_K(p)) {
            auto ex = via_algebra_exponents(P, p);
            for (int64_t m = 0; m < p - 1; ++m)
                if (ex[m] != Rational(P.lambda(p, m)))
                    r.fail_with("pi-exponent/(p-1) at m=" + std::to_string(m) + " is " + to_string(ex[m]));
        }
        r.stat("delta", std::to_string(delta));
        r.stat("min_valuation", std::to_string(worst));
    });
}

/// Centered lifts of the coefficients of prod_k (X - p^Delta G_p(k alpha, k beta | t)),
/// k over coset representatives of the stabilizer; the lifts must agree across precisions.
inline CheckReport check_algebraic_integrality(const HGParams& P, int64_t p, int64_t t, const std::vector<int>& precisions) {
    std::string inst = P.to_string() + " p=" + std::to_string(p) + " t=" + std::to_string(t) + " N=";
    for (size_t i = 0; i < precisions.size(); ++i) inst += (i ? "," : "") + std::to_string(precisions[i]);
    return detail::timed("algebraic_integrality", inst, [&](CheckReport& r) {
        if (!P.splits_in_K(p)) fail(ErrorKind::DoesNotSplit, std::to_string(p) + " does not split in K");
        const int64_t Delta = P.Delta();
        const auto reps = P.coset_representatives();
        std::optional<std::vector<BigInt>> first;
        for (int N : precisions) {
            std::vector<PadicNum> poly{PadicNum::from_integer(p, 1, N)}; // low degree first
            for (int64_t k : reps) {
                PadicNum c = PadicNum::from_parts(p, static_cast<int>(Delta), N, 1) * g_p_direct(P.conjugate(k), p, t, N);
                std::vector<PadicNum> next(poly.size() + 1, PadicNum::zero(p));
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i + 1] += poly[i];
                    next[i] -= c * poly[i];
                }
                poly = std::move(next);
            }
            std::vector<BigInt> lifts;
            std::string shown;
            for (const auto& c : poly) {
                if (c.valuation() < 0 && !c.is_zero()) r.fail_with("N=" + std::to_string(N) + ": coefficient " + c.to_string() + " is not integral");
                int M = std::min(c.abs_prec(), N);
                lifts.push_back(c.valuation() < 0 ? BigInt(0) : c.centered_lift(M));
                shown += (shown.empty() ? "" : ",") + lifts.back().get_str();
            }
            r.stat("lifts_N" + std::to_string(N), shown);
            if (!first) first = lifts;
            else if (*first != lifts) r.fail_with("coefficient lifts change with precision at N=" + std::to_string(N) + ": " + shown);
        }
        r.stat("Delta", std::to_string(Delta));
        r.stat("degree", std::to_string(reps.size()));
    });
}

// Parameters -----------------------------------------------------------------

/// delta from the piece endpoints equals the maximum of the jump function over x = j / (2 lcm(D,2) d).
inline CheckReport check_delta_grid(const HGParams& P) {
    return detail::timed("delta_grid", P.to_string(), [&](CheckReport& r) {
        const int64_t n = 2 * std::lcm(P.common_denominator(), int64_t{2}) * P.d();
        int64_t best = P.jump_function(0);
        for (int64_t j = 0; j <= n; ++j) best = std::max(best, P.jump_function(Rational(j, n)));
        if (best != P.delta()) r.fail_with(detail::pair_witness("delta", std::to_string(P.delta()), std::to_string(best)));
        r.stat("delta", std::to_string(best));
    });
}

/// Orbit lengths of multiplication by p match the factor degrees of A(x), B(x) mod p
/// (integer coefficients, i.e. parameters defined over Q).
inline CheckReport check_orbit_factorization(const HGParams& P, int64_t p) {
    return detail::timed("orbit_factorization", P.to_string() + " p=" + std::to_string(p), [&](CheckReport& r) {
        auto polys = defining_polys(P);
        auto A = integer_coefficients(polys.A), B = integer_coefficients(polys.B);
        if (P.is_defined_over_Q() != (A && B)) r.fail_with("integer coefficients disagree with the stabilizer test");
        if (!A || !B) return;
        auto lengths = [p](const std::vector<Rational>& v) {
            std::vector<int> out;
            for (const auto& o : p_orbits_of(v, p)) out.push_back(o.length());
            std::sort(out.begin(), out.end());
            return out;
        };
        if (lengths(P.alpha()) != polymodp::factor_degrees(polymodp::reduce_coeffs(*A, p), p)) r.fail_with("alpha orbits vs A(x) mod p");
        if (lengths(P.beta()) != polymodp::factor_degrees(polymodp::reduce_coeffs(*B, p), p)) r.fail_with("beta orbits vs B(x) mod p");
    });
}

// Instance generation and the suite --------------------------------------------

/// A small fixed list of parameter sets used by the suites.
inline std::vector<HGParams> standard_parameter_list() {
    const std::vector<std::pair<const char*, const char*>> raw{
        {"1/2,1/2", "0,0"},         {"1/2", "0"},           {"1/3,2/3", "0,0"},
        {"1/4,3/4", "0,0"},         {"1/6,5/6", "0,0"},     {"1/4,3/4", "0,1/2"},
        {"1/3,2/3", "0,1/2"},       {"1/2,1/2,1/2", "0,0,0"}, {"1/3", "0"},
        {"1/12,5/12,7/12,11/12", "0,0,0,0"},
    };
    std::vector<HGParams> out;
    for (auto [a, b] : raw) out.push_back(HGParams::parse(a, b));
    return out;
}

/// Parameter sets and primes for the Galois checks: p splits in K for each.
inline std::vector<std::pair<HGParams, int64_t>> fixed_field_instances() {
    return {
        {HGParams::parse("1/5,4/5", "0,0"), 11},       {HGParams::parse("1/3", "0"), 7},
        {HGParams::parse("1/4,3/4", "0,0"), 5},        {HGParams::parse("1/5,4/5", "1/2,0"), 11},
        {HGParams::parse("1/8,3/8", "0,0"), 3},        {HGParams::parse("1/7,2/7,4/7", "0,0,0"), 29},
    };
}

/// Random semisimple algebra over F with |A| <= max_size (>= |F|) and at most max_rank components.
inline AlgebraPtr random_algebra(const FieldPtr& F, int64_t max_size, std::mt19937_64& rng, size_t max_rank = 3) {
    std::vector<FieldPtr> comps;
    int64_t size = 1;
    do {
        std::vector<int> ok;
        for (int dgr = 1; dgr <= 4; ++dgr)
            if (size * ipow(F->q(), dgr) <= max_size) ok.push_back(dgr);
        if (ok.empty()) break;
        int dgr = ok[std::uniform_int_distribution<size_t>(0, ok.size() - 1)(rng)];
        comps.push_back(make_field(F->p(), F->f() * dgr));
        size *= ipow(F->q(), dgr);
    } while (comps.size() < max_rank && std::uniform_int_distribution<int>(0, 2)(rng) != 0);
    return std::make_shared<const SemisimpleAlgebra>(F, comps);
}

inline AlgebraChar random_char(const AlgebraPtr& A, std::mt19937_64& rng) {
    std::vector<int64_t> e;
    for (const auto& c : A->components()) e.push_back(std::uniform_int_distribution<int64_t>(0, c.field->q() - 2)(rng));
    return {A, e};
}

/// Random instance over F; with equal_dims the two algebras have the same dimension.
inline HGAlgebraInstance random_instance(const FieldPtr& F, int64_t max_size, std::mt19937_64& rng, bool equal_dims = false) {
    while (true) {
        auto A = random_algebra(F, max_size, rng);
        auto B = random_algebra(F, max_size, rng);
        if (equal_dims && A->dimension() != B->dimension()) continue;
        return {A, B, random_char(A, rng), random_char(B, rng)};
    }
}

/// Prime powers q <= max_q with p odd or even, ascending.
inline std::vector<std::pair<int64_t, int>> prime_powers_upto(int64_t max_q, int64_t min_q = 2) {
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t q = min_q; q <= max_q; ++q)
        for (int64_t p = 2; p <= q; ++p)
            if (is_prime(p)) {
                int64_t x = q;
                int f = 0;
                while (x % p == 0) {
                    x /= p;
                    ++f;
                }
                if (x == 1) out.emplace_back(p, f);
                if (q % p == 0) break;
            }
    return out;
}

struct SuiteConfig {
    std::vector<std::string> checks{"all"};
    int64_t max_q = 9;
    int64_t max_p = 29;
    std::vector<int> precisions{6, 8};
    uint64_t seed = 1;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "fourier",      "split_recovery",  "gauss_norm",  "zeta_p_independence", "omega_independence",
        "fixed_field",  "gp_equals_hp",      "integrality_delta", "algebraic_integrality",  "delta_grid",
        "orbit_factorization",
    };
    return names;
}

/// Runs the selected checks on instances bounded by the configuration; deterministic in the seed.
inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg, const std::function<void(const CheckReport&)>& on_report = {}) {
    auto wanted = [&](const std::string& n) {
        return std::find(cfg.checks.begin(), cfg.checks.end(), "all") != cfg.checks.end() ||
               std::find(cfg.checks.begin(), cfg.checks.end(), n) != cfg.checks.end();
    };
    for (const auto& c : cfg.checks)
        if (c != "all" && std::find(check_names().begin(), check_names().end(), c) == check_names().end())
            fail(ErrorKind::Parse, "unknown check '" + c + "'");
    if (cfg.precisions.empty()) fail(ErrorKind::Parse, "empty precision list");

    std::vector<CheckReport> out;
    auto emit = [&](CheckReport r) {
        if (on_report) on_report(r);
        out.push_back(std::move(r));
    };
    std::mt19937_64 rng(cfg.seed);
    const auto params = standard_parameter_list();
    std::vector<FieldPtr> bases;
    for (auto [p, f] : prime_powers_upto(std::min<int64_t>(cfg.max_q, 9), 3)) bases.push_back(make_field(p, f));
    const int N0 = cfg.precisions.front();
    std::vector<int64_t> odd_primes;
    for (int64_t p = 3; p <= cfg.max_p; ++p)
        if (is_prime(p)) odd_primes.push_back(p);

    if (wanted("fourier") && !bases.empty())
        for (int i = 0; i < 20; ++i) emit(check_fourier(random_instance(bases[i % bases.size()], 81, rng)));
    if (wanted("split_recovery"))
        for (const auto& P : params)
            for (auto [p, f] : prime_powers_upto(cfg.max_q, 3))
                if (assumption_holds(P, ipow(p, f))) emit(check_split_recovery(P, ipow(p, f)));
    if (wanted("gauss_norm") && !bases.empty())
        for (int i = 0; i < 50; ++i) {
            auto A = random_algebra(bases[i % bases.size()], 729, rng);
            emit(check_gauss_norm(random_char(A, rng)));
        }
    if (wanted("zeta_p_independence") && !bases.empty())
        for (int i = 0; i < 10; ++i) emit(check_zeta_p_independence(random_instance(bases[i % bases.size()], 81, rng, true)));
    if (wanted("omega_independence")) {
        for (const auto& P : params)
            for (auto [p, f] : prime_powers_upto(cfg.max_q, 3))
                if (assumption_holds(P, ipow(p, f)) && ipow(p, f) > 3) emit(check_omega_independence(P, p, f));
        std::vector<FieldPtr> swappable;
        for (const auto& F : bases)
            if (F->q() > 3) swappable.push_back(F);
        if (!swappable.empty())
            for (int i = 0; i < 10; ++i) emit(check_generator_swap(random_instance(swappable[i % swappable.size()], 81, rng, true)));
    }
    if (wanted("fixed_field"))
        for (const auto& [P, p] : fixed_field_instances())
            if (p <= cfg.max_p) emit(check_fixed_field(P, p));
    if (wanted("gp_equals_hp")) {
        for (const auto& P : params)
            for (int64_t p : odd_primes)
                if (std::gcd(p, P.common_denominator()) == 1 && (assumption_holds(P, p) || P.splits_in_K(p)))
                    emit(check_gp_equals_hp(P, p, N0));
        if (cfg.max_p >= 7) emit(check_gp_equals_hp(HGParams::parse("1/5,2/5,3/5,4/5", "0,0,0,0"), 7, N0));
    }
    if (wanted("integrality_delta"))
        for (const auto& P : params)
            for (int64_t p : odd_primes)
                if (std::gcd(p, P.common_denominator()) == 1) emit(check_integrality_delta(P, p, N0));
    if (wanted("algebraic_integrality")) {
        const auto& precs = cfg.precisions;
        if (cfg.max_p >= 11)
            for (int64_t t : {1, 2, 3}) emit(check_algebraic_integrality(HGParams::parse("1/5,4/5", "0,0"), 11, t, precs));
        if (cfg.max_p >= 13) emit(check_algebraic_integrality(HGParams::parse("1/2,1/2", "0,0"), 13, 1, precs));
    }
    if (wanted("delta_grid"))
        for (const auto& P : params) emit(check_delta_grid(P));
    if (wanted("orbit_factorization"))
        for (const auto& P : params)
            for (int64_t p : odd_primes)
                if (P.is_defined_over_Q() && std::gcd(p, P.common_denominator()) == 1) emit(check_orbit_factorization(P, p));
    return out;
}

} // namespace hgf
