#pragma once

// Finite hypergeometric sums with exact cyclotomic values:
//   * hq_classic: the sum over m of Gauss-sum ratios for parameters with (q-1)alpha, (q-1)beta integral;
//   * hq_algebra_direct / hq_algebra_fourier: the two-algebra version, as a
//     character sum over the norm equation t N_A(x) = N_B(y) and as its Fourier expansion;
//   * split_instance / orbit_instance: the algebras that realize given parameters;
//   * greene_factor / katz_unnormalized: conversions to the other normalizations.
//
// Normalization of the two-algebra sum: the prefactor is -1/(g_A(chi_A) g_B(conj chi_B))
// and the summand is psi_A(x) psi_B(-y) chi_A(x) conj(chi_B)(-y). With this choice the
// m = 0 Fourier coefficient is exactly 1 and the split instance reproduces hq_classic.

#include <memory>
#include <string>
#include <vector>

#include "hgf/charsums.hpp"
#include "hgf/params.hpp"

namespace hgf {

struct HGAlgebraInstance {
    AlgebraPtr A;
    AlgebraPtr B;
    AlgebraChar chiA;
    AlgebraChar chiB;

    HGAlgebraInstance(AlgebraPtr a, AlgebraPtr b, AlgebraChar ca, AlgebraChar cb)
        : A(std::move(a)), B(std::move(b)), chiA(std::move(ca)), chiB(std::move(cb)) {
        if (A->base()->key() != B->base()->key()) fail(ErrorKind::NotSubfield, "A and B must share the base field");
        if (chiA.algebra != A || chiB.algebra != B) fail(ErrorKind::LengthMismatch, "characters must live on A and B");
    }

    const FieldPtr& base() const { return A->base(); }
    bool equidimensional() const { return A->dimension() == B->dimension(); }

    /// Same algebras with both characters raised to the k-th power.
    HGAlgebraInstance power(int64_t k) const { return {A, B, chiA.pow(k), chiB.pow(k)}; }

    std::string describe() const {
        auto list = [](const std::vector<int64_t>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        return "A=" + A->describe() + " chiA=(" + list(chiA.exps) + ") B=" + B->describe() + " chiB=(" + list(chiB.exps) + ")";
    }
};

namespace detail {

inline FqElem require_unit_arg(const FqField& F, FqElem t) {
    if (t.is_zero()) fail(ErrorKind::ZeroArgument, "t = 0 is not supported");
    if (t.field != &F) return F.elem(t.code);
    return t;
}

/// ((q-1) alpha_i), ((q-1) beta_i) as integers; throws if the division assumption fails.
inline std::pair<std::vector<int64_t>, std::vector<int64_t>> integral_exponents(const HGParams& P, int64_t q) {
    auto conv = [q](const std::vector<Rational>& v) {
        std::vector<int64_t> out;
        for (const auto& x : v) {
            Rational e = x * (q - 1);
            if (e.get_den() != 1)
                fail(ErrorKind::AssumptionFails, "(q-1)*" + to_string(x) + " is not an integer for q=" + std::to_string(q));
            out.push_back(to_i64(e.get_num()));
        }
        return out;
    };
    return {conv(P.alpha()), conv(P.beta())};
}

} // namespace detail

inline bool assumption_holds(const HGParams& P, int64_t q) { return (q - 1) % P.common_denominator() == 0; }

namespace detail {

/// (1/(1-q)) sum_m coeffs[m] * zeta_{q-1}^(m * arg_log), all coefficients over one conductor.
inline CycloNum fourier_sum(const std::vector<CycloNum>& coeffs, int64_t q, int64_t arg_log) {
    const int64_t N = coeffs.front().conductor();
    std::vector<int64_t> shifts(coeffs.size());
    for (size_t m = 0; m < coeffs.size(); ++m) shifts[m] = static_cast<int64_t>(m) * arg_log % (q - 1) * (N / (q - 1));
    return CycloNum::sum_of_rotations(N, coeffs, shifts) / Rational(1 - q);
}

/// Brings every entry to the lcm of the conductors and of q-1.
inline void common_conductor(std::vector<CycloNum>& v, int64_t q) {
    int64_t N = q - 1;
    for (const auto& c : v) N = std::lcm(N, c.conductor());
    for (auto& c : v) c = c.embed(N);
}

} // namespace detail

/// Coefficients prod_i g(m + a_i) g(-m - b_i) / (g(a_i) g(-b_i)) for m = 0 .. q-2.
inline std::vector<CycloNum> classic_coefficients(const HGParams& P, const FieldPtr& F) {
    const int64_t q = F->q();
    auto [a, b] = detail::integral_exponents(P, q);
    const auto& g = *gauss_table(F, 1);
    auto G = [&](int64_t m) -> const CycloNum& { return g[mod(m, q - 1)]; };
    CycloNum inv = CycloNum::one(1);
    for (int i = 0; i < P.d(); ++i) inv *= gauss_sum_inverse(MultChar(F, a[i])) * gauss_sum_inverse(MultChar(F, -b[i]));
    std::vector<CycloNum> out;
    for (int64_t m = 0; m < q - 1; ++m) {
        CycloNum term = inv;
        for (int i = 0; i < P.d(); ++i) term *= G(m + a[i]) * G(-m - b[i]);
        out.push_back(std::move(term));
    }
    detail::common_conductor(out, q);
    return out;
}

/// The classical finite hypergeometric sum over F (omega is F's generator character).
inline CycloNum hq_classic(const HGParams& P, const FieldPtr& F, FqElem t) {
    t = detail::require_unit_arg(*F, t);
    FqElem arg = P.d() % 2 ? F->neg(t) : t;
    return detail::fourier_sum(classic_coefficients(P, F), F->q(), F->dlog(arg));
}

inline CycloNum hq_classic(const HGParams& P, int64_t p, int f, int64_t t_code) {
    auto F = make_field(p, f);
    return hq_classic(P, F, F->elem(static_cast<uint32_t>(t_code)));
}

/// hq_classic at every t = g^j, indexed by j.
inline std::vector<CycloNum> hq_classic_all(const HGParams& P, const FieldPtr& F) {
    const int64_t q = F->q();
    const auto coeffs = classic_coefficients(P, F);
    const int64_t sign_log = P.d() % 2 ? F->dlog(F->neg(F->one())) : 0;
    std::vector<CycloNum> out;
    for (int64_t j = 0; j < q - 1; ++j) out.push_back(detail::fourier_sum(coeffs, q, mod(j + sign_log, q - 1)));
    return out;
}

/// Coefficient g_A(chi_A w^m) g_B(conj chi_B w^-m) / (g_A(chi_A) g_B(conj chi_B)).
inline CycloNum fourier_coefficient(const HGAlgebraInstance& I, int64_t m, int64_t twist = 1) {
    CycloNum num = algebra_gauss_sum(I.chiA.times_norm_power(m), twist) *
                   algebra_gauss_sum(I.chiB.conj().times_norm_power(-m), twist);
    CycloNum den = algebra_gauss_sum(I.chiA, twist) * algebra_gauss_sum(I.chiB.conj(), twist);
    return num / den;
}

inline std::vector<CycloNum> fourier_coefficients(const HGAlgebraInstance& I, int64_t twist = 1) {
    const int64_t q = I.base()->q();
    const CycloNum inv = algebra_gauss_sum_inverse(I.chiA, twist) * algebra_gauss_sum_inverse(I.chiB.conj(), twist);
    std::vector<CycloNum> out;
    for (int64_t m = 0; m < q - 1; ++m)
        out.push_back(algebra_gauss_sum(I.chiA.times_norm_power(m), twist) *
                      algebra_gauss_sum(I.chiB.conj().times_norm_power(-m), twist) * inv);
    detail::common_conductor(out, q);
    return out;
}

namespace detail {

inline int64_t norm_of_minus_one_log(const HGAlgebraInstance& I) {
    const auto& base = *I.base();
    return base.dlog(algebra_norm_to_base(*I.B, algebra_scalar(*I.B, base.neg(base.one()))));
}

} // namespace detail

/// Fourier form: (1/(1-q)) sum_m coefficient(m) * omega(N_B(-1) t)^m.
inline CycloNum hq_algebra_fourier(const HGAlgebraInstance& I, FqElem t, int64_t twist = 1) {
    const auto& base = *I.base();
    t = detail::require_unit_arg(base, t);
    const int64_t targ = mod(detail::norm_of_minus_one_log(I) + base.dlog(t), base.q() - 1);
    return detail::fourier_sum(fourier_coefficients(I, twist), base.q(), targ);
}

/// hq_algebra_fourier at every t = g^j of the base field, indexed by j.
inline std::vector<CycloNum> hq_algebra_fourier_all(const HGAlgebraInstance& I, int64_t twist = 1) {
    const int64_t q = I.base()->q();
    const auto coeffs = fourier_coefficients(I, twist);
    const int64_t nb = detail::norm_of_minus_one_log(I);
    std::vector<CycloNum> out;
    for (int64_t j = 0; j < q - 1; ++j) out.push_back(detail::fourier_sum(coeffs, q, mod(nb + j, q - 1)));
    return out;
}

namespace detail {

// Per-unit data of one algebra: exponent of the summand in zeta_{L p}, and the
// dlog of its norm to the base field.
struct UnitData {
    int64_t exponent;
    int64_t norm_log;
};

inline std::vector<UnitData> unit_data(const SemisimpleAlgebra& A, const std::vector<int64_t>& exps, int64_t L,
                                       int64_t twist, bool negate_argument) {
    const int64_t p = A.base()->p(), q = A.base()->q(), N = L * p;
    std::vector<UnitData> out;
    for_each_unit(A, [&](const std::vector<int64_t>& j) {
        int64_t tr = 0, ce = 0, nl = 0;
        for (size_t i = 0; i < j.size(); ++i) {
            const auto& c = A.components()[i];
            const auto& F = *c.field;
            FqElem x = F.gen_pow(j[i]);
            FqElem y = negate_argument ? F.neg(x) : x;
            tr += F.trace_to_prime(y);
            ce += exps[i] * F.dlog(y) % (F.q() - 1) * (L / (F.q() - 1));
            nl += c.norm_log * j[i];
        }
        out.push_back({mod(p * mod(ce, L) + L * mod(twist * tr, p), N), mod(nl, q - 1)});
    });
    return out;
}

} // namespace detail

/// Direct character sum over unit pairs with t N_A(x) = N_B(y).
inline CycloNum hq_algebra_direct(const HGAlgebraInstance& I, FqElem t, int64_t twist = 1) {
    const auto& base = *I.base();
    t = detail::require_unit_arg(base, t);
    if (mod(twist, base.p()) == 0) fail(ErrorKind::NotUnit, "additive twist must be a unit of F_p");
    const int64_t q = base.q(), p = base.p();
    const int64_t L = std::lcm(I.A->character_conductor(), I.B->character_conductor());
    const int64_t N = L * p;

    // x side: psi_A(x) chi_A(x), keyed by dlog N_A(x).
    auto xs = detail::unit_data(*I.A, I.chiA.exps, L, twist, false);
    // y side: psi_B(-y) conj(chi_B)(-y), keyed by dlog N_B(y).
    auto ys = detail::unit_data(*I.B, I.chiB.conj().exps, L, twist, true);

    std::vector<std::vector<int64_t>> by_norm(q - 1, std::vector<int64_t>(N, 0));
    for (const auto& y : ys) ++by_norm[y.norm_log][y.exponent];

    const int64_t tl = base.dlog(t);
    std::vector<int64_t> counts(N, 0);
    for (const auto& x : xs) {
        const auto& bucket = by_norm[mod(tl + x.norm_log, q - 1)];
        for (int64_t e = 0; e < N; ++e)
            if (bucket[e]) counts[(x.exponent + e) % N] += bucket[e];
    }
    CycloNum S = CycloNum::from_exponent_counts(N, counts);
    return -S * algebra_gauss_sum_inverse(I.chiA, twist) * algebra_gauss_sum_inverse(I.chiB.conj(), twist);
}

/// A = B = F_q^d with chi_A = ((q-1) alpha_i), chi_B = ((q-1) beta_i).
inline HGAlgebraInstance split_instance(const HGParams& P, const FieldPtr& F) {
    auto [a, b] = detail::integral_exponents(P, F->q());
    std::vector<FieldPtr> comps(P.d(), F);
    auto A = std::make_shared<const SemisimpleAlgebra>(F, comps);
    auto B = std::make_shared<const SemisimpleAlgebra>(F, comps);
    return {A, B, AlgebraChar(A, a), AlgebraChar(B, b)};
}

/// Algebras over F_p built from the p-orbits: one component F_{p^l} per orbit of
/// length l, with character exponent (p^l - 1) * (orbit representative).
/// rotation picks the representative at that position along each orbit.
/// Component generators are chosen with norm equal to the generator of F_p.
inline HGAlgebraInstance orbit_instance(const HGParams& P, int64_t p, int rotation = 0) {
    auto orbits = p_orbits(P, p);
    auto base = make_field(p, 1);
    const int64_t g = base->generator().code;
    auto build = [&](const std::vector<Orbit>& os, const std::vector<Rational>& vals) {
        std::vector<FieldPtr> comps;
        std::vector<int64_t> exps;
        for (const auto& o : os) {
            int l = o.length();
            FieldPtr F = l == 1 ? base : make_field(p, l, FieldOptions{.norm_to_prime = g});
            const Rational& rep = vals[o.indices[rotation % l]];
            Rational e = rep * (F->q() - 1);
            if (e.get_den() != 1) fail(ErrorKind::InternalInconsistency, "orbit exponent is not integral");
            comps.push_back(F);
            exps.push_back(to_i64(e.get_num()));
        }
        auto alg = std::make_shared<const SemisimpleAlgebra>(base, comps);
        return std::make_pair(alg, AlgebraChar(alg, exps));
    };
    auto [A, chiA] = build(orbits.alpha, P.alpha());
    auto [B, chiB] = build(orbits.beta, P.beta());
    return {A, B, chiA, chiB};
}

/// Greene's function equals greene_factor * hq_classic:
/// omega(-1)^{|beta|(q-1)} q^-d prod g(a_i) g(-b_i) / g(a_i - b_i), |beta| over [0,1) representatives.
inline CycloNum greene_factor(const HGParams& P, const FieldPtr& F) {
    const int64_t q = F->q();
    auto [a, b] = detail::integral_exponents(P, q);
    const auto& g = *gauss_table(F, 1);
    auto G = [&](int64_t m) -> const CycloNum& { return g[mod(m, q - 1)]; };
    int64_t bsum = 0;
    for (auto x : b) bsum += x;
    CycloNum r = CycloNum::root_of_unity(q - 1, F->dlog(F->neg(F->one())) * bsum);
    Rational qd = 1;
    for (int i = 0; i < P.d(); ++i) qd *= q;
    r = r / qd;
    for (int i = 0; i < P.d(); ++i) r = r * G(a[i]) * G(-b[i]) / G(a[i] - b[i]);
    return r;
}

/// hq_classic without the normalizing product prod g(a_i) g(-b_i).
inline CycloNum katz_unnormalized(const HGParams& P, const FieldPtr& F, FqElem t) {
    auto [a, b] = detail::integral_exponents(P, F->q());
    const auto& g = *gauss_table(F, 1);
    CycloNum prod = CycloNum::one(1);
    for (int i = 0; i < P.d(); ++i) prod *= g[mod(a[i], F->q() - 1)] * g[mod(-b[i], F->q() - 1)];
    return hq_classic(P, F, t) * prod;
}

} // namespace hgf
