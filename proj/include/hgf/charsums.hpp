#pragma once

// Multiplicative and additive characters on finite fields and on semisimple
// algebras (finite products of finite fields), with exact Gauss sums.
//
// A multiplicative character on F_q is an exponent e mod q-1 relative to the
// field's fixed generator g: chi(g^j) = zeta_{q-1}^{e j}. The additive character
// is psi_a(x) = zeta_p^{a Tr(x)}, with the twist a in F_p^x kept explicit.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "hgf/cyclo.hpp"
#include "hgf/ff.hpp"

namespace hgf {

using FieldPtr = std::shared_ptr<const FqField>;

struct MultChar {
    FieldPtr field;
    int64_t e = 0;

    MultChar(FieldPtr F, int64_t exponent) : field(std::move(F)), e(mod(exponent, field->q() - 1)) {}

    bool trivial() const { return e == 0; }
    MultChar conj() const { return {field, -e}; }
    MultChar pow(int64_t k) const { return {field, e * k}; }
    friend MultChar operator*(const MultChar& a, const MultChar& b) { return {a.field, a.e + b.e}; }
    friend bool operator==(const MultChar& a, const MultChar& b) { return a.field == b.field && a.e == b.e; }

    /// chi(x) in Q(zeta_{q-1}); x must be nonzero.
    CycloNum operator()(FqElem x) const {
        if (x.is_zero()) fail(ErrorKind::ZeroElement, "multiplicative character at zero");
        return CycloNum::root_of_unity(field->q() - 1, e * field->dlog(x));
    }
};

inline CycloNum char_eval(const MultChar& chi, FqElem x) { return chi(x); }

/// psi_a(x) = zeta_p^{a Tr(x)}.
inline CycloNum add_char(const FqField& F, FqElem x, int64_t a = 1) {
    return CycloNum::root_of_unity(F.p(), a * F.trace_to_prime(x));
}

/// g(chi) = sum_{x != 0} chi(x) psi_a(x), summed directly.
inline CycloNum gauss_sum_direct(const FqField& F, int64_t e, int64_t a = 1) {
    const int64_t q = F.q(), p = F.p(), N = (q - 1) * p;
    std::vector<int64_t> counts(N, 0);
    for (int64_t j = 0; j < q - 1; ++j) {
        int64_t tr = F.trace_to_prime(F.gen_pow(j));
        ++counts[mod(p * mod(e * j, q - 1) + (q - 1) * mod(a * tr, p), N)];
    }
    return CycloNum::from_exponent_counts(N, counts);
}

/// Gauss sums of every character of F for twist a; computed once per field and twist.
inline std::shared_ptr<const std::vector<CycloNum>> gauss_table(const FieldPtr& F, int64_t a = 1) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int64_t>, std::shared_ptr<const std::vector<CycloNum>>> cache;
    auto key = std::make_pair(F->key(), mod(a, F->p()));
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto table = std::make_shared<std::vector<CycloNum>>();
    table->reserve(F->q() - 1);
    for (int64_t e = 0; e < F->q() - 1; ++e) table->push_back(gauss_sum_direct(*F, e, a));
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(table)).first->second;
}

inline CycloNum gauss_sum(const MultChar& chi, int64_t a = 1) {
    if (mod(a, chi.field->p()) == 0) fail(ErrorKind::NotUnit, "additive twist must be a unit of F_p");
    return (*gauss_table(chi.field, a))[chi.e];
}

/// g(m) = g(omega^m) on F with omega(g) = zeta_{q-1}.
inline CycloNum gauss_sum(const FieldPtr& F, int64_t m, int64_t a = 1) { return gauss_sum(MultChar(F, m), a); }

// Semisimple algebras -----------------------------------------------------------

struct AlgebraComponent {
    FieldPtr field;
    std::shared_ptr<const FieldEmbedding> over_base;
    /// Degree [F_i : F_q].
    int degree = 1;
    /// dlog_base(N_i(g_i)): omega(N_i(x)) = zeta_{q-1}^{norm_log * dlog_i(x)}.
    int64_t norm_log = 1;
};

/// A direct sum of finite field extensions of a common base F_q.
class SemisimpleAlgebra {
public:
    SemisimpleAlgebra(FieldPtr base, const std::vector<FieldPtr>& components) : base_(std::move(base)) {
        if (components.empty()) fail(ErrorKind::LengthMismatch, "algebra needs at least one component");
        std::map<std::string, std::shared_ptr<const FieldEmbedding>> embeddings;
        for (const auto& F : components) {
            if (F->p() != base_->p() || F->f() % base_->f() != 0)
                fail(ErrorKind::NotSubfield, "component F_" + std::to_string(F->q()) + " does not contain F_" +
                                                 std::to_string(base_->q()));
            auto& emb = embeddings[F->key()];
            if (!emb) emb = std::make_shared<FieldEmbedding>(base_, F);
            AlgebraComponent c;
            c.field = F;
            c.over_base = emb;
            c.degree = F->f() / base_->f();
            c.norm_log = base_->dlog(emb->norm(F->generator()));
            comps_.push_back(std::move(c));
        }
    }

    const FieldPtr& base() const { return base_; }
    const std::vector<AlgebraComponent>& components() const { return comps_; }
    size_t rank() const { return comps_.size(); }
    int dimension() const {
        int d = 0;
        for (const auto& c : comps_) d += c.degree;
        return d;
    }
    /// |A| as a set.
    int64_t size() const {
        int64_t s = 1;
        for (const auto& c : comps_) s *= c.field->q();
        return s;
    }
    /// lcm of q_i - 1: every character value lies in Q(zeta_L).
    int64_t character_conductor() const {
        int64_t L = 1;
        for (const auto& c : comps_) L = std::lcm(L, c.field->q() - 1);
        return L;
    }

    std::string describe() const {
        std::string s;
        for (size_t i = 0; i < comps_.size(); ++i) s += (i ? "+" : "") + std::string("F") + std::to_string(comps_[i].field->q());
        return s + " over F" + std::to_string(base_->q());
    }

private:
    FieldPtr base_;
    std::vector<AlgebraComponent> comps_;
};

using AlgebraPtr = std::shared_ptr<const SemisimpleAlgebra>;

struct AlgebraElem {
    std::vector<FqElem> parts;

    bool is_unit() const {
        for (const auto& x : parts)
            if (x.is_zero()) return false;
        return true;
    }
};

inline AlgebraElem algebra_scalar(const SemisimpleAlgebra& A, FqElem base_elem) {
    AlgebraElem x;
    for (const auto& c : A.components()) x.parts.push_back(c.over_base->to_big(base_elem));
    return x;
}

/// A multiplicative character chi(x_1..x_r) = prod chi_i(x_i), stored as per-component exponents.
struct AlgebraChar {
    AlgebraPtr algebra;
    std::vector<int64_t> exps;

    AlgebraChar(AlgebraPtr A, std::vector<int64_t> e) : algebra(std::move(A)), exps(std::move(e)) {
        if (exps.size() != algebra->rank())
            fail(ErrorKind::LengthMismatch, "character needs one exponent per component");
        for (size_t i = 0; i < exps.size(); ++i) exps[i] = mod(exps[i], algebra->components()[i].field->q() - 1);
    }

    MultChar component(size_t i) const { return {algebra->components()[i].field, exps[i]}; }
    AlgebraChar conj() const { return pow(-1); }
    AlgebraChar pow(int64_t k) const {
        auto e = exps;
        for (auto& x : e) x *= k;
        return {algebra, e};
    }
    /// chi * (omega o N)^m, where N is the norm to the base field.
    AlgebraChar times_norm_power(int64_t m) const {
        auto e = exps;
        const int64_t q = algebra->base()->q();
        for (size_t i = 0; i < e.size(); ++i) {
            const auto& c = algebra->components()[i];
            e[i] += m * c.norm_log * ((c.field->q() - 1) / (q - 1));
        }
        return {algebra, e};
    }
    bool trivial() const {
        for (auto e : exps)
            if (e != 0) return false;
        return true;
    }
};

/// Absolute trace to F_p of the F_p-linear map "multiply by x".
inline int64_t algebra_trace(const SemisimpleAlgebra& A, const AlgebraElem& x) {
    int64_t t = 0;
    for (size_t i = 0; i < A.rank(); ++i) t += A.components()[i].field->trace_to_prime(x.parts[i]);
    return mod(t, A.base()->p());
}

/// Norm to the base field F_q: prod_i N_{F_i/F_q}(x_i).
inline FqElem algebra_norm_to_base(const SemisimpleAlgebra& A, const AlgebraElem& x) {
    const auto& base = *A.base();
    FqElem acc = base.one();
    for (size_t i = 0; i < A.rank(); ++i) acc = base.mul(acc, A.components()[i].over_base->norm(x.parts[i]));
    return acc;
}

/// Norm to F_p: determinant of "multiply by x" over F_p.
inline int64_t algebra_norm_to_prime(const SemisimpleAlgebra& A, const AlgebraElem& x) {
    int64_t p = A.base()->p(), acc = 1;
    for (size_t i = 0; i < A.rank(); ++i) acc = acc * A.components()[i].field->norm_to_prime(x.parts[i]) % p;
    return acc;
}

inline CycloNum algebra_char_eval(const AlgebraChar& chi, const AlgebraElem& x) {
    if (!x.is_unit()) fail(ErrorKind::NotUnit, "algebra character at a non-unit");
    const int64_t L = chi.algebra->character_conductor();
    int64_t e = 0;
    for (size_t i = 0; i < chi.exps.size(); ++i) {
        const auto& F = *chi.algebra->components()[i].field;
        e += chi.exps[i] * F.dlog(x.parts[i]) % (F.q() - 1) * (L / (F.q() - 1));
    }
    return CycloNum::root_of_unity(L, e);
}

/// g_A(chi) by the component product formula prod_i g(chi_i).
inline CycloNum algebra_gauss_sum(const AlgebraChar& chi, int64_t a = 1) {
    CycloNum g = CycloNum::one(1);
    for (size_t i = 0; i < chi.exps.size(); ++i) g *= gauss_sum(chi.component(i), a);
    return g;
}

/// 1/g(chi): conj(g(chi))/q for nontrivial chi, -1 for the trivial one.
inline CycloNum gauss_sum_inverse(const MultChar& chi, int64_t a = 1) {
    if (chi.trivial()) return CycloNum::from_rational(1, Rational(-1));
    return gauss_sum(chi, a).conj() / Rational(chi.field->q());
}

inline CycloNum algebra_gauss_sum_inverse(const AlgebraChar& chi, int64_t a = 1) {
    CycloNum g = CycloNum::one(1);
    for (size_t i = 0; i < chi.exps.size(); ++i) g *= gauss_sum_inverse(chi.component(i), a);
    return g;
}

/// Calls fn(dlogs) for every unit of A, given as per-component discrete logs.
template <class Fn>
void for_each_unit(const SemisimpleAlgebra& A, Fn&& fn) {
    std::vector<int64_t> j(A.rank(), 0);
    while (true) {
        fn(static_cast<const std::vector<int64_t>&>(j));
        size_t i = 0;
        for (; i < j.size(); ++i) {
            if (++j[i] < A.components()[i].field->q() - 1) break;
            j[i] = 0;
        }
        if (i == j.size()) return;
    }
}

/// g_A(chi) = sum over all units of A of psi_a(x) chi(x); brute force.
inline CycloNum algebra_gauss_sum_bruteforce(const AlgebraChar& chi, int64_t a = 1) {
    const auto& A = *chi.algebra;
    const int64_t p = A.base()->p(), L = A.character_conductor(), N = L * p;
    std::vector<int64_t> counts(N, 0);
    for_each_unit(A, [&](const std::vector<int64_t>& j) {
        AlgebraElem x;
        for (size_t i = 0; i < j.size(); ++i) x.parts.push_back(A.components()[i].field->gen_pow(j[i]));
        int64_t tr = algebra_trace(A, x);
        int64_t ce = 0;
        for (size_t i = 0; i < j.size(); ++i) {
            int64_t qi = A.components()[i].field->q();
            ce += chi.exps[i] * j[i] % (qi - 1) * (L / (qi - 1));
        }
        ++counts[mod(p * mod(ce, L) + L * mod(a * tr, p), N)];
    });
    return CycloNum::from_exponent_counts(N, counts);
}

/// The integer f with g_A * conj(g_A) = q^f, q = |base|. Throws if the product is not
/// a power of q or disagrees with the number of base-degrees carrying a nontrivial character.
inline int gauss_norm_exponent(const AlgebraChar& chi, int64_t a = 1) {
    CycloNum g = algebra_gauss_sum(chi, a);
    auto r = (g * g.conj()).as_rational();
    const int64_t q = chi.algebra->base()->q();
    if (!r || r->get_den() != 1)
        fail(ErrorKind::InternalInconsistency, "|g_A|^2 is not a rational integer");
    BigInt v = r->get_num();
    int f = 0;
    while (v > 1 && v % q == 0) {
        v /= q;
        ++f;
    }
    if (v != 1) fail(ErrorKind::InternalInconsistency, "|g_A|^2 = " + r->get_str() + " is not a power of q");
    int expected = 0;
    for (size_t i = 0; i < chi.exps.size(); ++i)
        if (chi.exps[i] != 0) expected += chi.algebra->components()[i].degree;
    if (f != expected)
        fail(ErrorKind::InternalInconsistency, "|g_A|^2 = q^" + std::to_string(f) + ", expected q^" + std::to_string(expected));
    return f;
}

} // namespace hgf
