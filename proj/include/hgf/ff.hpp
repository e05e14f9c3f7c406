#pragma once

// Explicit finite fields F_{p^f} = F_p[x]/(m(x)) with a fixed generator of the
// unit group and full exponent / discrete-log / trace tables.
//
// Elements are encoded as integers: the element c_0 + c_1 x + ... + c_{f-1} x^{f-1}
// has code sum c_i p^i. In particular the prime subfield F_p is the codes 0..p-1.

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hgf/arith.hpp"
#include "hgf/polymodp.hpp"

namespace hgf {

inline constexpr int64_t kDefaultMaxFieldSize = 1 << 16;

struct FieldOptions {
    /// 0 picks the smallest generator, 1 the second smallest, ...
    int generator_rank = 0;
    /// If set, only generators whose norm to F_p equals this residue are eligible.
    std::optional<int64_t> norm_to_prime = std::nullopt;
    int64_t max_size = kDefaultMaxFieldSize;
};

class FqField;

struct FqElem {
    const FqField* field = nullptr;
    uint32_t code = 0;

    bool is_zero() const { return code == 0; }
    friend bool operator==(const FqElem& a, const FqElem& b) { return a.code == b.code && a.field == b.field; }
};

class FqField {
public:
    int64_t p() const { return p_; }
    int f() const { return f_; }
    int64_t q() const { return q_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }
    FqElem generator() const { return elem(generator_); }

    FqElem elem(uint32_t code) const {
        if (code >= q_) fail(ErrorKind::NotSubfield, "code " + std::to_string(code) + " outside F_" + std::to_string(q_));
        return {this, code};
    }
    FqElem zero() const { return {this, 0}; }
    FqElem one() const { return {this, 1}; }
    /// Image of the integer n in the prime field.
    FqElem from_int(int64_t n) const { return {this, static_cast<uint32_t>(mod(n, p_))}; }
    FqElem from_coeffs(const std::vector<int64_t>& c) const {
        uint32_t code = 0, pw = 1;
        for (int i = 0; i < f_ && i < static_cast<int>(c.size()); ++i, pw *= static_cast<uint32_t>(p_))
            code += static_cast<uint32_t>(mod(c[i], p_)) * pw;
        return {this, code};
    }
    std::vector<int64_t> coeffs(FqElem x) const {
        std::vector<int64_t> c(f_);
        uint32_t v = x.code;
        for (int i = 0; i < f_; ++i, v /= static_cast<uint32_t>(p_)) c[i] = v % p_;
        return c;
    }

    FqElem add(FqElem a, FqElem b) const { return {this, add_codes(a.code, b.code, 1)}; }
    FqElem sub(FqElem a, FqElem b) const { return {this, add_codes(a.code, b.code, -1)}; }
    FqElem neg(FqElem a) const { return {this, add_codes(0, a.code, -1)}; }
    FqElem mul(FqElem a, FqElem b) const {
        if (a.code == 0 || b.code == 0) return zero();
        return {this, exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)]};
    }
    FqElem pow(FqElem a, int64_t e) const {
        if (a.code == 0) {
            if (e == 0) return one();
            if (e < 0) fail(ErrorKind::ZeroElement, "negative power of zero");
            return zero();
        }
        return {this, exp_[mod(log_[a.code] * mod(e, q_ - 1), q_ - 1)]};
    }
    FqElem inv(FqElem a) const {
        if (a.code == 0) fail(ErrorKind::ZeroElement, "inverse of zero");
        return pow(a, -1);
    }
    FqElem frobenius(FqElem a, int times = 1) const { return pow(a, ipow(p_, times % f_)); }

    /// Exponent base the fixed generator, in [0, q-2].
    int64_t dlog(FqElem x) const {
        if (x.code == 0) fail(ErrorKind::ZeroElement, "discrete log of zero");
        return log_[x.code];
    }
    FqElem gen_pow(int64_t j) const { return {this, exp_[mod(j, q_ - 1)]}; }

    /// Absolute trace to F_p, as a residue in [0, p).
    int64_t trace_to_prime(FqElem x) const { return trace_[x.code]; }
    /// Absolute norm to F_p, as a residue in [0, p).
    int64_t norm_to_prime(FqElem x) const {
        if (x.code == 0) return 0;
        return pow(x, (q_ - 1) / (p_ - 1)).code;
    }

    /// Identifies the presentation: (p, f, modulus, generator).
    std::string key() const {
        std::string s = std::to_string(p_) + "^" + std::to_string(f_) + "[";
        for (size_t i = 0; i < modulus_.size(); ++i) s += (i ? "," : "") + std::to_string(modulus_[i]);
        return s + "]g" + std::to_string(generator_);
    }

    std::string format(FqElem x) const {
        auto c = coeffs(x);
        std::string s;
        for (int i = f_ - 1; i >= 0; --i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
            if (i > 0) s += (c[i] != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        return s.empty() ? "0" : s;
    }

    std::string modulus_string() const {
        std::string s;
        for (int i = f_; i >= 0; --i) {
            if (modulus_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || modulus_[i] != 1) s += std::to_string(modulus_[i]);
            if (i > 0) s += (modulus_[i] != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        return s;
    }

    // Polynomial multiplication of codes mod the modulus (used before tables exist).
    uint32_t slow_mul(uint32_t a, uint32_t b) const {
        auto pa = code_to_poly(a), pb = code_to_poly(b);
        auto r = polymodp::rem(polymodp::mul(pa, pb, p_), modulus_, p_);
        return poly_to_code(r);
    }

    friend std::shared_ptr<const FqField> make_field(int64_t p, int f, const FieldOptions& opts);

private:
    FqField() = default;

    uint32_t add_codes(uint32_t a, uint32_t b, int sign) const {
        if (p_ == 2) return a ^ b;
        uint32_t r = 0, pw = 1;
        for (int i = 0; i < f_; ++i, pw *= static_cast<uint32_t>(p_)) {
            int64_t da = a % p_, db = b % p_;
            a /= static_cast<uint32_t>(p_);
            b /= static_cast<uint32_t>(p_);
            r += static_cast<uint32_t>(mod(da + sign * db, p_)) * pw;
        }
        return r;
    }

    polymodp::Poly code_to_poly(uint32_t c) const {
        polymodp::Poly r(f_);
        for (int i = 0; i < f_; ++i, c /= static_cast<uint32_t>(p_)) r[i] = c % p_;
        polymodp::trim(r);
        return r;
    }
    uint32_t poly_to_code(const polymodp::Poly& r) const {
        uint32_t code = 0, pw = 1;
        for (size_t i = 0; i < r.size(); ++i, pw *= static_cast<uint32_t>(p_)) code += static_cast<uint32_t>(r[i]) * pw;
        return code;
    }
    uint32_t slow_pow(uint32_t a, int64_t e) const {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    int64_t p_ = 2;
    int f_ = 1;
    int64_t q_ = 2;
    std::vector<int64_t> modulus_;
    uint32_t generator_ = 1;
    std::vector<uint32_t> exp_;
    std::vector<int64_t> log_;
    std::vector<int64_t> trace_;
};

namespace detail {

// Lexicographic enumeration with the constant coefficient most significant:
// the i-th tuple in this order, returned as coefficients c_0..c_{n-1}.
inline std::vector<int64_t> lex_tuple(int64_t index, int n, int64_t p) {
    std::vector<int64_t> c(n);
    for (int i = n - 1; i >= 0; --i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

} // namespace detail

/// Builds F_{p^f} deterministically: the modulus is the smallest monic irreducible
/// of degree f and the generator the smallest (or rank-th) unit of order q-1, both
/// in lexicographic order comparing the constant coefficient first.
inline std::shared_ptr<const FqField> make_field(int64_t p, int f, const FieldOptions& opts = {}) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (f < 1) fail(ErrorKind::NotSubfield, "extension degree must be positive");
    double approx = std::pow(static_cast<double>(p), f);
    if (approx > static_cast<double>(opts.max_size))
        fail(ErrorKind::FieldTooLarge, "F_" + std::to_string(p) + "^" + std::to_string(f) + " exceeds bound " +
                                           std::to_string(opts.max_size));

    static std::mutex mu;
    static std::map<std::tuple<int64_t, int, int, int64_t>, std::shared_ptr<const FqField>> cache;
    auto cache_key = std::make_tuple(p, f, opts.generator_rank, opts.norm_to_prime.value_or(-1));
    {
        std::lock_guard lock(mu);
        auto it = cache.find(cache_key);
        if (it != cache.end()) return it->second;
    }

    std::shared_ptr<FqField> F(new FqField());
    F->p_ = p;
    F->f_ = f;
    F->q_ = ipow(p, f);
    const int64_t q = F->q_;

    if (f == 1) {
        F->modulus_ = {0, 1};
    } else {
        for (int64_t idx = 0; idx < ipow(p, f); ++idx) {
            auto c = detail::lex_tuple(idx, f, p);
            c.push_back(1);
            if (polymodp::is_irreducible(c, p)) {
                F->modulus_ = c;
                break;
            }
        }
    }

    auto order_factors = prime_factors(q - 1);
    int rank = opts.generator_rank;
    bool found = false;
    for (int64_t idx = 1; idx < q && !found; ++idx) {
        auto c = detail::lex_tuple(idx, f, p);
        uint32_t code = 0, pw = 1;
        for (int i = 0; i < f; ++i, pw *= static_cast<uint32_t>(p)) code += static_cast<uint32_t>(c[i]) * pw;
        if (code == 0) continue;
        bool primitive = q == 2 ? code == 1 : true;
        for (int64_t r : order_factors)
            if (F->slow_pow(code, (q - 1) / r) == 1) {
                primitive = false;
                break;
            }
        if (!primitive) continue;
        if (opts.norm_to_prime) {
            uint32_t n = F->slow_pow(code, (q - 1) / (p - 1));
            if (static_cast<int64_t>(n) != mod(*opts.norm_to_prime, p)) continue;
        }
        if (rank-- > 0) continue;
        F->generator_ = code;
        found = true;
    }
    if (!found) fail(ErrorKind::InternalInconsistency, "no generator with the requested properties");

    F->exp_.resize(q - 1);
    F->log_.assign(q, -1);
    uint32_t cur = 1;
    for (int64_t j = 0; j < q - 1; ++j) {
        F->exp_[j] = cur;
        if (F->log_[cur] != -1) fail(ErrorKind::InternalInconsistency, "generator has short order");
        F->log_[cur] = j;
        cur = F->slow_mul(cur, F->generator_);
    }
    if (cur != 1) fail(ErrorKind::InternalInconsistency, "generator order is not q-1");

    F->trace_.assign(q, 0);
    for (int64_t x = 1; x < q; ++x) {
        FqElem e{F.get(), static_cast<uint32_t>(x)};
        FqElem acc = F->zero();
        for (int i = 0; i < f; ++i) acc = F->add(acc, F->frobenius(e, i));
        if (acc.code >= p) fail(ErrorKind::InternalInconsistency, "trace left the prime field");
        F->trace_[x] = acc.code;
    }

    std::lock_guard lock(mu);
    return cache.emplace(cache_key, std::move(F)).first->second;
}

/// An embedding of F_{p^e} into F_{p^f} (e | f). The small field's variable goes to itself
/// when both fields share a modulus, otherwise to the root of its modulus with the smallest
/// code, so the embedding never depends on the chosen generators.
class FieldEmbedding {
public:
    FieldEmbedding(std::shared_ptr<const FqField> small, std::shared_ptr<const FqField> big)
        : small_(std::move(small)), big_(std::move(big)) {
        if (small_->p() != big_->p() || big_->f() % small_->f() != 0)
            fail(ErrorKind::NotSubfield, "F_" + std::to_string(small_->q()) + " is not a subfield of F_" +
                                             std::to_string(big_->q()));
        const int64_t Q = big_->q(), q = small_->q();
        const int64_t step = (Q - 1) / (q - 1);
        std::optional<FqElem> root;
        const auto& m = small_->modulus();
        if (small_->f() == 1) {
            root = big_->zero(); // only constants occur
        } else if (m == big_->modulus()) {
            root = big_->elem(static_cast<uint32_t>(small_->p()));
        } else {
            for (int64_t j = 0; j < q - 1; ++j) {
                FqElem r = big_->gen_pow(j * step);
                FqElem acc = big_->zero();
                for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
                    acc = big_->add(big_->mul(acc, r), big_->from_int(m[i]));
                if (acc.is_zero() && (!root || r.code < root->code)) root = r;
            }
        }
        if (!root) fail(ErrorKind::InternalInconsistency, "no root of the subfield modulus");
        to_big_.resize(q);
        to_small_.assign(Q, -1);
        for (int64_t c = 0; c < q; ++c) {
            auto coeffs = small_->coeffs(small_->elem(static_cast<uint32_t>(c)));
            FqElem acc = big_->zero(), pw = big_->one();
            for (int64_t coeff : coeffs) {
                acc = big_->add(acc, big_->mul(big_->from_int(coeff), pw));
                pw = big_->mul(pw, *root);
            }
            to_big_[c] = acc.code;
            to_small_[acc.code] = c;
        }
    }

    const FqField& small() const { return *small_; }
    const FqField& big() const { return *big_; }
    std::shared_ptr<const FqField> small_ptr() const { return small_; }
    std::shared_ptr<const FqField> big_ptr() const { return big_; }
    int degree() const { return big_->f() / small_->f(); }

    FqElem to_big(FqElem x) const { return big_->elem(to_big_[x.code]); }
    FqElem to_small(FqElem y) const {
        if (to_small_[y.code] < 0) fail(ErrorKind::NotSubfield, "element not in the subfield");
        return small_->elem(static_cast<uint32_t>(to_small_[y.code]));
    }
    bool in_subfield(FqElem y) const { return to_small_[y.code] >= 0; }

    /// Relative trace sum_i y^(q^i).
    FqElem trace(FqElem y) const {
        FqElem acc = big_->zero();
        for (int i = 0; i < degree(); ++i) acc = big_->add(acc, big_->frobenius(y, i * small_->f()));
        return to_small(acc);
    }
    /// Relative norm prod_i y^(q^i) = y^((Q-1)/(q-1)).
    FqElem norm(FqElem y) const {
        if (y.is_zero()) return small_->zero();
        return to_small(big_->pow(y, (big_->q() - 1) / (small_->q() - 1)));
    }

private:
    std::shared_ptr<const FqField> small_;
    std::shared_ptr<const FqField> big_;
    std::vector<uint32_t> to_big_;
    std::vector<int64_t> to_small_;
};

} // namespace hgf
