#pragma once

// p-adic numbers at finite precision, Teichmueller lifts, Morita's Gamma_p,
// Gauss sums through Gross-Koblitz, and the p-adic hypergeometric function G_p.
//
// Only odd primes are supported. On the p-adic side omega is the inverse
// Teichmueller character, and Q(zeta_{p-1}) embeds via zeta_{p-1} -> teich(g)^-1
// where g generates F_p^x as chosen by make_field(p, 1).

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hgf/arith.hpp"
#include "hgf/cyclo.hpp"
#include "hgf/ff.hpp"
#include "hgf/params.hpp"

namespace hgf {

namespace detail {

inline constexpr uint64_t kMaxPadicModulus = uint64_t{1} << 62;

/// p^e as a machine word; throws if it does not fit the arithmetic.
inline uint64_t padic_modulus(int64_t p, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > kMaxPadicModulus / static_cast<uint64_t>(p))
            fail(ErrorKind::PrecisionTooLarge,
                 std::to_string(p) + "^" + std::to_string(e) + " exceeds the 62-bit working modulus");
        r *= static_cast<uint64_t>(p);
    }
    return r;
}

inline uint64_t inv_mod_u64(uint64_t a, uint64_t m) {
    if (m == 1) return 0;
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr) {
        __int128 q = r / nr;
        std::tie(t, nt) = std::make_tuple(nt, t - q * nt);
        std::tie(r, nr) = std::make_tuple(nr, r - q * nr);
    }
    if (r != 1) fail(ErrorKind::NotUnit, "element is not a unit mod p^N");
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

inline uint64_t to_u64_mod(const BigInt& z, uint64_t m) {
    BigInt r = z % BigInt(std::to_string(m));
    if (r < 0) r += BigInt(std::to_string(m));
    return std::stoull(r.get_str());
}

inline BigInt big(uint64_t x) { return BigInt(std::to_string(x)); }

inline void require_odd_prime(int64_t p) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
}

} // namespace detail

/// p^v * u + O(p^(v+N)) with u a unit mod p^N; a zero carries only its absolute precision.
class PadicNum {
public:
    static constexpr int kExact = 1 << 24;

    static PadicNum zero(int64_t p, int abs_prec = kExact) {
        PadicNum z;
        z.p_ = p;
        z.v_ = abs_prec;
        return z;
    }

    static PadicNum from_integer(int64_t p, const BigInt& n, int N) {
        if (n == 0) return zero(p, kExact);
        int v = hgf::valuation(n, p);
        BigInt unit = n;
        for (int i = 0; i < v; ++i) unit /= p;
        return make(p, v, N, unit);
    }

    static PadicNum from_integer(int64_t p, int64_t n, int N) { return from_integer(p, BigInt(std::to_string(n)), N); }

    static PadicNum from_rational(int64_t p, const Rational& x, int N) {
        if (x == 0) return zero(p, kExact);
        int vn = hgf::valuation(x.get_num(), p), vd = hgf::valuation(x.get_den(), p);
        BigInt un = x.get_num(), ud = x.get_den();
        for (int i = 0; i < vn; ++i) un /= p;
        for (int i = 0; i < vd; ++i) ud /= p;
        uint64_t P = detail::padic_modulus(p, N);
        uint64_t u = mulmod(detail::to_u64_mod(un, P), detail::inv_mod_u64(detail::to_u64_mod(ud, P), P), P);
        return from_parts(p, vn - vd, N, u);
    }

    /// p^v * u with u a unit residue mod p^N.
    static PadicNum from_parts(int64_t p, int v, int N, uint64_t u) {
        if (N <= 0) return zero(p, v);
        PadicNum r;
        r.p_ = p;
        r.v_ = v;
        r.N_ = N;
        r.u_ = u % detail::padic_modulus(p, N);
        if (r.u_ % p == 0) fail(ErrorKind::InternalInconsistency, "unit part divisible by p");
        return r;
    }

    int64_t p() const { return p_; }
    bool is_zero() const { return N_ == 0; }
    /// Valuation; for a zero this is its absolute precision.
    int valuation() const { return v_; }
    /// Relative precision (0 for zero).
    int rel_prec() const { return N_; }
    int abs_prec() const { return v_ + N_; }
    uint64_t unit() const { return u_; }

    /// Base-p digits of the unit part, least significant first (N of them).
    std::vector<int64_t> unit_digits() const {
        std::vector<int64_t> out;
        uint64_t u = u_;
        for (int i = 0; i < N_; ++i) {
            out.push_back(static_cast<int64_t>(u % p_));
            u /= p_;
        }
        return out;
    }

    /// Truncation to absolute precision k (k <= abs_prec()).
    PadicNum truncate(int k) const {
        if (k >= abs_prec()) return *this;
        if (is_zero() || k <= v_) return zero(p_, k);
        return from_parts(p_, v_, k - v_, u_);
    }

    PadicNum operator-() const {
        if (is_zero()) return *this;
        uint64_t P = detail::padic_modulus(p_, N_);
        return from_parts(p_, v_, N_, (P - u_) % P);
    }

    friend PadicNum operator+(const PadicNum& a, const PadicNum& b) {
        check_same_prime(a, b);
        const int64_t p = a.p_;
        const int abs = std::min(a.abs_prec(), b.abs_prec());
        if (a.is_zero()) return b.truncate(abs);
        if (b.is_zero()) return a.truncate(abs);
        const int vmin = std::min(a.v_, b.v_);
        if (abs <= vmin) return zero(p, abs);
        const int W = abs - vmin;
        const uint64_t P = detail::padic_modulus(p, W);
        auto shifted = [&](const PadicNum& x) -> uint64_t {
            int s = x.v_ - vmin;
            if (s >= W) return 0;
            return mulmod(x.u_ % P, detail::padic_modulus(p, s), P);
        };
        uint64_t s = (shifted(a) + shifted(b)) % P;
        if (s == 0) return zero(p, abs);
        int k = 0;
        while (s % p == 0) {
            s /= p;
            ++k;
        }
        return from_parts(p, vmin + k, W - k, s);
    }

    friend PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

    friend PadicNum operator*(const PadicNum& a, const PadicNum& b) {
        check_same_prime(a, b);
        if (a.is_zero() && b.is_zero()) return zero(a.p_, clamp(a.v_ + b.v_));
        if (a.is_zero()) return zero(a.p_, clamp(a.v_ + b.v_));
        if (b.is_zero()) return zero(a.p_, clamp(a.v_ + b.v_));
        int N = std::min(a.N_, b.N_);
        uint64_t P = detail::padic_modulus(a.p_, N);
        return from_parts(a.p_, a.v_ + b.v_, N, mulmod(a.u_ % P, b.u_ % P, P));
    }

    friend PadicNum operator/(const PadicNum& a, const PadicNum& b) {
        check_same_prime(a, b);
        if (b.is_zero()) fail(ErrorKind::DivisionByZero, "p-adic division by zero");
        if (a.is_zero()) return zero(a.p_, clamp(a.v_ - b.v_));
        int N = std::min(a.N_, b.N_);
        uint64_t P = detail::padic_modulus(a.p_, N);
        return from_parts(a.p_, a.v_ - b.v_, N, mulmod(a.u_ % P, detail::inv_mod_u64(b.u_ % P, P), P));
    }

    PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
    PadicNum& operator-=(const PadicNum& o) { return *this = *this - o; }
    PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }
    PadicNum& operator/=(const PadicNum& o) { return *this = *this / o; }

    PadicNum pow(int64_t e) const {
        if (e < 0) return from_integer(p_, 1, N_ == 0 ? 1 : N_) / pow(-e);
        if (is_zero()) {
            if (e == 0) fail(ErrorKind::DivisionByZero, "0^0 of an inexact zero");
            return zero(p_, clamp(static_cast<int64_t>(v_) * e));
        }
        uint64_t P = detail::padic_modulus(p_, N_);
        return from_parts(p_, static_cast<int>(v_ * e), N_, powmod(u_, static_cast<uint64_t>(e), P));
    }

    /// Agreement modulo p^k: the difference has valuation >= k.
    bool agrees_mod(const PadicNum& o, int k) const {
        return (*this - o).valuation() >= k;
    }

    /// Representative of the value mod p^k in (-p^k/2, p^k/2]; needs valuation >= 0 and k <= abs_prec().
    BigInt centered_lift(int k) const {
        if (k > abs_prec()) fail(ErrorKind::PrecisionTooLarge, "lift beyond the known precision");
        BigInt M;
        mpz_ui_pow_ui(M.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k));
        if (is_zero() || v_ >= k) return 0;
        if (v_ < 0) fail(ErrorKind::NotPAdicInteger, "centered lift of a non-integral value");
        BigInt r = detail::big(u_);
        for (int i = 0; i < v_; ++i) r *= p_;
        r %= M;
        if (2 * r > M) r -= M;
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(v_) + ")";
        std::string s;
        auto dg = unit_digits();
        for (size_t i = 0; i < dg.size(); ++i) {
            if (dg[i] == 0) continue;
            if (!s.empty()) s += " + ";
            int e = v_ + static_cast<int>(i);
            s += std::to_string(dg[i]);
            if (e != 0) s += "*" + std::to_string(p_) + "^" + std::to_string(e);
        }
        return s + " + O(" + std::to_string(p_) + "^" + std::to_string(abs_prec()) + ")";
    }

    friend bool operator==(const PadicNum& a, const PadicNum& b) {
        return a.p_ == b.p_ && a.v_ == b.v_ && a.N_ == b.N_ && a.u_ == b.u_;
    }

private:
    int64_t p_ = 2;
    int v_ = 0;
    int N_ = 0;
    uint64_t u_ = 0;

    static int clamp(int64_t v) { return static_cast<int>(std::clamp<int64_t>(v, -kExact, kExact)); }

    static PadicNum make(int64_t p, int v, int N, const BigInt& unit) {
        uint64_t P = detail::padic_modulus(p, N);
        return from_parts(p, v, N, detail::to_u64_mod(unit, P));
    }

    static void check_same_prime(const PadicNum& a, const PadicNum& b) {
        if (a.p_ != b.p_) fail(ErrorKind::InternalInconsistency, "mixing p-adic numbers of different primes");
    }
};

/// Teichmueller lift of a mod p, as a unit mod p^N.
inline PadicNum teichmuller(int64_t p, int64_t a, int N) {
    detail::require_odd_prime(p);
    if (mod(a, p) == 0) fail(ErrorKind::ZeroElement, "Teichmueller lift of 0");
    uint64_t P = detail::padic_modulus(p, N);
    uint64_t x = static_cast<uint64_t>(mod(a, p));
    for (int i = 1; i < N; ++i) x = powmod(x, static_cast<uint64_t>(p), P);
    return PadicNum::from_parts(p, 0, N, x);
}

/// Teichmueller lift as a big integer mod p^k.
inline BigInt teichmuller_big(int64_t p, int64_t a, int k) {
    BigInt M, x = mod(a, p);
    mpz_ui_pow_ui(M.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    BigInt e = p;
    for (int i = 1; i < k; ++i) mpz_powm(x.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), M.get_mpz_t());
    return x;
}

namespace detail {

inline const Rational& bernoulli(int n) {
    static std::mutex mu;
    static std::vector<Rational> B{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(B.size()) <= n) {
        int m = static_cast<int>(B.size());
        Rational acc = 0;
        BigInt c = 1; // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += Rational(c) * B[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        Rational b = -acc / (m + 1);
        b.canonicalize();
        B.push_back(b);
    }
    return B[n];
}

/// sum_{k=0}^{a-1} k^s, exactly.
inline BigInt power_sum(int s, const BigInt& a) {
    Rational acc = 0;
    BigInt c = 1; // C(s+1, j)
    for (int j = 0; j <= s; ++j) {
        BigInt apow;
        mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(s + 1 - j));
        acc += Rational(c * apow) * bernoulli(j);
        c = c * (s + 1 - j) / (j + 1);
    }
    acc /= s + 1;
    acc.canonicalize();
    if (acc.get_den() != 1) fail(ErrorKind::InternalInconsistency, "power sum is not an integer");
    return acc.get_num();
}

// Per-(p, N) data for the block factorial: (p-1)! and H_s = sum_{0<i<p} i^-s mod p^N.
struct BlockData {
    uint64_t P = 0;
    uint64_t block = 0;
    std::vector<uint64_t> H; // H[s], s >= 1
    int smax = 0;
};

inline const BlockData& block_data(int64_t p, int N) {
    static std::shared_mutex mu;
    static std::map<std::pair<int64_t, int>, BlockData> cache;
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find({p, N}); it != cache.end()) return it->second;
    }
    BlockData d;
    d.P = padic_modulus(p, N);
    d.block = 1 % d.P;
    std::vector<uint64_t> inv(p);
    for (int64_t i = 1; i < p; ++i) {
        d.block = mulmod(d.block, static_cast<uint64_t>(i), d.P);
        inv[i] = inv_mod_u64(static_cast<uint64_t>(i), d.P);
    }
    d.smax = N + 64;
    d.H.assign(d.smax + 1, 0);
    std::vector<uint64_t> pw(p, 1 % d.P);
    for (int s = 1; s <= d.smax; ++s) {
        uint64_t h = 0;
        for (int64_t i = 1; i < p; ++i) {
            pw[i] = mulmod(pw[i], inv[i], d.P);
            h = (h + pw[i]) % d.P;
        }
        d.H[s] = h;
    }
    std::unique_lock lock(mu);
    return cache.emplace(std::pair{p, N}, std::move(d)).first->second;
}

} // namespace detail

/// prod_{0<j<n, p does not divide j} j mod p^N, by direct multiplication (reference).
inline uint64_t unit_factorial_naive(int64_t p, uint64_t n, int N) {
    uint64_t P = detail::padic_modulus(p, N), r = 1 % P;
    for (uint64_t j = 1; j < n; ++j)
        if (j % p) r = mulmod(r, j, P);
    return r;
}

/// prod_{0<j<n, p does not divide j} j mod p^N in roughly O(p + N^2) operations.
///
/// With n-1 = a p + r the product over a full block k p + 1 .. k p + (p-1) is
/// (p-1)! prod_i (1 + k p / i) = (p-1)! exp(sum_s (-1)^(s+1) (k p)^s H_s / s),
/// so the blocks k < a contribute (p-1)!^a exp(sum_s (-1)^(s+1) p^s H_s S_s(a) / s)
/// with S_s(a) = sum_{k<a} k^s.
inline uint64_t unit_factorial(int64_t p, uint64_t n, int N) {
    detail::require_odd_prime(p);
    const auto& bd = detail::block_data(p, N);
    const uint64_t P = bd.P;
    if (n <= 1) return 1 % P;
    const uint64_t m = n - 1, a = m / p, r = m % p;

    uint64_t res = powmod(bd.block, a, P);
    for (uint64_t i = 1; i <= r; ++i) res = mulmod(res, (mulmod(a % P, static_cast<uint64_t>(p), P) + i) % P, P);
    if (a == 0) return res;

    // L = p * L1; terms with p-adic order >= N + 1 - 1 are dropped since L1 only matters mod p^(N-1).
    const BigInt A = detail::big(a);
    uint64_t L1 = 0;
    for (int s = 1; s <= bd.smax; ++s) {
        int vs = 0;
        int64_t su = s;
        while (su % p == 0) {
            su /= p;
            ++vs;
        }
        const int es = s - vs; // order of p^s / s
        if (es >= N) continue;
        uint64_t term = mulmod(detail::padic_modulus(p, es - 1), bd.H[s], P);
        term = mulmod(term, detail::to_u64_mod(detail::power_sum(s, A), P), P);
        term = mulmod(term, detail::inv_mod_u64(static_cast<uint64_t>(su), P), P);
        L1 = (s % 2 == 1) ? (L1 + term) % P : (L1 + P - term) % P;
    }

    // exp(p L1) = sum_k p^(k - v(k!)) L1^k / unit(k!)
    uint64_t E = 1 % P, L1pow = 1 % P, fact_unit = 1 % P;
    int fact_val = 0;
    for (int k = 1; k <= 2 * N + 2; ++k) {
        int64_t kk = k;
        while (kk % p == 0) {
            kk /= p;
            ++fact_val;
        }
        fact_unit = mulmod(fact_unit, static_cast<uint64_t>(kk), P);
        L1pow = mulmod(L1pow, L1, P);
        int ord = k - fact_val;
        if (ord >= N) continue;
        uint64_t t = mulmod(detail::padic_modulus(p, ord), L1pow, P);
        E = (E + mulmod(t, detail::inv_mod_u64(fact_unit, P), P)) % P;
    }
    return mulmod(res, E, P);
}

/// Gamma_p(n) for a positive integer n, as a unit mod p^N.
inline PadicNum gamma_p_int(int64_t p, uint64_t n, int N) {
    const uint64_t P = detail::padic_modulus(p, N);
    uint64_t v = unit_factorial(p, n, N);
    if (n % 2 == 1) v = (P - v) % P;
    return PadicNum::from_parts(p, 0, N, v);
}

/// Morita's Gamma_p at a rational p-adic integer, mod p^N.
inline PadicNum gamma_p(int64_t p, const Rational& x, int N) {
    detail::require_odd_prime(p);
    if (x.get_den() % p == 0) fail(ErrorKind::NotPAdicInteger, to_string(x) + " is not a " + std::to_string(p) + "-adic integer");
    const uint64_t P = detail::padic_modulus(p, N);
    uint64_t xn = mulmod(detail::to_u64_mod(x.get_num(), P), detail::inv_mod_u64(detail::to_u64_mod(x.get_den(), P), P), P);
    if (xn == 0) xn = P;

    using Key = std::tuple<int64_t, int, uint64_t>;
    static std::shared_mutex mu;
    static std::map<Key, PadicNum> cache;
    const Key key{p, N, xn};
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    PadicNum g = gamma_p_int(p, xn, N);
    std::unique_lock lock(mu);
    cache.emplace(key, g);
    return g;
}

/// Gauss-sum value pi^e * u with pi^(p-1) = -p and u a p-adic unit.
struct PiExp {
    int64_t p;
    int N;
    Rational e;
    PadicNum u;

    friend PiExp operator*(const PiExp& a, const PiExp& b) { return {a.p, std::min(a.N, b.N), a.e + b.e, a.u * b.u}; }
    friend PiExp operator/(const PiExp& a, const PiExp& b) { return {a.p, std::min(a.N, b.N), a.e - b.e, a.u / b.u}; }

    bool convertible() const {
        Rational k = e / (p - 1);
        k.canonicalize();
        return k.get_den() == 1;
    }

    /// (-p)^(e/(p-1)) * u; requires (p-1) | e.
    PadicNum to_padic() const {
        Rational k = e / (p - 1);
        k.canonicalize();
        if (k.get_den() != 1)
            fail(ErrorKind::ExponentNotIntegral, "pi-exponent " + to_string(e) + " is not a multiple of " + std::to_string(p - 1));
        int64_t n = to_i64(k.get_num());
        PadicNum sign = PadicNum::from_integer(p, n % 2 ? -1 : 1, N);
        return PadicNum::from_parts(p, static_cast<int>(n), N, 1) * sign * u;
    }
};

/// Gross-Koblitz: g_q(omega^m) = -prod_i pi^((p-1){p^i m/(q-1)}) Gamma_p({p^i m/(q-1)}).
inline PiExp gross_koblitz(int64_t p, int f, int64_t m, int N) {
    detail::require_odd_prime(p);
    BigInt q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
    PiExp r{p, N, Rational(0), PadicNum::from_integer(p, -1, N)};
    BigInt pm = m;
    for (int i = 0; i < f; ++i) {
        Rational x = frac(Rational(pm, q - 1));
        r.e += x * (p - 1);
        r.u *= gamma_p(p, x, N);
        pm *= p;
    }
    return r;
}

namespace detail {

inline int64_t checked_argument(int64_t p, int64_t t) {
    if (mod(t, p) == 0) fail(ErrorKind::ZeroArgument, "t must be nonzero mod p");
    return mod(t, p);
}

/// teich((-1)^d t)^-1 as a unit, the base of the omega(...)^m factors.
inline PadicNum omega_of_argument(int64_t p, int d, int64_t t, int N) {
    int64_t arg = mod(d % 2 ? -t : t, p);
    return PadicNum::from_integer(p, 1, N) / teichmuller(p, arg, N);
}

} // namespace detail

/// G_p from the defining sum over m = 0 .. p-2 with Gamma_p ratios.
inline PadicNum g_p_direct(const HGParams& P, int64_t p, int64_t t, int N) {
    detail::require_odd_prime(p);
    if (std::gcd(p, P.common_denominator()) != 1)
        fail(ErrorKind::BadPrime, std::to_string(p) + " divides the common denominator");
    t = detail::checked_argument(p, t);
    const PadicNum one = PadicNum::from_integer(p, 1, N);
    const PadicNum w = detail::omega_of_argument(p, P.d(), t, N);

    PadicNum base_ratio = one;
    for (int i = 0; i < P.d(); ++i) base_ratio *= gamma_p(p, P.alpha()[i], N) * gamma_p(p, frac(-P.beta()[i]), N);

    PadicNum sum = PadicNum::zero(p);
    PadicNum wm = one;
    for (int64_t m = 0; m < p - 1; ++m) {
        Rational s(m, p - 1);
        s.canonicalize();
        PadicNum num = one;
        for (int i = 0; i < P.d(); ++i)
            num *= gamma_p(p, frac(P.alpha()[i] + s), N) * gamma_p(p, frac(-P.beta()[i] - s), N);
        int64_t lam = P.lambda(p, m);
        PadicNum mp = PadicNum::from_parts(p, static_cast<int>(lam), N, lam % 2 ? detail::padic_modulus(p, N) - 1 : 1);
        sum += mp * (num / base_ratio) * wm;
        wm *= w;
    }
    return sum / PadicNum::from_integer(p, 1 - p, N);
}

/// Per-m pi-exponent differences of the orbit-product Fourier coefficients, divided by p-1.
inline std::vector<Rational> via_algebra_exponents(const HGParams& P, int64_t p, int N = 2);

namespace detail {

// Numerator and denominator PiExp products for the m-th Fourier coefficient.
inline std::pair<PiExp, PiExp> orbit_products(const POrbits& orbits, int64_t p, int64_t m, int N) {
    PiExp num{p, N, Rational(0), PadicNum::from_integer(p, 1, N)};
    PiExp den = num;
    auto accumulate = [&](const std::vector<Orbit>& os, int sign) {
        for (const auto& o : os) {
            const int l = o.length();
            const int64_t ql1 = ipow(p, l) - 1;
            Rational base = o.representative * ql1 * sign;
            if (base.get_den() != 1) fail(ErrorKind::InternalInconsistency, "orbit exponent not integral");
            const int64_t b = to_i64(base.get_num());
            const int64_t shift = m * (ql1 / (p - 1)) * sign;
            num = num * gross_koblitz(p, l, b + shift, N);
            den = den * gross_koblitz(p, l, b, N);
        }
    };
    accumulate(orbits.alpha, 1);
    accumulate(orbits.beta, -1);
    return {num, den};
}

} // namespace detail

inline std::vector<Rational> via_algebra_exponents(const HGParams& P, int64_t p, int N) {
    auto orbits = p_orbits(P, p);
    std::vector<Rational> out;
    for (int64_t m = 0; m < p - 1; ++m) {
        auto [num, den] = detail::orbit_products(orbits, p, m, N);
        Rational k = (num.e - den.e) / (p - 1);
        k.canonicalize();
        out.push_back(k);
    }
    return out;
}

/// G_p assembled from Gross-Koblitz values of the algebra Gauss sums over the p-orbits.
/// rotation picks a different element of each orbit as representative.
inline PadicNum g_p_via_algebra(const HGParams& P, int64_t p, int64_t t, int N, int rotation = 0) {
    detail::require_odd_prime(p);
    t = detail::checked_argument(p, t);
    auto orbits = p_orbits(P, p);
    if (rotation != 0) {
        for (auto* os : {&orbits.alpha, &orbits.beta})
            for (auto& o : *os) {
                Rational r = o.representative;
                for (int i = 0; i < rotation % o.length(); ++i) r = frac(r * p);
                o.representative = r;
            }
    }
    const PadicNum one = PadicNum::from_integer(p, 1, N);
    const PadicNum w = detail::omega_of_argument(p, P.d(), t, N);
    PadicNum sum = PadicNum::zero(p);
    PadicNum wm = one;
    for (int64_t m = 0; m < p - 1; ++m) {
        auto [num, den] = detail::orbit_products(orbits, p, m, N);
        PiExp c = num / den;
        if (!c.convertible())
            fail(ErrorKind::ExponentNotIntegral, "coefficient " + std::to_string(m) + " has pi-exponent " + to_string(c.e));
        if (c.e != Rational(P.lambda(p, m) * (p - 1)))
            fail(ErrorKind::InternalInconsistency, "pi-exponent " + to_string(c.e) + " differs from (p-1)*Lambda(" +
                                                       std::to_string(m) + ")");
        sum += c.to_padic() * wm;
        wm *= w;
    }
    return sum / PadicNum::from_integer(p, 1 - p, N);
}

/// Image of v under Q(zeta_{p-1}) -> Q_p, zeta_{p-1} -> teich(g)^-1, known to absolute precision N.
inline PadicNum embed_value(const CycloNum& value, int64_t p, int N) {
    detail::require_odd_prime(p);
    CycloNum w = value;
    if ((p - 1) % value.conductor() != 0) {
        auto r = value.in_subfield(std::gcd(value.conductor(), p - 1));
        if (!r)
            fail(ErrorKind::ConductorNotDividing,
                 "value of conductor " + std::to_string(value.conductor()) + " does not lie in Q(zeta_" + std::to_string(p - 1) + ")");
        w = *r;
    }
    if (w.is_zero()) return PadicNum::zero(p, N);
    const int64_t M = w.conductor();
    const BigInt& den = w.denominator();
    const int k = hgf::valuation(den, p);
    const int W = N + k;
    BigInt mod_W;
    mpz_ui_pow_ui(mod_W.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(W));

    const int64_t g = make_field(p, 1)->generator().code;
    BigInt T = teichmuller_big(p, g, W);
    mpz_invert(T.get_mpz_t(), T.get_mpz_t(), mod_W.get_mpz_t());
    BigInt step; // image of zeta_M
    BigInt e = (p - 1) / M;
    mpz_powm(step.get_mpz_t(), T.get_mpz_t(), e.get_mpz_t(), mod_W.get_mpz_t());

    BigInt S = 0, pw = 1;
    for (const auto& c : w.numerators()) {
        S = (S + c * pw) % mod_W;
        pw = pw * step % mod_W;
    }
    if (S < 0) S += mod_W;
    if (S == 0) return PadicNum::zero(p, N);
    const int vS = hgf::valuation(S, p);
    const int val = vS - k;
    const int rel = N - val;
    if (rel <= 0) return PadicNum::zero(p, N);
    BigInt unit = S, dunit = den;
    for (int i = 0; i < vS; ++i) unit /= p;
    for (int i = 0; i < k; ++i) dunit /= p;
    const uint64_t P = detail::padic_modulus(p, rel);
    uint64_t u = mulmod(detail::to_u64_mod(unit, P), detail::inv_mod_u64(detail::to_u64_mod(dunit, P), P), P);
    return PadicNum::from_parts(p, val, rel, u);
}

} // namespace hgf
