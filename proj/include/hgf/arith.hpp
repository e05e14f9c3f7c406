#pragma once

// Small-integer number theory and exact rational helpers shared by all modules.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hgf/error.hpp"

namespace hgf {

using Rational = mpq_class;
using BigInt = mpz_class;

inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline int64_t invmod(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        int64_t q = g / a1;
        std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
        std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
    }
    if (g != 1) fail(ErrorKind::NotCoprime, std::to_string(a) + " has no inverse mod " + std::to_string(m));
    return mod(x, m);
}

inline int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t q : prime_factors(n)) r = r / q * (q - 1);
    return r;
}

inline std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// Residues k in [1, n) with gcd(k, n) = 1 (for n = 1 this is {0}).
inline std::vector<int64_t> units_mod(int64_t n) {
    if (n == 1) return {0};
    std::vector<int64_t> out;
    for (int64_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

/// Multiplicative order of a modulo n; gcd(a, n) = 1.
inline int64_t mult_order(int64_t a, int64_t n) {
    if (n == 1) return 1;
    int64_t x = mod(a, n), k = 1;
    while (x != 1) {
        x = mod(x * a, n);
        ++k;
    }
    return k;
}

// Rationals ------------------------------------------------------------------

inline BigInt floor_of(const Rational& x) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

inline int64_t to_i64(const BigInt& z) {
    if (!z.fits_slong_p()) fail(ErrorKind::InternalInconsistency, "integer overflow: " + z.get_str());
    return z.get_si();
}

inline std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "a/b" or "a" (optional sign, optional surrounding whitespace).
inline Rational parse_rational(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    auto is_int = [](std::string_view v) {
        if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num(trim(s.substr(0, slash)));
    std::string den = slash == std::string_view::npos ? "1" : std::string(trim(s.substr(slash + 1)));
    if (!is_int(num) || !is_int(den)) fail(ErrorKind::Parse, "not a fraction: '" + std::string(s) + "'");
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    if (!den.empty() && den.front() == '+') den.erase(0, 1);
    BigInt n(num), d(den);
    if (d == 0) fail(ErrorKind::Parse, "zero denominator: '" + std::string(s) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::vector<Rational> parse_rational_list(std::string_view s) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) comma = s.size();
        out.push_back(parse_rational(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

/// p-adic valuation of a nonzero integer.
inline int valuation(BigInt z, int64_t p) {
    if (z == 0) fail(ErrorKind::InternalInconsistency, "valuation of zero");
    int v = 0;
    BigInt P(p);
    while (mpz_divisible_p(z.get_mpz_t(), P.get_mpz_t())) {
        z /= P;
        ++v;
    }
    return v;
}

} // namespace hgf
