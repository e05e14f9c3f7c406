#pragma once

// Dense polynomials over F_p (coefficients in [0, p), low degree first).
// Used for the irreducibility test of field moduli and for factor-degree
// patterns of integer polynomials reduced mod p.

#include <cstdint>
#include <vector>

#include "hgf/arith.hpp"

namespace hgf::polymodp {

using Poly = std::vector<int64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly reduce_coeffs(const std::vector<int64_t>& a, int64_t p) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], p);
    trim(r);
    return r;
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly sub(const Poly& a, const Poly& b, int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

/// Quotient and remainder; b nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, int64_t p) {
    int64_t lead_inv = invmod(b.back(), p);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        int64_t c = a.back() * lead_inv % p;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, int64_t p) { return divmod(a, b, p).second; }

inline Poly monic(Poly a, int64_t p) {
    if (a.empty()) return a;
    int64_t inv = invmod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline Poly gcd(Poly a, Poly b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

/// x^(p^k) mod m.
inline Poly x_pow_p_pow(int k, const Poly& m, int64_t p) {
    Poly x = rem(Poly{0, 1}, m, p);
    for (int i = 0; i < k; ++i) {
        Poly base = x, r{1};
        int64_t e = p;
        while (e) {
            if (e & 1) r = rem(mul(r, base, p), m, p);
            base = rem(mul(base, base, p), m, p);
            e >>= 1;
        }
        x = r;
    }
    return x;
}

/// Rabin's test for a monic polynomial of degree >= 1.
inline bool is_irreducible(const Poly& m, int64_t p) {
    int n = degree(m);
    if (n < 1) return false;
    if (n == 1) return true;
    Poly x{0, 1};
    if (!sub(x_pow_p_pow(n, m, p), rem(x, m, p), p).empty()) return false;
    for (int64_t r : prime_factors(n)) {
        Poly g = gcd(m, sub(x_pow_p_pow(static_cast<int>(n / r), m, p), rem(x, m, p), p), p);
        if (degree(g) != 0) return false;
    }
    return true;
}

/// Degrees of the irreducible factors of a (with multiplicity), ascending.
inline std::vector<int> factor_degrees(Poly a, int64_t p) {
    trim(a);
    std::vector<int> out;
    if (degree(a) < 1) return out;
    a = monic(a, p);
    for (int l = 1; degree(a) >= l; ++l) {
        // all factors of degree < l are gone, so the gcd isolates degree-l factors
        while (true) {
            Poly g = gcd(a, sub(x_pow_p_pow(l, a, p), rem(Poly{0, 1}, a, p), p), p);
            if (degree(g) < 1) break;
            for (int k = 0; k < degree(g) / l; ++k) out.push_back(l);
            a = divmod(a, g, p).first;
            if (degree(a) < l) break;
        }
    }
    return out;
}

} // namespace hgf::polymodp
