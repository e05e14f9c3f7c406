#pragma once

// Exact arithmetic in Q(zeta_N), stored in the power basis modulo Phi_N.
//
// An element is num[0..phi(N)) / den with integer numerators and a positive
// common denominator, reduced so that gcd(num..., den) = 1. Since the basis
// reduction is canonical this gives a unique representation, so equality is
// structural once conductors agree.

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgf/arith.hpp"

namespace hgf {

namespace detail {

/// Phi_N and the table x^j mod Phi_N for 0 <= j < N.
struct CycloTables {
    int64_t N = 1;
    int64_t phi = 1;
    std::vector<int64_t> poly;                    // Phi_N, low degree first, monic
    std::vector<std::vector<int64_t>> reduced;    // reduced[j] = x^j mod Phi_N
};

// Upper bound on N * phi(N) for the reduction table.
inline constexpr int64_t kMaxCycloTable = 20'000'000;

inline std::vector<int64_t> cyclotomic_poly_uncached(int64_t n);

inline std::vector<int64_t> cyclotomic_poly(int64_t n) {
    static std::mutex mu;
    static std::map<int64_t, std::vector<int64_t>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto p = cyclotomic_poly_uncached(n);
    std::lock_guard lock(mu);
    cache.emplace(n, p);
    return p;
}

// (x^n - 1) divided by Phi_d for every proper divisor d.
inline std::vector<int64_t> cyclotomic_poly_uncached(int64_t n) {
    std::vector<int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int64_t d : divisors(n)) {
        if (d == n) continue;
        auto den = cyclotomic_poly(d);
        // exact division by a monic polynomial
        int64_t dd = static_cast<int64_t>(den.size()) - 1;
        int64_t dn = static_cast<int64_t>(num.size()) - 1;
        std::vector<int64_t> q(dn - dd + 1, 0);
        for (int64_t i = dn; i >= dd; --i) {
            int64_t c = num[i];
            q[i - dd] = c;
            if (c == 0) continue;
            for (int64_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(q);
    }
    return num;
}

inline std::shared_ptr<const CycloTables> cyclo_tables(int64_t N) {
    static std::mutex mu;
    static std::map<int64_t, std::shared_ptr<const CycloTables>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<CycloTables>();
    t->N = N;
    t->poly = cyclotomic_poly(N);
    t->phi = static_cast<int64_t>(t->poly.size()) - 1;
    if (N * t->phi > kMaxCycloTable)
        fail(ErrorKind::FieldTooLarge, "cyclotomic conductor " + std::to_string(N) + " too large");
    t->reduced.assign(N, std::vector<int64_t>(t->phi, 0));
    std::vector<int64_t> cur(t->phi, 0);
    cur[0] = 1;
    for (int64_t j = 0; j < N; ++j) {
        t->reduced[j] = cur;
        // multiply by x and reduce the overflow coefficient with Phi_N
        int64_t top = cur[t->phi - 1];
        for (int64_t i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * t->poly[i];
        cur[0] = -top * t->poly[0];
    }
    std::lock_guard lock(mu);
    return cache.emplace(N, std::move(t)).first->second;
}

} // namespace detail

class CycloNum {
public:
    CycloNum() : CycloNum(1) {}
    explicit CycloNum(int64_t N) : N_(N), tables_(detail::cyclo_tables(N)), num_(tables_->phi), den_(1) {
        if (N < 1) fail(ErrorKind::ConductorMismatch, "conductor must be positive");
    }

    static CycloNum zero(int64_t N) { return CycloNum(N); }
    static CycloNum from_rational(int64_t N, const Rational& r) {
        CycloNum a(N);
        a.num_[0] = r.get_num();
        a.den_ = r.get_den();
        return a;
    }
    static CycloNum one(int64_t N) { return from_rational(N, 1); }

    /// zeta_N^k.
    static CycloNum root_of_unity(int64_t N, int64_t k) {
        std::vector<int64_t> counts(N, 0);
        counts[mod(k, N)] = 1;
        return from_exponent_counts(N, counts);
    }

    /// Sum_j counts[j] * zeta_N^j for j in [0, N).
    static CycloNum from_exponent_counts(int64_t N, std::span<const int64_t> counts) {
        CycloNum a(N);
        const auto& t = *a.tables_;
        std::vector<int64_t> acc(t.phi, 0);
        for (int64_t j = 0; j < N; ++j) {
            if (counts[j] == 0) continue;
            const auto& r = t.reduced[j];
            for (int64_t i = 0; i < t.phi; ++i) acc[i] += counts[j] * r[i];
        }
        for (int64_t i = 0; i < t.phi; ++i) a.num_[i] = static_cast<long>(acc[i]);
        return a;
    }

    /// sum_m terms[m] * zeta_N^shifts[m], with every term already over Q(zeta_N).
    static CycloNum sum_of_rotations(int64_t N, std::span<const CycloNum> terms, std::span<const int64_t> shifts) {
        CycloNum a(N);
        if (terms.size() != shifts.size()) fail(ErrorKind::LengthMismatch, "one shift per term");
        const auto& t = *a.tables_;
        BigInt den = 1;
        for (const auto& c : terms) {
            if (c.N_ != N) fail(ErrorKind::ConductorMismatch, "term is not over Q(zeta_" + std::to_string(N) + ")");
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den_.get_mpz_t());
        }
        std::vector<BigInt> acc(N, 0);
        for (size_t m = 0; m < terms.size(); ++m) {
            const auto& c = terms[m];
            const BigInt f = den / c.den_;
            const int64_t s = mod(shifts[m], N);
            for (int64_t i = 0; i < t.phi; ++i)
                if (c.num_[i] != 0) acc[(i + s) % N] += c.num_[i] * f;
        }
        for (int64_t j = 0; j < N; ++j) {
            if (acc[j] == 0) continue;
            const auto& r = t.reduced[j];
            for (int64_t i = 0; i < t.phi; ++i)
                if (r[i] != 0) a.num_[i] += acc[j] * r[i];
        }
        a.den_ = den;
        a.normalize();
        return a;
    }

    /// Build from a power-basis coefficient list of length phi(N).
    static CycloNum from_coeffs(int64_t N, std::span<const Rational> coeffs) {
        CycloNum a(N);
        if (static_cast<int64_t>(coeffs.size()) != a.tables_->phi)
            fail(ErrorKind::LengthMismatch, "coefficient count must equal phi(N)");
        BigInt den = 1;
        for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        for (size_t i = 0; i < coeffs.size(); ++i) a.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
        a.den_ = den;
        a.normalize();
        return a;
    }

    int64_t conductor() const { return N_; }
    /// Power-basis numerators over the common denominator().
    const std::vector<BigInt>& numerators() const { return num_; }
    const BigInt& denominator() const { return den_; }
    int64_t degree() const { return tables_->phi; }

    std::vector<Rational> coeffs() const {
        std::vector<Rational> out;
        out.reserve(num_.size());
        for (const auto& n : num_) {
            Rational r(n, den_);
            r.canonicalize();
            out.push_back(r);
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& n : num_)
            if (n != 0) return false;
        return true;
    }

    /// Ring homomorphism Q(zeta_N) -> Q(zeta_M) sending zeta_N to zeta_M^(M/N); needs N | M.
    CycloNum embed(int64_t M) const {
        if (M % N_ != 0)
            fail(ErrorKind::NotDivisor, std::to_string(N_) + " does not divide " + std::to_string(M));
        if (M == N_) return *this;
        return remap(M, M / N_);
    }

    /// Field automorphism zeta_N -> zeta_N^k.
    CycloNum galois(int64_t k) const {
        if (std::gcd(mod(k, N_), N_) != 1 && N_ > 1)
            fail(ErrorKind::NotCoprime, "galois twist " + std::to_string(k) + " not coprime to " + std::to_string(N_));
        return remap(N_, mod(k, N_));
    }

    CycloNum conj() const { return galois(N_ - 1); }

    /// Re-express over Q(zeta_M) if this element lies in that subfield.
    std::optional<CycloNum> in_subfield(int64_t M) const;

    std::optional<Rational> as_rational() const {
        auto r = in_subfield(1);
        if (!r) return std::nullopt;
        return Rational(r->num_[0], r->den_);
    }

    /// Diagnostics only.
    std::complex<double> to_complex() const {
        std::complex<double> acc = 0;
        double d = den_.get_d();
        for (size_t i = 0; i < num_.size(); ++i) {
            if (num_[i] == 0) continue;
            acc += num_[i].get_d() / d * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(N_));
        }
        return acc;
    }

    CycloNum inverse() const;

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) { return combine(a, b, +1); }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return combine(a, b, -1); }
    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& n : r.num_) n = -n;
        return r;
    }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        if (a.N_ != b.N_) {
            int64_t L = std::lcm(a.N_, b.N_);
            return a.embed(L) * b.embed(L);
        }
        const auto& t = *a.tables_;
        const int64_t phi = t.phi;
        std::vector<BigInt> prod(2 * phi - 1);
        for (int64_t i = 0; i < phi; ++i) {
            if (a.num_[i] == 0) continue;
            for (int64_t j = 0; j < phi; ++j)
                if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
        }
        CycloNum r(a.N_);
        for (int64_t e = 0; e < 2 * phi - 1; ++e) {
            if (prod[e] == 0) continue;
            if (e < phi) {
                r.num_[e] += prod[e];
                continue;
            }
            const auto& red = t.reduced[e % a.N_];
            for (int64_t i = 0; i < phi; ++i)
                if (red[i] != 0) r.num_[i] += prod[e] * red[i];
        }
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    friend CycloNum operator*(const CycloNum& a, const Rational& s) {
        CycloNum r = a;
        for (auto& n : r.num_) n *= s.get_num();
        r.den_ *= s.get_den();
        r.normalize();
        return r;
    }
    friend CycloNum operator*(const Rational& s, const CycloNum& a) { return a * s; }
    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
    friend CycloNum operator/(const CycloNum& a, const Rational& s) {
        if (s == 0) fail(ErrorKind::DivisionByZero, "division of cyclotomic number by zero");
        return a * Rational(1 / s);
    }
    CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
    CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
    CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

    CycloNum pow(int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        CycloNum r = one(N_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Equal as complex numbers (conductors may differ).
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.N_ == b.N_) return a.den_ == b.den_ && a.num_ == b.num_;
        int64_t L = std::lcm(a.N_, b.N_);
        return a.embed(L) == b.embed(L);
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < num_.size(); ++i) {
            if (num_[i] == 0) continue;
            Rational c(num_[i], den_);
            c.canonicalize();
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            Rational ac = abs(c);
            if (i == 0) s += hgf::to_string(ac);
            else {
                if (ac != 1) s += hgf::to_string(ac) + "*";
                s += "z" + std::to_string(N_) + (i > 1 ? "^" + std::to_string(i) : "");
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            for (auto& n : num_) n = -n;
        }
        BigInt g = den_;
        for (const auto& n : num_) {
            if (g == 1) break;
            if (n != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
        if (is_zero()) g = den_;
        if (g != 1) {
            for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
            den_ /= g;
        }
    }

    // Sends basis element zeta_N^i to zeta_M^(i*mult mod M).
    CycloNum remap(int64_t M, int64_t mult) const {
        CycloNum r(M);
        const auto& t = *r.tables_;
        for (size_t i = 0; i < num_.size(); ++i) {
            if (num_[i] == 0) continue;
            const auto& red = t.reduced[mod(static_cast<int64_t>(i) * mult, M)];
            for (int64_t j = 0; j < t.phi; ++j)
                if (red[j] != 0) r.num_[j] += num_[i] * red[j];
        }
        r.den_ = den_;
        r.normalize();
        return r;
    }

    static CycloNum combine(const CycloNum& a, const CycloNum& b, int sign) {
        if (a.N_ != b.N_) {
            int64_t L = std::lcm(a.N_, b.N_);
            return combine(a.embed(L), b.embed(L), sign);
        }
        CycloNum r(a.N_);
        for (size_t i = 0; i < r.num_.size(); ++i) {
            BigInt x = a.num_[i] * b.den_, y = b.num_[i] * a.den_;
            r.num_[i] = sign > 0 ? BigInt(x + y) : BigInt(x - y);
        }
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }

    int64_t N_;
    std::shared_ptr<const detail::CycloTables> tables_;
    std::vector<BigInt> num_;
    BigInt den_;
};

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (!a.empty() && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

} // namespace detail

inline CycloNum CycloNum::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero cyclotomic number");
    using detail::QPoly;
    // Extended Euclid on (Phi_N, a): maintain s_i with s_i * a == r_i mod Phi_N.
    QPoly r0, r1;
    for (auto c : tables_->poly) r0.push_back(Rational(c));
    for (const auto& n : num_) r1.push_back(Rational(n));
    detail::trim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = detail::poly_divmod(r0, r1);
        QPoly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) fail(ErrorKind::InternalInconsistency, "element not invertible modulo Phi_N");
    // r1 is a nonzero constant: a^-1 = s1 / r1 * den
    Rational scale = Rational(den_) / r1[0];
    auto [q, rem] = detail::poly_divmod(s1, [&] {
        QPoly phi;
        for (auto c : tables_->poly) phi.push_back(Rational(c));
        return phi;
    }());
    std::vector<Rational> coeffs(tables_->phi);
    for (size_t i = 0; i < rem.size(); ++i) coeffs[i] = rem[i] * scale;
    return from_coeffs(N_, coeffs);
}

inline std::optional<CycloNum> CycloNum::in_subfield(int64_t M) const {
    if (N_ % M != 0)
        fail(ErrorKind::NotDivisor, std::to_string(M) + " does not divide " + std::to_string(N_));
    if (M == N_) return *this;
    // Solve sum_j b_j * embed(zeta_M^j) = this by Gaussian elimination over Q.
    const int64_t rows = tables_->phi;
    const int64_t cols = euler_phi(M);
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1));
    for (int64_t j = 0; j < cols; ++j) {
        const auto& red = tables_->reduced[mod(j * (N_ / M), N_)];
        for (int64_t i = 0; i < rows; ++i) A[i][j] = red[i];
    }
    for (int64_t i = 0; i < rows; ++i) A[i][cols] = Rational(num_[i], den_);
    for (auto& row : A) row[cols].canonicalize();
    int64_t rank = 0;
    std::vector<int64_t> pivot_col;
    for (int64_t c = 0; c < cols && rank < rows; ++c) {
        int64_t piv = -1;
        for (int64_t i = rank; i < rows; ++i)
            if (A[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[rank]);
        Rational inv = 1 / A[rank][c];
        for (int64_t k = c; k <= cols; ++k) A[rank][k] *= inv;
        for (int64_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (int64_t k = c; k <= cols; ++k) A[i][k] -= f * A[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int64_t i = rank; i < rows; ++i)
        if (A[i][cols] != 0) return std::nullopt;
    std::vector<Rational> b(cols);
    for (int64_t i = 0; i < rank; ++i) b[pivot_col[i]] = A[i][cols];
    return from_coeffs(M, b);
}

} // namespace hgf
