#pragma once

// Hypergeometric parameter multisets and their combinatorics: common
// denominator, Galois conjugates and stabilizer, p-orbits, the exponent
// Lambda(m), the denominator bounds delta / Delta, and the defining
// polynomials A(x), B(x).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hgf/arith.hpp"
#include "hgf/cyclo.hpp"
#include "hgf/polymodp.hpp"

namespace hgf {

/// Parameter multisets alpha, beta; entries are canonical representatives in [0, 1).
class HGParams {
public:
    HGParams(std::vector<Rational> alpha, std::vector<Rational> beta) {
        if (alpha.empty() || beta.empty())
            fail(ErrorKind::LengthMismatch, "parameter lists must be nonempty");
        if (alpha.size() != beta.size())
            fail(ErrorKind::LengthMismatch, "alpha has " + std::to_string(alpha.size()) + " entries, beta has " +
                                                std::to_string(beta.size()));
        for (auto& a : alpha) a = frac(a);
        for (auto& b : beta) b = frac(b);
        for (const auto& a : alpha)
            for (const auto& b : beta)
                if (a == b) fail(ErrorKind::NotDisjointModZ, "alpha and beta share " + hgf::to_string(a) + " mod Z");
        alpha_ = std::move(alpha);
        beta_ = std::move(beta);
    }

    static HGParams parse(std::string_view alpha, std::string_view beta) {
        return HGParams(parse_rational_list(alpha), parse_rational_list(beta));
    }

    const std::vector<Rational>& alpha() const { return alpha_; }
    const std::vector<Rational>& beta() const { return beta_; }
    int d() const { return static_cast<int>(alpha_.size()); }

    int64_t common_denominator() const {
        int64_t D = 1;
        for (const auto* v : {&alpha_, &beta_})
            for (const auto& x : *v) D = std::lcm(D, to_i64(x.get_den()));
        return D;
    }

    /// (k alpha mod Z, k beta mod Z), index order preserved.
    HGParams conjugate(int64_t k) const {
        if (std::gcd(mod(k, common_denominator()), common_denominator()) != 1)
            fail(ErrorKind::NotCoprime, std::to_string(k) + " is not coprime to " + std::to_string(common_denominator()));
        auto mul = [k](std::vector<Rational> v) {
            for (auto& x : v) x = frac(x * k);
            return v;
        };
        return HGParams(mul(alpha_), mul(beta_));
    }

    /// Equality as multisets mod Z.
    bool same_multisets(const HGParams& o) const {
        auto sorted = [](std::vector<Rational> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        return sorted(alpha_) == sorted(o.alpha_) && sorted(beta_) == sorted(o.beta_);
    }

    /// {k in (Z/DZ)^x : k alpha = alpha and k beta = beta as multisets mod Z}, ascending.
    std::vector<int64_t> galois_stabilizer() const {
        std::vector<int64_t> H;
        int64_t D = common_denominator();
        for (int64_t k : units_mod(D))
            if (conjugate(k == 0 ? 1 : k).same_multisets(*this)) H.push_back(k == 0 ? 1 : k);
        return H;
    }

    bool is_defined_over_Q() const {
        return static_cast<int64_t>(galois_stabilizer().size()) == euler_phi(common_denominator());
    }

    /// Frobenius at p is trivial on K, i.e. p mod D lies in the stabilizer.
    bool splits_in_K(int64_t p) const {
        int64_t D = common_denominator();
        if (std::gcd(p, D) != 1) return false;
        return conjugate(p).same_multisets(*this);
    }

    /// Representatives of (Z/DZ)^x modulo the stabilizer (smallest element of each coset).
    std::vector<int64_t> coset_representatives() const {
        int64_t D = common_denominator();
        auto H = galois_stabilizer();
        std::vector<int64_t> reps;
        std::vector<bool> seen(D, false);
        for (int64_t k : units_mod(D)) {
            int64_t kk = D == 1 ? 0 : k;
            if (seen[kk]) continue;
            reps.push_back(D == 1 ? 1 : k);
            for (int64_t h : H) seen[mod(k * h, D)] = true;
        }
        return reps;
    }

    /// Lambda(m) from the floor form: the exponent of (-p) in the m-th term.
    int64_t lambda(int64_t p, int64_t m) const {
        Rational s(m, p - 1);
        s.canonicalize();
        BigInt acc = 0;
        for (int i = 0; i < d(); ++i) {
            acc += -floor_of(alpha_[i] + s) + floor_of(alpha_[i]);
            acc += -floor_of(-beta_[i] - s) + floor_of(-beta_[i]);
        }
        return to_i64(acc);
    }

    /// Lambda(m) from the fractional-part form; equal to lambda() by {x} = x - floor(x).
    Rational lambda_fractional(int64_t p, int64_t m) const {
        Rational s(m, p - 1);
        s.canonicalize();
        Rational acc = 0;
        for (int i = 0; i < d(); ++i) {
            acc += frac(alpha_[i] + s) - frac(alpha_[i]);
            acc += frac(-beta_[i] - s) - frac(-beta_[i]);
        }
        return acc;
    }

    /// The step function whose maximum over [0, 1] is delta.
    int64_t jump_function(const Rational& x) const {
        BigInt acc = 0;
        for (int i = 0; i < d(); ++i) {
            acc += floor_of(x + alpha_[i]) - floor_of(alpha_[i]);
            acc += floor_of(-x - beta_[i]) - floor_of(-beta_[i]);
        }
        return to_i64(acc);
    }

    /// Max of the jump function over [0, 1]. It only jumps at x = -alpha_i, -beta_j mod 1,
    /// so those points, the endpoints and the midpoints between them cover every piece.
    int64_t delta() const {
        std::vector<Rational> pts{Rational(0), Rational(1)};
        for (const auto& a : alpha_) pts.push_back(frac(-a));
        for (const auto& b : beta_) pts.push_back(frac(-b));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        int64_t best = jump_function(pts.front());
        for (size_t i = 0; i < pts.size(); ++i) {
            best = std::max(best, jump_function(pts[i]));
            if (i + 1 < pts.size()) best = std::max(best, jump_function((pts[i] + pts[i + 1]) / 2));
        }
        return best;
    }

    /// max over k in (Z/DZ)^x of delta(conjugate(k)).
    int64_t Delta() const {
        int64_t best = 0;
        for (int64_t k : units_mod(common_denominator())) best = std::max(best, conjugate(k == 0 ? 1 : k).delta());
        return best;
    }

    friend bool operator==(const HGParams& a, const HGParams& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

    std::string to_string() const {
        auto list = [](const std::vector<Rational>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + hgf::to_string(v[i]);
            return s;
        };
        return "alpha=(" + list(alpha_) + ") beta=(" + list(beta_) + ")";
    }

private:
    std::vector<Rational> alpha_;
    std::vector<Rational> beta_;
};

/// One orbit of x -> p x mod Z on a parameter multiset.
struct Orbit {
    std::vector<int> indices;   // positions in the parameter list, in orbit order
    Rational representative;    // parameter at indices.front()
    int length() const { return static_cast<int>(indices.size()); }
};

/// Orbits of multiplication by p on one multiset; p must permute it mod Z.
inline std::vector<Orbit> p_orbits_of(const std::vector<Rational>& v, int64_t p) {
    std::vector<bool> used(v.size(), false);
    std::vector<Orbit> out;
    for (size_t start = 0; start < v.size(); ++start) {
        if (used[start]) continue;
        Orbit o;
        Rational x = v[start];
        size_t idx = start;
        while (true) {
            used[idx] = true;
            o.indices.push_back(static_cast<int>(idx));
            x = frac(x * p);
            if (x == v[start]) break;
            // next unused copy of x; multiplicities pair off because p permutes the multiset
            size_t j = 0;
            bool found = false;
            for (; j < v.size(); ++j)
                if (v[j] == x && !used[j]) {
                    found = true;
                    break;
                }
            if (!found) fail(ErrorKind::DoesNotSplit, "multiplication by " + std::to_string(p) + " does not permute the multiset");
            idx = j;
        }
        o.representative = v[start];
        out.push_back(std::move(o));
    }
    return out;
}

struct POrbits {
    std::vector<Orbit> alpha;
    std::vector<Orbit> beta;
};

inline POrbits p_orbits(const HGParams& P, int64_t p) {
    if (std::gcd(p, P.common_denominator()) != 1)
        fail(ErrorKind::BadPrime, std::to_string(p) + " divides the common denominator");
    if (!P.splits_in_K(p))
        fail(ErrorKind::DoesNotSplit, std::to_string(p) + " does not split in K for " + P.to_string());
    return {p_orbits_of(P.alpha(), p), p_orbits_of(P.beta(), p)};
}

/// prod_j (x - exp(2 pi i v_j)) over Q(zeta_D), low degree first.
inline std::vector<CycloNum> defining_poly(const std::vector<Rational>& v, int64_t D) {
    std::vector<CycloNum> poly{CycloNum::one(D)};
    for (const auto& x : v) {
        Rational e = x * D;
        CycloNum root = CycloNum::root_of_unity(D, to_i64(e.get_num()));
        std::vector<CycloNum> next(poly.size() + 1, CycloNum::zero(D));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

struct DefiningPolys {
    std::vector<CycloNum> A;
    std::vector<CycloNum> B;
};

inline DefiningPolys defining_polys(const HGParams& P) {
    int64_t D = P.common_denominator();
    return {defining_poly(P.alpha(), D), defining_poly(P.beta(), D)};
}

/// Integer coefficients if every coefficient is a rational integer.
inline std::optional<std::vector<int64_t>> integer_coefficients(const std::vector<CycloNum>& poly) {
    std::vector<int64_t> out;
    for (const auto& c : poly) {
        auto r = c.as_rational();
        if (!r || r->get_den() != 1) return std::nullopt;
        out.push_back(to_i64(r->get_num()));
    }
    return out;
}

} // namespace hgf
