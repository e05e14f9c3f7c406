#pragma once

// Command-line front end: flag parsing, dispatch and rendering.
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource bound exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgf/io.hpp"
#include "hgf/verify.hpp"

namespace hgf::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
    std::string subcommand;
    std::string alpha, beta;
    std::optional<int64_t> p, q, t;
    int f = 1;
    bool all_t = false;
    int prec = 6;
    std::string algebra = "classic";
    std::string route = "direct";
    int64_t twist = 1;
    int64_t m = 0;
    std::vector<std::string> checks{"all"};
    int64_t max_q = 9;
    int64_t max_p = 29;
    double max_pn = 1e15;
    int64_t max_field = kDefaultMaxFieldSize;
    std::vector<int> prec_list{6, 8};
    uint64_t seed = 1;
    std::string format = "text";
    bool timing = true;
};

/// Raised for invalid flag combinations.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    int code = kOk;
    std::string text;
};

namespace detail {

inline int default_precision() {
    if (const char* s = std::getenv("HGF_PREC")) {
        try {
            int v = std::stoi(s);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("HGF_PREC must be a positive integer, got '") + s + "'");
    }
    return 6;
}

inline std::pair<int64_t, int> prime_power(int64_t q) {
    for (int64_t p = 2; p <= q; ++p)
        if (q % p == 0) {
            int64_t x = q;
            int f = 0;
            while (x % p == 0) {
                x /= p;
                ++f;
            }
            if (x != 1 || !is_prime(p)) break;
            return {p, f};
        }
    throw UsageError(std::to_string(q) + " is not a prime power");
}

/// The field selected by --q or --p/--f.
inline FieldPtr field_of(const RunConfig& c) {
    int64_t p;
    int f;
    if (c.q) {
        std::tie(p, f) = prime_power(*c.q);
        if (c.p && *c.p != p) throw UsageError("--p conflicts with --q");
    } else if (c.p) {
        p = *c.p;
        f = c.f;
    } else {
        throw UsageError("one of --q or --p is required");
    }
    return make_field(p, f, FieldOptions{.max_size = c.max_field});
}

inline std::vector<FqElem> arguments(const RunConfig& c, const FieldPtr& F) {
    if (c.all_t && c.t) throw UsageError("--t and --all-t are mutually exclusive");
    std::vector<FqElem> ts;
    if (c.all_t) {
        for (int64_t code = 1; code < F->q(); ++code) ts.push_back(F->elem(static_cast<uint32_t>(code)));
        return ts;
    }
    if (!c.t) throw UsageError("--t or --all-t is required");
    if (*c.t < 0 || *c.t >= F->q()) throw UsageError("--t must be an element code in [0, q)");
    ts.push_back(F->elem(static_cast<uint32_t>(*c.t)));
    return ts;
}

inline HGParams params_of(const RunConfig& c) {
    if (c.alpha.empty() || c.beta.empty()) throw UsageError("--alpha and --beta are required");
    return HGParams::parse(c.alpha, c.beta);
}

inline void check_precision(const RunConfig& c, int64_t p, int N) {
    if (N < 1) throw UsageError("precision must be positive");
    double pn = 1;
    for (int i = 0; i < N; ++i) pn *= static_cast<double>(p);
    if (pn > c.max_pn)
        fail(ErrorKind::PrecisionTooLarge, std::to_string(p) + "^" + std::to_string(N) + " exceeds --max-pn");
}

inline std::string render_value(const CycloNum& v) {
    if (auto r = v.as_rational()) return to_string(*r);
    return v.to_string();
}

} // namespace detail

inline Output cmd_hq(const RunConfig& c) {
    const HGParams P = detail::params_of(c);
    const FieldPtr F = detail::field_of(c);
    const auto ts = detail::arguments(c, F);
    std::optional<HGAlgebraInstance> I;
    if (c.algebra == "split") I = split_instance(P, F);
    else if (c.algebra == "orbit") {
        if (F->f() != 1) throw UsageError("--algebra orbit works over a prime field");
        I = orbit_instance(P, F->p());
    } else if (c.algebra != "classic") throw UsageError("--algebra must be classic, split or orbit");
    if (c.twist != 1 && !I) throw UsageError("--twist applies to the algebra sums");

    io::json values = io::json::array();
    std::ostringstream text;
    text << P.to_string() << " over F_" << F->q();
    if (I) text << " via " << I->describe();
    text << "\n";
    for (const auto& t : ts) {
        CycloNum v = I ? hq_algebra_fourier(*I, t, c.twist) : hq_classic(P, F, t);
        if (auto r = v.in_subfield(std::gcd(v.conductor(), F->q() - 1))) v = *r;
        values.push_back({{"t", t.code}, {"value", io::to_json(v)}});
        text << "t=" << F->format(t) << ": " << detail::render_value(v) << "\n";
    }
    if (c.format == "json") {
        io::json payload{{"params", io::to_json(P)}, {"q", F->q()}, {"algebra", c.algebra}, {"values", values}};
        return {kOk, io::document("hq", payload).dump() + "\n"};
    }
    return {kOk, text.str()};
}

inline Output cmd_gp(const RunConfig& c) {
    const HGParams P = detail::params_of(c);
    if (!c.p) throw UsageError("--p is required");
    const int64_t p = *c.p;
    detail::check_precision(c, p, c.prec);
    if (c.route != "direct" && c.route != "algebra" && c.route != "both")
        throw UsageError("--route must be direct, algebra or both");
    if (c.all_t && c.t) throw UsageError("--t and --all-t are mutually exclusive");
    std::vector<int64_t> ts;
    if (c.all_t)
        for (int64_t t = 1; t < p; ++t) ts.push_back(t);
    else if (c.t) ts.push_back(*c.t);
    else throw UsageError("--t or --all-t is required");

    const int k = c.prec - static_cast<int>(P.delta());
    io::json values = io::json::array();
    std::ostringstream text;
    text << P.to_string() << " p=" << p << " N=" << c.prec << " delta=" << P.delta() << "\n";
    bool agree_all = true;
    for (int64_t t : ts) {
        io::json entry{{"t", t}};
        std::optional<PadicNum> d, a;
        if (c.route != "algebra") d = g_p_direct(P, p, t, c.prec);
        if (c.route != "direct") a = g_p_via_algebra(P, p, t, c.prec);
        text << "t=" << t << ":\n";
        if (d) {
            entry["direct"] = io::to_json(*d);
            text << "  direct:  " << d->to_string() << "\n";
        }
        if (a) {
            entry["algebra"] = io::to_json(*a);
            text << "  algebra: " << a->to_string() << "\n";
        }
        if (d && a) {
            bool ok = d->agrees_mod(*a, k);
            agree_all = agree_all && ok;
            entry["agree_mod_p^"] = k;
            entry["agree"] = ok;
            text << "  agree mod " << p << "^" << k << ": " << (ok ? "yes" : "NO") << "\n";
        }
        values.push_back(entry);
    }
    const int code = agree_all ? kOk : kCheckFailed;
    if (c.format == "json") {
        io::json payload{{"params", io::to_json(P)}, {"p", p}, {"N", c.prec}, {"delta", P.delta()}, {"route", c.route}, {"values", values}};
        return {code, io::document("gp", payload).dump() + "\n"};
    }
    return {code, text.str()};
}

inline Output cmd_gauss(const RunConfig& c) {
    const FieldPtr F = detail::field_of(c);
    const int64_t q = F->q(), p = F->p();
    const CycloNum g = gauss_sum(F, c.m, c.twist);
    const CycloNum norm = g * g.conj();
    std::ostringstream text;
    text << "F_" << q << " modulus " << F->modulus_string() << " generator " << F->format(F->generator()) << "\n";
    text << "g(omega^" << c.m << ") = " << g.to_string() << "\n";
    text << "g * conj(g) = " << detail::render_value(norm) << "\n";
    io::json payload{{"q", q}, {"m", c.m}, {"twist", c.twist}, {"value", io::to_json(g)}, {"norm", io::to_json(norm)}};
    if (p > 2) {
        detail::check_precision(c, p, c.prec);
        PiExp gk = gross_koblitz(p, F->f(), c.m, c.prec);
        text << "Gross-Koblitz: pi^(" << to_string(gk.e) << ") * (" << gk.u.to_string() << ")\n";
        payload["gross_koblitz"] = {{"pi_exponent", to_string(gk.e)}, {"unit", io::to_json(gk.u)}};
    }
    if (c.format == "json") return {kOk, io::document("gauss", payload).dump() + "\n"};
    return {kOk, text.str()};
}

inline Output cmd_delta(const RunConfig& c) {
    const HGParams P = detail::params_of(c);
    std::ostringstream text;
    auto join = [](const auto& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    const auto H = P.galois_stabilizer();
    const auto polys = defining_polys(P);
    auto poly_json = [](const std::vector<CycloNum>& poly) {
        io::json a = io::json::array();
        for (const auto& x : poly) a.push_back(io::to_json(x));
        return a;
    };
    io::json payload{{"params", io::to_json(P)},
                     {"D", P.common_denominator()},
                     {"delta", P.delta()},
                     {"Delta", P.Delta()},
                     {"stabilizer", H},
                     {"coset_representatives", P.coset_representatives()},
                     {"defined_over_Q", P.is_defined_over_Q()},
                     {"A", poly_json(polys.A)},
                     {"B", poly_json(polys.B)}};
    text << P.to_string() << "\nD=" << P.common_denominator() << " delta=" << P.delta() << " Delta=" << P.Delta()
         << "\nstabilizer={" << join(H) << "} defined over Q: " << (P.is_defined_over_Q() ? "yes" : "no") << "\n";
    text << "A(x) coefficients:";
    for (const auto& x : polys.A) text << " [" << detail::render_value(x) << "]";
    text << "\nB(x) coefficients:";
    for (const auto& x : polys.B) text << " [" << detail::render_value(x) << "]";
    text << "\n";
    if (c.p) {
        const int64_t p = *c.p;
        if (!is_prime(p) || P.common_denominator() % p == 0) throw UsageError("--p must be a prime not dividing D");
        std::vector<int64_t> lam;
        for (int64_t m = 0; m < p - 1; ++m) lam.push_back(P.lambda(p, m));
        payload["p"] = p;
        payload["lambda"] = lam;
        payload["splits"] = P.splits_in_K(p);
        text << "Lambda(m), m=0.." << p - 2 << ": " << join(lam) << "\n";
        if (P.splits_in_K(p)) {
            auto o = p_orbits(P, p);
            auto lens = [](const std::vector<Orbit>& os) {
                std::vector<int> v;
                for (const auto& x : os) v.push_back(x.length());
                return v;
            };
            payload["orbit_lengths"] = {{"alpha", lens(o.alpha)}, {"beta", lens(o.beta)}};
            text << "p-orbit lengths: alpha " << join(lens(o.alpha)) << " beta " << join(lens(o.beta)) << "\n";
        } else {
            text << "p does not split in K\n";
        }
    }
    if (c.format == "json") return {kOk, io::document("delta", payload).dump() + "\n"};
    return {kOk, text.str()};
}

inline Output cmd_verify(const RunConfig& c) {
    SuiteConfig s;
    s.checks = c.checks;
    s.max_q = c.max_q;
    s.max_p = c.max_p;
    s.precisions = c.prec_list;
    s.seed = c.seed;
    for (int N : s.precisions)
        for (int64_t p = 3; p <= s.max_p; ++p)
            if (is_prime(p)) detail::check_precision(c, p, N);
    std::ostringstream out;
    int failed = 0, total = 0;
    run_suite(s, [&](const CheckReport& r) {
        ++total;
        if (!r.pass) ++failed;
        if (c.format == "json") {
            out << io::to_json(r, c.timing).dump() << "\n";
        } else {
            out << (r.pass ? "PASS " : "FAIL ") << r.check << " " << r.instance;
            if (r.witness) out << " -- " << *r.witness;
            out << "\n";
        }
    });
    if (c.format != "json") out << total - failed << "/" << total << " checks passed\n";
    return {failed ? kCheckFailed : kOk, out.str()};
}

inline Output dispatch(const RunConfig& c) {
    if (c.format != "text" && c.format != "json") throw UsageError("--format must be text or json");
    if (c.subcommand == "hq") return cmd_hq(c);
    if (c.subcommand == "gp") return cmd_gp(c);
    if (c.subcommand == "gauss") return cmd_gauss(c);
    if (c.subcommand == "delta") return cmd_delta(c);
    if (c.subcommand == "verify") return cmd_verify(c);
    throw UsageError("unknown subcommand");
}

inline bool is_usage_kind(ErrorKind k) {
    switch (k) {
    case ErrorKind::InternalInconsistency:
    case ErrorKind::ExponentNotIntegral:
        return false;
    default:
        return true;
    }
}

/// Parses argv, runs the subcommand and writes to out/err; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Finite and p-adic hypergeometric functions"};
    app.require_subcommand(1);
    try {
        c.prec = detail::default_precision();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    auto add_params = [&](CLI::App* s) {
        s->add_option("--alpha", c.alpha, "comma-separated rationals")->required();
        s->add_option("--beta", c.beta, "comma-separated rationals")->required();
    };
    auto add_format = [&](CLI::App* s) { s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"})); };
    auto add_bounds = [&](CLI::App* s) {
        s->add_option("--max-field", c.max_field, "largest field size to build");
        s->add_option("--max-pn", c.max_pn, "largest p^N for p-adic work");
    };

    auto* hq = app.add_subcommand("hq", "finite hypergeometric sums");
    add_params(hq);
    hq->add_option("--q", c.q, "field size");
    hq->add_option("--p", c.p, "characteristic (with --f)");
    hq->add_option("--f", c.f, "extension degree (with --p)");
    hq->add_option("--t", c.t, "argument as an element code");
    hq->add_flag("--all-t", c.all_t, "every nonzero t");
    hq->add_option("--algebra", c.algebra, "classic, split or orbit");
    hq->add_option("--twist", c.twist, "additive character twist a in F_p^x");
    add_format(hq);
    add_bounds(hq);

    auto* gp = app.add_subcommand("gp", "p-adic hypergeometric function");
    add_params(gp);
    gp->add_option("--p", c.p, "odd prime")->required();
    gp->add_option("--t", c.t, "argument, an integer prime to p");
    gp->add_flag("--all-t", c.all_t, "t = 1 .. p-1");
    gp->add_option("--prec", c.prec, "p-adic precision N (default from HGF_PREC or 6)");
    gp->add_option("--route", c.route, "direct, algebra or both");
    add_format(gp);
    add_bounds(gp);

    auto* gauss = app.add_subcommand("gauss", "Gauss sums, exact and by Gross-Koblitz");
    gauss->add_option("--q", c.q, "field size");
    gauss->add_option("--p", c.p, "characteristic");
    gauss->add_option("--f", c.f, "extension degree");
    gauss->add_option("--m", c.m, "character exponent: omega^m")->required();
    gauss->add_option("--twist", c.twist, "additive character twist");
    gauss->add_option("--prec", c.prec, "p-adic precision N");
    add_format(gauss);
    add_bounds(gauss);

    auto* delta = app.add_subcommand("delta", "delta, Delta, Lambda, stabilizer and orbits");
    add_params(delta);
    delta->add_option("--p", c.p, "prime for the Lambda table and orbit report");
    add_format(delta);

    auto* verify = app.add_subcommand("verify", "run checks");
    verify->add_option("--check", c.checks, "check name or all (repeatable, comma-separated)")->delimiter(',');
    verify->add_option("--max-q", c.max_q, "largest base field for the finite-field checks");
    verify->add_option("--max-p", c.max_p, "largest prime for the p-adic and Galois checks");
    verify->add_option("--prec-list", c.prec_list, "precisions, comma-separated")->delimiter(',');
    verify->add_option("--seed", c.seed, "random seed");
    verify->add_flag("--timing,!--no-timing", c.timing, "include millis in JSON reports");
    add_format(verify);
    add_bounds(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    for (auto* s : {hq, gp, gauss, delta, verify})
        if (s->parsed()) c.subcommand = s->get_name();

    try {
        Output o = dispatch(c);
        out << o.text;
        return o.code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        if (e.is_resource_bound()) return kResource;
        return is_usage_kind(e.kind()) ? kUsage : kCheckFailed;
    }
}

} // namespace hgf::cli
