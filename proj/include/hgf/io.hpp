#pragma once

// JSON encoding of the value types. Every encoder has a decoder that
// reproduces an equal value.

#include <string>

#include <json.hpp>

#include "hgf/padic.hpp"
#include "hgf/params.hpp"
#include "hgf/verify.hpp"

namespace hgf::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hgf/1";

inline json to_json(const CycloNum& v) {
    json coeffs = json::array();
    const auto& num = v.numerators();
    for (const auto& n : num) coeffs.push_back(to_string(Rational(n, v.denominator())));
    json j{{"N", v.conductor()}, {"coeffs", coeffs}};
    if (auto r = v.as_rational()) j["rational"] = to_string(*r);
    return j;
}

inline CycloNum cyclo_from_json(const json& j) {
    const int64_t N = j.at("N").get<int64_t>();
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) {
        Rational r = parse_rational(x.get<std::string>());
        c.push_back(r);
    }
    return CycloNum::from_coeffs(N, c);
}

inline json to_json(const PadicNum& x) {
    json digits = json::array();
    for (auto d : x.unit_digits()) digits.push_back(d);
    return {{"p", x.p()}, {"N", x.rel_prec()}, {"valuation", x.valuation()}, {"digits", digits}};
}

inline PadicNum padic_from_json(const json& j) {
    const int64_t p = j.at("p").get<int64_t>();
    const int N = j.at("N").get<int>();
    const int v = j.at("valuation").get<int>();
    if (N == 0) return PadicNum::zero(p, v);
    const auto& digits = j.at("digits");
    if (static_cast<int>(digits.size()) != N) fail(ErrorKind::Parse, "digit count must equal N");
    uint64_t u = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        int64_t d = it->get<int64_t>();
        if (d < 0 || d >= p) fail(ErrorKind::Parse, "digit out of range");
        u = u * static_cast<uint64_t>(p) + static_cast<uint64_t>(d);
    }
    return PadicNum::from_parts(p, v, N, u);
}

inline json to_json(const HGParams& P) {
    json a = json::array(), b = json::array();
    for (const auto& x : P.alpha()) a.push_back(to_string(x));
    for (const auto& x : P.beta()) b.push_back(to_string(x));
    return {{"alpha", a}, {"beta", b}};
}

inline HGParams params_from_json(const json& j) {
    auto list = [](const json& arr) {
        std::vector<Rational> v;
        for (const auto& x : arr) v.push_back(parse_rational(x.get<std::string>()));
        return v;
    };
    return HGParams(list(j.at("alpha")), list(j.at("beta")));
}

inline json to_json(const CheckReport& r, bool with_timing = true) {
    json j{{"check", r.check}, {"instance", r.instance}, {"verdict", r.pass ? "pass" : "fail"}};
    if (r.witness) j["witness"] = *r.witness;
    if (with_timing) j["millis"] = static_cast<int64_t>(r.millis);
    if (!r.stats.empty()) {
        json s = json::object();
        for (const auto& [k, v] : r.stats) s[k] = v;
        j["stats"] = s;
    }
    return j;
}

/// Wraps a payload with the schema tag.
inline json document(const std::string& kind, json payload) {
    return {{"schema", kSchema}, {"kind", kind}, {"result", std::move(payload)}};
}

} // namespace hgf::io
