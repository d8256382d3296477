#pragma once

#include "cyclo/forge.hpp"

#include <nlohmann/json.hpp>

#include <charconv>

namespace cyclo::io {

using json = nlohmann::json;

// Polynomials with only unit coefficients print as ascending exponent lists;
// anything else as ascending [exponent, coefficient] pairs, the coefficient
// being the packed field element.
inline json coefficients_to_json(std::span<const Element> coeffs)
{
    const bool unit = std::all_of(coeffs.begin(), coeffs.end(), [](Element e) { return e.value <= 1; });
    json out = json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].value == 0)
            continue;
        if (unit)
            out.push_back(i);
        else
            out.push_back(json::array({i, coeffs[i].value}));
    }
    return out;
}

inline json to_json(const Poly& p) { return coefficients_to_json(p.coeffs); }
inline json to_json(const QuotientPoly& p) { return coefficients_to_json(p.coeffs); }

inline Poly poly_from_json(const json& j)
{
    std::vector<Element> c;
    for (const auto& t : j) {
        std::uint32_t e = 0, v = 1;
        if (t.is_array()) {
            e = t.at(0).get<std::uint32_t>();
            v = t.at(1).get<std::uint32_t>();
        } else {
            e = t.get<std::uint32_t>();
        }
        if (c.size() <= e)
            c.resize(e + 1);
        c[e] = Element{v};
    }
    return Poly(std::move(c));
}

inline json field_modulus_json(const GaloisField& F)
{
    std::vector<Element> c;
    for (auto v : F.modulus())
        c.push_back(Element{v});
    return coefficients_to_json(c);
}

inline json to_json(const CosetPartition& part)
{
    const auto A = representative_set(part);
    return json{{"n", part.n},
                {"q", part.q},
                {"cosets", part.cosets},
                {"representatives", part.representatives},
                {"a_set", A.members},
                {"order", A.order}};
}

inline json alpha_json(const RootOfUnity& root)
{
    const auto p = root.gf().characteristic();
    return json{{"min_poly", to_json(minimal_polynomial(root, 1, p))},
                {"generator_exponent", root.generator_exponent}};
}

inline json to_json(const ZeroRun& r) { return json{{"start", r.start}, {"length", r.length}}; }

/// The code record: n, q, field_poly, alpha, defining_set, dimension,
/// generator_poly, idempotent, bch_bound, bose_distance, optimal_reps and,
/// when known, min_distance.
inline json code_record(const CyclicCode& code, std::optional<std::uint32_t> min_distance = std::nullopt)
{
    const auto report = code_apparent_distance(code);
    const auto bose = bose_distance(code);
    json j{{"n", code.length()},
           {"q", code.q()},
           {"field_poly", field_modulus_json(code.root().gf())},
           {"alpha", alpha_json(code.root())},
           {"defining_set", code.defining_set()},
           {"dimension", code.dimension()},
           {"generator_poly", to_json(code.generator())},
           {"idempotent", to_json(code.idempotent())},
           {"bch_bound", report.overall},
           {"bose_distance", bose ? json(*bose) : json(nullptr)},
           {"optimal_reps", report.optimal_reps}};
    if (min_distance)
        j["min_distance"] = *min_distance;
    return j;
}

inline json to_json(const ApparentDistanceReport& rep)
{
    json per = json::array();
    for (const auto& r : rep.per_representative) {
        json runs = json::array();
        for (const auto& z : r.runs)
            runs.push_back(to_json(z));
        per.push_back(json{{"representative", r.representative},
                           {"defining_set", r.defining_set},
                           {"apparent_distance", r.apparent_distance},
                           {"runs", runs}});
    }
    return json{{"per_representative", per}, {"overall", rep.overall}, {"optimal_reps", rep.optimal_reps}};
}

inline json to_json(const Certificate& c)
{
    return json{{"divisor", to_json(c.divisor)},
                {"shift", c.shift},
                {"representative", c.representative},
                {"subfield_degree", c.subfield_degree}};
}

inline json to_json(const FactorList& list)
{
    json fac = json::array();
    for (const auto& f : list.factors)
        fac.push_back(json{{"poly", to_json(f.poly)}, {"exponents", f.exponents}});
    return json{{"n", list.n}, {"subfield_degree", list.subfield_degree}, {"factors", fac}};
}

inline json to_json(const DistanceResult& r)
{
    return json{{"distance", r.distance},
                {"witness", to_json(r.witness)},
                {"enumerated", r.enumerated},
                {"exhaustive", r.exhaustive}};
}

inline json to_json(const ConstructionRecord& r)
{
    json j{{"source", to_string(r.source)},
           {"divisor", to_json(r.divisor)},
           {"shift", r.shift},
           {"subfield_degree", r.subfield_degree},
           {"generator", to_json(r.generator_word)},
           {"dimension", r.dimension},
           {"claimed_distance", r.claimed_distance},
           {"defining_set", r.code.defining_set()},
           {"verified", r.verified}};
    if (r.bch_delta)
        j["bch"] = json{{"delta", *r.bch_delta}, {"offset", *r.bch_offset}};
    if (r.measured_distance)
        j["min_distance"] = *r.measured_distance;
    return j;
}

// ---- text input ---------------------------------------------------------

inline std::uint32_t parse_uint(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidArgument("not a non-negative integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    if (s.empty())
        return out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

/// "12,3,0" -> x^12 + x^3 + 1. Terms with another coefficient are written
/// "e:c" (e.g. "2,1:2,0:1" for x^2 + 2x + 1 over GF(3)).
inline std::vector<std::uint32_t> parse_exponent_poly(std::string_view text)
{
    std::vector<std::uint32_t> coeffs;
    for (auto tok : split(text, ',')) {
        std::uint32_t e = 0, c = 1;
        if (const auto colon = tok.find(':'); colon != std::string_view::npos) {
            e = parse_uint(tok.substr(0, colon));
            c = parse_uint(tok.substr(colon + 1));
        } else {
            e = parse_uint(tok);
        }
        if (e > 64)
            throw InvalidArgument("exponent too large: " + std::to_string(e));
        if (coeffs.size() <= e)
            coeffs.resize(e + 1, 0);
        coeffs[e] += c;
    }
    if (coeffs.empty())
        throw InvalidArgument("empty polynomial");
    return coeffs;
}

inline Poly poly_from_coefficients(const GaloisField& F, const std::vector<std::uint32_t>& c)
{
    std::vector<Element> v;
    for (auto x : c)
        v.push_back(F.from_int(x));
    return Poly(std::move(v));
}

/// A defining set given either as "1,2,4" or as "coset:1,3" (closure of the
/// listed representatives). An empty string is the empty set.
inline std::vector<std::uint32_t> parse_defining_set(std::string_view text, const CosetPartition& part)
{
    bool closure = false;
    if (text.rfind("coset:", 0) == 0) {
        closure = true;
        text.remove_prefix(6);
    }
    std::vector<std::uint32_t> v;
    for (auto tok : split(text, ','))
        v.push_back(parse_uint(tok) % part.n);
    if (closure)
        return coset_closure(part, v);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace cyclo::io
