#pragma once

#include "cyclo/bounds.hpp"
#include "cyclo/wtdist.hpp"

#include <map>
#include <set>

namespace cyclo {

enum class Source { divisor, congruence, primitive_family, extension };

inline const char* to_string(Source s)
{
    switch (s) {
    case Source::divisor: return "divisor";
    case Source::congruence: return "congruence";
    case Source::primitive_family: return "primitive-family";
    case Source::extension: return "extension";
    }
    return "?";
}

/// A code produced from a divisor g of x^n - 1 and a shift k: the code
/// generated by idft(x^k g), whose nonzeros are supp(x^k g).
struct ConstructionRecord {
    Source source = Source::divisor;
    Poly divisor;
    std::uint32_t shift = 0;
    /// g has coefficients in GF(p^subfield_degree).
    std::uint32_t subfield_degree = 1;
    CyclicCode code;
    /// idft of x^k g over the code's root; a generator of the code.
    QuotientPoly generator_word;
    std::uint32_t dimension = 0;
    /// n - deg g, which equals both Delta and d for these codes.
    std::uint32_t claimed_distance = 0;
    /// Present for extension records.
    std::optional<std::uint32_t> bch_delta;
    std::optional<std::uint32_t> bch_offset;
    std::optional<std::uint32_t> measured_distance;
    bool verified = false;
};

namespace detail {

inline void require_divisor(const GaloisField& F, const Poly& g, std::uint32_t n)
{
    if (g.is_zero() || g.degree() >= static_cast<int>(n) ||
        !poly::divmod(F, poly::xn_minus_one(F, n), g).second.is_zero())
        throw InvalidArgument("polynomial is not a proper divisor of x^" + std::to_string(n) + " - 1");
}

inline std::uint32_t coefficient_field_degree(const GaloisField& F, const Poly& g, std::uint32_t base)
{
    for (std::uint32_t d = base; d <= F.degree(); d += base)
        if (F.degree() % d == 0 && poly::coefficients_in_subfield(F, g, d))
            return d;
    return F.degree();
}

} // namespace detail

/// Builds the code generated by idft(x^k g). Fails with NotRational when
/// x^k g does not have a GF(q)-rational inverse transform.
inline ConstructionRecord construct_from_divisor(const RootOfUnity& root, std::uint64_t q, const Poly& g,
                                                 std::uint32_t k, Source source = Source::divisor)
{
    const GaloisField& F = root.gf();
    const std::uint32_t n = root.n;
    detail::require_divisor(F, g, n);
    const auto f = cyclic_shift(poly::reduce(F, g, n), k);
    if (!is_rational(as_spectrum(root, f), q))
        throw NotRational("x^" + std::to_string(k) + " g has no GF(" + std::to_string(q) +
                          ")-rational inverse transform");
    CyclicCode code(root, q, complement_set(f.support(), n));
    ConstructionRecord rec{.source = source,
                           .divisor = poly::monic(F, g),
                           .shift = k % n,
                           .subfield_degree = detail::coefficient_field_degree(F, g, code.base_degree()),
                           .code = code,
                           .generator_word = idft(as_spectrum(root, f)),
                           .dimension = code.dimension(),
                           .claimed_distance = n - static_cast<std::uint32_t>(g.degree()),
                           .bch_delta = std::nullopt,
                           .bch_offset = std::nullopt,
                           .measured_distance = std::nullopt};
    return rec;
}

/// Smallest k for which every value (x^k g)(alpha^j) = alpha^(jk) g(alpha^j)
/// lies in GF(q), found by evaluating g at the powers of alpha.
inline std::optional<std::uint32_t> find_shift(const RootOfUnity& root, std::uint64_t q, const Poly& g)
{
    const GaloisField& F = root.gf();
    const std::uint32_t s = subfield_degree_of(F, q);
    const std::uint32_t n = root.n;
    std::vector<std::pair<std::uint32_t, Element>> values;
    for (std::uint32_t j = 0; j < n; ++j) {
        const Element v = poly::eval(F, g, root.power(j));
        if (v.value != 0)
            values.emplace_back(j, v);
    }
    for (std::uint32_t k = 0; k < n; ++k) {
        bool ok = true;
        for (const auto& [j, v] : values)
            if (!in_subfield(F, F.mul(root.power(static_cast<std::int64_t>(j) * k), v), s)) {
                ok = false;
                break;
            }
        if (ok)
            return k;
    }
    return std::nullopt;
}

/// Root exponents of h relative to alpha, checking that h is irreducible over
/// GF(p^d) and divides x^n - 1 (its roots form one p^d-cyclotomic coset).
inline std::vector<std::uint32_t> irreducible_factor_exponents(const RootOfUnity& root, const Poly& h,
                                                               std::uint32_t subfield_degree)
{
    const GaloisField& F = root.gf();
    if (h.degree() < 1)
        throw NotIrreducible("constant polynomial");
    if (!poly::coefficients_in_subfield(F, h, subfield_degree))
        throw NotIrreducible("coefficients lie outside GF(p^" + std::to_string(subfield_degree) + ")");
    std::vector<std::uint32_t> exps;
    for (std::uint32_t i = 0; i < root.n; ++i)
        if (poly::eval(F, h, root.power(i)).value == 0)
            exps.push_back(i);
    const std::uint64_t qd = detail::checked_pow(F.characteristic(), subfield_degree, kMaxFieldOrder + 1);
    const auto part = cyclotomic_cosets(root.n, qd);
    if (exps.empty() || static_cast<int>(exps.size()) != h.degree() || part.coset_of(exps.front()) != exps)
        throw NotIrreducible("polynomial is not an irreducible factor of x^" + std::to_string(root.n) + " - 1");
    return exps;
}

/// The congruence route: with g = (x^n - 1)/h and g(alpha^j) = alpha^t,
/// a record exists when gcd(j, n/gcd(q-1, n)) divides t; the shift k solves
/// (q-1)/e * j * k = -(q-1)/e * t (mod n/e), e = gcd(q-1, n).
inline std::optional<ConstructionRecord> congruence_construct(const RootOfUnity& root, std::uint64_t q, const Poly& h,
                                                              std::uint32_t j, std::uint32_t subfield_degree = 0)
{
    const GaloisField& F = root.gf();
    const std::uint32_t n = root.n;
    if (subfield_degree == 0)
        subfield_degree = subfield_degree_of(F, q);
    const auto exps = irreducible_factor_exponents(root, h, subfield_degree);
    if (!std::binary_search(exps.begin(), exps.end(), j % n))
        throw InvalidArgument("exponent " + std::to_string(j) + " is not a root exponent of h");
    const Poly g = poly::divmod(F, poly::xn_minus_one(F, n), h).first;
    const Element v = poly::eval(F, g, root.power(j));
    std::optional<std::uint32_t> t;
    for (std::uint32_t e = 0; e < n; ++e)
        if (root.power(e) == v) {
            t = e;
            break;
        }
    if (!t)
        return std::nullopt;
    const std::uint64_t e = std::gcd(q - 1, static_cast<std::uint64_t>(n));
    const std::uint64_t mod = n / e;
    const std::uint64_t jj = j % n == 0 ? n : j % n;
    if (*t % std::gcd(jj, mod) != 0)
        return std::nullopt;
    const auto c = static_cast<std::int64_t>(((q - 1) / e) % mod);
    const auto k = solve_linear_congruence(c * static_cast<std::int64_t>(jj % mod),
                                           -c * static_cast<std::int64_t>(*t % mod), mod);
    if (!k)
        return std::nullopt;
    return construct_from_divisor(root, q, g, static_cast<std::uint32_t>(*k), Source::congruence);
}

/// Tries every root exponent of h in ascending order.
inline std::optional<ConstructionRecord> congruence_construct_any(const RootOfUnity& root, std::uint64_t q,
                                                                  const Poly& h, std::uint32_t subfield_degree = 0)
{
    if (subfield_degree == 0)
        subfield_degree = subfield_degree_of(root.gf(), q);
    for (auto j : irreducible_factor_exponents(root, h, subfield_degree))
        if (auto rec = congruence_construct(root, q, h, j, subfield_degree))
            return rec;
    return std::nullopt;
}

namespace detail {

inline void sort_records(std::vector<ConstructionRecord>& recs)
{
    std::stable_sort(recs.begin(), recs.end(), [](const ConstructionRecord& a, const ConstructionRecord& b) {
        if (a.source != b.source)
            return a.source < b.source;
        if (a.dimension != b.dimension)
            return a.dimension > b.dimension;
        return a.claimed_distance < b.claimed_distance;
    });
}

inline void dedup_records(std::vector<ConstructionRecord>& recs)
{
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<ConstructionRecord> out;
    for (auto& r : recs)
        if (seen.insert(r.code.defining_set()).second)
            out.push_back(std::move(r));
    recs = std::move(out);
}

} // namespace detail

struct ForgeOptions {
    /// Coefficient field of the divisors, GF(p^d); 0 means GF(q).
    std::uint32_t subfield_degree = 0;
    /// Maximum number of divisors examined.
    std::uint64_t budget = 1'000'000;
    /// Keep the whole space (empty defining set) among the results.
    bool keep_trivial = false;
};

/// Every divisor g of x^n - 1 over the chosen field with some shift making
/// x^k g rational, one record per distinct code.
inline std::vector<ConstructionRecord> forge_divisors(const RootOfUnity& root, std::uint64_t q,
                                                      const ForgeOptions& opts = {})
{
    const std::uint32_t d = opts.subfield_degree ? opts.subfield_degree : subfield_degree_of(root.gf(), q);
    const auto factors = factor_xn(root, d);
    std::vector<ConstructionRecord> recs;
    std::uint64_t spent = 0;
    for (std::uint32_t deg = 0; deg < root.n; ++deg) {
        for_each_divisor(factors, deg, [&](const Divisor& div) {
            if (++spent > opts.budget)
                throw BudgetExceeded("divisor enumeration exceeded " + std::to_string(opts.budget) + " divisors");
            if (auto k = find_shift(root, q, div.poly)) {
                auto rec = construct_from_divisor(root, q, div.poly, *k, Source::divisor);
                if (opts.keep_trivial || !rec.code.defining_set().empty())
                    recs.push_back(std::move(rec));
            }
            return true;
        });
    }
    detail::dedup_records(recs);
    detail::sort_records(recs);
    return recs;
}

/// One congruence-route record per irreducible factor that admits one.
inline std::vector<ConstructionRecord> forge_congruence(const RootOfUnity& root, std::uint64_t q,
                                                        const ForgeOptions& opts = {})
{
    const std::uint32_t d = opts.subfield_degree ? opts.subfield_degree : subfield_degree_of(root.gf(), q);
    std::vector<ConstructionRecord> recs;
    for (const auto& fac : factor_xn(root, d).factors) {
        if (auto rec = congruence_construct_any(root, q, fac.poly, d))
            if (opts.keep_trivial || !rec->code.defining_set().empty())
                recs.push_back(std::move(*rec));
    }
    detail::dedup_records(recs);
    detail::sort_records(recs);
    return recs;
}

/// Binary codes of length n = 2^m - 1 from g_j = (x^n - 1)/min(alpha^j) for
/// every coset C_2(j) with gcd(j, n) = 1; alpha is a primitive element.
inline std::vector<ConstructionRecord> primitive_family(std::uint32_t m)
{
    if (m < 2 || m > 16)
        throw InvalidArgument("primitive family needs 2 <= m <= 16");
    const std::uint32_t n = (1u << m) - 1;
    const auto field = build_field(2, m);
    const auto alpha = nth_root(field, n);
    const auto part = cyclotomic_cosets(n, 2);
    std::vector<ConstructionRecord> recs;
    for (auto j : part.representatives) {
        if (std::gcd(j, n) != 1)
            continue;
        const Poly h = minimal_polynomial(alpha, j, 2);
        auto rec = congruence_construct(alpha, 2, h, j, 1);
        if (!rec)
            throw InvalidArgument("congruence failed for a primitive-length coset");
        rec->source = Source::primitive_family;
        recs.push_back(std::move(*rec));
    }
    detail::dedup_records(recs);
    return recs;
}

/// BCH codes containing the code of idft(x^k g): for each maximal zero run
/// of x^k g of length n - deg(g) - 1, the run is a BCH window whose coset
/// closure T is the new defining set. Deduplicated by defining set, in order
/// of run start.
inline std::vector<BchCode> extend_to_bch(const RootOfUnity& root, std::uint64_t q, const Poly& g, std::uint32_t k)
{
    const GaloisField& F = root.gf();
    const std::uint32_t n = root.n;
    detail::require_divisor(F, g, n);
    const auto f = cyclic_shift(poly::reduce(F, g, n), k);
    if (!is_rational(as_spectrum(root, f), q))
        throw NotRational("x^" + std::to_string(k) + " g has no GF(" + std::to_string(q) +
                          ")-rational inverse transform");
    const std::uint32_t delta = n - static_cast<std::uint32_t>(g.degree());
    std::vector<bool> zero(n);
    for (std::uint32_t i = 0; i < n; ++i)
        zero[i] = f.coeffs[i].value == 0;
    std::vector<BchCode> out;
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& run : maximal_zero_runs(zero)) {
        if (run.length + 1 != delta)
            continue;
        auto bch = bch_code(root, q, delta, run.start);
        for (auto t : bch.code.defining_set())
            if (!zero[t])
                throw NotRational("window closure meets the support of x^k g");
        if (seen.insert(bch.code.defining_set()).second)
            out.push_back(std::move(bch));
    }
    return out;
}

inline std::vector<ConstructionRecord> extension_records(const ConstructionRecord& src)
{
    std::vector<ConstructionRecord> out;
    for (auto& bch : extend_to_bch(src.code.root(), src.code.q(), src.divisor, src.shift)) {
        ConstructionRecord rec = src;
        rec.source = Source::extension;
        rec.code = bch.code;
        rec.generator_word = bch.code.idempotent();
        rec.dimension = bch.code.dimension();
        rec.claimed_distance = bch.delta;
        rec.bch_delta = bch.delta;
        rec.bch_offset = bch.offset;
        rec.measured_distance.reset();
        rec.verified = false;
        out.push_back(std::move(rec));
    }
    return out;
}

/// Brute-force check of the claimed distance.
inline void verify_record(ConstructionRecord& rec, const DistanceOptions& opts = {})
{
    const auto res = min_distance(rec.code, opts);
    rec.measured_distance = res.distance;
    rec.verified = res.exhaustive && res.distance == rec.claimed_distance;
}

} // namespace cyclo
