#pragma once

#include "cyclo/codes.hpp"

namespace cyclo {

/// A maximal cyclic run of zero positions: start, start+1, ... (mod n).
struct ZeroRun {
    std::uint32_t start = 0;
    std::uint32_t length = 0;

    friend bool operator==(const ZeroRun&, const ZeroRun&) = default;
};

/// Longest cyclic zero runs of a 0/1 zero-mask. Returns the maximal runs in
/// order of their start position (the wrapping run, if any, last).
inline std::vector<ZeroRun> maximal_zero_runs(const std::vector<bool>& is_zero)
{
    const auto n = static_cast<std::uint32_t>(is_zero.size());
    std::vector<ZeroRun> runs;
    std::uint32_t anchor = n;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!is_zero[i]) {
            anchor = i;
            break;
        }
    if (anchor == n)
        return runs;
    // Scan the doubled range starting right after a nonzero position.
    std::uint32_t len = 0, start = 0;
    for (std::uint32_t step = 1; step <= n; ++step) {
        const std::uint32_t i = (anchor + step) % n;
        if (is_zero[i]) {
            if (len == 0)
                start = i;
            ++len;
        } else if (len > 0) {
            runs.push_back({start, len});
            len = 0;
        }
    }
    std::sort(runs.begin(), runs.end(), [](const ZeroRun& a, const ZeroRun& b) { return a.start < b.start; });
    return runs;
}

/// d* of a coefficient vector given by its zero mask: 0 for the zero vector,
/// otherwise the longest cyclic zero run plus one.
inline std::uint32_t apparent_distance_mask(const std::vector<bool>& is_zero)
{
    if (std::all_of(is_zero.begin(), is_zero.end(), [](bool z) { return z; }))
        return 0;
    std::uint32_t best = 0;
    for (const auto& r : maximal_zero_runs(is_zero))
        best = std::max(best, r.length);
    return best + 1;
}

inline std::uint32_t apparent_distance_vec(std::span<const Element> coeffs)
{
    std::vector<bool> z(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        z[i] = coeffs[i].value == 0;
    return apparent_distance_mask(z);
}

inline std::uint32_t apparent_distance(const QuotientPoly& f) { return apparent_distance_vec(f.coeffs); }
inline std::uint32_t apparent_distance(const Spectrum& s) { return apparent_distance_vec(s.values); }

/// Apparent distance of the indicator F_D of a defining set: longest cyclic
/// run inside D, plus one.
inline std::uint32_t apparent_distance_of_set(std::span<const std::uint32_t> D, std::uint32_t n)
{
    std::vector<bool> z(n, false);
    for (auto d : D)
        z[d] = true;
    return apparent_distance_mask(z);
}

struct RepresentativeReport {
    std::uint32_t representative = 0;
    /// a * D mod n: the defining set relative to beta with beta^a = alpha.
    std::vector<std::uint32_t> defining_set;
    std::uint32_t apparent_distance = 0;
    /// Maximal zero runs of F_{aD} of length apparent_distance - 1.
    std::vector<ZeroRun> runs;
};

struct ApparentDistanceReport {
    std::vector<RepresentativeReport> per_representative;
    /// d*(C) = Delta(C), the largest BCH bound over all primitive roots.
    std::uint32_t overall = 0;
    std::vector<std::uint32_t> optimal_reps;
};

inline ApparentDistanceReport code_apparent_distance(const CyclicCode& code)
{
    const std::uint32_t n = code.length();
    ApparentDistanceReport rep;
    for (auto a : representative_set(code.partition()).members) {
        RepresentativeReport r;
        r.representative = a;
        r.defining_set = scale_set(code.defining_set(), a, n);
        std::vector<bool> z(n, false);
        for (auto d : r.defining_set)
            z[d] = true;
        r.apparent_distance = apparent_distance_mask(z);
        for (const auto& run : maximal_zero_runs(z))
            if (run.length + 1 == r.apparent_distance)
                r.runs.push_back(run);
        rep.overall = std::max(rep.overall, r.apparent_distance);
        rep.per_representative.push_back(std::move(r));
    }
    for (const auto& r : rep.per_representative)
        if (r.apparent_distance == rep.overall)
            rep.optimal_reps.push_back(r.representative);
    return rep;
}

/// Delta(C).
inline std::uint32_t bch_bound(const CyclicCode& code) { return code_apparent_distance(code).overall; }

/// Witness that d(C) = Delta(C): a divisor g of x^n - 1 over GF(p^d) with
/// deg g = n - Delta, a shift k and an optimal representative a such that
/// f = x^k g mod (x^n - 1) avoids a*D and has a rational spectrum.
struct Certificate {
    Poly divisor;
    std::uint32_t shift = 0;
    std::uint32_t representative = 0;
    std::uint32_t subfield_degree = 1;
};

struct CertifyOptions {
    /// Maximum number of (divisor, shift, representative) candidates.
    std::uint64_t budget = 1'000'000;
    /// Subfield degrees over GF(p) to search after the base field, ascending.
    /// Each must be a multiple of the base field degree and divide m.
    std::vector<std::uint32_t> extra_subfields;
};

/// The spectrum-side rationality test for f = x^k g viewed as a vector.
inline bool shifted_divisor_is_rational(const RootOfUnity& root, std::uint64_t q, const QuotientPoly& f)
{
    return is_rational(as_spectrum(root, f), q);
}

/// Re-checks every condition carried by a certificate against the code.
inline bool validate_certificate(const CyclicCode& code, const Certificate& cert)
{
    const std::uint32_t n = code.length();
    const GaloisField& F = code.root().gf();
    const auto report = code_apparent_distance(code);
    if (std::find(report.optimal_reps.begin(), report.optimal_reps.end(), cert.representative) ==
        report.optimal_reps.end())
        return false;
    if (cert.divisor.is_zero() || cert.divisor.degree() >= static_cast<int>(n))
        return false;
    if (!poly::divmod(F, poly::xn_minus_one(F, n), cert.divisor).second.is_zero())
        return false;
    const auto g = poly::reduce(F, cert.divisor, n);
    if (apparent_distance(g) != report.overall)
        return false;
    const auto f = cyclic_shift(g, cert.shift);
    const auto aD = scale_set(code.defining_set(), cert.representative, n);
    for (auto d : aD)
        if (f.coeffs[d].value != 0)
            return false;
    return shifted_divisor_is_rational(code.root(), code.q(), f);
}

/// Searches for a Certificate: divisors over GF(q) first, then the extra
/// subfields in the order given. Returns nothing when the search completes
/// without success; throws BudgetExceeded when it had to stop early.
inline std::optional<Certificate> certify_equality(const CyclicCode& code, const CertifyOptions& opts = {})
{
    const std::uint32_t n = code.length();
    const auto report = code_apparent_distance(code);
    const std::uint32_t delta = report.overall;
    if (delta == 0 || delta > n)
        return std::nullopt;
    const std::uint32_t target = n - delta;

    std::vector<std::vector<bool>> forbidden;
    for (auto a : report.optimal_reps) {
        std::vector<bool> mask(n, false);
        for (auto d : scale_set(code.defining_set(), a, n))
            mask[d] = true;
        forbidden.push_back(std::move(mask));
    }

    std::vector<std::uint32_t> degrees{code.base_degree()};
    for (auto d : opts.extra_subfields)
        if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
            degrees.push_back(d);

    std::uint64_t spent = 0;
    std::optional<Certificate> found;
    for (auto d : degrees) {
        if (d % code.base_degree() != 0)
            throw InvalidSubfield("subfield GF(p^" + std::to_string(d) + ") does not contain GF(q)");
        const auto factors = factor_xn(code.root(), d);
        for_each_divisor(factors, target, [&](const Divisor& div) {
            const auto g = poly::reduce(code.root().gf(), div.poly, n);
            const auto supp = g.support();
            for (std::uint32_t k = 0; k < n; ++k) {
                for (std::size_t r = 0; r < forbidden.size(); ++r) {
                    if (++spent > opts.budget)
                        throw BudgetExceeded("certificate search exceeded " + std::to_string(opts.budget) +
                                             " candidates");
                    bool clear = true;
                    for (auto s : supp)
                        if (forbidden[r][(s + k) % n]) {
                            clear = false;
                            break;
                        }
                    if (!clear)
                        continue;
                    const auto f = cyclic_shift(g, k);
                    if (!shifted_divisor_is_rational(code.root(), code.q(), f))
                        continue;
                    found = Certificate{div.poly, k, report.optimal_reps[r], d};
                    return false;
                }
            }
            return true;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

} // namespace cyclo
