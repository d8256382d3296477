#pragma once

#include "cyclo/detail/numeric.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclo {

/// Largest supported code length.
inline constexpr std::uint32_t kMaxLength = 1u << 16;

/// The q-cyclotomic cosets of Z_n, each sorted ascending, ordered by their
/// minimum (the canonical representative).
struct CosetPartition {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::vector<std::uint32_t>> cosets;
    std::vector<std::uint32_t> representatives;
    /// coset_index[i] is the position in `cosets` of the coset containing i.
    std::vector<std::uint32_t> coset_index;

    const std::vector<std::uint32_t>& coset_of(std::uint32_t a) const { return cosets[coset_index[a % n]]; }
};

/// Coset representatives coprime to n, i.e. A(n). Every member's coset has
/// size ord_n(q), and |members| * ord_n(q) = phi(n).
struct RepresentativeSet {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> members;
    std::uint32_t order = 0;

    /// phi(n) / ord_n(q): how many distinct defining sets a code can show
    /// across primitive roots.
    std::size_t bound() const noexcept { return members.size(); }
};

inline void check_length(std::uint32_t n)
{
    if (n == 0 || n > kMaxLength)
        throw InvalidArgument("length " + std::to_string(n) + " outside 1.." + std::to_string(kMaxLength));
}

inline std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t n)
{
    check_length(n);
    if (std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
        throw NotCoprime("gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") > 1");
    if (n == 1)
        return 1;
    const std::uint64_t qm = q % n;
    std::uint64_t v = qm;
    std::uint32_t k = 1;
    while (v != 1) {
        v = v * qm % n;
        ++k;
    }
    return k;
}

inline std::uint64_t euler_totient(std::uint64_t n)
{
    std::uint64_t r = n;
    for (auto p : detail::prime_factors(n))
        r = r / p * (p - 1);
    return r;
}

inline CosetPartition cyclotomic_cosets(std::uint32_t n, std::uint64_t q)
{
    check_length(n);
    if (std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
        throw NotCoprime("gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") > 1");
    CosetPartition part;
    part.n = n;
    part.q = q;
    part.coset_index.assign(n, ~0u);
    const std::uint64_t qm = q % n;
    for (std::uint32_t a = 0; a < n; ++a) {
        if (part.coset_index[a] != ~0u)
            continue;
        const auto idx = static_cast<std::uint32_t>(part.cosets.size());
        std::vector<std::uint32_t> coset;
        std::uint64_t v = a;
        do {
            coset.push_back(static_cast<std::uint32_t>(v));
            part.coset_index[v] = idx;
            v = v * qm % n;
        } while (v != a);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
        part.representatives.push_back(a);
    }
    return part;
}

inline RepresentativeSet representative_set(const CosetPartition& part)
{
    RepresentativeSet rs;
    rs.n = part.n;
    rs.q = part.q;
    rs.order = multiplicative_order(part.q, part.n);
    for (auto a : part.representatives)
        if (std::gcd(a, part.n) == 1)
            rs.members.push_back(a);
    return rs;
}

/// Least nonnegative k with a*k = b (mod m), or nothing when gcd(a, m) does
/// not divide b.
inline std::optional<std::uint64_t> solve_linear_congruence(std::int64_t a, std::int64_t b, std::uint64_t m)
{
    if (m == 0)
        throw InvalidArgument("congruence modulus must be positive");
    const auto am = static_cast<std::int64_t>(detail::mod_floor(a, m));
    const auto bm = static_cast<std::int64_t>(detail::mod_floor(b, m));
    std::int64_t x = 0, y = 0;
    const std::int64_t g = detail::ext_gcd(am, static_cast<std::int64_t>(m), x, y);
    if (bm % g != 0)
        return std::nullopt;
    const auto mg = static_cast<std::uint64_t>(static_cast<std::int64_t>(m) / g);
    const unsigned __int128 k = static_cast<unsigned __int128>(detail::mod_floor(x, mg)) *
                                static_cast<std::uint64_t>(bm / g) % mg;
    return static_cast<std::uint64_t>(k);
}

/// Sorted set {a*s mod n : s in set}.
inline std::vector<std::uint32_t> scale_set(std::span<const std::uint32_t> set, std::uint64_t a, std::uint32_t n)
{
    std::vector<std::uint32_t> out;
    out.reserve(set.size());
    for (auto s : set)
        out.push_back(static_cast<std::uint32_t>(a % n * s % n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Union of the cosets meeting `set`, sorted.
inline std::vector<std::uint32_t> coset_closure(const CosetPartition& part, std::span<const std::uint32_t> set)
{
    std::vector<bool> taken(part.cosets.size(), false);
    for (auto s : set)
        taken[part.coset_index[s % part.n]] = true;
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < part.cosets.size(); ++c)
        if (taken[c])
            out.insert(out.end(), part.cosets[c].begin(), part.cosets[c].end());
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_coset_closed(const CosetPartition& part, std::span<const std::uint32_t> set)
{
    std::vector<bool> in(part.n, false);
    for (auto s : set) {
        if (s >= part.n)
            return false;
        in[s] = true;
    }
    const std::uint64_t qm = part.q % part.n;
    for (std::uint32_t s = 0; s < part.n; ++s)
        if (in[s] && !in[s * qm % part.n])
            return false;
    return true;
}

/// Z_n minus `set`, sorted.
inline std::vector<std::uint32_t> complement_set(std::span<const std::uint32_t> set, std::uint32_t n)
{
    std::vector<bool> in(n, false);
    for (auto s : set)
        in[s % n] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!in[i])
            out.push_back(i);
    return out;
}

} // namespace cyclo
