#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace cyclo::detail {

inline bool is_prime(std::uint64_t v)
{
    if (v < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

/// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0)
                v /= d;
        }
    }
    if (v > 1)
        out.push_back(v);
    return out;
}

/// Returns 0 on overflow past `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > limit / base)
            return 0;
        r *= base;
    }
    return r;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    if (mod == 1)
        return 0;
    unsigned __int128 r = 1;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1)
            r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t m)
{
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = a % sm;
    if (r < 0)
        r += sm;
    return static_cast<std::uint64_t>(r);
}

/// Extended Euclid: returns g = gcd(a, b) and x, y with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y)
{
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0, y1 = 0;
    const std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace cyclo::detail
