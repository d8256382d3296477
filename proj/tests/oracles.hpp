#pragma once

// Slow, independent reference computations used to check the library.
// None of these call the routine they are used to test.

#include "cyclo/cyclo.hpp"

#include <random>

namespace oracle {

using namespace cyclo;

// Carry-less product of two GF(2)[x] residues reduced by a degree-m modulus,
// one bit at a time.
inline std::uint32_t gf2m_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m)
{
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < m; ++i)
        if ((b >> i) & 1)
            acc ^= std::uint64_t{a} << i;
    for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i)
        if ((acc >> i) & 1)
            acc ^= std::uint64_t{modulus} << (i - m);
    return static_cast<std::uint32_t>(acc);
}

// GF(p^m) elements as digit vectors; schoolbook product then long division.
inline std::vector<int> gfpm_mul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus,
                                 int p)
{
    const std::size_t m = modulus.size() - 1;
    std::vector<int> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const int lead_inv = [&] {
        for (int x = 1; x < p; ++x)
            if (x * modulus[m] % p == 1)
                return x;
        return 1;
    }();
    for (std::size_t i = 2 * m - 1; i >= m; --i) {
        const int c = prod[i] * lead_inv % p;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= m; ++j)
            prod[i - m + j] = ((prod[i - m + j] - c * modulus[j]) % p + p) % p;
    }
    prod.resize(m);
    return prod;
}

inline std::uint32_t pack(const std::vector<int>& digits, int p)
{
    std::uint32_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        v = v * p + digits[i];
    return v;
}

inline std::vector<int> unpack(std::uint32_t v, int p, std::size_t m)
{
    std::vector<int> d(m);
    for (std::size_t i = 0; i < m; ++i) {
        d[i] = static_cast<int>(v % p);
        v /= p;
    }
    return d;
}

// Longest cyclic run of consecutive integers inside a set, found by trying
// every start and walking forward.
inline std::uint32_t longest_consecutive(const std::vector<bool>& in)
{
    const auto n = static_cast<std::uint32_t>(in.size());
    std::uint32_t best = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        std::uint32_t len = 0;
        while (len < n && in[(s + len) % n])
            ++len;
        best = std::max(best, len);
    }
    return best;
}

// BCH bound by scanning consecutive roots for every root alpha^a with a
// coprime to n (not just coset representatives).
inline std::uint32_t bch_bound_scan(std::span<const std::uint32_t> D, std::uint32_t n)
{
    std::uint32_t best = 0;
    for (std::uint32_t a = 1; a <= n; ++a) {
        if (std::gcd(a, n) != 1)
            continue;
        std::vector<bool> in(n, false);
        for (auto d : D)
            in[static_cast<std::uint64_t>(d) * a % n] = true;
        const auto run = longest_consecutive(in);
        best = std::max(best, run == n ? n : run + 1);
    }
    return D.empty() ? 1 : best;
}

// Minimum distance of a binary cyclic code from its zeros alone: walks all
// 2^n words in Gray order keeping the syndromes c(alpha^r) for one root per
// coset of the defining set.
inline std::uint32_t binary_distance_from_zeros(const CyclicCode& code)
{
    const GaloisField& F = code.root().gf();
    const std::uint32_t n = code.length();
    std::vector<std::uint32_t> reps;
    for (const auto& c : code.partition().cosets)
        if (std::binary_search(code.defining_set().begin(), code.defining_set().end(), c.front()))
            reps.push_back(c.front());
    std::vector<std::vector<Element>> col(n);
    for (std::uint32_t j = 0; j < n; ++j)
        for (auto r : reps)
            col[j].push_back(F.pow(code.root().element, static_cast<std::uint64_t>(r) * j));
    std::vector<Element> syn(reps.size(), F.zero());
    std::uint32_t weight = 0, best = n + 1;
    std::uint64_t word = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
        word ^= std::uint64_t{1} << bit;
        weight = static_cast<std::uint32_t>(std::popcount(word));
        for (std::size_t t = 0; t < reps.size(); ++t)
            syn[t] = F.add(syn[t], col[bit][t]);
        if (weight < best && std::all_of(syn.begin(), syn.end(), [](Element e) { return e.value == 0; }))
            best = weight;
    }
    return best;
}

// Same idea for any q: every word of F_q^n, membership by evaluation.
inline std::uint32_t distance_from_zeros(const CyclicCode& code)
{
    const GaloisField& F = code.root().gf();
    const std::uint32_t n = code.length();
    const auto elems = subfield_elements(F, code.base_degree());
    std::vector<std::size_t> digit(n, 0);
    std::uint32_t best = n + 1;
    while (true) {
        std::size_t pos = 0;
        while (pos < n && ++digit[pos] == elems.size())
            digit[pos++] = 0;
        if (pos == n)
            break;
        std::uint32_t wt = 0;
        for (auto d : digit)
            wt += d != 0;
        if (wt >= best)
            continue;
        bool member = true;
        for (auto z : code.defining_set()) {
            Element acc = F.zero();
            for (std::uint32_t j = 0; j < n; ++j)
                if (digit[j])
                    acc = F.add(acc, F.mul(elems[digit[j]], F.pow(code.root().element, std::uint64_t{z} * j)));
            if (acc.value) {
                member = false;
                break;
            }
        }
        if (member)
            best = wt;
    }
    return best;
}

// Evaluation of a coefficient vector at x by summing c_j x^j with explicit
// powers (no Horner, no cached root powers).
inline Element eval_direct(const GaloisField& F, std::span<const Element> c, Element x)
{
    Element acc = F.zero();
    for (std::size_t j = 0; j < c.size(); ++j)
        acc = F.add(acc, F.mul(c[j], F.pow(x, j)));
    return acc;
}

// Every coset-closed proper subset of Z_n (as sorted vectors), including the
// empty set.
inline std::vector<std::vector<std::uint32_t>> all_defining_sets(const CosetPartition& part)
{
    std::vector<std::vector<std::uint32_t>> out;
    const auto c = part.cosets.size();
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << c); ++mask) {
        std::vector<std::uint32_t> D;
        for (std::size_t i = 0; i < c; ++i)
            if ((mask >> i) & 1)
                D.insert(D.end(), part.cosets[i].begin(), part.cosets[i].end());
        std::sort(D.begin(), D.end());
        out.push_back(std::move(D));
    }
    return out;
}

inline QuotientPoly random_poly(std::mt19937_64& rng, const GaloisField& F, std::uint32_t n, std::uint32_t d)
{
    const auto elems = subfield_elements(F, d);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    QuotientPoly f(n);
    for (auto& c : f.coeffs)
        c = elems[pick(rng)];
    return f;
}

// Random codeword: generator times a random message, reduced mod x^n - 1.
inline QuotientPoly random_codeword(std::mt19937_64& rng, const CyclicCode& code)
{
    const GaloisField& F = code.root().gf();
    const auto m = random_poly(rng, F, code.dimension(), code.base_degree());
    return poly::reduce(F, poly::mul(F, code.generator(), poly::lift(m)), code.length());
}

} // namespace oracle
