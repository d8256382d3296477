#pragma once

#include "cyclo/codes.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace cyclo {

struct DistanceResult {
    /// Exact minimum distance when `exhaustive`, otherwise an upper bound.
    std::uint32_t distance = 0;
    /// A codeword of weight `distance`.
    QuotientPoly witness;
    std::uint64_t enumerated = 0;
    bool exhaustive = false;
};

struct DistanceOptions {
    /// Largest number of nonzero codewords to visit.
    std::uint64_t cap = std::uint64_t{1} << 30;
    /// Stop as soon as a codeword of weight <= stop_at is seen (used when a
    /// matching lower bound is already known).
    std::optional<std::uint32_t> stop_at;
    /// Worker count; 0 reads CYCLO_THREADS, falling back to the hardware.
    unsigned threads = 0;
};

inline unsigned worker_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("CYCLO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

struct PackedBest {
    std::uint32_t weight = ~0u;
    std::uint64_t word = 0;

    void offer(std::uint64_t w) noexcept
    {
        const auto wt = static_cast<std::uint32_t>(std::popcount(w));
        if (wt < weight || (wt == weight && w < word)) {
            weight = wt;
            word = w;
        }
    }
};

// Gray walk over the low `bits` rows starting from `base`; visits 2^bits words.
inline void gray_walk(const std::vector<std::uint64_t>& rows, unsigned bits, std::uint64_t base,
                      std::uint64_t limit, PackedBest& best, std::uint64_t& visited,
                      std::optional<std::uint32_t> stop_at, std::atomic<bool>& stop)
{
    std::uint64_t cw = base;
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i)
            cw ^= rows[static_cast<unsigned>(std::countr_zero(i))];
        if (cw == 0)
            continue;
        best.offer(cw);
        if (++visited >= limit)
            return;
        if (stop_at && best.weight <= *stop_at) {
            stop.store(true, std::memory_order_relaxed);
            return;
        }
        if ((i & 0xFFFF) == 0 && stop.load(std::memory_order_relaxed))
            return;
    }
}

inline DistanceResult min_distance_binary(const CyclicCode& code, const DistanceOptions& opts)
{
    const std::uint32_t n = code.length();
    const std::uint32_t k = code.dimension();
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < code.generator().coeffs.size(); ++i)
        if (code.generator().coeffs[i].value)
            g |= std::uint64_t{1} << i;
    std::vector<std::uint64_t> rows(k);
    for (std::uint32_t i = 0; i < k; ++i)
        rows[i] = g << i;

    const std::uint64_t nonzero_words = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    DistanceResult res;
    std::atomic<bool> stop{false};
    PackedBest best;

    if (nonzero_words > opts.cap) {
        gray_walk(rows, k, 0, opts.cap, best, res.enumerated, opts.stop_at, stop);
        res.exhaustive = false;
    } else {
        const unsigned workers = worker_count(opts.threads);
        unsigned split = 0;
        while (split < k && (1u << split) < workers * 4 && split < 12)
            ++split;
        if (workers == 1)
            split = 0;
        const unsigned low = k - split;
        const std::uint64_t chunks = std::uint64_t{1} << split;
        std::atomic<std::uint64_t> next{0};
        std::mutex merge;
        std::uint64_t visited_total = 0;
        auto work = [&] {
            PackedBest local;
            std::uint64_t visited = 0;
            for (std::uint64_t c; (c = next.fetch_add(1)) < chunks && !stop.load();) {
                std::uint64_t base = 0;
                for (unsigned b = 0; b < split; ++b)
                    if ((c >> b) & 1)
                        base ^= rows[low + b];
                gray_walk(rows, low, base, ~std::uint64_t{0}, local, visited, opts.stop_at, stop);
            }
            std::lock_guard lock(merge);
            visited_total += visited;
            if (local.weight < best.weight || (local.weight == best.weight && local.word < best.word))
                best = local;
        };
        const unsigned spawn = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < spawn; ++t)
            pool.emplace_back(work);
        work();
        for (auto& t : pool)
            t.join();
        res.enumerated = visited_total;
        res.exhaustive = !stop.load();
    }
    res.distance = best.weight == ~0u ? 0 : best.weight;
    res.witness = QuotientPoly(n);
    for (std::uint32_t i = 0; i < n; ++i)
        res.witness.coeffs[i] = Element{static_cast<std::uint32_t>((best.word >> i) & 1)};
    return res;
}

// Compares from the highest-degree coefficient down, matching the numeric
// order used by the packed path.
inline bool word_less(const std::vector<Element>& a, const std::vector<Element>& b)
{
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

inline DistanceResult min_distance_generic(const CyclicCode& code, const DistanceOptions& opts)
{
    const GaloisField& F = code.root().gf();
    const std::uint32_t n = code.length();
    const std::uint32_t k = code.dimension();
    const auto elems = subfield_elements(F, code.base_degree());
    const std::size_t q = elems.size();
    std::vector<std::vector<Element>> rows(k, std::vector<Element>(n, F.zero()));
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < code.generator().coeffs.size(); ++j)
            rows[i][i + j] = code.generator().coeffs[j];

    std::vector<std::size_t> digits(k, 0);
    std::vector<Element> cw(n, F.zero());
    std::vector<Element> best_word;
    std::uint32_t best_weight = ~0u;
    DistanceResult res;
    res.exhaustive = true;
    while (true) {
        std::uint32_t pos = 0;
        while (pos < k) {
            const std::size_t old = digits[pos];
            const std::size_t nxt = (old + 1) % q;
            digits[pos] = nxt;
            const Element diff = F.sub(elems[nxt], elems[old]);
            for (std::uint32_t j = 0; j < n; ++j)
                if (rows[pos][j].value)
                    cw[j] = F.add(cw[j], F.mul(diff, rows[pos][j]));
            if (nxt != 0)
                break;
            ++pos;
        }
        if (pos == k)
            break;
        const auto wt = static_cast<std::uint32_t>(
            std::count_if(cw.begin(), cw.end(), [](Element e) { return e.value != 0; }));
        if (wt < best_weight || (wt == best_weight && word_less(cw, best_word))) {
            best_weight = wt;
            best_word = cw;
        }
        ++res.enumerated;
        if (opts.stop_at && best_weight <= *opts.stop_at) {
            res.exhaustive = false;
            break;
        }
        if (res.enumerated >= opts.cap) {
            // Exhaustive only if this happened to be the final word.
            res.exhaustive = std::all_of(digits.begin(), digits.end(), [&](std::size_t d) { return d == q - 1; });
            break;
        }
    }
    res.distance = best_weight == ~0u ? 0 : best_weight;
    res.witness = best_word.empty() ? QuotientPoly(n) : QuotientPoly(n, best_word);
    return res;
}

} // namespace detail

/// Exact minimum distance by enumerating all q^k - 1 nonzero information
/// words against the basis {x^i g : i < k}. Binary codes with n <= 64 use
/// packed rows and a Gray-code walk split across workers.
inline DistanceResult min_distance(const CyclicCode& code, const DistanceOptions& opts = {})
{
    if (code.dimension() == 0)
        throw InvalidArgument("the zero code has no minimum distance");
    if (code.q() == 2 && code.length() <= 64)
        return detail::min_distance_binary(code, opts);
    return detail::min_distance_generic(code, opts);
}

} // namespace cyclo
