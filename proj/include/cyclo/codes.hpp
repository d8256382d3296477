#pragma once

#include "cyclo/spectral.hpp"

namespace cyclo {

/// A q-ary cyclic code of length n, given by its defining set relative to a
/// fixed primitive n-th root alpha. Generator polynomial, idempotent and
/// dimension are computed at construction.
class CyclicCode {
public:
    CyclicCode(RootOfUnity root, std::uint64_t q, std::vector<std::uint32_t> defining_set)
        : root_(std::move(root)), q_(q), partition_(cyclotomic_cosets(root_.n, q))
    {
        const GaloisField& F = root_.gf();
        subfield_degree_ = subfield_degree_of(F, q);
        std::sort(defining_set.begin(), defining_set.end());
        defining_set.erase(std::unique(defining_set.begin(), defining_set.end()), defining_set.end());
        if (!is_coset_closed(partition_, defining_set))
            throw NotCosetClosed("defining set is not a union of " + std::to_string(q) + "-cyclotomic cosets");
        if (defining_set.size() == root_.n)
            throw ImproperCode("defining set is all of Z_" + std::to_string(root_.n));
        defining_set_ = std::move(defining_set);

        generator_ = poly::constant(F.one());
        std::vector<bool> done(partition_.cosets.size(), false);
        for (auto d : defining_set_) {
            const auto c = partition_.coset_index[d];
            if (done[c])
                continue;
            done[c] = true;
            generator_ = poly::mul(F, generator_, minimal_polynomial(root_, d, q_));
        }
        idempotent_ = idft(indicator_spectrum(root_, q_, defining_set_));
    }

    std::uint32_t length() const noexcept { return root_.n; }
    std::uint64_t q() const noexcept { return q_; }
    const FieldPtr& field() const noexcept { return root_.field; }
    const RootOfUnity& root() const noexcept { return root_; }
    const CosetPartition& partition() const noexcept { return partition_; }
    const std::vector<std::uint32_t>& defining_set() const noexcept { return defining_set_; }
    /// Z_n minus the defining set.
    std::vector<std::uint32_t> nonzeros() const { return complement_set(defining_set_, root_.n); }
    const Poly& generator() const noexcept { return generator_; }
    const QuotientPoly& idempotent() const noexcept { return idempotent_; }
    std::uint32_t dimension() const noexcept { return root_.n - static_cast<std::uint32_t>(defining_set_.size()); }
    /// Degree s of GF(q) = GF(p^s) over the prime field.
    std::uint32_t base_degree() const noexcept { return subfield_degree_; }

private:
    RootOfUnity root_;
    std::uint64_t q_;
    std::uint32_t subfield_degree_ = 1;
    CosetPartition partition_;
    std::vector<std::uint32_t> defining_set_;
    Poly generator_;
    QuotientPoly idempotent_;
};

inline CyclicCode code_from_defining_set(const RootOfUnity& root, std::uint64_t q, std::vector<std::uint32_t> D)
{
    return CyclicCode(root, q, std::move(D));
}

/// Union of the cosets C_q(a) for the listed representatives.
inline std::vector<std::uint32_t> cosets_union(std::uint32_t n, std::uint64_t q, std::span<const std::uint32_t> reps)
{
    return coset_closure(cyclotomic_cosets(n, q), reps);
}

/// B_q(alpha, delta, b).
struct BchCode {
    std::uint32_t delta = 0;
    std::uint32_t offset = 0;
    CyclicCode code;
};

/// The window {b, ..., b + delta - 2} taken modulo n.
inline std::vector<std::uint32_t> bch_window(std::uint32_t n, std::uint32_t delta, std::uint32_t b)
{
    std::vector<std::uint32_t> w;
    for (std::uint32_t j = 0; j + 2 <= delta; ++j)
        w.push_back(static_cast<std::uint32_t>((static_cast<std::uint64_t>(b) + j) % n));
    return w;
}

inline BchCode bch_code(const RootOfUnity& root, std::uint64_t q, std::uint32_t delta, std::uint32_t b)
{
    if (delta < 2 || delta > root.n)
        throw InvalidArgument("designed distance must lie in 2..n");
    if (b >= root.n)
        throw InvalidArgument("offset must lie in 0..n-1");
    const auto part = cyclotomic_cosets(root.n, q);
    auto D = coset_closure(part, bch_window(root.n, delta, b));
    return BchCode{delta, b, CyclicCode(root, q, std::move(D))};
}

/// Largest delta' such that the code equals B_q(alpha', delta', b') for some
/// root alpha' and offset b'. Empty when the code is not a BCH code. The
/// whole space (empty defining set) reports 1.
inline std::optional<std::uint32_t> bose_distance(const CyclicCode& code)
{
    const std::uint32_t n = code.length();
    const auto& part = code.partition();
    if (code.defining_set().empty())
        return 1u;
    const auto reps = representative_set(part);
    std::optional<std::uint32_t> best;
    for (auto a : reps.members) {
        const auto aD = scale_set(code.defining_set(), a, n);
        std::vector<bool> in(n, false);
        for (auto d : aD)
            in[d] = true;
        for (std::uint32_t b = 0; b < n; ++b) {
            if (!in[b])
                continue;
            // Grow the window from b while it stays inside aD; track closure.
            std::vector<bool> taken(part.cosets.size(), false);
            std::size_t covered = 0;
            for (std::uint32_t len = 1; len < n; ++len) {
                const std::uint32_t pos = (b + len - 1) % n;
                if (!in[pos])
                    break;
                const auto c = part.coset_index[pos];
                if (!taken[c]) {
                    taken[c] = true;
                    covered += part.cosets[c].size();
                }
                if (covered == aD.size() && (!best || len + 1 > *best))
                    best = len + 1;
            }
        }
    }
    return best;
}

/// The idempotent generator: idft of the indicator of the nonzeros.
inline const QuotientPoly& idempotent_generator(const CyclicCode& code) { return code.idempotent(); }

} // namespace cyclo
