#pragma once

#include "cyclo/poly.hpp"

#include <sstream>
#include <unordered_map>

namespace cyclo {

/// The discrete Fourier (Mattson-Solomon) image of a length-n vector:
/// values[i] = f(alpha^i). The root is kept so spectra over different roots
/// never mix.
struct Spectrum {
    RootOfUnity root;
    std::vector<Element> values;

    std::uint32_t size() const noexcept { return root.n; }
    std::vector<std::uint32_t> support() const
    {
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < values.size(); ++i)
            if (values[i].value != 0)
                out.push_back(i);
        return out;
    }
    /// True when every value is 0 or 1, i.e. an idempotent under the
    /// coordinatewise product.
    bool is_idempotent() const
    {
        return std::all_of(values.begin(), values.end(), [](Element e) { return e.value <= 1; });
    }
};

namespace detail {

inline std::vector<Element> root_powers(const RootOfUnity& root)
{
    std::vector<Element> pw(root.n);
    Element cur = root.gf().one();
    for (std::uint32_t i = 0; i < root.n; ++i) {
        pw[i] = cur;
        cur = root.gf().mul(cur, root.element);
    }
    return pw;
}

inline void require_same_root(const RootOfUnity& a, const RootOfUnity& b)
{
    if (!(a == b))
        throw RootMismatch("spectra are taken over different roots of unity");
}

} // namespace detail

/// A vector viewed directly as a spectrum (an element of (L^n, *)).
inline Spectrum as_spectrum(const RootOfUnity& root, const QuotientPoly& values)
{
    if (values.n != root.n)
        throw InvalidArgument("spectrum length differs from the root order");
    return Spectrum{root, values.coeffs};
}

/// Direct evaluation: values[i] = sum_j f_j alpha^(i j).
inline Spectrum dft(const QuotientPoly& f, const RootOfUnity& root)
{
    if (f.n != root.n)
        throw InvalidArgument("polynomial length differs from the root order");
    const GaloisField& F = root.gf();
    const auto pw = detail::root_powers(root);
    Spectrum s{root, std::vector<Element>(root.n, F.zero())};
    for (std::uint32_t i = 0; i < root.n; ++i) {
        Element acc = F.zero();
        for (std::uint32_t j = 0; j < root.n; ++j)
            if (f.coeffs[j].value != 0)
                acc = F.add(acc, F.mul(f.coeffs[j], pw[static_cast<std::uint64_t>(i) * j % root.n]));
        s.values[i] = acc;
    }
    return s;
}

/// Inverse transform: coefficient i is (1/n) * s(alpha^-i).
inline QuotientPoly idft(const Spectrum& s)
{
    const RootOfUnity& root = s.root;
    const GaloisField& F = root.gf();
    const std::uint32_t n = root.n;
    const Element n_inv = F.inv(F.from_int(n));
    const auto pw = detail::root_powers(root);
    QuotientPoly out(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        Element acc = F.zero();
        for (std::uint32_t j = 0; j < n; ++j)
            if (s.values[j].value != 0) {
                const std::uint64_t e = (n - static_cast<std::uint64_t>(i) * j % n) % n;
                acc = F.add(acc, F.mul(s.values[j], pw[e]));
            }
        out.coeffs[i] = F.mul(acc, n_inv);
    }
    return out;
}

/// Whether idft(s) has coefficients in GF(q): the spectrum must be closed
/// under conjugation, values[q*i mod n] = values[i]^q.
inline bool is_rational(const Spectrum& s, std::uint64_t q)
{
    const GaloisField& F = s.root.gf();
    const std::uint32_t n = s.root.n;
    const std::uint64_t qm = q % n;
    for (std::uint32_t i = 0; i < n; ++i)
        if (s.values[qm * i % n] != F.pow(s.values[i], q))
            return false;
    return true;
}

/// F_D: 0 on the defining set, 1 elsewhere.
inline Spectrum indicator_spectrum(const RootOfUnity& root, std::uint64_t q,
                                   std::span<const std::uint32_t> defining_set)
{
    const auto part = cyclotomic_cosets(root.n, q);
    if (!is_coset_closed(part, defining_set))
        throw NotCosetClosed("defining set is not a union of " + std::to_string(q) + "-cyclotomic cosets");
    Spectrum s{root, std::vector<Element>(root.n, root.gf().one())};
    for (auto d : defining_set)
        s.values[d] = root.gf().zero();
    return s;
}

/// Coordinatewise product.
inline Spectrum star(const Spectrum& a, const Spectrum& b)
{
    detail::require_same_root(a.root, b.root);
    Spectrum out{a.root, std::vector<Element>(a.values.size())};
    for (std::size_t i = 0; i < a.values.size(); ++i)
        out.values[i] = a.root.gf().mul(a.values[i], b.values[i]);
    return out;
}

/// Idempotent spectra print as a parenthesized 0/1 row; anything else as a
/// list of alpha exponents ("-" for zero, "[c0 c1 ...]" for values outside
/// the group generated by alpha).
inline std::string format_spectrum(const Spectrum& s)
{
    std::ostringstream os;
    os << "(";
    if (s.is_idempotent()) {
        for (std::size_t i = 0; i < s.values.size(); ++i)
            os << (i ? " " : "") << s.values[i].value;
        os << ")";
        return os.str();
    }
    const GaloisField& F = s.root.gf();
    std::unordered_map<std::uint32_t, std::uint32_t> log;
    const auto pw = detail::root_powers(s.root);
    for (std::uint32_t i = 0; i < pw.size(); ++i)
        log.emplace(pw[i].value, i);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        os << (i ? " " : "");
        const auto v = s.values[i];
        if (v.value == 0) {
            os << "-";
        } else if (auto it = log.find(v.value); it != log.end()) {
            os << "a^" << it->second;
        } else {
            os << "[";
            const auto c = F.coefficients(v);
            for (std::size_t k = 0; k < c.size(); ++k)
                os << (k ? " " : "") << c[k];
            os << "]";
        }
    }
    os << ")";
    return os.str();
}

} // namespace cyclo
