#pragma once

#include "cyclo/galois.hpp"
#include "cyclo/modring.hpp"

#include <functional>
#include <utility>

namespace cyclo {

/// Dense polynomial over a GaloisField, little-endian, no trailing zeros.
struct Poly {
    std::vector<Element> coeffs;

    Poly() = default;
    explicit Poly(std::vector<Element> c) : coeffs(std::move(c)) { trim(); }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back().value == 0)
            coeffs.pop_back();
    }
    bool is_zero() const noexcept { return coeffs.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    Element operator[](std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : Element{}; }
    Element leading() const noexcept { return coeffs.empty() ? Element{} : coeffs.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;
};

/// An element of GF(.)[x]/(x^n - 1): exactly n coefficients.
struct QuotientPoly {
    std::uint32_t n = 0;
    std::vector<Element> coeffs;

    QuotientPoly() = default;
    explicit QuotientPoly(std::uint32_t len) : n(len), coeffs(len) {}
    QuotientPoly(std::uint32_t len, std::vector<Element> c) : n(len), coeffs(std::move(c))
    {
        if (coeffs.size() != n)
            throw InvalidArgument("quotient polynomial needs exactly n coefficients");
    }

    std::size_t weight() const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs.begin(), coeffs.end(), [](Element e) { return e.value != 0; }));
    }
    std::vector<std::uint32_t> support() const
    {
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < n; ++i)
            if (coeffs[i].value != 0)
                out.push_back(i);
        return out;
    }
    bool is_zero() const { return weight() == 0; }

    friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;
};

namespace poly {

inline Poly constant(Element c) { return Poly({c}); }

inline Poly monomial(const GaloisField& F, std::uint32_t degree, Element c)
{
    std::vector<Element> v(degree + 1, F.zero());
    v[degree] = c;
    return Poly(std::move(v));
}

/// Polynomial with prime-field coefficients given as integers.
inline Poly from_ints(const GaloisField& F, std::span<const std::int64_t> coeffs)
{
    std::vector<Element> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs)
        v.push_back(F.from_int(c));
    return Poly(std::move(v));
}

/// Binary polynomial from its exponent list.
inline Poly from_exponents(std::span<const std::uint32_t> exponents)
{
    const auto bits = binary_from_exponents(exponents);
    std::vector<Element> v;
    v.reserve(bits.size());
    for (auto b : bits)
        v.push_back({b});
    return Poly(std::move(v));
}

inline Poly add(const GaloisField& F, const Poly& a, const Poly& b)
{
    std::vector<Element> v(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F.add(a[i], b[i]);
    return Poly(std::move(v));
}

inline Poly sub(const GaloisField& F, const Poly& a, const Poly& b)
{
    std::vector<Element> v(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F.sub(a[i], b[i]);
    return Poly(std::move(v));
}

inline Poly scale(const GaloisField& F, const Poly& a, Element c)
{
    std::vector<Element> v(a.coeffs.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = F.mul(a.coeffs[i], c);
    return Poly(std::move(v));
}

inline Poly mul(const GaloisField& F, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Element> v(a.coeffs.size() + b.coeffs.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].value == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return Poly(std::move(v));
}

/// Quotient and remainder of a by b.
inline std::pair<Poly, Poly> divmod(const GaloisField& F, const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw ZeroPolynomial("division by the zero polynomial");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Element> rem = a.coeffs;
    std::vector<Element> quo(a.coeffs.size() - b.coeffs.size() + 1, F.zero());
    const Element lead_inv = F.inv(b.leading());
    const std::size_t db = b.coeffs.size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].value == 0)
            continue;
        const Element c = F.mul(rem[i], lead_inv);
        quo[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeffs[j]));
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly monic(const GaloisField& F, const Poly& a)
{
    if (a.is_zero())
        return a;
    return scale(F, a, F.inv(a.leading()));
}

/// Monic gcd via the remainder chain, normalizing at each step.
inline Poly gcd(const GaloisField& F, Poly a, Poly b)
{
    a = monic(F, a);
    b = monic(F, b);
    while (!b.is_zero()) {
        Poly r = divmod(F, a, b).second;
        a = std::move(b);
        b = monic(F, r);
    }
    return a;
}

inline Element eval(const GaloisField& F, const Poly& a, Element x)
{
    Element r = F.zero();
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
        r = F.add(F.mul(r, x), a.coeffs[i]);
    return r;
}

/// x^n - 1.
inline Poly xn_minus_one(const GaloisField& F, std::uint32_t n)
{
    std::vector<Element> v(n + 1, F.zero());
    v[0] = F.neg(F.one());
    v[n] = F.add(v[n], F.one());
    return Poly(std::move(v));
}

/// Whether every coefficient lies in GF(p^d).
inline bool coefficients_in_subfield(const GaloisField& F, const Poly& a, std::uint32_t d)
{
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](Element c) { return in_subfield(F, c, d); });
}

/// Exponents of the nonzero coefficients, ascending.
inline std::vector<std::uint32_t> support(const Poly& a)
{
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (a.coeffs[i].value != 0)
            out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

/// Residue modulo x^n - 1 as a length-n vector.
inline QuotientPoly reduce(const GaloisField& F, const Poly& a, std::uint32_t n)
{
    QuotientPoly out(n);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        out.coeffs[i % n] = F.add(out.coeffs[i % n], a.coeffs[i]);
    return out;
}

inline Poly lift(const QuotientPoly& f) { return Poly(f.coeffs); }

} // namespace poly

/// Residue of x^h * f modulo x^n - 1, i.e. f rotated by h places.
inline QuotientPoly cyclic_shift(const QuotientPoly& f, std::int64_t h)
{
    QuotientPoly out(f.n);
    if (f.n == 0)
        return out;
    const auto s = detail::mod_floor(h, f.n);
    for (std::uint32_t i = 0; i < f.n; ++i)
        out.coeffs[(i + s) % f.n] = f.coeffs[i];
    return out;
}

/// Product in the quotient ring.
inline QuotientPoly quotient_mul(const GaloisField& F, const QuotientPoly& a, const QuotientPoly& b)
{
    if (a.n != b.n)
        throw InvalidArgument("quotient ring lengths differ");
    QuotientPoly out(a.n);
    for (std::uint32_t i = 0; i < a.n; ++i) {
        if (a.coeffs[i].value == 0)
            continue;
        for (std::uint32_t j = 0; j < a.n; ++j)
            if (b.coeffs[j].value != 0) {
                auto& slot = out.coeffs[(i + j) % a.n];
                slot = F.add(slot, F.mul(a.coeffs[i], b.coeffs[j]));
            }
    }
    return out;
}

/// m_f = gcd(f, x^n - 1), monic. Unchanged by cyclic shifts of f.
inline Poly gcd_with_xn(const GaloisField& F, const QuotientPoly& f)
{
    if (f.is_zero())
        throw ZeroPolynomial("gcd with x^n - 1 of the zero polynomial");
    return poly::gcd(F, poly::lift(f), poly::xn_minus_one(F, f.n));
}

/// prod_{j in C_q(s)} (x - alpha^j), checked to have coefficients in GF(q).
inline Poly minimal_polynomial(const RootOfUnity& root, std::uint32_t s, std::uint64_t q)
{
    const GaloisField& F = root.gf();
    const std::uint32_t sub = subfield_degree_of(F, q);
    const auto part = cyclotomic_cosets(root.n, q);
    Poly out = poly::constant(F.one());
    for (auto j : part.coset_of(s % root.n)) {
        const Poly lin({F.neg(root.power(j)), F.one()});
        out = poly::mul(F, out, lin);
    }
    if (!poly::coefficients_in_subfield(F, out, sub))
        throw CoefficientLeak("minimal polynomial of alpha^" + std::to_string(s) +
                              " has coefficients outside GF(" + std::to_string(q) + ")");
    return out;
}

/// Locate a primitive n-th root whose minimal polynomial over GF(q) is
/// `min_poly`, searching powers nth_root(field, n)^a for a coprime to n.
inline RootOfUnity root_with_minimal_polynomial(const FieldPtr& field, std::uint32_t n, std::uint64_t q,
                                                const Poly& min_poly)
{
    const RootOfUnity base = nth_root(field, n);
    const Poly target = poly::monic(*field, min_poly);
    for (std::uint32_t a = 1; a <= n; ++a) {
        if (std::gcd(a, n) != 1)
            continue;
        const RootOfUnity cand = base.raised(a);
        if (poly::eval(*field, target, cand.element) != field->zero())
            continue;
        if (minimal_polynomial(cand, 1, q) == target)
            return cand;
    }
    throw OrderUnavailable("no primitive " + std::to_string(n) + "-th root has the requested minimal polynomial");
}

/// One irreducible factor of x^n - 1 over GF(p^d) and its root exponents.
struct Factor {
    Poly poly;
    std::vector<std::uint32_t> exponents;
};

struct FactorList {
    std::uint32_t n = 0;
    /// Factorization is over GF(p^subfield_degree).
    std::uint32_t subfield_degree = 1;
    RootOfUnity root;
    std::vector<Factor> factors;
};

/// x^n - 1 split over GF(p^d) through the p^d-cyclotomic cosets of the root
/// exponents. `subfield_degree` defaults to the prime field.
inline FactorList factor_xn(const RootOfUnity& root, std::uint32_t subfield_degree = 1)
{
    const GaloisField& F = root.gf();
    if (std::gcd(root.n, F.characteristic()) != 1)
        throw NotCoprime("gcd(n, p) > 1");
    if (subfield_degree == 0 || F.degree() % subfield_degree != 0)
        throw InvalidSubfield("GF(p^" + std::to_string(subfield_degree) + ") is not a subfield");
    const std::uint64_t qd = detail::checked_pow(F.characteristic(), subfield_degree, kMaxFieldOrder + 1);
    const auto part = cyclotomic_cosets(root.n, qd);
    FactorList out;
    out.n = root.n;
    out.subfield_degree = subfield_degree;
    out.root = root;
    for (const auto& coset : part.cosets) {
        Poly f = poly::constant(F.one());
        for (auto j : coset)
            f = poly::mul(F, f, Poly({F.neg(root.power(j)), F.one()}));
        if (!poly::coefficients_in_subfield(F, f, subfield_degree))
            throw CoefficientLeak("factor escaped the subfield");
        out.factors.push_back({std::move(f), coset});
    }
    return out;
}

/// A monic divisor of x^n - 1 assembled from a subset of a FactorList.
struct Divisor {
    Poly poly;
    std::vector<std::size_t> factor_indices;
    /// Exponents j with alpha^j a root, sorted.
    std::vector<std::uint32_t> root_exponents;
};

/// Visit every divisor of the given degree as a product of a subset of the
/// factors, in lexicographic order of factor indices. x^n - 1 itself is never
/// produced. The visitor returns false to stop early.
inline void for_each_divisor(const FactorList& list, std::uint32_t target_degree,
                             const std::function<bool(const Divisor&)>& visit)
{
    if (target_degree >= list.n)
        return;
    const GaloisField& F = list.root.gf();
    const std::size_t count = list.factors.size();
    std::vector<std::uint32_t> suffix(count + 1, 0);
    for (std::size_t i = count; i-- > 0;)
        suffix[i] = suffix[i + 1] + static_cast<std::uint32_t>(list.factors[i].poly.degree());

    Divisor cur;
    cur.poly = poly::constant(F.one());
    bool stop = false;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t start, std::uint32_t deg) {
        if (deg == target_degree) {
            Divisor d = cur;
            std::sort(d.root_exponents.begin(), d.root_exponents.end());
            stop = !visit(d);
            return;
        }
        for (std::size_t i = start; i < count && !stop; ++i) {
            const auto fd = static_cast<std::uint32_t>(list.factors[i].poly.degree());
            if (deg + fd > target_degree)
                continue;
            if (deg + suffix[i] < target_degree)
                break;
            Poly saved = cur.poly;
            cur.poly = poly::mul(F, cur.poly, list.factors[i].poly);
            cur.factor_indices.push_back(i);
            cur.root_exponents.insert(cur.root_exponents.end(), list.factors[i].exponents.begin(),
                                      list.factors[i].exponents.end());
            rec(i + 1, deg + fd);
            cur.root_exponents.resize(cur.root_exponents.size() - list.factors[i].exponents.size());
            cur.factor_indices.pop_back();
            cur.poly = std::move(saved);
        }
    };
    rec(0, 0);
}

inline std::vector<Divisor> divisors_of_degree(const FactorList& list, std::uint32_t target_degree)
{
    std::vector<Divisor> out;
    for_each_divisor(list, target_degree, [&](const Divisor& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

} // namespace cyclo
