#pragma once

#include "cyclo/detail/numeric.hpp"
#include "cyclo/errors.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclo {

/// An element of GF(p^m) in polynomial basis, packed as the base-p integer
/// sum c_i p^i of its coefficient vector (a plain bitmask when p = 2).
struct Element {
    std::uint32_t value = 0;

    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Largest field size handled: p^m - 1 <= 2^24.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

namespace detail {

// Dense polynomials over GF(p) used only for modulus validation.
inline bool divides_mod_p(const std::vector<std::uint32_t>& divisor, std::vector<std::uint32_t> rem,
                          std::uint32_t p)
{
    const std::size_t dd = divisor.size() - 1;
    const std::uint64_t lead_inv = pow_mod(divisor.back(), p - 2, p);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0)
            continue;
        const std::uint64_t c = rem[i] * lead_inv % p;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] = static_cast<std::uint32_t>((rem[i - dd + j] + (p - c) * divisor[j]) % p);
    }
    return std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; });
}

/// Trial division by every monic polynomial of degree 1..m/2.
inline bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p)
{
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        const std::uint64_t count = checked_pow(p, static_cast<std::uint32_t>(d), ~std::uint64_t{0});
        std::vector<std::uint32_t> cand(d + 1, 0);
        cand[d] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (divides_mod_p(cand, f, p))
                return false;
        }
    }
    return true;
}

// Primitive polynomials over GF(2), bit i = coefficient of x^i.
inline constexpr std::array<std::uint32_t, 25> kBinaryPrimitive = {
    0x0,      0x3,      0x7,      0xB,      0x13,      0x25,     0x43,     0x89,     0x11D,
    0x211,    0x409,    0x805,    0x1053,   0x201B,    0x4443,   0x8003,   0x1100B,  0x20009,
    0x40081,  0x80027,  0x100009, 0x200005, 0x400003, 0x800021,  0x1000087,
};

} // namespace detail

/// GF(p^m) under a fixed irreducible modulus. Immutable after construction.
class GaloisField {
public:
    /// `modulus` is little-endian with degree m; it is normalized to monic and
    /// must be irreducible over GF(p).
    GaloisField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
        : p_(p), m_(m)
    {
        if (!detail::is_prime(p))
            throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
        if (m == 0)
            throw InvalidArgument("extension degree must be positive");
        size_ = detail::checked_pow(p, m, kMaxFieldOrder + 1);
        if (size_ == 0)
            throw InvalidArgument("field GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                  ") exceeds the supported size");
        while (!modulus.empty() && modulus.back() % p == 0)
            modulus.pop_back();
        if (modulus.size() != m + 1)
            throw InvalidArgument("modulus must have degree " + std::to_string(m));
        for (auto& c : modulus)
            c %= p;
        const std::uint64_t lead_inv = detail::pow_mod(modulus.back(), p - 2, p);
        for (auto& c : modulus)
            c = static_cast<std::uint32_t>(c * lead_inv % p);
        if (!detail::is_irreducible_mod_p(modulus, p))
            throw RejectedModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
        modulus_ = std::move(modulus);

        pow_p_[0] = 1;
        for (std::uint32_t i = 1; i <= m_; ++i)
            pow_p_[i] = pow_p_[i - 1] * p_;
        if (p_ == 2) {
            for (std::uint32_t i = 0; i <= m_; ++i)
                if (modulus_[i])
                    binary_modulus_ |= std::uint64_t{1} << i;
        }

        order_primes_ = detail::prime_factors(order());
        const Element xr = x();
        if (element_order(xr) == order()) {
            modulus_primitive_ = true;
            generator_ = xr;
        } else {
            for (std::uint64_t v = 2; v < size_; ++v) {
                const Element cand{static_cast<std::uint32_t>(v)};
                if (element_order(cand) == order()) {
                    generator_ = cand;
                    break;
                }
            }
        }
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint64_t size() const noexcept { return size_; }
    /// Order of the multiplicative group, p^m - 1.
    std::uint64_t order() const noexcept { return size_ - 1; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool modulus_is_primitive() const noexcept { return modulus_primitive_; }
    /// A verified primitive element: the residue of x when the modulus is
    /// primitive, otherwise the smallest packed primitive element.
    Element generator() const noexcept { return generator_; }

    Element zero() const noexcept { return {0}; }
    Element one() const noexcept { return {1}; }

    /// Image of an integer in the prime field.
    Element from_int(std::int64_t v) const noexcept
    {
        return {static_cast<std::uint32_t>(detail::mod_floor(v, p_))};
    }

    /// Residue class of x modulo the modulus.
    Element x() const noexcept
    {
        if (m_ >= 2)
            return {p_};
        return {(p_ - modulus_[0]) % p_};
    }

    std::vector<std::uint32_t> coefficients(Element a) const
    {
        std::vector<std::uint32_t> out(m_);
        std::uint32_t v = a.value;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        return out;
    }

    Element from_coefficients(std::span<const std::uint32_t> coeffs) const
    {
        if (coeffs.size() > m_)
            throw InvalidArgument("too many coefficients for GF(p^m) element");
        std::uint64_t v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            v = v * p_ + coeffs[i] % p_;
        return {static_cast<std::uint32_t>(v)};
    }

    Element add(Element a, Element b) const noexcept
    {
        if (p_ == 2)
            return {a.value ^ b.value};
        std::uint32_t r = 0;
        std::uint32_t x = a.value, y = b.value;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += ((x % p_ + y % p_) % p_) * pow_p_[i];
            x /= p_;
            y /= p_;
        }
        return {r};
    }

    Element neg(Element a) const noexcept
    {
        if (p_ == 2)
            return a;
        std::uint32_t r = 0;
        std::uint32_t x = a.value;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += ((p_ - x % p_) % p_) * pow_p_[i];
            x /= p_;
        }
        return {r};
    }

    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

    Element mul(Element a, Element b) const noexcept
    {
        if (a.value == 0 || b.value == 0)
            return zero();
        if (p_ == 2) {
            std::uint64_t x = a.value, y = b.value, r = 0;
            const std::uint64_t top = std::uint64_t{1} << m_;
            while (y) {
                if (y & 1)
                    r ^= x;
                y >>= 1;
                x <<= 1;
                if (x & top)
                    x ^= binary_modulus_;
            }
            return {static_cast<std::uint32_t>(r)};
        }
        std::array<std::uint32_t, 32> da{}, db{};
        std::array<std::uint64_t, 64> prod{};
        unpack(a, da);
        unpack(b, db);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (!da[i])
                continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] += std::uint64_t{da[i]} * db[j] % p_;
        }
        for (std::uint32_t i = 2 * m_ - 1; i-- > m_;) {
            const std::uint64_t c = prod[i] % p_;
            if (!c)
                continue;
            // x^m == -(modulus low part)
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i - m_ + j] += std::uint64_t{p_ - modulus_[j]} * c;
        }
        std::uint32_t r = 0;
        for (std::uint32_t i = m_; i-- > 0;)
            r = r * p_ + static_cast<std::uint32_t>(prod[i] % p_);
        return {r};
    }

    Element pow(Element a, std::uint64_t e) const noexcept
    {
        Element r = one();
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Power with a signed exponent, reduced modulo the group order.
    Element pow_signed(Element a, std::int64_t e) const
    {
        if (a.value == 0)
            return e == 0 ? one() : zero();
        return pow(a, detail::mod_floor(e, order()));
    }

    Element inv(Element a) const
    {
        if (a.value == 0)
            throw InvalidArgument("zero has no multiplicative inverse");
        return pow(a, order() - 1);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    /// a^(p^times).
    Element frobenius(Element a, std::uint32_t times = 1) const noexcept
    {
        for (std::uint32_t i = 0; i < times; ++i)
            a = pow(a, p_);
        return a;
    }

    std::uint64_t element_order(Element a) const
    {
        if (a.value == 0)
            throw InvalidArgument("zero has no multiplicative order");
        std::uint64_t ord = order();
        for (std::uint64_t r : order_primes_)
            while (ord % r == 0 && pow(a, ord / r) == one())
                ord /= r;
        return ord;
    }

    friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept
    {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    void unpack(Element a, std::array<std::uint32_t, 32>& digits) const noexcept
    {
        std::uint32_t v = a.value;
        for (std::uint32_t i = 0; i < m_; ++i) {
            digits[i] = v % p_;
            v /= p_;
        }
    }

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::array<std::uint32_t, 33> pow_p_{};
    std::uint64_t binary_modulus_ = 0;
    std::vector<std::uint64_t> order_primes_;
    Element generator_{};
    bool modulus_primitive_ = false;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Default modulus for GF(p^m): a fixed primitive polynomial for p = 2 and,
/// for odd p <= 13, the first primitive polynomial in lexicographic order of
/// its coefficient vector (constant term least significant).
inline std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m)
{
    const std::string tag = "(" + std::to_string(p) + ", " + std::to_string(m) + ")";
    if (m == 0 || !detail::is_prime(p))
        throw NoDefaultPolynomial("no default polynomial for " + tag);
    if (p == 2) {
        if (m >= detail::kBinaryPrimitive.size())
            throw NoDefaultPolynomial("no default polynomial for " + tag);
        std::vector<std::uint32_t> out(m + 1);
        for (std::uint32_t i = 0; i <= m; ++i)
            out[i] = (detail::kBinaryPrimitive[m] >> i) & 1u;
        return out;
    }
    const std::uint64_t size = detail::checked_pow(p, m, kMaxFieldOrder + 1);
    if (p > 13 || size == 0)
        throw NoDefaultPolynomial("no default polynomial for " + tag);
    std::vector<std::uint32_t> cand(m + 1, 0);
    cand[m] = 1;
    for (std::uint64_t code = 1; code < size; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (cand[0] == 0 || !detail::is_irreducible_mod_p(cand, p))
            continue;
        GaloisField trial(p, m, cand);
        if (trial.modulus_is_primitive())
            return cand;
    }
    throw NoDefaultPolynomial("no primitive polynomial found for " + tag);
}

/// Validated field. Without a modulus the default table is used.
inline FieldPtr build_field(std::uint32_t p, std::uint32_t m,
                            std::optional<std::vector<std::uint32_t>> modulus = std::nullopt)
{
    if (!detail::is_prime(p))
        throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0)
        throw InvalidArgument("extension degree must be positive");
    auto poly = modulus ? std::move(*modulus) : default_modulus(p, m);
    return std::make_shared<const GaloisField>(p, m, std::move(poly));
}

/// Binary polynomial from an exponent list, e.g. {12, 3, 0} -> x^12 + x^3 + 1.
inline std::vector<std::uint32_t> binary_from_exponents(std::span<const std::uint32_t> exponents)
{
    std::uint32_t top = 0;
    for (auto e : exponents)
        top = std::max(top, e);
    std::vector<std::uint32_t> out(top + 1, 0);
    for (auto e : exponents)
        out[e] ^= 1u;
    return out;
}

/// A primitive n-th root of unity together with its discrete log relative to
/// the field generator.
struct RootOfUnity {
    FieldPtr field;
    Element element{};
    std::uint32_t n = 0;
    std::uint64_t generator_exponent = 0;

    const GaloisField& gf() const { return *field; }

    /// element^e with e taken modulo n.
    Element power(std::int64_t e) const
    {
        return field->pow(element, detail::mod_floor(e, n));
    }

    /// The root element^a; a must be coprime to n so the order is preserved.
    RootOfUnity raised(std::uint64_t a) const
    {
        if (std::gcd(a % n, static_cast<std::uint64_t>(n)) != 1 && n > 1)
            throw InvalidArgument("exponent " + std::to_string(a) + " is not coprime to " +
                                  std::to_string(n));
        RootOfUnity r = *this;
        r.element = power(static_cast<std::int64_t>(a % n));
        r.generator_exponent = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(generator_exponent) * a % field->order());
        return r;
    }

    /// The root beta with beta^a = element, for a coprime to n.
    RootOfUnity preimage(std::uint64_t a) const
    {
        std::int64_t x = 0, y = 0;
        const auto g = detail::ext_gcd(static_cast<std::int64_t>(a % n), n, x, y);
        if (g != 1 && n > 1)
            throw InvalidArgument("exponent " + std::to_string(a) + " is not coprime to " +
                                  std::to_string(n));
        return raised(n == 1 ? 1 : detail::mod_floor(x, n));
    }

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b)
    {
        return a.n == b.n && a.element == b.element &&
               (a.field == b.field || (a.field && b.field && *a.field == *b.field));
    }
};

/// generator^((p^m - 1)/n), an element of exact order n.
inline RootOfUnity nth_root(const FieldPtr& field, std::uint32_t n)
{
    if (n == 0)
        throw InvalidArgument("root order must be positive");
    if (field->order() % n != 0)
        throw OrderUnavailable(std::to_string(n) + " does not divide " + std::to_string(field->order()));
    RootOfUnity r;
    r.field = field;
    r.n = n;
    r.generator_exponent = field->order() / n;
    r.element = field->pow(field->generator(), r.generator_exponent);
    return r;
}

/// Whether a lies in the subfield GF(p^d), i.e. a^(p^d) = a.
inline bool in_subfield(const GaloisField& field, Element a, std::uint32_t d)
{
    if (d == 0 || field.degree() % d != 0)
        throw InvalidSubfield("GF(p^" + std::to_string(d) + ") is not a subfield of GF(p^" +
                              std::to_string(field.degree()) + ")");
    return field.frobenius(a, d) == a;
}

/// All elements of GF(p^d) as elements of the ambient field: zero first, then
/// successive powers of a generator of GF(p^d)*.
inline std::vector<Element> subfield_elements(const GaloisField& field, std::uint32_t d)
{
    if (d == 0 || field.degree() % d != 0)
        throw InvalidSubfield("GF(p^" + std::to_string(d) + ") is not a subfield");
    const std::uint64_t sub_order = detail::checked_pow(field.characteristic(), d, kMaxFieldOrder + 1) - 1;
    const Element gen = field.pow(field.generator(), field.order() / sub_order);
    std::vector<Element> out;
    out.reserve(sub_order + 1);
    out.push_back(field.zero());
    Element cur = field.one();
    for (std::uint64_t i = 0; i < sub_order; ++i) {
        out.push_back(cur);
        cur = field.mul(cur, gen);
    }
    return out;
}

/// Degree s with q = p^s, validated against the field.
inline std::uint32_t subfield_degree_of(const GaloisField& field, std::uint64_t q)
{
    std::uint32_t s = 0;
    std::uint64_t v = 1;
    while (v < q) {
        v *= field.characteristic();
        ++s;
    }
    if (v != q || s == 0)
        throw InvalidSubfield(std::to_string(q) + " is not a power of the characteristic " +
                              std::to_string(field.characteristic()));
    if (field.degree() % s != 0)
        throw InvalidSubfield("GF(" + std::to_string(q) + ") is not a subfield of GF(p^" +
                              std::to_string(field.degree()) + ")");
    return s;
}

} // namespace cyclo
