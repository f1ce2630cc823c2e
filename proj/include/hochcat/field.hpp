#pragma once

#include "hochcat/errors.hpp"

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace hochcat {

/// GF(p) for a prime p < 2^31. Elements are canonical residues.
class PrimeField {
public:
    using Element = std::uint32_t;

    /// Throws BadFieldSpec unless p is a prime below 2^31.
    explicit PrimeField(std::uint64_t p);

    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return "gf:" + std::to_string(p_); }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }
    bool is_zero(Element a) const { return a == 0; }

    Element add(Element a, Element b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// a - c*b, the elimination kernel.
    Element sub_mul(Element a, Element c, Element b) const { return sub(a, mul(c, b)); }
    Element inv(Element a) const;

    std::string to_string(Element a) const { return std::to_string(a); }
    /// Signed integer representative in (-p/2, p/2], used for readable output.
    std::int64_t lift(Element a) const { return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// Q with GMP rationals (always normalized).
class RationalField {
public:
    using Element = mpq_class;

    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "q"; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element sub_mul(const Element& a, const Element& c, const Element& b) const { return a - c * b; }
    Element inv(const Element& a) const
    {
        if (is_zero(a))
            throw LinalgError("DivisionByZero", "inverse of zero");
        return 1 / a;
    }

    std::string to_string(const Element& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::Element& a, std::int64_t n) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.from_int(n) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub_mul(a, a, a) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

/// Field selector as written on the command line: `gf:<p>` or `q`.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(std::uint64_t p);
    /// Throws BadFieldSpec.
    static FieldSpec parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return is_rational() ? "q" : "gf:" + std::to_string(p_); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Calls fn(PrimeField) or fn(RationalField) according to spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.is_rational())
        return std::forward<Fn>(fn)(RationalField{});
    return std::forward<Fn>(fn)(PrimeField(spec.characteristic()));
}

bool is_prime(std::uint64_t n);

} // namespace hochcat
