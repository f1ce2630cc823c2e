#include "hochcat/field.hpp"

#include <charconv>
#include <tuple>

namespace hochcat {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p))
{
    if (p >= (1ULL << 31) || !is_prime(p))
        throw BadFieldSpec("gf:" + std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0)
        throw LinalgError("DivisionByZero", "inverse of zero in " + name());
    // Extended Euclid on (a, p).
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
    }
    return from_int(s0);
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p >= (1ULL << 31) || !is_prime(p))
        throw BadFieldSpec("gf:" + std::to_string(p));
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q" || text == "Q")
        return rationals();
    if (text.size() > 3 && (text.substr(0, 3) == "gf:" || text.substr(0, 3) == "GF:")) {
        const auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && end == digits.data() + digits.size() && p < (1ULL << 31) && is_prime(p))
            return FieldSpec(static_cast<std::uint32_t>(p));
    }
    throw BadFieldSpec(std::string(text));
}

} // namespace hochcat
