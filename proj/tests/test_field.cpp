#include "hochcat/errors.hpp"
#include "hochcat/field.hpp"

#include <doctest.h>

using namespace hochcat;

TEST_CASE("prime field arithmetic")
{
    const PrimeField f(7);
    CHECK(f.characteristic() == 7);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_int(15) == 1);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 5) == 1);
    for (std::uint32_t a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.sub_mul(1, 2, 3) == f.from_int(1 - 6));
    CHECK(f.name() == "gf:7");
}

TEST_CASE("large prime does not overflow")
{
    const PrimeField f(2147483647);
    const auto a = f.from_int(2147483646);
    CHECK(f.mul(a, a) == 1);
    CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("prime field construction rejects non-primes")
{
    CHECK_THROWS_AS(PrimeField(4), BadFieldSpec);
    CHECK_THROWS_AS(PrimeField(1), BadFieldSpec);
    CHECK_THROWS_AS(PrimeField(0), BadFieldSpec);
    CHECK_THROWS_AS(PrimeField(4294967311ULL), BadFieldSpec);
}

TEST_CASE("rational field")
{
    const RationalField q;
    CHECK(q.characteristic() == 0);
    const auto half = q.inv(q.from_int(2));
    CHECK(q.add(half, half) == q.one());
    CHECK(q.to_string(q.from_int(-3)) == "-3");
    CHECK(q.to_string(half) == "1/2");
    CHECK(q.name() == "q");
}

TEST_CASE("field selector parsing")
{
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("gf:2").characteristic() == 2);
    CHECK(FieldSpec::parse("GF:5").characteristic() == 5);
    CHECK(FieldSpec::parse("gf:3").name() == "gf:3");
    for (const char* bad : {"gf:4", "gf:", "gf:x", "r", "", "gf:-3", "gf:3x"})
        CHECK_THROWS_AS(FieldSpec::parse(bad), BadFieldSpec);
}

TEST_CASE("with_field dispatches on the selector")
{
    CHECK(with_field(FieldSpec::parse("gf:3"), [](const auto& f) { return f.characteristic(); }) == 3);
    CHECK(with_field(FieldSpec::parse("q"), [](const auto& f) { return f.characteristic(); }) == 0);
}

TEST_CASE("primality")
{
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(1));
}
