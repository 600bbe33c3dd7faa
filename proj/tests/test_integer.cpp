#include "doctest.h"
#include "support.hpp"
#include "surdsym/integer.hpp"

using namespace surdsym;

TEST_CASE("isqrt examples")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(17) == 4);
    CHECK(isqrt(Int(1000000000000LL)) == 1000000);
    CHECK_THROWS_AS(isqrt(-1), DomainError);
}

TEST_CASE("isqrt brackets the root")
{
    for (int i = 0; i < 2000; ++i) {
        Int n = testing::uniform(0, 1000000000);
        Int r = isqrt(n);
        CHECK(r * r <= n);
        CHECK(n < (r + 1) * (r + 1));
    }
    Int big = Int::from_raw((static_cast<__int128>(1) << 120) + 12345);
    Int r = isqrt(big);
    CHECK(r * r <= big);
    CHECK(big < (r + 1) * (r + 1));
}

TEST_CASE("is_square")
{
    CHECK(is_square(25));
    CHECK_FALSE(is_square(24));
    CHECK_FALSE(is_square(-4));
    CHECK(is_square(0));
}

TEST_CASE("checked arithmetic throws instead of wrapping")
{
    Int big = Int::from_raw(static_cast<__int128>(1) << 100);
    CHECK_THROWS_AS(big * big, OverflowError);
    Int max = Int::from_raw(~(static_cast<__int128>(1) << 127));
    CHECK_THROWS_AS(max + 1, OverflowError);
    CHECK_THROWS_AS(-max - 2, OverflowError);
    CHECK_THROWS_AS(Int(1) / 0, DomainError);
}

TEST_CASE("floor and ceil division")
{
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_mod(7, -3) == -2);
}

TEST_CASE("gcd and extended gcd")
{
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(0, 0) == 0);
    for (int i = 0; i < 500; ++i) {
        Int a = testing::uniform(-100000, 100000), b = testing::uniform(-100000, 100000);
        Int x, y;
        Int g = extended_gcd(a, b, x, y);
        CHECK(g == gcd(a, b));
        CHECK(a * x + b * y == g);
    }
}

TEST_CASE("parse and print")
{
    CHECK(parse_int("-7") == -7);
    CHECK(parse_int("+12") == 12);
    CHECK(parse_int("170141183460469231731687303715884105727").to_string() ==
          "170141183460469231731687303715884105727");
    CHECK(parse_int("-170141183460469231731687303715884105728").to_string() ==
          "-170141183460469231731687303715884105728");
    CHECK_THROWS_AS(parse_int("170141183460469231731687303715884105728"), OverflowError);
    CHECK_THROWS_AS(parse_int("12a"), DomainError);
    CHECK_THROWS_AS(parse_int(""), DomainError);
    CHECK_THROWS_AS(parse_int("-"), DomainError);
}
