#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace surdsym {

/// Raised when an exact computation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

/// Raised on inputs outside an operation's mathematical domain.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/*
 * Signed 128-bit integer with checked arithmetic.
 *
 * Every operator either returns the exact result or throws OverflowError;
 * there is no wraparound. Division and remainder truncate toward zero like
 * the built-in types; use floor_div / floor_mod for the floor convention.
 */
class Int {
  public:
    using raw_type = __int128;

    constexpr Int() = default;
    constexpr Int(long long v) : v_(v) {}  // NOLINT: implicit by design of the numeric tower
    constexpr Int(int v) : v_(v) {}        // NOLINT
    constexpr Int(long v) : v_(v) {}       // NOLINT

    static constexpr Int from_raw(raw_type v)
    {
        Int r;
        r.v_ = v;
        return r;
    }

    constexpr raw_type raw() const { return v_; }

    bool fits_int64() const { return v_ >= INT64_MIN && v_ <= INT64_MAX; }
    std::int64_t to_int64() const;

    friend Int operator+(Int a, Int b);
    friend Int operator-(Int a, Int b);
    friend Int operator*(Int a, Int b);
    friend Int operator/(Int a, Int b);
    friend Int operator%(Int a, Int b);
    Int operator-() const;

    Int & operator+=(Int o) { return *this = *this + o; }
    Int & operator-=(Int o) { return *this = *this - o; }
    Int & operator*=(Int o) { return *this = *this * o; }
    Int & operator/=(Int o) { return *this = *this / o; }
    Int & operator%=(Int o) { return *this = *this % o; }
    Int & operator++() { return *this += 1; }
    Int & operator--() { return *this -= 1; }

    friend constexpr bool operator==(Int a, Int b) = default;
    friend constexpr std::strong_ordering operator<=>(Int a, Int b)
    {
        return a.v_ < b.v_ ? std::strong_ordering::less
               : a.v_ > b.v_ ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
    }

    std::string to_string() const;

  private:
    raw_type v_ = 0;
};

std::ostream & operator<<(std::ostream & os, Int v);

/// Parses an optionally signed decimal integer; throws DomainError on junk.
Int parse_int(std::string_view text);

Int abs(Int v);
int sign(Int v);
Int gcd(Int a, Int b);
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
Int floor_mod(Int a, Int b);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(Int n);
bool is_square(Int n);

/// Bezout coefficients: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int extended_gcd(Int a, Int b, Int & x, Int & y);

}  // namespace surdsym

template <>
struct std::hash<surdsym::Int> {
    std::size_t operator()(surdsym::Int v) const noexcept
    {
        auto u = static_cast<unsigned __int128>(v.raw());
        auto lo = static_cast<std::uint64_t>(u);
        auto hi = static_cast<std::uint64_t>(u >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};
