#include "surdsym/integer.hpp"

#include <algorithm>
#include <ostream>

namespace surdsym {

namespace {

constexpr __int128 kMin = static_cast<__int128>(static_cast<unsigned __int128>(1) << 127);

[[noreturn]] void overflow(const char * op)
{
    throw OverflowError(std::string("128-bit overflow in ") + op);
}

}  // namespace

std::int64_t Int::to_int64() const
{
    if (!fits_int64())
        overflow("narrowing to int64");
    return static_cast<std::int64_t>(v_);
}

Int operator+(Int a, Int b)
{
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r))
        overflow("addition");
    return Int::from_raw(r);
}

Int operator-(Int a, Int b)
{
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r))
        overflow("subtraction");
    return Int::from_raw(r);
}

Int operator*(Int a, Int b)
{
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r))
        overflow("multiplication");
    return Int::from_raw(r);
}

Int operator/(Int a, Int b)
{
    if (b.v_ == 0)
        throw DomainError("division by zero");
    if (a.v_ == kMin && b.v_ == -1)
        overflow("division");
    return Int::from_raw(a.v_ / b.v_);
}

Int operator%(Int a, Int b)
{
    if (b.v_ == 0)
        throw DomainError("division by zero");
    if (b.v_ == -1)
        return Int{};
    return Int::from_raw(a.v_ % b.v_);
}

Int Int::operator-() const
{
    if (v_ == kMin)
        overflow("negation");
    return from_raw(-v_);
}

std::string Int::to_string() const
{
    if (v_ == 0)
        return "0";
    auto u = v_ < 0 ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v_)
                    : static_cast<unsigned __int128>(v_);
    std::string out;
    while (u != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (v_ < 0)
        out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::ostream & operator<<(std::ostream & os, Int v)
{
    return os << v.to_string();
}

Int parse_int(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw DomainError("not an integer: '" + std::string(text) + "'");
    Int v;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw DomainError("not an integer: '" + std::string(text) + "'");
        // accumulate negatively so INT128_MIN parses
        v = v * 10 - Int(c - '0');
    }
    return negative ? v : -v;
}

Int abs(Int v)
{
    return v < 0 ? -v : v;
}

int sign(Int v)
{
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Int gcd(Int a, Int b)
{
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

Int ceil_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        q += 1;
    return q;
}

Int floor_mod(Int a, Int b)
{
    return a - floor_div(a, b) * b;
}

Int isqrt(Int n)
{
    if (n < 0)
        throw DomainError("isqrt of negative number " + n.to_string());
    auto u = static_cast<unsigned __int128>(n.raw());
    if (u < 2)
        return n;
    // Newton from an over-estimate 2^ceil(bits/2) decreases monotonically to floor(sqrt(u)).
    int bits = 0;
    for (auto t = u; t != 0; t >>= 1)
        ++bits;
    unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
    while (true) {
        unsigned __int128 y = (x + u / x) >> 1;
        if (y >= x)
            break;
        x = y;
    }
    return Int::from_raw(static_cast<__int128>(x));
}

bool is_square(Int n)
{
    if (n < 0)
        return false;
    Int r = isqrt(n);
    return r * r == n;
}

Int extended_gcd(Int a, Int b, Int & x, Int & y)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

}  // namespace surdsym
