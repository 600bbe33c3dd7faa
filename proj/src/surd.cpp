#include "surdsym/surd.hpp"

#include <ostream>

namespace surdsym {

Surd::Surd(Int p, Int q, Int d) : p_(p), q_(q), d_(d)
{
    if (q == 0)
        throw DomainError("surd with zero denominator");
    if (d < 0)
        throw DomainError("surd with negative radicand");
    if ((d_ - p_ * p_) % q_ != 0) {
        Int aq = abs(q_);
        p_ = p_ * aq;
        d_ = d_ * q_ * q_;
        q_ = q_ * aq;
    }
    rational_ = is_square(d_);
}

bool operator==(const Surd & a, const Surd & b)
{
    if (a.rational_ != b.rational_)
        return false;
    if (a.rational_) {
        Int na = a.p_ + isqrt(a.d_), nb = b.p_ + isqrt(b.d_);
        return na * b.q_ == nb * a.q_;
    }
    // irrational parts: sqrt(da)/qa == sqrt(db)/qb and rational parts pa/qa == pb/qb
    return sign(a.q_) == sign(b.q_) && a.d_ * b.q_ * b.q_ == b.d_ * a.q_ * a.q_ &&
           a.p_ * b.q_ == b.p_ * a.q_;
}

std::string Surd::to_string() const
{
    return "(" + p_.to_string() + "+sqrt(" + d_.to_string() + "))/" + q_.to_string();
}

std::ostream & operator<<(std::ostream & os, const Surd & s)
{
    return os << s.to_string();
}

Int floor_surd(const Surd & s)
{
    Int r = isqrt(s.d());
    if (s.is_rational())
        return floor_div(s.p() + r, s.q());
    // sqrt(d) lies strictly between r and r + 1
    if (s.q() > 0)
        return floor_div(s.p() + r, s.q());
    return -(floor_div(s.p() + r, -s.q()) + 1);
}

Int ceil_surd(const Surd & s)
{
    // -(p + sqrt d)/q == (p + sqrt d)/(-q)
    return -floor_surd(Surd(s.p(), -s.q(), s.d()));
}

int compare(const Surd & s, Int c)
{
    // s - c = (x + sqrt d)/q with x = p - c q
    Int x = s.p() - c * s.q();
    int num;
    if (x >= 0)
        num = (x == 0 && s.d() == 0) ? 0 : 1;
    else
        num = sign(s.d() - x * x);
    return num * sign(s.q());
}

Surd operator-(const Surd & s)
{
    return Surd(s.p(), -s.q(), s.d());
}

Surd operator+(const Surd & s, Int c)
{
    return Surd(s.p() + c * s.q(), s.q(), s.d());
}

Surd operator-(const Surd & s, Int c)
{
    return Surd(s.p() - c * s.q(), s.q(), s.d());
}

Surd reciprocal(const Surd & s)
{
    Int den = s.p() * s.p() - s.d();
    if (den == 0) {
        // p^2 == d: value is 2p/q when p > 0, zero when p <= 0
        if (s.p() <= 0)
            throw DomainError("reciprocal of zero");
        return Surd(s.q(), 2 * s.p(), 0);
    }
    // q / (p + sqrt d) = q (p - sqrt d) / (p^2 - d)
    Int scaled = s.d() * s.q() * s.q();
    if (s.q() > 0)
        return Surd(-s.q() * s.p(), -den, scaled);
    return Surd(s.q() * s.p(), den, scaled);
}

}  // namespace surdsym
