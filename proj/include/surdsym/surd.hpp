#pragma once

#include <iosfwd>
#include <string>

#include "surdsym/integer.hpp"

namespace surdsym {

/*
 * Exact quadratic value (p + sqrt(d)) / q.
 *
 * Invariants after construction: q != 0, d >= 0 and q | (d - p^2). The
 * constructor rescales (p, q, d) -> (p|q|, q|q|, d q^2) when the divisibility
 * does not hold, which keeps the value and makes the continued fraction
 * recurrences integral. When d is a perfect square the value is rational.
 */
class Surd {
  public:
    Surd(Int p, Int q, Int d);

    static Surd integer(Int v) { return Surd(v, 1, 0); }

    Int p() const { return p_; }
    Int q() const { return q_; }
    Int d() const { return d_; }
    bool is_rational() const { return rational_; }

    /// Value equality (not representation equality).
    friend bool operator==(const Surd & a, const Surd & b);

    std::string to_string() const;

  private:
    Int p_, q_, d_;
    bool rational_ = false;
};

std::ostream & operator<<(std::ostream & os, const Surd & s);

Int floor_surd(const Surd & s);
Int ceil_surd(const Surd & s);

/// Sign of (s - c): -1, 0 or 1, computed exactly.
int compare(const Surd & s, Int c);

Surd operator-(const Surd & s);
Surd operator+(const Surd & s, Int c);
Surd operator-(const Surd & s, Int c);
/// 1 / s; throws DomainError when s == 0.
Surd reciprocal(const Surd & s);

}  // namespace surdsym
