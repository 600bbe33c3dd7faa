#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surdsym/form.hpp"
#include "surdsym/integer.hpp"
#include "surdsym/surd.hpp"

namespace surdsym {

using Sequence = std::vector<Int>;

/// Regular continued fraction: preperiod then (possibly empty) period.
struct CFExpansion {
    Sequence preperiod;
    Sequence period;

    bool is_finite() const { return period.empty(); }

    friend bool operator==(const CFExpansion &, const CFExpansion &) = default;
};

/// Minus ("modular") continued fraction b0 - 1/(b1 - 1/(b2 - ...)), digits >= 2 after b0.
struct ModularCF {
    Sequence preperiod;
    Sequence period;

    friend bool operator==(const ModularCF &, const ModularCF &) = default;
};

/// Exact rational num/den with den > 0.
struct Rational {
    Int num, den;
    friend bool operator==(const Rational &, const Rational &) = default;
};

std::string format_period(const Sequence & s);          // [a1,a2,...]
std::string format_modular_period(const Sequence & s);  // ((c1,...,ct))
std::string format_expansion(const CFExpansion & cf);
std::string format_expansion(const ModularCF & cf);

/// Euclidean expansion of num/den; den must be positive.
CFExpansion cf_rational(Int num, Int den);

/// Value of a finite expansion, in lowest terms.
Rational evaluate(const Sequence & terms);

enum class Parity { Odd, Even };

/*
 * Odd or even variant of a finite expansion of r > 1: the same value with a
 * length of the requested parity, obtained by trading a last term a > 1 for
 * (a - 1, 1) or the trailing (a, 1) for a + 1.
 */
CFExpansion cf_parity_variant(const CFExpansion & cf, Parity parity);

/// Expansion of an arbitrary surd. Rational values yield a finite expansion.
CFExpansion cf_surd(const Surd & s);

/// Expansion of xi+(f); requires a non-square discriminant.
CFExpansion cf_surd(const Form & f);

/// First-occurrence period of xi+(f).
Sequence period_of_class(const Form & f);

/// Periods of xi+(f) and xi-(f); the second is the first reversed, up to rotation.
std::pair<Sequence, Sequence> period_inverse_pair(const Form & f);

ModularCF modular_cf_surd(const Surd & s);
ModularCF modular_cf_surd(const Form & f);

/// Even-length regular period to the minus-fraction period of a reduced form.
Sequence cf_period_to_modular_period(const Sequence & period);

/// Regular period Pi (even length) from a minus-fraction period; inverse of the above.
Sequence modular_period_to_cf_period(const Sequence & modular);

/*
 * The two classes whose period is a rotation of s: the fixed-point form of
 * [[s]] (made primitive, then multiplied by scale) and its antipodal.
 */
std::pair<Form, Form> period_to_forms(const Sequence & s, Int scale = 1);

}  // namespace surdsym
