#include "surdsym/continued_fraction.hpp"

#include <map>

#include "surdsym/period.hpp"

namespace surdsym {

namespace {

std::string join(const Sequence & s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += s[i].to_string();
    }
    return out;
}

void require_irrational(const Form & f)
{
    Int d = discriminant(f);
    if (d <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (is_square(d))
        throw SquareDiscriminant("form " + f.to_string() +
                                 " has square discriminant; its roots are rational");
}

}  // namespace

std::string format_period(const Sequence & s)
{
    return "[" + join(s) + "]";
}

std::string format_modular_period(const Sequence & s)
{
    return "((" + join(s) + "))";
}

std::string format_expansion(const CFExpansion & cf)
{
    std::string out = "[" + join(cf.preperiod);
    if (!cf.period.empty()) {
        if (!cf.preperiod.empty())
            out += ',';
        out += format_period(cf.period);
    }
    return out + "]";
}

std::string format_expansion(const ModularCF & cf)
{
    std::string out = "(" + join(cf.preperiod);
    if (!cf.period.empty()) {
        if (!cf.preperiod.empty())
            out += ',';
        out += "(" + join(cf.period) + ")";
    }
    return out + ")";
}

CFExpansion cf_rational(Int num, Int den)
{
    if (den <= 0)
        throw DomainError("cf_rational needs a positive denominator");
    CFExpansion cf;
    while (true) {
        Int a = floor_div(num, den);
        cf.preperiod.push_back(a);
        Int r = num - a * den;
        if (r == 0)
            break;
        num = den;
        den = r;
    }
    return cf;
}

Rational evaluate(const Sequence & terms)
{
    if (terms.empty())
        throw DomainError("empty continued fraction");
    // convergents h/k with h_{-1} = 1, k_{-1} = 0
    Int h = 1, h_prev = 0, k = 0, k_prev = 1;
    for (const Int & a : terms) {
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    if (k < 0) {
        h = -h;
        k = -k;
    }
    Int g = gcd(h, k);
    return {h / g, k / g};
}

CFExpansion cf_parity_variant(const CFExpansion & cf, Parity parity)
{
    if (!cf.is_finite())
        throw DomainError("parity variants exist only for finite expansions");
    Sequence t = cf.preperiod;
    if (t.empty())
        throw DomainError("empty continued fraction");
    Rational r = evaluate(t);
    if (r.num <= r.den)
        throw DomainError("parity variants need a value greater than 1");
    bool odd = t.size() % 2 == 1;
    if (odd == (parity == Parity::Odd))
        return cf;
    if (t.back() > 1) {
        t.back() -= 1;
        t.push_back(1);
    } else {
        t.pop_back();
        t.back() += 1;
    }
    return CFExpansion{std::move(t), {}};
}

CFExpansion cf_surd(const Surd & s)
{
    if (s.is_rational()) {
        Int num = s.p() + isqrt(s.d()), den = s.q();
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return cf_rational(num, den);
    }
    Int p = s.p(), q = s.q();
    const Int d = s.d();
    std::map<std::pair<Int, Int>, std::size_t> seen;
    Sequence digits;
    while (true) {
        auto [it, fresh] = seen.try_emplace({p, q}, digits.size());
        if (!fresh) {
            std::size_t start = it->second;
            return CFExpansion{Sequence(digits.begin(), digits.begin() + start),
                               Sequence(digits.begin() + start, digits.end())};
        }
        Int a = floor_surd(Surd(p, q, d));
        digits.push_back(a);
        p = a * q - p;
        q = (d - p * p) / q;
    }
}

CFExpansion cf_surd(const Form & f)
{
    require_irrational(f);
    return cf_surd(root_plus(f));
}

Sequence period_of_class(const Form & f)
{
    return cf_surd(f).period;
}

std::pair<Sequence, Sequence> period_inverse_pair(const Form & f)
{
    require_irrational(f);
    auto [plus, minus] = roots(f);
    return {cf_surd(plus).period, cf_surd(minus).period};
}

ModularCF modular_cf_surd(const Surd & s)
{
    if (s.is_rational())
        throw DomainError("modular fractions are periodic only for irrational values");
    Int p = s.p(), q = s.q();
    const Int d = s.d();
    std::map<std::pair<Int, Int>, std::size_t> seen;
    Sequence digits;
    while (true) {
        auto [it, fresh] = seen.try_emplace({p, q}, digits.size());
        if (!fresh) {
            std::size_t start = it->second;
            return ModularCF{Sequence(digits.begin(), digits.begin() + start),
                             Sequence(digits.begin() + start, digits.end())};
        }
        Int b = ceil_surd(Surd(p, q, d));
        digits.push_back(b);
        // 1/(b - xi) = (p' + sqrt d) / ((p'^2 - d)/q) with p' = bq - p
        p = b * q - p;
        q = (p * p - d) / q;
    }
}

ModularCF modular_cf_surd(const Form & f)
{
    require_irrational(f);
    return modular_cf_surd(root_plus(f));
}

Sequence cf_period_to_modular_period(const Sequence & period)
{
    if (period.empty() || period.size() % 2 != 0)
        throw DomainError("modular conversion needs an even-length period, got " +
                          format_period(period));
    Sequence out;
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (period[i] < 1)
            throw DomainError("period elements must be positive");
        if (i % 2 == 0) {
            out.push_back(period[i] + 2);
        } else {
            for (Int j = 1; j < period[i]; ++j)
                out.push_back(2);
        }
    }
    return out;
}

Sequence modular_period_to_cf_period(const Sequence & modular)
{
    std::size_t start = 0;
    while (start < modular.size() && modular[start] == 2)
        ++start;
    if (start == modular.size())
        throw DomainError("a modular period of all 2s has no regular counterpart");
    Sequence out;
    for (std::size_t i = 0; i < modular.size();) {
        const Int & c = modular[(start + i) % modular.size()];
        if (c < 2)
            throw DomainError("modular digits must be at least 2");
        out.push_back(c - 2);
        ++i;
        Int run = 0;
        while (i < modular.size() && modular[(start + i) % modular.size()] == 2) {
            ++run;
            ++i;
        }
        out.push_back(run + 1);
    }
    return out;
}

std::pair<Form, Form> period_to_forms(const Sequence & s, Int scale)
{
    if (s.empty())
        throw DomainError("empty period");
    for (const Int & a : s)
        if (a < 1)
            throw DomainError("period elements must be positive, got " + format_period(s));
    if (!is_primitive_period(s))
        throw DomainError(format_period(s) + " is a repetition of a shorter block");
    if (scale < 1)
        throw DomainError("scale must be positive");
    // (p p'; q q') = prod (a 1; 1 0); [[s]] is the attracting fixed point
    Int p = 1, pp = 0, q = 0, qq = 1;
    for (const Int & a : s) {
        Int np = p * a + pp, nq = q * a + qq;
        pp = p;
        qq = q;
        p = np;
        q = nq;
    }
    Form f{q, -pp, qq - p};
    Int g = content(f);
    f = Form{f.m / g * scale, f.n / g * scale, f.k / g * scale};
    return {f, involution(f, Involution::Antipodal)};
}

}  // namespace surdsym
