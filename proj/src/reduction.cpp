#include "surdsym/reduction.hpp"

#include <stdexcept>

namespace surdsym {

namespace {

void require_nonsquare(const Form & f)
{
    Int d = discriminant(f);
    if (d <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (is_square(d))
        throw SquareDiscriminant("reduced forms are defined only for non-square discriminants, got " +
                                 f.to_string());
}

// One step of the H0 cycle: A while xi+ > 1, otherwise B.
Form h0_step(const Form & f)
{
    return compare(root_plus(f), 1) > 0 ? apply_generator(f, Generator::A)
                                        : apply_generator(f, Generator::B);
}

Int period_weight(const Form & f)
{
    Int total = 0;
    for (const Int & a : double_if_odd(period_of_class(f)))
        total += a;
    return total;
}

}  // namespace

bool is_reduced(const Form & f)
{
    return f.m > 0 && f.n > 0 && f.k < 0 && f.m + f.n < -f.k;
}

H0Reduction reduce_to_H0(const Form & f)
{
    if (discriminant(f) <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (f.m * f.n <= 0)
        return {f, {}, Involution::Identity, {}};

    Involution tag = Involution::Identity;
    Form g{};
    bool found = false;
    for (Involution inv : {Involution::Identity, Involution::Conjugate, Involution::Adjoint,
                           Involution::Antipodal}) {
        g = involution(f, inv);
        if (compare(root_plus(g), 0) > 0) {
            tag = inv;
            found = true;
            break;
        }
    }
    if (!found)
        throw std::logic_error("no involution of " + f.to_string() + " has a positive first root");

    // digits of xi+(g) by the P, Q recurrence, consumed one run at a time
    Surd xi = root_plus(g);
    Int p = xi.p(), q = xi.q();
    const Int d = xi.d();
    GeneratorWord word;
    constexpr int kMaxRuns = 100000;
    for (int i = 0; g.m * g.n > 0; ++i) {
        if (i == kMaxRuns || q == 0)
            throw std::logic_error("reduction of " + f.to_string() + " did not reach m n <= 0");
        Int a = floor_surd(Surd(p, q, d));
        p = a * q - p;
        q = (d - p * p) / q;
        Generator gen = i % 2 == 0 ? Generator::A : Generator::B;
        g = apply_power(g, gen, a);
        word.append(gen, a);
    }
    return {involution(g, tag), word, tag, transport(word, tag)};
}

ReducedCycle reduced_cycle(const Form & f)
{
    require_nonsquare(f);
    Form g = reduce_to_H0(f).form;
    if (g.m < 0)
        g = apply_generator(g, Generator::R);

    const Int weight = period_weight(g);
    Form start{};
    bool found = false;
    for (Int i = 0; i < 2 * weight + 4; ++i) {
        Form h = apply_generator(g, Generator::AInv);
        if (is_reduced(h)) {
            start = h;
            found = true;
            break;
        }
        g = h0_step(g);
    }
    if (!found)
        throw std::logic_error("no reduced form found in the class of " + f.to_string());

    ReducedCycle cycle;
    Form h = start;
    const Int cap = 4 * weight + 16;
    do {
        if (Int(static_cast<long long>(cycle.forms.size())) >= cap)
            throw std::logic_error("reduced cycle of " + f.to_string() + " did not close");
        if (!is_reduced(h))
            throw std::logic_error("cycle left the reduced forms at " + h.to_string());
        cycle.forms.push_back(h);
        Int c = ceil_surd(root_plus(h));
        cycle.modular_period.push_back(c);
        h = apply_generator(apply_power(h, Generator::A, c), Generator::R);
    } while (h != start);
    return cycle;
}

ClassicalReduction reduce_classical(const Form & f)
{
    if (!(f.m > 0 && f.n > 0 && f.k < 0))
        throw DomainError("classical reduction needs m > 0, n > 0, k < 0, got " + f.to_string());
    require_nonsquare(f);
    ModularCF cf = modular_cf_surd(f);
    ClassicalReduction out{f, {}};
    for (const Int & b : cf.preperiod) {
        out.word.append(Generator::A, b);
        out.word.append(Generator::R);
    }
    out.form = apply_word(f, out.word);
    if (!is_reduced(out.form))
        throw std::logic_error("classical reduction of " + f.to_string() + " ended at " +
                               out.form.to_string());
    return out;
}

SumRule check_sum_rule(const ReducedCycle & cycle, SymmetryType symmetry)
{
    switch (symmetry) {
    case SymmetryType::Supersymmetric:
    case SymmetryType::Antisymmetric:
    case SymmetryType::MPlusNSymmetric: {
        Int sum = 0;
        for (const Int & c : cycle.modular_period)
            sum += c;
        return {sum == 3 * Int(static_cast<long long>(cycle.modular_period.size())), false};
    }
    default:
        return {true, true};
    }
}

}  // namespace surdsym
