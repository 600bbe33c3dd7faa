#include "surdsym/oracle.hpp"

#include <deque>
#include <unordered_set>

#include "surdsym/continued_fraction.hpp"

namespace surdsym {

namespace {

using FormSet = std::unordered_set<Form>;

Int max_coefficient(const Form & f)
{
    return std::max({abs(f.m), abs(f.n), abs(f.k)});
}

bool inside(const Form & f, Int bound)
{
    return max_coefficient(f) <= bound;
}

constexpr Generator kGenerators[] = {Generator::A, Generator::B, Generator::R, Generator::AInv,
                                     Generator::BInv};

// orbit members with coefficients up to `window`, taken from a bound at
// which doubling no longer changes them
FormSet stable_window(const Form & f, Int coeff_bound)
{
    const Int d = discriminant(f);
    if (d <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (coeff_bound <= 0)
        throw DomainError("orbit bound must be positive");
    const Int window = std::max(d, max_coefficient(f));
    Int bound = std::max(coeff_bound, window);

    auto windowed = [&](Int b) {
        FormSet out;
        for (const Form & g : orbit_bfs(f, b))
            if (inside(g, window))
                out.insert(g);
        return out;
    };

    FormSet current = windowed(bound);
    for (int attempt = 0; attempt <= 3; ++attempt) {
        FormSet next = windowed(2 * bound);
        if (next == current)
            return current;
        current = std::move(next);
        bound = 2 * bound;
    }
    throw InconclusiveError("orbit of " + f.to_string() + " did not stabilise up to bound " +
                            bound.to_string());
}

}  // namespace

std::vector<Form> orbit_bfs(const Form & f, Int coeff_bound)
{
    if (discriminant(f) <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (!inside(f, coeff_bound))
        throw DomainError("form " + f.to_string() + " exceeds the bound " + coeff_bound.to_string());
    std::vector<Form> order{f};
    FormSet seen{f};
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Form current = order[head];
        for (Generator g : kGenerators) {
            Form next = apply_generator(current, g);
            if (inside(next, coeff_bound) && seen.insert(next).second)
                order.push_back(next);
        }
    }
    return order;
}

H0Cycle h0_cycle_walk(const Form & f)
{
    if (discriminant(f) > 0 && is_square(discriminant(f)))
        throw SquareDiscriminant("the H0 walk needs a non-square discriminant, got " + f.to_string());
    if (domain_of(f) != DomainLabel::H0)
        throw DomainError("form " + f.to_string() + " is not in H0");
    Int cap = 4;
    for (const Int & a : double_if_odd(period_of_class(f)))
        cap += 2 * a;

    H0Cycle cycle;
    Form g = f;
    do {
        if (Int(static_cast<long long>(cycle.forms.size())) >= cap)
            throw std::logic_error("H0 walk from " + f.to_string() + " did not close");
        cycle.forms.push_back(g);
        Generator step = compare(root_plus(g), 1) > 0 ? Generator::A : Generator::B;
        cycle.word.append(step);
        g = apply_generator(g, step);
        if (domain_of(g) != DomainLabel::H0)
            throw std::logic_error("H0 walk left H0 at " + g.to_string());
    } while (g != f);
    return cycle;
}

Int default_bound(const Form & f)
{
    return 4 * discriminant(f);
}

SymmetryType verify_symmetry(const Form & f, Int coeff_bound)
{
    FormSet orbit = stable_window(f, coeff_bound);
    const bool conj = orbit.contains(involution(f, Involution::Conjugate));
    const bool adj = orbit.contains(involution(f, Involution::Adjoint));
    const bool antip = orbit.contains(involution(f, Involution::Antipodal));
    if (conj && adj && antip)
        return SymmetryType::Supersymmetric;
    if (!conj && !adj && !antip)
        return SymmetryType::Asymmetric;
    if (conj && !adj && !antip)
        return SymmetryType::KSymmetric;
    if (!conj && adj && !antip)
        return SymmetryType::MPlusNSymmetric;
    if (!conj && !adj && antip)
        return SymmetryType::Antisymmetric;
    throw std::logic_error("class of " + f.to_string() +
                           " is closed under exactly two involutions");
}

Int DomainTally::count(DomainLabel d) const
{
    auto it = by_domain.find(d);
    return it == by_domain.end() ? Int(0) : it->second;
}

DomainTally verify_counts(const Form & f, Int coeff_bound)
{
    DomainTally tally;
    for (const Form & g : stable_window(f, coeff_bound))
        tally.by_domain[domain_of(g)] += 1;
    return tally;
}

}  // namespace surdsym
