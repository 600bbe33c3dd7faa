#include "surdsym/form.hpp"

#include <ostream>

namespace surdsym {

std::string Form::to_string() const
{
    return "(" + m.to_string() + "," + n.to_string() + "," + k.to_string() + ")";
}

std::ostream & operator<<(std::ostream & os, const Form & f)
{
    return os << f.to_string();
}

Int discriminant(const Form & f)
{
    return f.k * f.k - 4 * f.m * f.n;
}

Int content(const Form & f)
{
    return gcd(gcd(f.m, f.n), f.k);
}

bool is_primitive(const Form & f)
{
    return content(f) == 1;
}

std::string_view to_string(Involution which)
{
    switch (which) {
    case Involution::Identity: return "identity";
    case Involution::Complementary: return "complementary";
    case Involution::Conjugate: return "conjugate";
    case Involution::Adjoint: return "adjoint";
    case Involution::Antipodal: return "antipodal";
    case Involution::Opposite: return "opposite";
    }
    return "?";
}

std::optional<Involution> parse_involution(std::string_view name)
{
    for (auto i : {Involution::Identity, Involution::Complementary, Involution::Conjugate,
                   Involution::Adjoint, Involution::Antipodal, Involution::Opposite})
        if (to_string(i) == name)
            return i;
    return std::nullopt;
}

Form involution(const Form & f, Involution which)
{
    const auto & [m, n, k] = f;
    switch (which) {
    case Involution::Identity: return f;
    case Involution::Complementary: return {n, m, -k};
    case Involution::Conjugate: return {m, n, -k};
    case Involution::Adjoint: return {-n, -m, k};
    case Involution::Antipodal: return {-n, -m, -k};
    case Involution::Opposite: return {-m, -n, -k};
    }
    return f;
}

std::string_view to_string(Generator g)
{
    switch (g) {
    case Generator::A: return "A";
    case Generator::B: return "B";
    case Generator::R: return "R";
    case Generator::AInv: return "A^-1";
    case Generator::BInv: return "B^-1";
    }
    return "?";
}

Generator inverse(Generator g)
{
    switch (g) {
    case Generator::A: return Generator::AInv;
    case Generator::AInv: return Generator::A;
    case Generator::B: return Generator::BInv;
    case Generator::BInv: return Generator::B;
    case Generator::R: return Generator::R;
    }
    return g;
}

Form apply_generator(const Form & f, Generator g)
{
    const auto & [m, n, k] = f;
    switch (g) {
    case Generator::A: return {m, m + n + k, 2 * m + k};
    case Generator::AInv: return {m, m + n - k, k - 2 * m};
    case Generator::B: return {m + n + k, n, 2 * n + k};
    case Generator::BInv: return {m + n - k, n, k - 2 * n};
    case Generator::R: return {n, m, -k};
    }
    return f;
}

void GeneratorWord::append(Generator g, Int exponent)
{
    if (exponent < 0) {
        g = surdsym::inverse(g);
        exponent = -exponent;
    }
    if (g == Generator::R)
        exponent = exponent % 2;
    if (exponent == 0)
        return;
    if (!runs_.empty()) {
        Run & last = runs_.back();
        if (last.g == g && g != Generator::R) {
            last.exponent += exponent;
            return;
        }
        if (last.g == surdsym::inverse(g)) {
            // R is its own inverse; otherwise cancel against the opposite run
            if (g == Generator::R) {
                runs_.pop_back();
                return;
            }
            if (last.exponent > exponent) {
                last.exponent -= exponent;
                return;
            }
            Int rest = exponent - last.exponent;
            runs_.pop_back();
            append(g, rest);
            return;
        }
    }
    runs_.push_back({g, exponent});
}

void GeneratorWord::append(const GeneratorWord & w)
{
    for (const auto & r : w.runs_)
        append(r.g, r.exponent);
}

Int GeneratorWord::total(Generator g) const
{
    Int s = 0;
    for (const auto & r : runs_)
        if (r.g == g)
            s += r.exponent;
    return s;
}

GeneratorWord GeneratorWord::inverse() const
{
    GeneratorWord w;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
        w.append(surdsym::inverse(it->g), it->exponent);
    return w;
}

std::string GeneratorWord::to_string() const
{
    if (runs_.empty())
        return "I";
    std::string out;
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
        if (!out.empty())
            out += ' ';
        switch (it->g) {
        case Generator::AInv: out += "A^-" + it->exponent.to_string(); break;
        case Generator::BInv: out += "B^-" + it->exponent.to_string(); break;
        case Generator::R: out += "R"; break;
        default:
            out += std::string(surdsym::to_string(it->g)) + "^" + it->exponent.to_string();
        }
    }
    return out;
}

Form apply_power(const Form & f, Generator g, Int e)
{
    const auto & [m, n, k] = f;
    switch (g) {
    case Generator::AInv: e = -e; [[fallthrough]];
    case Generator::A: return {m, m * e * e + k * e + n, 2 * m * e + k};
    case Generator::BInv: e = -e; [[fallthrough]];
    case Generator::B: return {m + n * e * e + k * e, n, 2 * n * e + k};
    case Generator::R: return floor_mod(e, 2) == 1 ? apply_generator(f, g) : f;
    }
    return f;
}

Form apply_word(Form f, const GeneratorWord & w)
{
    for (const auto & r : w.runs())
        f = apply_power(f, r.g, r.exponent);
    return f;
}

namespace {

Generator transport(Generator g, Involution inv)
{
    switch (inv) {
    case Involution::Identity:
    case Involution::Opposite:
        return g;
    case Involution::Conjugate:
        return g == Generator::R ? g : inverse(g);
    case Involution::Adjoint:
        switch (g) {
        case Generator::A: return Generator::BInv;
        case Generator::B: return Generator::AInv;
        case Generator::AInv: return Generator::B;
        case Generator::BInv: return Generator::A;
        case Generator::R: return Generator::R;
        }
        break;
    case Involution::Antipodal:
        switch (g) {
        case Generator::A: return Generator::B;
        case Generator::B: return Generator::A;
        case Generator::AInv: return Generator::BInv;
        case Generator::BInv: return Generator::AInv;
        case Generator::R: return Generator::R;
        }
        break;
    case Involution::Complementary:
        // R g R
        switch (g) {
        case Generator::A: return Generator::BInv;
        case Generator::B: return Generator::AInv;
        case Generator::AInv: return Generator::B;
        case Generator::BInv: return Generator::A;
        case Generator::R: return Generator::R;
        }
        break;
    }
    return g;
}

}  // namespace

GeneratorWord transport(const GeneratorWord & w, Involution inv)
{
    GeneratorWord out;
    for (const auto & r : w.runs())
        out.append(transport(r.g, inv), r.exponent);
    return out;
}

std::pair<Surd, Surd> roots(const Form & f)
{
    if (f.m == 0)
        throw ZeroLeadingCoefficient("form " + f.to_string() + " has m = 0; apply R first");
    Int d = discriminant(f);
    if (d < 0)
        throw DomainError("form " + f.to_string() + " has negative discriminant");
    return {Surd(-f.k, 2 * f.m, d), Surd(f.k, -2 * f.m, d)};
}

Surd root_plus(const Form & f)
{
    return roots(f).first;
}

std::string_view to_string(DomainLabel d)
{
    switch (d) {
    case DomainLabel::H0: return "H0";
    case DomainLabel::H0R: return "H0R";
    case DomainLabel::HA: return "HA";
    case DomainLabel::HAbar: return "HAbar";
    case DomainLabel::HB: return "HB";
    case DomainLabel::HBbar: return "HBbar";
    case DomainLabel::Outer: return "outer";
    case DomainLabel::Boundary: return "boundary";
    }
    return "?";
}

DomainLabel domain_of(const Form & f)
{
    if (discriminant(f) <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (f.m == 0 || f.n == 0)
        return DomainLabel::Boundary;
    if (f.m > 0 && f.n < 0)
        return DomainLabel::H0;
    if (f.m < 0 && f.n > 0)
        return DomainLabel::H0R;
    auto [plus, minus] = roots(f);
    int p0 = compare(plus, 0), pm1 = compare(plus, -1), pp1 = compare(plus, 1);
    int m0 = compare(minus, 0), mm1 = compare(minus, -1), mp1 = compare(minus, 1);
    if (pm1 == 0 || pp1 == 0 || mm1 == 0 || mp1 == 0)
        return DomainLabel::Boundary;
    if (pm1 > 0 && p0 < 0 && mm1 < 0)
        return DomainLabel::HA;
    if (pp1 > 0 && m0 > 0 && mp1 < 0)
        return DomainLabel::HAbar;
    if (pm1 < 0 && mm1 > 0 && m0 < 0)
        return DomainLabel::HB;
    if (p0 > 0 && pp1 < 0 && mp1 > 0)
        return DomainLabel::HBbar;
    return DomainLabel::Outer;
}

}  // namespace surdsym
