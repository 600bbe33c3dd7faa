#include "surdsym/period.hpp"

#include <algorithm>

namespace surdsym {

std::string_view to_string(SymmetryType t)
{
    switch (t) {
    case SymmetryType::Asymmetric: return "asymmetric";
    case SymmetryType::KSymmetric: return "k-symmetric";
    case SymmetryType::MPlusNSymmetric: return "m+n-symmetric";
    case SymmetryType::Antisymmetric: return "antisymmetric";
    case SymmetryType::Supersymmetric: return "supersymmetric";
    }
    return "?";
}

std::string_view short_label(SymmetryType t)
{
    switch (t) {
    case SymmetryType::Asymmetric: return "asymm";
    case SymmetryType::KSymmetric: return "k";
    case SymmetryType::MPlusNSymmetric: return "m+n";
    case SymmetryType::Antisymmetric: return "anti";
    case SymmetryType::Supersymmetric: return "super";
    }
    return "?";
}

std::optional<SymmetryType> parse_symmetry(std::string_view name)
{
    for (auto t : kAllSymmetryTypes)
        if (to_string(t) == name || short_label(t) == name)
            return t;
    return std::nullopt;
}

AmbiguousPeriod::AmbiguousPeriod(const Sequence & s)
    : std::logic_error("period " + format_period(s) +
                       " is both even-palindromic and bipalindromic"),
      period(s)
{
}

namespace {

void require_nonempty(const Sequence & s)
{
    if (s.empty())
        throw DomainError("empty period");
}

std::vector<std::size_t> prefix_function(const Sequence & s)
{
    std::vector<std::size_t> pi(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t j = pi[i - 1];
        while (j > 0 && s[i] != s[j])
            j = pi[j - 1];
        if (s[i] == s[j])
            ++j;
        pi[i] = j;
    }
    return pi;
}

// s[c + j] == s[c - j] for all j: reflection axis through position c
bool vertex_axis(const Sequence & s, std::size_t c)
{
    const std::size_t n = s.size();
    for (std::size_t j = 1; j <= n / 2; ++j)
        if (s[(c + j) % n] != s[(c + n - j) % n])
            return false;
    return true;
}

// s[c + j] == s[c - 1 - j] for all j: reflection axis between c - 1 and c
bool edge_axis(const Sequence & s, std::size_t c)
{
    const std::size_t n = s.size();
    for (std::size_t j = 0; j < n / 2; ++j)
        if (s[(c + j) % n] != s[(c + 2 * n - 1 - j) % n])
            return false;
    return true;
}

Int sum(const Sequence & s)
{
    Int total = 0;
    for (const Int & a : s)
        total += a;
    return total;
}

// (sum over odd 1-based positions, sum over even positions)
std::pair<Int, Int> alternating_sums(const Sequence & s)
{
    Int odd = 0, even = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        (i % 2 == 0 ? odd : even) += s[i];
    return {odd, even};
}

void require_square_range(Int m, Int k)
{
    if (m < 0 || m >= abs(k))
        throw DomainError("need 0 <= m < |k|, got m = " + m.to_string() + ", k = " +
                          k.to_string());
}

Sequence terms_of(Int num, Int den)
{
    return cf_rational(num, den).preperiod;
}

Sequence variant(const Sequence & t, Parity p)
{
    return cf_parity_variant(CFExpansion{t, {}}, p).preperiod;
}

}  // namespace

Sequence canonical_rotation(const Sequence & s)
{
    require_nonempty(s);
    // least rotation by the two-candidate scan
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const Int & a = s[(i + k) % n];
        const Int & b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    std::size_t start = std::min(i, j);
    Sequence out(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

bool is_rotation_of(const Sequence & a, const Sequence & b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    return canonical_rotation(a) == canonical_rotation(b);
}

bool is_primitive_period(const Sequence & s)
{
    require_nonempty(s);
    auto pi = prefix_function(s);
    std::size_t p = s.size() - pi.back();
    return p == s.size() || s.size() % p != 0;
}

bool is_palindrome(const Sequence & s)
{
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2),
                      s.rbegin());
}

bool is_palindromic_cyclic(const Sequence & s)
{
    require_nonempty(s);
    const bool odd = s.size() % 2 == 1;
    for (std::size_t c = 0; c < s.size(); ++c)
        if (odd ? vertex_axis(s, c) : edge_axis(s, c))
            return true;
    return false;
}

bool is_bipalindromic(const Sequence & s)
{
    require_nonempty(s);
    if (s.size() % 2 == 1)
        return false;
    // an axis through a vertex also passes through the opposite vertex, so
    // scanning half the positions is enough
    for (std::size_t c = 0; c < s.size() / 2; ++c)
        if (vertex_axis(s, c))
            return true;
    return false;
}

SymmetryType classify_period(const Sequence & s)
{
    require_nonempty(s);
    const bool odd = s.size() % 2 == 1;
    const bool pal = is_palindromic_cyclic(s);
    const bool bip = is_bipalindromic(s);
    if (pal && bip)
        throw AmbiguousPeriod(s);
    if (pal)
        return odd ? SymmetryType::Supersymmetric : SymmetryType::MPlusNSymmetric;
    if (bip)
        return SymmetryType::KSymmetric;
    return odd ? SymmetryType::Antisymmetric : SymmetryType::Asymmetric;
}

Sequence double_if_odd(const Sequence & gamma)
{
    Sequence pi = gamma;
    if (gamma.size() % 2 == 1)
        pi.insert(pi.end(), gamma.begin(), gamma.end());
    return pi;
}

Counts counts_nonsquare(const Sequence & gamma)
{
    require_nonempty(gamma);
    Sequence pi = double_if_odd(gamma);
    auto [odd, even] = alternating_sums(pi);
    return {odd + even, odd, even};
}

Sequence principal_phase(const Sequence & period, std::size_t preperiod_length)
{
    require_nonempty(period);
    if (preperiod_length % 2 == 1)
        return period;
    Sequence out(period.begin() + 1, period.end());
    out.push_back(period.front());
    return out;
}

Counts counts_square(Int m, Int k)
{
    require_square_range(m, k);
    if (m == 0)
        return {0, 0, 0};
    Sequence even = variant(terms_of(abs(k), m), Parity::Even);
    auto [odd_sum, even_sum] = alternating_sums(even);
    return {sum(even) - 1, odd_sum - 1, even_sum - 1};
}

SymmetryType classify_square(Int m, Int k)
{
    require_square_range(m, k);
    if (m == 0 || 2 * m == abs(k))
        return SymmetryType::Supersymmetric;
    Sequence t = terms_of(abs(k), m);
    if (is_palindrome(variant(t, Parity::Even)))
        return SymmetryType::MPlusNSymmetric;
    if (is_palindrome(variant(t, Parity::Odd)))
        return SymmetryType::KSymmetric;
    return SymmetryType::Asymmetric;
}

Sequence square_display_cf(Int m, Int k)
{
    require_square_range(m, k);
    if (m == 0)
        return {};
    Sequence t = terms_of(abs(k), m);
    Sequence odd = variant(t, Parity::Odd);
    if (is_palindrome(odd))
        return odd;
    Sequence even = variant(t, Parity::Even);
    if (is_palindrome(even))
        return even;
    return odd.back() == 1 ? odd : even;
}

Form normalize_square_class(const Form & f)
{
    const Int d = discriminant(f);
    if (d <= 0 || !is_square(d))
        throw DomainError("form " + f.to_string() + " does not have a positive square discriminant");
    const Int s = isqrt(d);
    const auto & [m, n, k] = f;

    // primitive integer vectors (x, y) with f(x, y) = 0
    std::vector<std::pair<Int, Int>> zeros;
    auto push = [&](Int x, Int y) {
        Int g = gcd(x, y);
        zeros.emplace_back(x / g, y / g);
    };
    if (m != 0) {
        push(-k + s, 2 * m);
        push(-k - s, 2 * m);
    } else {
        push(1, 0);
        push(-n, k);
    }

    for (auto [x0, y0] : zeros) {
        // complete (x0, y0) to the second column of a matrix of determinant 1
        Int a, b;
        extended_gcd(y0, -x0, a, b);
        Int m2 = m * a * a + n * b * b + k * a * b;
        Int k2 = 2 * m * a * x0 + 2 * n * b * y0 + k * (a * y0 + b * x0);
        if (k2 == s)
            return Form{floor_mod(m2, s), 0, s};
    }
    throw std::logic_error("no zero of " + f.to_string() + " normalizes to k > 0");
}

ClassReport classify_class(const Form & f)
{
    const Int d = discriminant(f);
    if (d <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite (discriminant " +
                          d.to_string() + ")");
    ClassReport r{};
    r.delta = d;
    r.primitive = is_primitive(f);
    if (is_square(d)) {
        r.square = true;
        r.representative = normalize_square_class(f);
        const Int m = r.representative.m, k = r.representative.k;
        r.cf_k_over_m = square_display_cf(m, k);
        r.length = static_cast<long long>(r.cf_k_over_m.size());
        Counts c = counts_square(m, k);
        r.t = c.t;
        r.t_up = c.t_up;
        r.t_down = c.t_down;
        r.symmetry = classify_square(m, k);
        return r;
    }
    r.square = false;
    r.representative = f;
    CFExpansion cf = cf_surd(f);
    r.gamma = cf.period;
    r.length = static_cast<long long>(cf.period.size());
    Counts c = counts_nonsquare(principal_phase(cf.period, cf.preperiod.size()));
    r.t = c.t;
    r.t_up = c.t_up;
    r.t_down = c.t_down;
    r.symmetry = classify_period(cf.period);
    return r;
}

}  // namespace surdsym
