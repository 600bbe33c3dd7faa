#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surdsym/integer.hpp"
#include "surdsym/surd.hpp"

namespace surdsym {

/// The binary quadratic form m x^2 + n y^2 + k x y.
struct Form {
    Int m, n, k;

    friend bool operator==(const Form &, const Form &) = default;
    friend auto operator<=>(const Form &, const Form &) = default;

    std::string to_string() const;
};

std::ostream & operator<<(std::ostream & os, const Form & f);

Int discriminant(const Form & f);
bool is_primitive(const Form & f);
/// gcd(|m|, |n|, |k|); zero only for the zero form.
Int content(const Form & f);

enum class Involution { Identity, Complementary, Conjugate, Adjoint, Antipodal, Opposite };

std::string_view to_string(Involution which);
std::optional<Involution> parse_involution(std::string_view name);
Form involution(const Form & f, Involution which);

enum class Generator { A, B, R, AInv, BInv };

std::string_view to_string(Generator g);
Generator inverse(Generator g);
Form apply_generator(const Form & f, Generator g);
/// g applied e times (e may be negative), in closed form.
Form apply_power(const Form & f, Generator g, Int e);

/*
 * Run-length encoded word in the generators, stored in application order:
 * the first run acts first. Exponents are positive; adjacent runs of the
 * same generator are merged on append, and R^2 cancels since it acts
 * trivially on forms.
 */
class GeneratorWord {
  public:
    struct Run {
        Generator g;
        Int exponent;
        friend bool operator==(const Run &, const Run &) = default;
    };

    GeneratorWord() = default;

    void append(Generator g, Int exponent = 1);
    void append(const GeneratorWord & w);

    const std::vector<Run> & runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    /// Sum of exponents carried by generator g.
    Int total(Generator g) const;
    /// The word that undoes this one.
    GeneratorWord inverse() const;

    friend bool operator==(const GeneratorWord &, const GeneratorWord &) = default;

    /// Product notation, rightmost factor acting first, e.g. "B^2 A^1".
    std::string to_string() const;

  private:
    std::vector<Run> runs_;
};

Form apply_word(Form f, const GeneratorWord & w);

/*
 * Rewrites w so that inv(apply_word(inv(f), w)) == apply_word(f, result) for
 * every form f. Uses the arrow identities (A f)* = B^-1 f*, conj(A f) =
 * A^-1 conj(f) and their B counterparts.
 */
GeneratorWord transport(const GeneratorWord & w, Involution inv);

/// Routed condition: m == 0 makes the root formula meaningless.
class ZeroLeadingCoefficient : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Routed condition: the operation needs irrational roots but the discriminant is a square.
class SquareDiscriminant : public DomainError {
  public:
    using DomainError::DomainError;
};

/// (xi+, xi-) =(-k +- sqrt(disc)) / (2m). Throws ZeroLeadingCoefficient if m == 0.
std::pair<Surd, Surd> roots(const Form & f);
Surd root_plus(const Form & f);

enum class DomainLabel { H0, H0R, HA, HAbar, HB, HBbar, Outer, Boundary };

std::string_view to_string(DomainLabel d);

/// Throws DomainError when the form is not indefinite.
DomainLabel domain_of(const Form & f);

}  // namespace surdsym

template <>
struct std::hash<surdsym::Form> {
    std::size_t operator()(const surdsym::Form & f) const noexcept
    {
        std::hash<surdsym::Int> h;
        std::size_t s = h(f.m);
        s ^= h(f.n) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        s ^= h(f.k) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        return s;
    }
};
