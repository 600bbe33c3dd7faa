#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "surdsym/continued_fraction.hpp"
#include "surdsym/form.hpp"

namespace surdsym {

enum class SymmetryType { Asymmetric, KSymmetric, MPlusNSymmetric, Antisymmetric, Supersymmetric };

inline constexpr SymmetryType kAllSymmetryTypes[] = {
    SymmetryType::Asymmetric, SymmetryType::KSymmetric, SymmetryType::MPlusNSymmetric,
    SymmetryType::Antisymmetric, SymmetryType::Supersymmetric};

/// Long name, e.g. "m+n-symmetric".
std::string_view to_string(SymmetryType t);
/// Short table label: asymm, k, m+n, anti, super.
std::string_view short_label(SymmetryType t);
std::optional<SymmetryType> parse_symmetry(std::string_view name);

/// A period that is both even-palindromic and bipalindromic; never produced by a surd.
class AmbiguousPeriod : public std::logic_error {
  public:
    explicit AmbiguousPeriod(const Sequence & s);
    Sequence period;
};

// Cyclic-word predicates. All take a nonempty sequence.
Sequence canonical_rotation(const Sequence & s);
bool is_rotation_of(const Sequence & a, const Sequence & b);
bool is_primitive_period(const Sequence & s);
/// Some rotation reads the same backwards.
bool is_palindromic_cyclic(const Sequence & s);
/// Even length and some rotation splits into two odd-length palindromes.
bool is_bipalindromic(const Sequence & s);
/// Plain (non-cyclic) palindrome test.
bool is_palindrome(const Sequence & s);

SymmetryType classify_period(const Sequence & s);

/*
 * Representative counts of a class. For a non-square discriminant t counts
 * points in H0 (and in H0_R), t_up the points in each domain on the A side
 * and t_down those on the B side. For a square discriminant t_up + t_down is
 * t - 1 except for the m = 0 class where everything is zero.
 */
struct Counts {
    Int t, t_up, t_down;
    friend bool operator==(const Counts &, const Counts &) = default;
};

/// Pi = gamma, or gamma twice when gamma has odd length.
Sequence double_if_odd(const Sequence & gamma);

/*
 * Counts from a period given in principal phase: the period of xi+ of an H0
 * form with 0 < xi+ < 1 and xi- < -1 (a first-occurrence period whose
 * preperiod has odd length). t_up sums the odd positions of Pi.
 */
Counts counts_nonsquare(const Sequence & gamma);

/// Rotates a first-occurrence period into principal phase given its preperiod length.
Sequence principal_phase(const Sequence & period, std::size_t preperiod_length);

/// Counts of C(m, 0, k) from the even expansion of |k|/m; requires 0 <= m < |k|.
Counts counts_square(Int m, Int k);

/// Symmetry type of C(m, 0, k); requires 0 <= m < |k|.
SymmetryType classify_square(Int m, Int k);

/*
 * The expansion of |k|/m displayed for C(m, 0, k): the palindromic
 * parity variant when one exists (odd first), otherwise the variant ending in 1.
 * Empty for m = 0.
 */
Sequence square_display_cf(Int m, Int k);

/// (m', 0, k') with 0 <= m' < k' = sqrt(disc) in the class of f; requires a square discriminant.
Form normalize_square_class(const Form & f);

struct ClassReport {
    Form representative;
    Int delta;
    Sequence gamma;          // first-occurrence period of the representative (non-square)
    Sequence cf_k_over_m;    // displayed expansion of k/m (square)
    Int length;              // P or L
    Int t, t_up, t_down;
    SymmetryType symmetry;
    bool primitive;
    bool square;

    friend bool operator==(const ClassReport &, const ClassReport &) = default;
};

/// Full classification of the class of f (any indefinite form).
ClassReport classify_class(const Form & f);

}  // namespace surdsym
