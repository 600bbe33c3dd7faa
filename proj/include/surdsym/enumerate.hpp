#pragma once

#include <array>
#include <functional>
#include <vector>

#include "surdsym/form.hpp"
#include "surdsym/period.hpp"

namespace surdsym {

/// All forms of discriminant d with m > 0 > n, in lexicographic order.
std::vector<Form> h0_forms(Int d);

/// k > |m + n| with m > 0 > n: the H0 forms whose first root lies in (0, 1) with the second below -1.
bool is_principal(const Form & f);

/*
 * One representative per class of discriminant d (primitive or not). For a
 * non-square d it is the lexicographically least principal form of the
 * class; for d = s^2 the forms (m, 0, s), m = 0 .. s - 1.
 */
std::vector<Form> enumerate_classes(Int d);

/// The representative enumerate_classes would pick for the class of f.
Form canonical_representative(const Form & f);

enum class TableKind { Nonzero, Zero };

/// Class reports for every eligible discriminant up to delta_max, discriminant ascending.
std::vector<ClassReport> class_table(Int delta_max, TableKind which, int jobs = 1);

struct StatsRow {
    Int delta;
    bool square;
    Int total;
    std::array<Int, 5> counts;  // indexed like kAllSymmetryTypes

    Int count(SymmetryType t) const { return counts[static_cast<std::size_t>(t)]; }
    friend bool operator==(const StatsRow &, const StatsRow &) = default;
};

/// Symmetry census of every discriminant 1 <= d <= delta_max with d = 0, 1 mod 4.
std::vector<StatsRow> symmetry_stats(Int delta_max, int jobs = 1);

/*
 * Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
 * exception thrown by any call is rethrown after all threads join.
 */
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> & fn);

}  // namespace surdsym
