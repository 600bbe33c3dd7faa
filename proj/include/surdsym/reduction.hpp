#pragma once

#include <vector>

#include "surdsym/continued_fraction.hpp"
#include "surdsym/form.hpp"
#include "surdsym/period.hpp"

namespace surdsym {

/// m > 0, n > 0, k < 0 and m + n < |k|.
bool is_reduced(const Form & f);

struct H0Reduction {
    Form form;               // m n <= 0, in the class of the input
    GeneratorWord word;      // L, acting on involution(input, tag)
    Involution involution;   // tag of the involution L was built on
    GeneratorWord direct;    // apply_word(input, direct) == form
};

/*
 * Moves f to a form with m n <= 0. When m n > 0 the first involution in the
 * order identity, conjugate, adjoint, antipodal giving xi+ > 0 is applied,
 * the continued fraction digits of xi+ drive alternating A and B runs until
 * m n <= 0, and the involution is undone.
 */
H0Reduction reduce_to_H0(const Form & f);

struct ReducedCycle {
    std::vector<Form> forms;
    Sequence modular_period;
};

/// The reduced forms of the class of f in cycle order, with the digits c_i of h -> R A^c_i h.
ReducedCycle reduced_cycle(const Form & f);

struct ClassicalReduction {
    Form form;
    GeneratorWord word;  // runs A^b0, R, A^b1, R, ...
};

/// Reduction through the preperiod of the modular fraction; needs m > 0, n > 0, k < 0.
ClassicalReduction reduce_classical(const Form & f);

struct SumRule {
    bool holds;
    bool vacuous;  // the rule says nothing about this symmetry type
};

/// sum c_i == 3 t for supersymmetric, antisymmetric and m+n-symmetric classes.
SumRule check_sum_rule(const ReducedCycle & cycle, SymmetryType symmetry);

}  // namespace surdsym
