#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "surdsym/form.hpp"
#include "surdsym/period.hpp"

namespace surdsym {

/// The orbit did not stabilise within the allowed bound doublings.
class InconclusiveError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/*
 * Breadth-first orbit of f under A, B, R, A^-1, B^-1 (in that order),
 * restricted to forms with all coefficients at most coeff_bound in absolute
 * value. f itself must lie inside the bound.
 */
std::vector<Form> orbit_bfs(const Form & f, Int coeff_bound);

struct H0Cycle {
    std::vector<Form> forms;  // starting with the input
    GeneratorWord word;       // one full turn, applied in order
};

/// Walks the H0 cycle through f: A while xi+ > 1, otherwise B.
H0Cycle h0_cycle_walk(const Form & f);

/// Default orbit bound: 4 * disc.
Int default_bound(const Form & f);

/*
 * Symmetry type read off from which of conjugate, adjoint and antipodal of f
 * fall in the orbit of f. The orbit is taken at coeff_bound and at twice
 * that; the answers must agree, otherwise the bound is doubled (at most
 * three times) before InconclusiveError is thrown.
 */
SymmetryType verify_symmetry(const Form & f, Int coeff_bound);

struct DomainTally {
    std::map<DomainLabel, Int> by_domain;
    Int count(DomainLabel d) const;
};

/// Orbit members tallied by domain, with the same stability rule as verify_symmetry.
DomainTally verify_counts(const Form & f, Int coeff_bound);

}  // namespace surdsym
