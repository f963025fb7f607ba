// Brute-force verification side of the DMT formulas: each outage event is
// posed as a minimization of the sum of fading exponents over the region of
// exponent space where the event occurs, and solved by exhaustive search on
// a lattice.  No closed-form knowledge enters the solver.
#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "icr/types.hpp"

namespace icr {

// One outage inequality after high-SNR reduction: the listed exponents
// jointly exceed a threshold, sum_{v in vars} theta_v >= threshold.
// Thresholds <= 0 are vacuous (the inequality always holds).
struct OutageAtom {
    std::vector<int> vars;  // indices into ExponentProgram::var_names
    double threshold = 0.0;
};

// Conjunction of atoms.  The outage region of a program is the union of its
// clauses; every clause region is upward closed in theta.
struct OutageClause {
    std::vector<OutageAtom> atoms;
};

struct ExponentProgram {
    std::vector<std::string> var_names;
    std::vector<int> objective;         // vars whose sum is minimized
    std::vector<OutageClause> clauses;  // outage region in disjunctive form
    double theta_max = 6.0;             // per-variable search cap

    int dimension() const { return static_cast<int>(var_names.size()); }

    // Outage predicate: true iff theta lies in the union of the clauses.
    bool feasible(std::span<const double> theta) const;
};

struct OracleResult {
    bool feasible = false;  // false marks an empty region (diversity = +inf)
    double min_value = std::numeric_limits<double>::infinity();
    std::vector<double> argmin;
    double grid_step = 0.0;
};

// Minimizes the objective over the feasible lattice points of
// {0, step, 2*step, ...}^n up to theta_max.  The search walks the lattice
// clause by clause with per-variable binding values and a running best bound;
// for the monotone regions built here this returns exactly the lattice
// minimum an exhaustive sweep would find.  Ties are resolved toward the
// lexicographically greatest argmin read in declaration order reversed, so
// mass settles on the earliest-declared variables.
//
// Throws StepInvalid unless 0 < step <= 0.1 and DimensionTooLarge for more
// than 5 variables.
OracleResult solve_grid(const ExponentProgram& program, double step);

}  // namespace icr
