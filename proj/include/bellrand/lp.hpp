#pragma once

#include <string>
#include <vector>

#include "bellrand/behavior.hpp"
#include "bellrand/simplex.hpp"

namespace bellrand {

/// Linear program over the probability-table variables P(a|x), indexed (x << n) | a.
struct LinearConstraint {
    enum Rel { Eq, Ge };
    std::vector<std::pair<std::size_t, Rational>> terms;
    Rel rel;
    Rational rhs;
    std::string name;
};

struct LinearProgram {
    int n = 0;
    std::size_t num_vars = 0;
    std::vector<Rational> objective;
    bool maximize = false;
    std::vector<LinearConstraint> constraints;
};

/// Feasible set: nonnegativity, per-input normalization, no-signalling marginal
/// equalities, and (unless dropped) the extremal Mermin correlator equalities.
/// Objective: P(f(a) = h_n | x_target).
LinearProgram build_lemma1_lp(PartyCount n, Mask x_target, bool drop_mermin = false);

struct LpSolution {
    simplex::Status status;
    Rational value;
    std::vector<Rational> x;
};

/// Generic exact solve of a LinearProgram; single-variable rows "x_i >= 0" are
/// absorbed as sign restrictions, everything else goes through the two-phase
/// simplex with Bland's rule.
LpSolution solve_lp_exact(const LinearProgram& lp);

/// Exact evaluation of all constraints at a candidate table; returns the names
/// of violated constraints (empty means feasible).
std::vector<std::string> violated_constraints(const LinearProgram& lp,
                                              const std::vector<Rational>& x);

/// Worst absolute violation over all constraints, as a double (for float mode).
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

Rational eval_objective(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace bellrand
