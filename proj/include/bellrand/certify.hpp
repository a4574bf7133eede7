#pragma once

#include <map>
#include <optional>

#include "bellrand/lp.hpp"

namespace bellrand {

enum class CertStatus { Optimal, Infeasible };
enum class CertMode { Exact, Float };

struct Certificate {
    CertStatus status = CertStatus::Infeasible;
    Rational value;
    std::optional<Behavior> witness;
    CertMode mode = CertMode::Exact;
    double tolerance = 0;
    // Set when the certificate was derived by party relabeling from the LP
    // solved at this representative input rather than by a fresh solve.
    std::optional<Mask> derived_from;
};

/// Generic exact solve; the witness is attached when the program is shaped like
/// a probability table (num_vars = 4^n).
Certificate solve_exact(const LinearProgram& lp);

/// Floating-point solve with a primal feasibility residual check; throws
/// NumericallyUnstable when the witness residuals exceed the tolerance.
Certificate solve_float(const LinearProgram& lp, double tolerance);

struct CertifyResult {
    std::map<Mask, Certificate> certificates;
    bool bound_holds = false;  // every optimal value >= 1/2 (minus tolerance in Float mode)
};

/// Lemma-1 certification: minimizes P(f(a)=h_n|x) over the maximally violating
/// no-signalling polytope for every odd-parity input x. The solver works in the
/// correlator coordinates of the polytope's affine hull (an exact change of
/// variables from the table-space program) and every witness is re-checked
/// against the full table-space constraint set.
CertifyResult certify_lemma1(PartyCount n, CertMode mode, double tolerance = 1e-9,
                             bool drop_mermin = false);

/// Single-input version of the above.
Certificate certify_lemma1_input(PartyCount n, Mask x_target, CertMode mode,
                                 double tolerance = 1e-9, bool drop_mermin = false);

}  // namespace bellrand
