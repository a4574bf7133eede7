#pragma once

#include <span>
#include <vector>

#include "bellrand/behavior.hpp"

namespace bellrand {

/// Affine coordinates of the maximally violating no-signalling set.
///
/// Fixing every odd-parity full correlator at its extremal value forces, through
/// positivity, a web of equalities between the remaining correlators: under any
/// odd-parity full input x with <x> = s, the product over a subset S determines
/// the product over its complement, so <x|_S> = s * <x|_{S^c}>. Closing these
/// relations (signed union-find over all 3^n - 1 correlators) yields the affine
/// hull in which the polytope actually lives; sampling or optimizing in the raw
/// correlator coordinates would miss it entirely.
class MaxViolationSpace {
  public:
    explicit MaxViolationSpace(PartyCount n);

    int parties() const { return n_; }
    int free_count() const { return static_cast<int>(free_reps_.size()); }

    /// Value of a correlator as a function of the free coordinates.
    /// var < 0: the correlator is the constant `constant` (0 or +-1).
    /// var >= 0: the correlator equals sign * t[var].
    struct Expr {
        int var;
        int sign;
        int constant;
    };
    Expr expr(std::size_t corr_index) const { return exprs_[corr_index]; }

    /// Correlator indices of the free representatives, in index order.
    const std::vector<std::size_t>& free_correlators() const { return free_reps_; }

    /// Expand free coordinates into the full correlator vector.
    CorrelatorRep realize(std::span<const Rational> free_values) const;

    /// Read the free coordinates off a full correlator vector; throws
    /// MerminConditionsNotImposed if the vector is outside the affine hull.
    std::vector<Rational> project(const CorrelatorRep& c) const;

    /// True iff the vector satisfies every forced relation exactly.
    bool contains(const CorrelatorRep& c) const;

  private:
    int n_;
    std::vector<Expr> exprs_;
    std::vector<std::size_t> free_reps_;
};

}  // namespace bellrand
