#pragma once

#include <vector>

#include "bellrand/behavior.hpp"

namespace bellrand {

/// Number of outcome classes with n_-(a) = 4j+2 counted against an i-party sign
/// split: alpha_i = sum_{r=0}^{i} (-1)^r C(i,r) sum_{j>=0} C(n-i, 4j+2-r).
BigInt alpha_raw(PartyCount n, int i);

/// Exact value of sum_{j>=0} C(n, rj+a) via the roots-of-unity filter.
/// For r = 4 the complex terms are reduced symbolically over Gaussian integers;
/// other r fall back to the direct binomial sum (still exact).
BigInt roots_filter(int n, int r, int a);

/// Closed form 2^{(n-3)/2} * (-1)^{(n-i)/2} (i odd) / (-1)^{i/2} (i even);
/// all signs from residue arithmetic.
BigInt alpha_primed_closed(PartyCount n, int i);

/// The +-1 sign pattern of the swapped-input inequality; matches
/// alpha_primed_closed up to the 2^{(n-3)/2} factor.
int beta(PartyCount n, int i);

/// c_k = sum over all k-party subsets of the correlator with inputs inherited
/// from the Mermin input x_m, for k = 0 .. (n-1)/2; c_0 = 1.
struct CVector {
    std::vector<Rational> entries;
};

CVector c_vector(const CorrelatorRep& c, Mask x_m);
CVector c_vector(const Behavior& b, Mask x_m);

/// Residual of h_n (P(f=+1|x_m) - 1/2) = 2^{-(n-1)} alpha' . c at the canonical
/// Mermin input x_m = (0,...,0,1); must be exactly 0 on the affine hull of the
/// maximally violating set. Throws MerminConditionsNotImposed off the hull.
Rational compact_identity_residual(const CorrelatorRep& c);

/// Residual of 2^{n-1} [P(+..+-|xbar_m) + P(-..-+|xbar_m)] = beta . c(x_m) with
/// xbar_m the bitwise complement of x_m; same preconditions as above.
Rational swapped_positivity_identity_residual(const CorrelatorRep& c);

/// Canonical Mermin input (0,...,0,1) as a mask.
Mask canonical_mermin_input(int n);

}  // namespace bellrand
