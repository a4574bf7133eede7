#pragma once

#include <map>
#include <vector>

#include "bellrand/behavior.hpp"

namespace bellrand {

/// Coefficients of the Mermin operator M_n on full-correlator input strings.
/// For odd n only odd-parity strings carry weight and every coefficient is +-1.
struct MerminExpansion {
    int n;
    std::map<Mask, Rational> coeffs;  // zero coefficients are omitted
};

/// Symbolic recursion M_n = (M_{n-1}(A+B) + M'_{n-1}(A-B))/2 with M' the
/// input-swapped expansion and CHSH base (+00 +01 +10 -11).
MerminExpansion expand_mermin(PartyCount n);

/// Full n-point correlator <x> of a behavior.
Rational full_correlator(const Behavior& b, Mask x);

/// Sum_x coeff(x) * <x>_b; affine in b.
Rational mermin_value(const Behavior& b);

/// 2^{n-1}: one extremal unit per odd-parity input string.
Rational algebraic_max(PartyCount n);

/// Required extremal value (-1)^{(sum x_i - 1)/2} for each odd-parity input.
struct MerminConstraintSet {
    int n;
    std::map<Mask, int> required;
};

MerminConstraintSet max_violation_constraints(PartyCount n);

/// Sign forced on the full correlator <x> by maximal violation; x must have odd parity.
int mermin_required_sign(Mask x);

struct ViolationCheck {
    bool ok;
    std::vector<std::pair<Mask, Rational>> violated;  // (input, actual correlator)
};

ViolationCheck satisfies_max_violation(const Behavior& b);

}  // namespace bellrand
