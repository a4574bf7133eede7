#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bellrand/behavior.hpp"

namespace bellrand {

/// Parity bit of the outcome string: +1 iff the number of -1 results is 2 mod 4.
inline int f_value(Mask a) { return minus_count(a) % 4 == 2 ? 1 : -1; }

/// Sign toward which f is biased on maximally violating distributions,
/// sqrt(2)*cos(pi(n+4)/4) evaluated by residue: +1 for n = 3,5 (mod 8),
/// -1 for n = 7,1 (mod 8).
int h_n(PartyCount n);

/// Value of f favored at Mermin input x by every maximally violating behavior.
/// When the forced full correlator at x is +1 the support has an even number of
/// -1 results and the majority value of f there is h_n; when it is -1 the
/// support has an odd number and f is identically -1.
int f_bias(PartyCount n, Mask x);

struct GuessProb {
    Rational value;
    int argmax_outcome;  // guessed value of f; ties report +1
};

/// P_b(f(a) = k | x) for k in {+1,-1}.
Rational prob_f_equals(const Behavior& b, Mask x, int k);

/// Optimal guessing probability of a +-1 valued outcome function g under input x.
template <typename G>
GuessProb observed_guessing(G&& g, Mask x, const Behavior& b) {
    Rational p_plus(0);
    const Mask na = b.outcome_count();
    for (Mask a = 0; a < na; ++a)
        if (g(a) == 1) p_plus += b.at(x, a);
    const Rational p_minus = 1 - p_plus;
    if (p_plus >= p_minus) return {p_plus, 1};
    return {p_minus, -1};
}

GuessProb observed_guessing_f(Mask x, const Behavior& b);

/// Closed form 1/2 + 2^{-(n+1)/2} for the GHZ point.
Rational ghz_guessing_formula(PartyCount n);

/// P_b(f(a) = h_n | x) for maximally violating b and Mermin input x; equals the
/// observed guessing probability there. Throws NotMaximallyViolating /
/// NonMerminInput when the premise is absent.
GuessProb intrinsic_guessing_max_violation(Mask x, const Behavior& b);

/// Convex decomposition of a behavior with input-dependent weights.
struct Decomposition {
    struct Component {
        std::string label;
        std::map<Mask, Rational> weights;  // p(e|x) per input
        Behavior behavior;
    };
    std::vector<Component> components;
};

struct AuditReport {
    bool ok;
    std::vector<std::string> failures;
};

/// Checks (i) the mixture reproduces `target` exactly, (ii) p(e|x) >= epsilon
/// for every component and input (strict positivity when epsilon is 0), and
/// (iii) when the target maximally violates the Mermin inequality every
/// component with nonzero weight does too.
AuditReport audit_decomposition(const Decomposition& d, const Behavior& target,
                                const Rational& epsilon);

/// Seed-reproducible i.i.d. draws from P(.|x).
std::vector<Mask> sample_outcomes(const Behavior& b, Mask x, std::int64_t shots,
                                  std::uint64_t seed);

}  // namespace bellrand
