#include "bellrand/mermin.hpp"

namespace bellrand {

MerminExpansion expand_mermin(PartyCount n) {
    // Coefficients of Im and Re of prod_j (A_j^{(0)} + i A_j^{(1)}): the base
    // pair sums to CHSH on inputs (00,01,10,11) with signs (+,+,+,-), and each
    // extension appends party k via
    //   M_k = M_{k-1} A_k^{(0)} + E_{k-1} A_k^{(1)}
    //   E_k = E_{k-1} A_k^{(0)} - M_{k-1} A_k^{(1)}
    // which keeps M on odd-parity input strings with coefficients
    // (-1)^{(sum x - 1)/2}. This is the swap-partner recursion resolved in
    // closed form; at n = 3 it reproduces <001>+<010>+<100>-<111> exactly.
    std::map<Mask, Rational> m{{0b10, 1}, {0b01, 1}};   // odd part of CHSH
    std::map<Mask, Rational> e{{0b00, 1}, {0b11, -1}};  // even part of CHSH
    for (int k = 3; k <= n.value(); ++k) {
        const Mask hi = Mask{1} << (k - 1);
        std::map<Mask, Rational> next_m, next_e;
        for (const auto& [x, c] : m) {
            next_m[x] += c;       // A_k^{(0)}
            next_e[x | hi] -= c;  // A_k^{(1)}
        }
        for (const auto& [x, c] : e) {
            next_e[x] += c;
            next_m[x | hi] += c;
        }
        std::erase_if(next_m, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(next_e, [](const auto& kv) { return kv.second == 0; });
        m = std::move(next_m);
        e = std::move(next_e);
    }
    if (n.value() % 2 == 0)
        for (const auto& [x, c] : e) m[x] += c;  // even n: CHSH-style sum of both parts
    return MerminExpansion{n.value(), std::move(m)};
}

Rational full_correlator(const Behavior& b, Mask x) {
    const Mask na = b.outcome_count();
    Rational sum(0);
    for (Mask a = 0; a < na; ++a) {
        const Rational& p = b.at(x, a);
        if (outcome_sign(a, na - 1) > 0)
            sum += p;
        else
            sum -= p;
    }
    return sum;
}

Rational mermin_value(const Behavior& b) {
    MerminExpansion e = expand_mermin(PartyCount(b.parties()));
    Rational total(0);
    for (const auto& [x, c] : e.coeffs) total += c * full_correlator(b, x);
    return total;
}

Rational algebraic_max(PartyCount n) {
    n.require_odd();
    return pow2(n.value() - 1);
}

int mermin_required_sign(Mask x) {
    const int k = std::popcount(x);
    if (k % 2 == 0) throw NonMerminInput("input " + std::to_string(x) + " has even parity");
    return ((k - 1) / 2) % 2 == 0 ? 1 : -1;
}

MerminConstraintSet max_violation_constraints(PartyCount n) {
    n.require_odd();
    MerminConstraintSet out{n.value(), {}};
    const Mask na = Mask{1} << n.value();
    for (Mask x = 0; x < na; ++x)
        if (input_parity(x) == 1) out.required[x] = mermin_required_sign(x);
    return out;
}

ViolationCheck satisfies_max_violation(const Behavior& b) {
    MerminConstraintSet cs = max_violation_constraints(PartyCount(b.parties()));
    ViolationCheck result{true, {}};
    for (const auto& [x, sign] : cs.required) {
        Rational v = full_correlator(b, x);
        if (v != sign) {
            result.ok = false;
            result.violated.emplace_back(x, v);
        }
    }
    return result;
}

}  // namespace bellrand
