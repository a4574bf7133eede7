#include "bellrand/randomness.hpp"

#include <algorithm>
#include <random>

#include "bellrand/mermin.hpp"

namespace bellrand {

int h_n(PartyCount n) {
    n.require_odd();
    switch (n.value() % 8) {
        case 3:
        case 5:
            return 1;
        default:
            return -1;  // n = 7 or 1 (mod 8)
    }
}

int f_bias(PartyCount n, Mask x) {
    return mermin_required_sign(x) > 0 ? h_n(n) : -1;
}

Rational prob_f_equals(const Behavior& b, Mask x, int k) {
    Rational p(0);
    const Mask na = b.outcome_count();
    for (Mask a = 0; a < na; ++a)
        if (f_value(a) == k) p += b.at(x, a);
    return p;
}

GuessProb observed_guessing_f(Mask x, const Behavior& b) {
    return observed_guessing([](Mask a) { return f_value(a); }, x, b);
}

Rational ghz_guessing_formula(PartyCount n) {
    n.require_odd();
    return Rational(1, 2) + pow2(-(n.value() + 1) / 2);
}

GuessProb intrinsic_guessing_max_violation(Mask x, const Behavior& b) {
    if (input_parity(x) != 1)
        throw NonMerminInput("input " + mask_to_bits(x, b.parties()) +
                             " does not appear in the Mermin inequality");
    ViolationCheck check = satisfies_max_violation(b);
    if (!check.ok)
        throw NotMaximallyViolating("behavior misses " + std::to_string(check.violated.size()) +
                                    " extremal correlator conditions");
    const int h = f_bias(PartyCount(b.parties()), x);
    return {prob_f_equals(b, x, h), h};
}

AuditReport audit_decomposition(const Decomposition& d, const Behavior& target,
                                const Rational& epsilon) {
    if (epsilon < 0) throw Error("epsilon must be nonnegative");
    AuditReport report{true, {}};
    auto fail = [&report](std::string msg) {
        report.ok = false;
        report.failures.push_back(std::move(msg));
    };

    const int n = target.parties();
    const Mask na = target.outcome_count();
    for (const auto& comp : d.components) {
        if (comp.behavior.parties() != n)
            throw DimensionMismatch("component '" + comp.label + "' has wrong party count");
        if (comp.weights.size() != na)
            throw DimensionMismatch("component '" + comp.label + "' is missing input weights");
    }

    // (ii) weight positivity floor, per input and component.
    for (const auto& comp : d.components) {
        for (const auto& [x, w] : comp.weights) {
            const bool bad = epsilon == 0 ? (w <= 0) : (w < epsilon);
            if (bad)
                fail("component '" + comp.label + "' has weight " + to_fraction_string(w) +
                     " at input " + mask_to_bits(x, n) + " below the positivity floor");
        }
    }

    // (i) normalization of weights and exact reconstruction of the target.
    for (Mask x = 0; x < na; ++x) {
        Rational wsum(0);
        for (const auto& comp : d.components) wsum += comp.weights.at(x);
        if (wsum != 1)
            fail("weights at input " + mask_to_bits(x, n) + " sum to " + to_fraction_string(wsum));
        for (Mask a = 0; a < na; ++a) {
            Rational p(0);
            for (const auto& comp : d.components) p += comp.weights.at(x) * comp.behavior.at(x, a);
            if (p != target.at(x, a)) {
                fail("mixture differs from target at x=" + mask_to_bits(x, n) + " a=" +
                     mask_to_bits(a, n));
                break;
            }
        }
    }

    // (iii) every effective component inherits maximal violation from the target.
    if (satisfies_max_violation(target).ok) {
        for (const auto& comp : d.components) {
            const bool effective = std::any_of(comp.weights.begin(), comp.weights.end(),
                                               [](const auto& kv) { return kv.second > 0; });
            if (!effective) continue;
            ViolationCheck check = satisfies_max_violation(comp.behavior);
            if (!check.ok)
                fail("component '" + comp.label + "' misses extremal correlator <" +
                     mask_to_bits(check.violated.front().first, n) + "> (value " +
                     to_fraction_string(check.violated.front().second) + ")");
        }
    }

    return report;
}

std::vector<Mask> sample_outcomes(const Behavior& b, Mask x, std::int64_t shots,
                                  std::uint64_t seed) {
    if (shots < 1) throw Error("shots must be >= 1");
    const Mask na = b.outcome_count();

    // Exact cumulative thresholds scaled to 2^64; deterministic given the seed and
    // biased by less than 2^-64 per outcome.
    std::vector<std::uint64_t> threshold;
    std::vector<Mask> support;
    Rational cum(0);
    const BigInt scale = pow2_int(64);
    for (Mask a = 0; a < na; ++a) {
        const Rational& p = b.at(x, a);
        if (p == 0) continue;
        cum += p;
        BigInt t = (cum.get_num() * scale) / cum.get_den();
        support.push_back(a);
        threshold.push_back(static_cast<std::uint64_t>(mpz_get_ui(t.get_mpz_t())));
        if (mpz_cmp(t.get_mpz_t(), scale.get_mpz_t()) >= 0)
            threshold.back() = ~std::uint64_t{0};
    }
    if (support.empty()) throw Error("input column has no support");
    threshold.back() = ~std::uint64_t{0};  // catch-all bucket

    std::mt19937_64 rng(seed);
    std::vector<Mask> out;
    out.reserve(static_cast<std::size_t>(shots));
    for (std::int64_t s = 0; s < shots; ++s) {
        const std::uint64_t u = rng();
        // Bucket k covers [threshold[k-1], threshold[k]).
        auto it = std::upper_bound(threshold.begin(), threshold.end(), u);
        if (it == threshold.end()) --it;  // u = 2^64-1 lands in the last bucket
        out.push_back(support[static_cast<std::size_t>(it - threshold.begin())]);
    }
    return out;
}

}  // namespace bellrand
