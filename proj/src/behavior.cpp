#include "bellrand/behavior.hpp"

#include <array>

namespace bellrand {

std::string mask_to_bits(Mask m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (m & (Mask{1} << i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Mask bits_to_mask(const std::string& bits, int n) {
    if (static_cast<int>(bits.size()) != n)
        throw DimensionMismatch("bitstring '" + bits + "' does not have length " +
                                std::to_string(n));
    Mask m = 0;
    for (int i = 0; i < n; ++i) {
        char c = bits[static_cast<std::size_t>(i)];
        if (c == '1')
            m |= Mask{1} << i;
        else if (c != '0')
            throw DimensionMismatch("bitstring '" + bits + "' contains '" + c + "'");
    }
    return m;
}

Behavior::Behavior(PartyCount n)
    : n_(n.value()), p_(std::size_t{1} << (2 * n.value()), Rational(0)) {}

bool Behavior::is_normalized() const {
    const Mask na = outcome_count();
    for (Mask x = 0; x < na; ++x) {
        Rational sum(0);
        for (Mask a = 0; a < na; ++a) sum += at(x, a);
        if (sum != 1) return false;
    }
    return true;
}

bool Behavior::is_nonnegative() const {
    for (const Rational& v : p_)
        if (v < 0) return false;
    return true;
}

bool Behavior::is_no_signalling() const {
    // For each party i: the marginal over the other parties must not depend on x_i.
    // The single-party conditions imply all subset conditions.
    const Mask na = outcome_count();
    for (int i = 0; i < n_; ++i) {
        const Mask xi = Mask{1} << i;
        for (Mask x = 0; x < na; ++x) {
            if (x & xi) continue;
            for (Mask rest = 0; rest < na; ++rest) {
                if (rest & xi) continue;
                Rational m0 = at(x, rest) + at(x, rest | xi);
                Rational m1 = at(x | xi, rest) + at(x | xi, rest | xi);
                if (m0 != m1) return false;
            }
        }
    }
    return true;
}

void Behavior::validate() const {
    if (!is_nonnegative()) throw NegativeProbability("behavior has a negative entry");
    if (!is_normalized()) throw Error("behavior is not normalized");
    if (!is_no_signalling()) throw SignallingDetected("behavior violates no-signalling");
}

std::size_t pow3(int n) {
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

CorrelatorRep::CorrelatorRep(PartyCount n)
    : n_(n.value()), v_(pow3(n.value()), Rational(0)) {
    v_[0] = 1;
}

std::size_t CorrelatorRep::index_of(Mask subset, Mask x, int n) {
    std::size_t idx = 0, base = 1;
    for (int i = 0; i < n; ++i) {
        const Mask bit = Mask{1} << i;
        if (subset & bit) idx += base * ((x & bit) ? 2 : 1);
        base *= 3;
    }
    return idx;
}

std::pair<Mask, Mask> CorrelatorRep::subset_of(std::size_t idx, int n) {
    Mask subset = 0, x = 0;
    for (int i = 0; i < n; ++i) {
        const int trit = static_cast<int>(idx % 3);
        idx /= 3;
        if (trit != 0) {
            subset |= Mask{1} << i;
            if (trit == 2) x |= Mask{1} << i;
        }
    }
    return {subset, x};
}

CorrelatorRep to_correlators(const Behavior& b) {
    if (!b.is_no_signalling())
        throw SignallingDetected("cannot extract correlators from a signalling table");
    const int n = b.parties();
    const Mask na = b.outcome_count();
    CorrelatorRep c((PartyCount(n)));
    for (std::size_t idx = 1; idx < c.size(); ++idx) {
        auto [subset, xs] = CorrelatorRep::subset_of(idx, n);
        // Complete the input with zeros outside the subset; no-signalling makes the
        // completion irrelevant.
        Rational sum(0);
        for (Mask a = 0; a < na; ++a) {
            const Rational& p = b.at(xs, a);
            if (outcome_sign(a, subset) > 0)
                sum += p;
            else
                sum -= p;
        }
        c[idx] = sum;
    }
    return c;
}

Behavior from_correlators_unchecked(const CorrelatorRep& c) {
    const int n = c.parties();
    Behavior b((PartyCount(n)));
    const Mask na = b.outcome_count();
    const Rational scale = pow2(-n);
    for (Mask x = 0; x < na; ++x) {
        for (Mask a = 0; a < na; ++a) {
            Rational sum(1);
            for (Mask subset = 1; subset < na; ++subset) {
                const Rational& v = c.value(subset, x & subset);
                if (outcome_sign(a, subset) > 0)
                    sum += v;
                else
                    sum -= v;
            }
            b.at(x, a) = scale * sum;
        }
    }
    return b;
}

Behavior from_correlators(const CorrelatorRep& c) {
    Behavior b = from_correlators_unchecked(c);
    if (!b.is_nonnegative())
        throw NegativeProbability("correlator vector lies outside the no-signalling polytope");
    return b;
}

Behavior ghz_behavior(PartyCount n) {
    n.require_odd();
    if (n.value() < 3) throw Error("ghz_behavior requires n >= 3");
    Behavior b(n);
    const Mask na = b.outcome_count();
    const Rational even_mass = pow2(-n.value());
    const Rational odd_mass = pow2(-(n.value() - 1));
    for (Mask x = 0; x < na; ++x) {
        const int k = std::popcount(x);
        if (k % 2 == 0) {
            for (Mask a = 0; a < na; ++a) b.at(x, a) = even_mass;
        } else {
            const int target = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
            for (Mask a = 0; a < na; ++a)
                if (outcome_sign(a, na - 1) == target) b.at(x, a) = odd_mass;
        }
    }
    return b;
}

Behavior deterministic_behavior(PartyCount n, const std::function<int(int, int)>& assignment) {
    Behavior b(n);
    const Mask na = b.outcome_count();
    for (Mask x = 0; x < na; ++x) {
        Mask a = 0;
        for (int i = 1; i <= n.value(); ++i) {
            const int out = assignment(i, (x >> (i - 1)) & 1);
            if (out != 1 && out != -1) throw Error("deterministic assignment must return +1 or -1");
            if (out == -1) a |= Mask{1} << (i - 1);
        }
        b.at(x, a) = 1;
    }
    return b;
}

Behavior deterministic_behavior_packed(PartyCount n, std::uint32_t strategy) {
    return deterministic_behavior(n, [strategy](int party, int input) {
        return (strategy >> (2 * (party - 1) + input)) & 1 ? -1 : 1;
    });
}

Behavior uniform_behavior(PartyCount n) {
    Behavior b(n);
    const Mask na = b.outcome_count();
    const Rational mass = pow2(-n.value());
    for (Mask x = 0; x < na; ++x)
        for (Mask a = 0; a < na; ++a) b.at(x, a) = mass;
    return b;
}

Behavior mix(const std::vector<std::pair<Rational, Behavior>>& parts) {
    if (parts.empty()) throw WeightSumMismatch("mix of zero components");
    const int n = parts.front().second.parties();
    Rational total(0);
    for (const auto& [w, comp] : parts) {
        if (comp.parties() != n) throw DimensionMismatch("mix components differ in party count");
        if (w < 0) throw WeightSumMismatch("negative mixing weight");
        total += w;
    }
    if (total != 1) throw WeightSumMismatch("mixing weights sum to " + to_fraction_string(total));
    Behavior out((PartyCount(n)));
    const Mask na = out.outcome_count();
    for (Mask x = 0; x < na; ++x)
        for (Mask a = 0; a < na; ++a) {
            Rational v(0);
            for (const auto& [w, comp] : parts) v += w * comp.at(x, a);
            out.at(x, a) = v;
        }
    return out;
}

}  // namespace bellrand
