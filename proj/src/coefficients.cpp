#include "bellrand/coefficients.hpp"

#include "bellrand/max_violation_space.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

namespace {

BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void check_index(PartyCount n, int i) {
    n.require_odd();
    if (i < 0 || i > (n.value() - 1) / 2)
        throw IndexOutOfRange("index " + std::to_string(i) + " outside 0.." +
                              std::to_string((n.value() - 1) / 2));
}

// Probability column P(.|x) evaluated linearly from a correlator vector,
// without any positivity assumption.
std::vector<Rational> column_from_correlators(const CorrelatorRep& c, Mask x) {
    const int n = c.parties();
    const Mask na = Mask{1} << n;
    const Rational scale = pow2(-n);
    std::vector<Rational> col(na);
    for (Mask a = 0; a < na; ++a) {
        Rational sum(1);
        for (Mask subset = 1; subset < na; ++subset) {
            const Rational& v = c.value(subset, x & subset);
            if (outcome_sign(a, subset) > 0)
                sum += v;
            else
                sum -= v;
        }
        col[a] = scale * sum;
    }
    return col;
}

}  // namespace

BigInt alpha_raw(PartyCount n, int i) {
    check_index(n, i);
    BigInt total(0);
    for (int r = 0; r <= i; ++r) {
        BigInt inner(0);
        for (long m = 2 - r; m <= n.value() - i; m += 4)
            if (m >= 0) inner += binom(n.value() - i, m);
        const BigInt term = binom(i, r) * inner;
        total += (r % 2 == 0) ? term : -term;
    }
    return total;
}

BigInt roots_filter(int n, int r, int a) {
    if (r < 1 || a < 0 || a >= r || n < 0) throw IndexOutOfRange("bad roots_filter arguments");
    if (r == 1) return pow2_int(n);
    if (r == 4) {
        // (1/4) [2^n + (-1)^a [n=0] + 2 Re(i^{-a} (1+i)^n)], Gaussian integers only.
        BigInt re(1), im(0);
        for (int k = 0; k < n; ++k) {
            const BigInt nre = re - im;
            im = re + im;
            re = nre;
        }
        // rotate by i^{-a}
        for (int k = 0; k < (4 - a % 4) % 4; ++k) {
            const BigInt nre = -im;
            im = re;
            re = nre;
        }
        BigInt total = pow2_int(n) + 2 * re;
        if (n == 0) total += (a % 2 == 0) ? 1 : -1;
        return total / 4;
    }
    // Exact fallback by direct summation.
    BigInt total(0);
    for (long m = a; m <= n; m += r) total += binom(n, m);
    return total;
}

BigInt alpha_primed_closed(PartyCount n, int i) {
    check_index(n, i);
    const int e = (i % 2 == 1) ? (n.value() - i) / 2 : i / 2;
    const BigInt mag = pow2_int((n.value() - 3) / 2);
    return e % 2 == 0 ? mag : -mag;
}

int beta(PartyCount n, int i) {
    check_index(n, i);
    const int e = (i % 2 == 1) ? (n.value() - i) / 2 : i / 2;
    return e % 2 == 0 ? 1 : -1;
}

Mask canonical_mermin_input(int n) { return Mask{1} << (n - 1); }

CVector c_vector(const CorrelatorRep& c, Mask x_m) {
    const int n = c.parties();
    if (input_parity(x_m) != 1)
        throw NonMerminInput("c-vector requires an odd-parity input");
    const int kmax = (n - 1) / 2;
    CVector out;
    out.entries.assign(static_cast<std::size_t>(kmax) + 1, Rational(0));
    out.entries[0] = 1;
    const Mask na = Mask{1} << n;
    for (Mask subset = 1; subset < na; ++subset) {
        const int k = std::popcount(subset);
        if (k <= kmax) out.entries[static_cast<std::size_t>(k)] += c.value(subset, x_m & subset);
    }
    return out;
}

CVector c_vector(const Behavior& b, Mask x_m) { return c_vector(to_correlators(b), x_m); }

Rational compact_identity_residual(const CorrelatorRep& c) {
    const PartyCount n(c.parties());
    MaxViolationSpace(n).project(c);  // throws off the hull
    const Mask x_m = canonical_mermin_input(n.value());
    const std::vector<Rational> col = column_from_correlators(c, x_m);

    Rational p_plus(0);
    for (Mask a = 0; a < (Mask{1} << n.value()); ++a)
        if (f_value(a) == 1) p_plus += col[a];

    Rational dot(0);
    const CVector cv = c_vector(c, x_m);
    for (int i = 0; i <= (n.value() - 1) / 2; ++i)
        dot += Rational(alpha_primed_closed(n, i)) * cv.entries[static_cast<std::size_t>(i)];

    return h_n(n) * (p_plus - Rational(1, 2)) - pow2(-(n.value() - 1)) * dot;
}

Rational swapped_positivity_identity_residual(const CorrelatorRep& c) {
    const PartyCount n(c.parties());
    MaxViolationSpace(n).project(c);
    const Mask full = (Mask{1} << n.value()) - 1;
    const Mask x_m = canonical_mermin_input(n.value());
    const Mask x_swapped = full ^ x_m;
    const std::vector<Rational> col = column_from_correlators(c, x_swapped);

    const Mask a_last_minus = x_m;          // (+,...,+,-)
    const Mask a_last_plus = full ^ x_m;    // (-,...,-,+)
    const Rational lhs = pow2(n.value() - 1) * (col[a_last_minus] + col[a_last_plus]);

    Rational rhs(0);
    const CVector cv = c_vector(c, x_m);
    for (int i = 0; i <= (n.value() - 1) / 2; ++i)
        rhs += beta(n, i) * cv.entries[static_cast<std::size_t>(i)];

    return lhs - rhs;
}

}  // namespace bellrand
