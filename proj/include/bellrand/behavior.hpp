#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bellrand/errors.hpp"
#include "bellrand/rational.hpp"

namespace bellrand {

/// Bitmask over parties. Party i lives at bit position i-1.
/// For outcome strings, bit 0 means outcome +1 and bit 1 means outcome -1.
using Mask = std::uint32_t;

inline constexpr int kMaxParties = 15;

/// Number of parties, n >= 2. Validated on construction.
class PartyCount {
  public:
    explicit PartyCount(int n) : n_(n) {
        if (n < 2 || n > kMaxParties)
            throw Error("party count must be in [2," + std::to_string(kMaxParties) +
                        "], got " + std::to_string(n));
    }
    int value() const { return n_; }
    bool odd() const { return n_ % 2 == 1; }
    void require_odd() const {
        if (!odd()) throw EvenPartyCount(n_);
    }

  private:
    int n_;
};

/// Number of -1 entries in the outcome string a.
inline int minus_count(Mask a) { return std::popcount(a); }

/// Product of outcomes over the party subset S: (-1)^{|a & S|}.
inline int outcome_sign(Mask a, Mask subset) {
    return (std::popcount(a & subset) % 2 == 0) ? 1 : -1;
}

inline int input_parity(Mask x) { return std::popcount(x) % 2; }

/// Little-endian bitstring per the fixed encoding: character k is the bit of party k+1.
std::string mask_to_bits(Mask m, int n);
Mask bits_to_mask(const std::string& bits, int n);

/// Conditional probability table P(a|x), exact rationals, dense over 2^n x 2^n.
class Behavior {
  public:
    explicit Behavior(PartyCount n);

    int parties() const { return n_; }
    Mask outcome_count() const { return Mask{1} << n_; }

    const Rational& at(Mask x, Mask a) const { return p_[index(x, a)]; }
    Rational& at(Mask x, Mask a) { return p_[index(x, a)]; }

    const std::vector<Rational>& table() const { return p_; }
    std::size_t index(Mask x, Mask a) const {
        return (static_cast<std::size_t>(x) << n_) | a;
    }

    bool is_normalized() const;
    bool is_nonnegative() const;
    /// Per-party marginal independence; equivalent to full no-signalling here.
    bool is_no_signalling() const;
    /// Throws if any of the three checks fails.
    void validate() const;

    bool operator==(const Behavior& other) const = default;

  private:
    int n_;
    std::vector<Rational> p_;
};

/// The 3^n - 1 correlators of a no-signalling behavior.
/// Index: one trit per party, 0 = party absent, 1 = present with input 0,
/// 2 = present with input 1. Index 0 is the empty subset and holds 1.
class CorrelatorRep {
  public:
    explicit CorrelatorRep(PartyCount n);

    int parties() const { return n_; }
    std::size_t size() const { return v_.size(); }

    const Rational& operator[](std::size_t idx) const { return v_[idx]; }
    Rational& operator[](std::size_t idx) { return v_[idx]; }

    /// Correlator index for party subset S (bitmask) with inputs x restricted to S.
    static std::size_t index_of(Mask subset, Mask x, int n);
    /// Inverse of index_of: (subset, inputs-on-subset).
    static std::pair<Mask, Mask> subset_of(std::size_t idx, int n);

    const Rational& value(Mask subset, Mask x) const { return v_[index_of(subset, x, n_)]; }
    Rational& value(Mask subset, Mask x) { return v_[index_of(subset, x, n_)]; }

  private:
    int n_;
    std::vector<Rational> v_;
};

std::size_t pow3(int n);

/// Correlator extraction; throws SignallingDetected if marginals disagree.
CorrelatorRep to_correlators(const Behavior& b);

/// Inverse table reconstruction; throws NegativeProbability if any entry < 0.
Behavior from_correlators(const CorrelatorRep& c);

/// Same reconstruction without the positivity check (for off-polytope linear work).
Behavior from_correlators_unchecked(const CorrelatorRep& c);

/// The unique quantum point maximally violating the odd-n Mermin inequality:
/// on odd-parity inputs with k ones, mass 2^{-(n-1)} on outcomes with
/// product (-1)^{(k-1)/2}; uniform on even-parity inputs.
Behavior ghz_behavior(PartyCount n);

/// Local deterministic point; assignment(party, input_bit) -> outcome in {+1,-1},
/// party in 1..n.
Behavior deterministic_behavior(PartyCount n, const std::function<int(int, int)>& assignment);

/// Deterministic point indexed by a strategy id: party i outputs s_i(x_i) with the
/// 2n response bits packed little-endian (bit 2(i-1)+x_i set means output -1).
Behavior deterministic_behavior_packed(PartyCount n, std::uint32_t strategy);

Behavior uniform_behavior(PartyCount n);

/// Convex combination; weights must be nonnegative and sum to 1.
Behavior mix(const std::vector<std::pair<Rational, Behavior>>& parts);

}  // namespace bellrand
