#include <doctest.h>

#include <random>

#include "bellrand/mermin.hpp"
#include "test_util.hpp"

using namespace bellrand;

TEST_CASE("chsh base case") {
    const MerminExpansion e = expand_mermin(PartyCount(2));
    REQUIRE(e.coeffs.size() == 4);
    CHECK(e.coeffs.at(0b00) == 1);
    CHECK(e.coeffs.at(0b01) == 1);
    CHECK(e.coeffs.at(0b10) == 1);
    CHECK(e.coeffs.at(0b11) == -1);
}

TEST_CASE("tripartite expansion") {
    // <001> + <010> + <100> - <111>, party i at bit i-1.
    const MerminExpansion e = expand_mermin(PartyCount(3));
    REQUIRE(e.coeffs.size() == 4);
    CHECK(e.coeffs.at(0b100) == 1);
    CHECK(e.coeffs.at(0b010) == 1);
    CHECK(e.coeffs.at(0b001) == 1);
    CHECK(e.coeffs.at(0b111) == -1);
}

TEST_CASE("five-party spot coefficients") {
    const MerminExpansion e = expand_mermin(PartyCount(5));
    REQUIRE(e.coeffs.size() == 16);
    CHECK(e.coeffs.at(bits_to_mask("00001", 5)) == 1);
    CHECK(e.coeffs.at(bits_to_mask("00111", 5)) == -1);
    CHECK(e.coeffs.at(bits_to_mask("11111", 5)) == 1);
}

TEST_CASE("odd-n coefficients follow the parity formula") {
    for (int n = 3; n <= 11; n += 2) {
        const MerminExpansion e = expand_mermin(PartyCount(n));
        CHECK(e.coeffs.size() == (std::size_t{1} << (n - 1)));
        for (const auto& [x, c] : e.coeffs) {
            CHECK(input_parity(x) == 1);
            CHECK(c == mermin_required_sign(x));
        }
    }
}

TEST_CASE("ghz attains the algebraic maximum") {
    for (int n : {3, 5, 7}) {
        const PartyCount pc(n);
        CHECK(mermin_value(ghz_behavior(pc)) == algebraic_max(pc));
        CHECK(algebraic_max(pc) == pow2(n - 1));
    }
}

TEST_CASE("local deterministic bound is 2 at n=3") {
    Rational best(-100);
    for (std::uint32_t s = 0; s < (1u << 6); ++s) {
        const Rational v = mermin_value(deterministic_behavior_packed(PartyCount(3), s));
        if (v > best) best = v;
    }
    CHECK(best == 2);
}

TEST_CASE("mermin value is affine") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> strat(0, (1u << 6) - 1);
    const Behavior a = deterministic_behavior_packed(PartyCount(3), strat(rng));
    const Behavior b = deterministic_behavior_packed(PartyCount(3), strat(rng));
    const Behavior m = mix({{Rational(1, 4), a}, {Rational(3, 4), b}});
    CHECK(mermin_value(m) == Rational(1, 4) * mermin_value(a) + Rational(3, 4) * mermin_value(b));
}

TEST_CASE("required signs") {
    CHECK(mermin_required_sign(0b00001) == 1);
    CHECK(mermin_required_sign(0b00111) == -1);
    CHECK(mermin_required_sign(0b11111) == 1);
    CHECK(mermin_required_sign(0b1111111) == -1);
    CHECK_THROWS_AS(mermin_required_sign(0b0011), NonMerminInput);
    const MerminConstraintSet cs = max_violation_constraints(PartyCount(5));
    CHECK(cs.required.size() == 16);
    for (const auto& [x, s] : cs.required) CHECK(s == mermin_required_sign(x));
}

TEST_CASE("max violation check") {
    CHECK(satisfies_max_violation(ghz_behavior(PartyCount(5))).ok);
    const ViolationCheck vc = satisfies_max_violation(uniform_behavior(PartyCount(3)));
    CHECK_FALSE(vc.ok);
    CHECK(vc.violated.size() == 4);  // all odd-parity correlators are 0, not +-1
    for (const auto& [x, v] : vc.violated) CHECK(v == 0);
}
