#include <doctest.h>

#include "bellrand/lp.hpp"
#include "bellrand/randomness.hpp"

using namespace bellrand;

TEST_CASE("one-dimensional sanity") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {Rational(1)};
    lp.constraints.push_back({{{0, Rational(3)}}, LinearConstraint::Ge, Rational(1), "3x>=1"});
    const LpSolution sol = solve_lp_exact(lp);
    REQUIRE(sol.status == simplex::Status::Optimal);
    CHECK(sol.value == Rational(1, 3));
    CHECK(sol.x[0] == Rational(1, 3));
}

TEST_CASE("maximization and redundant rows") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.maximize = true;
    lp.objective = {Rational(1), Rational(1)};
    lp.constraints.push_back({{{0, Rational(1)}}, LinearConstraint::Ge, Rational(0), "x>=0"});
    lp.constraints.push_back({{{1, Rational(1)}}, LinearConstraint::Ge, Rational(0), "y>=0"});
    lp.constraints.push_back({{{0, Rational(1)}, {1, Rational(1)}}, LinearConstraint::Eq,
                              Rational(1), "x+y=1"});
    lp.constraints.push_back({{{0, Rational(2)}, {1, Rational(2)}}, LinearConstraint::Eq,
                              Rational(2), "duplicate"});
    const LpSolution sol = solve_lp_exact(lp);
    REQUIRE(sol.status == simplex::Status::Optimal);
    CHECK(sol.value == 1);
}

TEST_CASE("infeasible program") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {Rational(1)};
    lp.constraints.push_back({{{0, Rational(1)}}, LinearConstraint::Ge, Rational(0), "x>=0"});
    lp.constraints.push_back({{{0, Rational(1)}}, LinearConstraint::Eq, Rational(-1), "x=-1"});
    CHECK(solve_lp_exact(lp).status == simplex::Status::Infeasible);
}

TEST_CASE("unbounded program") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.maximize = true;
    lp.objective = {Rational(1)};
    lp.constraints.push_back({{{0, Rational(1)}}, LinearConstraint::Ge, Rational(0), "x>=0"});
    CHECK(solve_lp_exact(lp).status == simplex::Status::Unbounded);
}

TEST_CASE("lemma-1 program shape at n=3") {
    const LinearProgram lp = build_lemma1_lp(PartyCount(3), 0b001);
    CHECK(lp.num_vars == 64);
    int nonneg = 0, norm = 0, marg = 0, mermin = 0;
    for (const auto& c : lp.constraints) {
        if (c.name.starts_with("nonneg")) ++nonneg;
        else if (c.name.starts_with("normalization")) ++norm;
        else if (c.name.starts_with("marginal")) ++marg;
        else if (c.name.starts_with("mermin")) ++mermin;
    }
    CHECK(nonneg == 64);
    CHECK(norm == 8);
    CHECK(marg == 48);  // 3 parties x 4 reduced inputs x 4 outcome groups
    CHECK(mermin == 4);
    // Objective: the 3 outcomes with n_- = 2 among product-+1 strings at x_m.
    int support = 0;
    for (std::size_t v = 0; v < lp.num_vars; ++v)
        if (lp.objective[v] != 0) {
            ++support;
            const Mask x = static_cast<Mask>(v >> 3), a = static_cast<Mask>(v & 7);
            CHECK(x == 0b001);
            CHECK(minus_count(a) == 2);
        }
    CHECK(support == 3);
    CHECK_THROWS_AS(build_lemma1_lp(PartyCount(3), 0b011), NonMerminInput);
    CHECK_THROWS_AS(build_lemma1_lp(PartyCount(4), 0b0001), EvenPartyCount);
}

TEST_CASE("constraint evaluation helpers") {
    const LinearProgram lp = build_lemma1_lp(PartyCount(3), 0b001);
    const Behavior g = ghz_behavior(PartyCount(3));
    CHECK(violated_constraints(lp, g.table()).empty());
    CHECK(eval_objective(lp, g.table()) == Rational(3, 4));
    const Behavior u = uniform_behavior(PartyCount(3));
    CHECK_FALSE(violated_constraints(lp, u.table()).empty());
    std::vector<double> xd(64);
    for (std::size_t v = 0; v < 64; ++v) xd[v] = g.table()[v].get_d();
    CHECK(max_violation(lp, xd) < 1e-12);
}
