#include "bellrand/lp.hpp"

#include <cmath>

#include "bellrand/mermin.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

LinearProgram build_lemma1_lp(PartyCount n, Mask x_target, bool drop_mermin) {
    n.require_odd();
    if (input_parity(x_target) != 1)
        throw NonMerminInput("objective input " + mask_to_bits(x_target, n.value()) +
                             " does not appear in the Mermin inequality");
    const int parties = n.value();
    const Mask na = Mask{1} << parties;

    LinearProgram lp;
    lp.n = parties;
    lp.num_vars = static_cast<std::size_t>(na) * na;
    lp.objective.assign(lp.num_vars, Rational(0));

    auto var = [parties](Mask x, Mask a) {
        return (static_cast<std::size_t>(x) << parties) | a;
    };

    const int h = f_bias(n, x_target);
    for (Mask a = 0; a < na; ++a)
        if (f_value(a) == h) lp.objective[var(x_target, a)] = 1;

    for (std::size_t v = 0; v < lp.num_vars; ++v)
        lp.constraints.push_back({{{v, Rational(1)}}, LinearConstraint::Ge, Rational(0),
                                  "nonneg[" + std::to_string(v) + "]"});

    for (Mask x = 0; x < na; ++x) {
        LinearConstraint c{{}, LinearConstraint::Eq, Rational(1),
                           "normalization[" + mask_to_bits(x, parties) + "]"};
        for (Mask a = 0; a < na; ++a) c.terms.emplace_back(var(x, a), Rational(1));
        lp.constraints.push_back(std::move(c));
    }

    for (int i = 0; i < parties; ++i) {
        const Mask xi = Mask{1} << i;
        for (Mask x = 0; x < na; ++x) {
            if (x & xi) continue;
            for (Mask rest = 0; rest < na; ++rest) {
                if (rest & xi) continue;
                LinearConstraint c{{}, LinearConstraint::Eq, Rational(0),
                                   "marginal[p" + std::to_string(i + 1) + ",x=" +
                                       mask_to_bits(x, parties) + ",a=" +
                                       mask_to_bits(rest, parties) + "]"};
                c.terms.emplace_back(var(x, rest), Rational(1));
                c.terms.emplace_back(var(x, rest | xi), Rational(1));
                c.terms.emplace_back(var(x | xi, rest), Rational(-1));
                c.terms.emplace_back(var(x | xi, rest | xi), Rational(-1));
                lp.constraints.push_back(std::move(c));
            }
        }
    }

    if (!drop_mermin) {
        for (Mask x = 0; x < na; ++x) {
            if (input_parity(x) != 1) continue;
            LinearConstraint c{{}, LinearConstraint::Eq, Rational(mermin_required_sign(x)),
                               "mermin[" + mask_to_bits(x, parties) + "]"};
            for (Mask a = 0; a < na; ++a)
                c.terms.emplace_back(var(x, a), Rational(outcome_sign(a, na - 1)));
            lp.constraints.push_back(std::move(c));
        }
    }
    return lp;
}

LpSolution solve_lp_exact(const LinearProgram& lp) {
    // Absorb plain nonnegativity rows as sign restrictions.
    std::vector<bool> nonneg(lp.num_vars, false);
    std::vector<const LinearConstraint*> rows;
    for (const LinearConstraint& c : lp.constraints) {
        if (c.rel == LinearConstraint::Ge && c.terms.size() == 1 && c.rhs == 0 &&
            c.terms[0].second > 0) {
            nonneg[c.terms[0].first] = true;
        } else {
            rows.push_back(&c);
        }
    }

    // Column layout: nonneg vars get one column, free vars a split pair;
    // each Ge row gets a surplus column.
    std::vector<std::size_t> col_of(lp.num_vars);
    std::size_t ncols = 0;
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
        col_of[v] = ncols;
        ncols += nonneg[v] ? 1 : 2;
    }
    std::size_t surplus_base = ncols;
    for (const LinearConstraint* c : rows)
        if (c->rel == LinearConstraint::Ge) ++ncols;

    const std::size_t m = rows.size();
    std::vector<Rational> a(m * ncols, Rational(0));
    std::vector<Rational> b(m);
    std::vector<Rational> c_vec(ncols, Rational(0));
    std::size_t next_surplus = surplus_base;
    for (std::size_t i = 0; i < m; ++i) {
        const LinearConstraint& row = *rows[i];
        for (const auto& [v, coeff] : row.terms) {
            a[i * ncols + col_of[v]] += coeff;
            if (!nonneg[v]) a[i * ncols + col_of[v] + 1] -= coeff;
        }
        if (row.rel == LinearConstraint::Ge) a[i * ncols + next_surplus++] = -1;
        b[i] = row.rhs;
    }
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
        const Rational& coeff = lp.objective[v];
        if (coeff == 0) continue;
        c_vec[col_of[v]] += lp.maximize ? -coeff : coeff;
        if (!nonneg[v]) c_vec[col_of[v] + 1] -= lp.maximize ? -coeff : coeff;
    }

    auto res = simplex::solve_standard<Rational>(m, ncols, std::move(a), std::move(b), c_vec);
    LpSolution sol;
    sol.status = res.status;
    if (res.status != simplex::Status::Optimal) return sol;
    sol.value = lp.maximize ? Rational(-res.objective) : res.objective;
    sol.x.assign(lp.num_vars, Rational(0));
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
        sol.x[v] = res.x[col_of[v]];
        if (!nonneg[v]) sol.x[v] -= res.x[col_of[v] + 1];
    }
    return sol;
}

std::vector<std::string> violated_constraints(const LinearProgram& lp,
                                              const std::vector<Rational>& x) {
    std::vector<std::string> bad;
    for (const LinearConstraint& c : lp.constraints) {
        Rational lhs(0);
        for (const auto& [v, coeff] : c.terms) lhs += coeff * x[v];
        const bool ok = c.rel == LinearConstraint::Eq ? lhs == c.rhs : lhs >= c.rhs;
        if (!ok) bad.push_back(c.name);
    }
    return bad;
}

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
    double worst = 0;
    for (const LinearConstraint& c : lp.constraints) {
        double lhs = 0;
        for (const auto& [v, coeff] : c.terms) lhs += coeff.get_d() * x[v];
        const double rhs = c.rhs.get_d();
        const double viol = c.rel == LinearConstraint::Eq ? std::abs(lhs - rhs) : rhs - lhs;
        if (viol > worst) worst = viol;
    }
    return worst;
}

Rational eval_objective(const LinearProgram& lp, const std::vector<Rational>& x) {
    Rational v(0);
    for (std::size_t i = 0; i < lp.num_vars; ++i)
        if (lp.objective[i] != 0) v += lp.objective[i] * x[i];
    return v;
}

}  // namespace bellrand
