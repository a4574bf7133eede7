#include "bellrand/certify.hpp"

#include <cmath>

#include "bellrand/max_violation_space.hpp"
#include "bellrand/mermin.hpp"
#include "bellrand/randomness.hpp"

namespace bellrand {

namespace {

Behavior behavior_from_table(int n, const std::vector<Rational>& x) {
    Behavior b((PartyCount(n)));
    const Mask na = b.outcome_count();
    for (Mask in = 0; in < na; ++in)
        for (Mask out = 0; out < na; ++out) b.at(in, out) = x[b.index(in, out)];
    return b;
}

// Correlator-index -> affine expression in the reduced coordinates.
struct ReducedSpace {
    int n;
    int free_count;
    std::vector<MaxViolationSpace::Expr> exprs;

    CorrelatorRep realize(const std::vector<Rational>& t) const {
        CorrelatorRep c((PartyCount(n)));
        for (std::size_t idx = 1; idx < c.size(); ++idx) {
            const auto& e = exprs[idx];
            c[idx] = e.var < 0 ? Rational(e.constant)
                               : Rational(e.sign * t[static_cast<std::size_t>(e.var)]);
        }
        return c;
    }
};

ReducedSpace make_space(PartyCount n, bool drop_mermin) {
    ReducedSpace rs;
    rs.n = n.value();
    const std::size_t total = pow3(n.value());
    rs.exprs.assign(total, {-1, 1, 0});
    if (drop_mermin) {
        // Full correlator space: every correlator is its own coordinate.
        rs.free_count = static_cast<int>(total - 1);
        for (std::size_t idx = 1; idx < total; ++idx)
            rs.exprs[idx] = {static_cast<int>(idx - 1), 1, 0};
    } else {
        MaxViolationSpace space(n);
        rs.free_count = space.free_count();
        for (std::size_t idx = 1; idx < total; ++idx) rs.exprs[idx] = space.expr(idx);
    }
    return rs;
}

// Rows of the positivity system 2^n P(a|x) = const + coeff . t >= 0.
struct ReducedRows {
    std::size_t nrows;
    int nvars;
    std::vector<long> constant;     // per row
    std::vector<long> coeff;        // row-major nrows x nvars
    std::vector<long> obj_coeff;    // objective in the same (scaled) coordinates
    long obj_constant;
};

ReducedRows build_rows(const ReducedSpace& rs, Mask x_target, int h) {
    const int n = rs.n;
    const Mask na = Mask{1} << n;
    ReducedRows rr;
    rr.nrows = static_cast<std::size_t>(na) * na;
    rr.nvars = rs.free_count;
    rr.constant.assign(rr.nrows, 1);
    rr.coeff.assign(rr.nrows * static_cast<std::size_t>(rr.nvars), 0);
    rr.obj_coeff.assign(static_cast<std::size_t>(rr.nvars), 0);
    rr.obj_constant = 0;

    for (Mask x = 0; x < na; ++x) {
        for (Mask a = 0; a < na; ++a) {
            const std::size_t row = (static_cast<std::size_t>(x) << n) | a;
            long* rowc = &rr.coeff[row * static_cast<std::size_t>(rr.nvars)];
            for (Mask subset = 1; subset < na; ++subset) {
                const auto& e = rs.exprs[CorrelatorRep::index_of(subset, x & subset, n)];
                const int s = outcome_sign(a, subset);
                if (e.var < 0)
                    rr.constant[row] += s * e.constant;
                else
                    rowc[e.var] += s * e.sign;
            }
            if (x == x_target && f_value(a) == h) {
                rr.obj_constant += rr.constant[row];
                for (int j = 0; j < rr.nvars; ++j) rr.obj_coeff[static_cast<std::size_t>(j)] += rowc[j];
            }
        }
    }
    return rr;
}

// Solves min 2^{-n} (C0 + C.t) over {t : G t + const >= 0} through the dual
// max -const.y s.t. G^T y = C, y >= 0, recovering t from the row multipliers.
template <typename S>
std::pair<S, std::vector<S>> solve_reduced(const ReducedRows& rr, int n,
                                           simplex::PivotRule rule) {
    const std::size_t m = static_cast<std::size_t>(rr.nvars);
    const std::size_t cols = rr.nrows;
    std::vector<S> a(m * cols, S(0));
    for (std::size_t row = 0; row < cols; ++row)
        for (std::size_t j = 0; j < m; ++j)
            a[j * cols + row] = S(static_cast<int>(rr.coeff[row * m + j]));
    std::vector<S> b(m);
    for (std::size_t j = 0; j < m; ++j) b[j] = S(static_cast<int>(rr.obj_coeff[j]));
    std::vector<S> c(cols);
    for (std::size_t row = 0; row < cols; ++row)
        c[row] = S(static_cast<int>(rr.constant[row]));

    auto res = simplex::solve_standard<S>(m, cols, std::move(a), std::move(b), c, rule);
    if (res.status == simplex::Status::Infeasible)
        throw InfeasibleProgram("dual system infeasible; the primal is unbounded");
    if (res.status == simplex::Status::Unbounded)
        throw InfeasibleProgram("dual unbounded; the primal is infeasible");

    // Optimal value: 2^{-n} (C0 - min const.y); witness t = -pi.
    S scale = S(1);
    for (int k = 0; k < n; ++k) scale /= S(2);
    const S value = scale * (S(static_cast<int>(rr.obj_constant)) - res.objective);
    std::vector<S> t(m);
    for (std::size_t j = 0; j < m; ++j) t[j] = -res.dual[j];
    return {value, std::move(t)};
}

std::vector<Rational> table_vector(const Behavior& b) {
    return b.table();
}

}  // namespace

Certificate solve_exact(const LinearProgram& lp) {
    LpSolution sol = solve_lp_exact(lp);
    Certificate cert;
    cert.mode = CertMode::Exact;
    if (sol.status != simplex::Status::Optimal) {
        if (sol.status == simplex::Status::Unbounded)
            throw InfeasibleProgram("unbounded program; the feasible set should be compact");
        cert.status = CertStatus::Infeasible;
        return cert;
    }
    cert.status = CertStatus::Optimal;
    cert.value = sol.value;
    if (lp.n > 0 && lp.num_vars == (std::size_t{1} << (2 * lp.n)))
        cert.witness = behavior_from_table(lp.n, sol.x);
    return cert;
}

Certificate solve_float(const LinearProgram& lp, double tolerance) {
    if (tolerance <= 0) throw Error("tolerance must be positive");
    // Same conversion as the exact path, in double arithmetic.
    std::vector<bool> nonneg(lp.num_vars, false);
    std::vector<const LinearConstraint*> rows;
    for (const LinearConstraint& c : lp.constraints) {
        if (c.rel == LinearConstraint::Ge && c.terms.size() == 1 && c.rhs == 0 &&
            c.terms[0].second > 0)
            nonneg[c.terms[0].first] = true;
        else
            rows.push_back(&c);
    }
    std::vector<std::size_t> col_of(lp.num_vars);
    std::size_t ncols = 0;
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
        col_of[v] = ncols;
        ncols += nonneg[v] ? 1 : 2;
    }
    std::size_t surplus = ncols;
    for (const LinearConstraint* c : rows)
        if (c->rel == LinearConstraint::Ge) ++ncols;
    const std::size_t m = rows.size();
    std::vector<double> a(m * ncols, 0), b(m), cv(ncols, 0);
    std::size_t next = surplus;
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [v, coeff] : rows[i]->terms) {
            a[i * ncols + col_of[v]] += coeff.get_d();
            if (!nonneg[v]) a[i * ncols + col_of[v] + 1] -= coeff.get_d();
        }
        if (rows[i]->rel == LinearConstraint::Ge) a[i * ncols + next++] = -1;
        b[i] = rows[i]->rhs.get_d();
    }
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
        double coeff = lp.objective[v].get_d();
        if (lp.maximize) coeff = -coeff;
        cv[col_of[v]] += coeff;
        if (!nonneg[v]) cv[col_of[v] + 1] -= coeff;
    }
    auto res = simplex::solve_standard<double>(m, ncols, std::move(a), std::move(b), cv,
                                               simplex::PivotRule::Dantzig);
    Certificate cert;
    cert.mode = CertMode::Float;
    cert.tolerance = tolerance;
    if (res.status != simplex::Status::Optimal) {
        cert.status = CertStatus::Infeasible;
        return cert;
    }
    std::vector<double> x(lp.num_vars, 0);
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
        x[v] = res.x[col_of[v]];
        if (!nonneg[v]) x[v] -= res.x[col_of[v] + 1];
    }
    const double resid = max_violation(lp, x);
    if (resid > tolerance)
        throw NumericallyUnstable("primal residual " + std::to_string(resid) +
                                  " exceeds tolerance");
    cert.status = CertStatus::Optimal;
    cert.value = Rational(lp.maximize ? -res.objective : res.objective);
    if (lp.n > 0 && lp.num_vars == (std::size_t{1} << (2 * lp.n))) {
        std::vector<Rational> xr(lp.num_vars);
        for (std::size_t v = 0; v < lp.num_vars; ++v) xr[v] = Rational(x[v]);
        cert.witness = behavior_from_table(lp.n, xr);
    }
    return cert;
}

Certificate certify_lemma1_input(PartyCount n, Mask x_target, CertMode mode, double tolerance,
                                 bool drop_mermin) {
    n.require_odd();
    if (input_parity(x_target) != 1)
        throw NonMerminInput("certification target must be a Mermin input");
    const ReducedSpace rs = make_space(n, drop_mermin);
    const ReducedRows rr = build_rows(rs, x_target, f_bias(n, x_target));

    Certificate cert;
    cert.mode = mode;
    cert.tolerance = mode == CertMode::Float ? tolerance : 0;
    cert.status = CertStatus::Optimal;

    if (mode == CertMode::Exact) {
        auto [value, t] = solve_reduced<Rational>(rr, n.value(), simplex::PivotRule::Bland);
        cert.value = value;
        Behavior witness = from_correlators(rs.realize(t));
        // Soundness guard: the witness must satisfy the full table-space program
        // and reproduce the optimal value exactly.
        LinearProgram lp = build_lemma1_lp(n, x_target, drop_mermin);
        const std::vector<Rational> table = table_vector(witness);
        if (!violated_constraints(lp, table).empty())
            throw Error("exact witness violates the table-space constraints");
        if (eval_objective(lp, table) != value)
            throw Error("exact witness does not attain the reported optimum");
        cert.witness = std::move(witness);
    } else {
        if (tolerance <= 0) throw Error("tolerance must be positive");
        auto [value, t] = solve_reduced<double>(rr, n.value(), simplex::PivotRule::Dantzig);
        cert.value = Rational(value);
        std::vector<Rational> tr(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) tr[j] = Rational(t[j]);
        Behavior witness = from_correlators_unchecked(rs.realize(tr));
        double worst = 0;
        const Mask na = witness.outcome_count();
        for (Mask x = 0; x < na; ++x)
            for (Mask a = 0; a < na; ++a) {
                const double p = witness.at(x, a).get_d();
                if (p < -worst) worst = -p;  // only negativity can appear here
            }
        if (worst > tolerance)
            throw NumericallyUnstable("float witness negativity " + std::to_string(worst) +
                                      " exceeds tolerance");
        cert.witness = std::move(witness);
    }
    return cert;
}

namespace {

// Party relabeling sending the set bits of `from` onto the set bits of `to`
// (and unset onto unset), as a bit-position map.
std::vector<int> bit_map(Mask from, Mask to, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    int seen_set = 0, seen_clear = 0;
    std::vector<int> set_to, clear_to;
    for (int j = 0; j < n; ++j) ((to >> j) & 1 ? set_to : clear_to).push_back(j);
    for (int j = 0; j < n; ++j)
        perm[static_cast<std::size_t>(j)] =
            (from >> j) & 1 ? set_to[static_cast<std::size_t>(seen_set++)]
                            : clear_to[static_cast<std::size_t>(seen_clear++)];
    return perm;
}

Mask apply_map(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (std::size_t j = 0; j < perm.size(); ++j)
        if ((m >> j) & 1) out |= Mask{1} << perm[j];
    return out;
}

// B'(a|x) = B(p(a)|p(x)): feasible whenever B is, since the constraint set and
// f are invariant under party relabeling.
Behavior permute_parties(const Behavior& b, const std::vector<int>& perm) {
    Behavior out((PartyCount(b.parties())));
    const Mask na = b.outcome_count();
    for (Mask x = 0; x < na; ++x)
        for (Mask a = 0; a < na; ++a) out.at(x, a) = b.at(apply_map(x, perm), apply_map(a, perm));
    return out;
}

}  // namespace

CertifyResult certify_lemma1(PartyCount n, CertMode mode, double tolerance, bool drop_mermin) {
    n.require_odd();
    CertifyResult result;
    result.bound_holds = true;
    const Mask na = Mask{1} << n.value();
    const Rational half(1, 2);
    // One program per orbit of the party-permutation symmetry: the constraint
    // set depends on inputs only through popcounts and f is symmetric, so the
    // optimum at x equals the optimum at any reordering of x. Witnesses for
    // the remaining inputs are the relabeled representative witnesses.
    std::map<int, Mask> representative;
    for (Mask x = 0; x < na; ++x) {
        if (input_parity(x) != 1) continue;
        const int k = minus_count(x);
        Certificate cert;
        const auto rep = representative.find(k);
        if (rep == representative.end()) {
            cert = certify_lemma1_input(n, x, mode, tolerance, drop_mermin);
            representative.emplace(k, x);
        } else {
            const Certificate& base = result.certificates.at(rep->second);
            cert.status = base.status;
            cert.value = base.value;
            cert.mode = base.mode;
            cert.tolerance = base.tolerance;
            cert.derived_from = rep->second;
            if (base.witness) {
                cert.witness = permute_parties(*base.witness, bit_map(x, rep->second, n.value()));
                if (mode == CertMode::Exact &&
                    prob_f_equals(*cert.witness, x, f_bias(n, x)) != cert.value)
                    throw Error("relabeled witness does not attain the class optimum");
            }
        }
        const bool ok = mode == CertMode::Exact
                            ? cert.value >= half
                            : cert.value.get_d() >= 0.5 - tolerance;
        if (!ok) result.bound_holds = false;
        result.certificates.emplace(x, std::move(cert));
    }
    return result;
}

}  // namespace bellrand
