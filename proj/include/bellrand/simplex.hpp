#pragma once

#include <cstddef>
#include <vector>

#include "bellrand/errors.hpp"
#include "bellrand/rational.hpp"

namespace bellrand::simplex {

enum class Status { Optimal, Infeasible, Unbounded };

template <typename S>
struct Result {
    Status status;
    S objective;
    std::vector<S> x;     // structural variables
    std::vector<S> dual;  // row multipliers, indexed by original row
};

enum class PivotRule {
    Bland,    // least index everywhere; cycle-free
    Dantzig,  // most negative reduced cost, Bland fallback after stalling
};

template <typename S>
struct Tolerance {
    static S eps() { return S(0); }
};

template <>
struct Tolerance<double> {
    static double eps() { return 1e-9; }
};

/// Primal simplex on the standard form min c.x s.t. A x = b, x >= 0.
/// A is row-major m x n. Artificial variables are managed internally; redundant
/// rows are dropped (their multipliers are reported as zero).
template <typename S>
Result<S> solve_standard(std::size_t m, std::size_t n, std::vector<S> a, std::vector<S> b,
                         const std::vector<S>& c, PivotRule rule = PivotRule::Bland) {
    const S eps = Tolerance<S>::eps();
    const std::size_t cols = n + m;  // structural + artificial
    const std::size_t width = cols + 1;

    // Tableau rows: [structural | artificial | rhs]
    std::vector<S> t(m * width, S(0));
    std::vector<std::size_t> basis(m);
    std::vector<std::size_t> orig_row(m);
    std::vector<bool> flipped(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < S(0);
        flipped[i] = flip;
        for (std::size_t j = 0; j < n; ++j) t[i * width + j] = flip ? -a[i * n + j] : a[i * n + j];
        t[i * width + n + i] = S(1);
        t[i * width + cols] = flip ? -b[i] : b[i];
        basis[i] = n + i;
        orig_row[i] = i;
    }

    std::size_t rows = m;
    std::vector<S> red(cols, S(0));
    S z(0);

    auto recompute_costs = [&](const std::vector<S>& cost) {
        for (std::size_t j = 0; j < cols; ++j) red[j] = j < cost.size() ? cost[j] : S(0);
        z = S(0);
        for (std::size_t i = 0; i < rows; ++i) {
            const S cb = basis[i] < cost.size() ? cost[basis[i]] : S(0);
            if (cb == S(0)) continue;
            for (std::size_t j = 0; j < cols; ++j) red[j] -= cb * t[i * width + j];
            z += cb * t[i * width + cols];
        }
    };

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const S pv = t[pr * width + pc];
        for (std::size_t j = 0; j <= cols; ++j) t[pr * width + j] /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const S f = t[i * width + pc];
            if (f == S(0)) continue;
            for (std::size_t j = 0; j <= cols; ++j) t[i * width + j] -= f * t[pr * width + j];
        }
        const S f = red[pc];
        if (f != S(0)) {
            for (std::size_t j = 0; j < cols; ++j) red[j] -= f * t[pr * width + j];
            z += f * t[pr * width + cols];
        }
        basis[pr] = pc;
    };

    // Ties go to the largest pivot element (keeps degenerate bases moving and
    // the arithmetic stable); under Bland they go to the least basis index.
    auto ratio_row = [&](std::size_t pc, bool bland) -> std::ptrdiff_t {
        std::ptrdiff_t best = -1;
        S best_ratio(0);
        for (std::size_t i = 0; i < rows; ++i) {
            const S& den = t[i * width + pc];
            if (!(den > eps)) continue;
            S ratio = t[i * width + cols] / den;
            if (best >= 0 && ratio == best_ratio) {
                const std::size_t b = static_cast<std::size_t>(best);
                const bool better = bland ? basis[i] < basis[b]
                                          : den > t[b * width + pc];
                if (!better) continue;
            } else if (best >= 0 && !(ratio < best_ratio)) {
                continue;
            }
            best = static_cast<std::ptrdiff_t>(i);
            best_ratio = ratio;
        }
        return best;
    };

    // With exact arithmetic a long degenerate streak means a possible cycle, so
    // fall back to Bland quickly; with floats cycling is essentially impossible
    // and Bland crawls, so only bail out after a very long stall.
    const long stall_limit = eps == S(0) ? 64 : static_cast<long>(16 * (m + n));

    auto run = [&](bool allow_artificial) -> Status {
        long degenerate_streak = 0;
        while (true) {
            const std::size_t limit = allow_artificial ? cols : n;
            std::ptrdiff_t enter = -1;
            const bool use_bland = rule == PivotRule::Bland || degenerate_streak > stall_limit;
            if (use_bland) {
                for (std::size_t j = 0; j < limit; ++j)
                    if (red[j] < -eps) {
                        enter = static_cast<std::ptrdiff_t>(j);
                        break;
                    }
            } else {
                S best(0);
                for (std::size_t j = 0; j < limit; ++j)
                    if (red[j] < best) {
                        best = red[j];
                        enter = static_cast<std::ptrdiff_t>(j);
                    }
                if (enter >= 0 && !(red[static_cast<std::size_t>(enter)] < -eps)) enter = -1;
            }
            if (enter < 0) return Status::Optimal;
            const std::ptrdiff_t leave = ratio_row(static_cast<std::size_t>(enter), use_bland);
            if (leave < 0) return Status::Unbounded;
            const bool degenerate =
                !(t[static_cast<std::size_t>(leave) * width + cols] > eps);
            degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    };

    // Phase 1: minimize the artificial sum.
    {
        std::vector<S> phase1(cols, S(0));
        for (std::size_t j = n; j < cols; ++j) phase1[j] = S(1);
        recompute_costs(phase1);
        run(true);
        if (z > eps) return {Status::Infeasible, z, {}, {}};
    }

    // Drive leftover artificials out of the basis; rows that cannot pivot are
    // redundant and get removed.
    for (std::size_t i = 0; i < rows;) {
        if (basis[i] < n) {
            ++i;
            continue;
        }
        std::ptrdiff_t pc = -1;
        for (std::size_t j = 0; j < n; ++j) {
            const S& v = t[i * width + j];
            if (v > eps || v < -eps) {
                pc = static_cast<std::ptrdiff_t>(j);
                break;
            }
        }
        if (pc >= 0) {
            pivot(i, static_cast<std::size_t>(pc));
            ++i;
        } else {
            const std::size_t last = rows - 1;
            if (i != last) {
                for (std::size_t j = 0; j <= cols; ++j)
                    t[i * width + j] = t[last * width + j];
                basis[i] = basis[last];
                orig_row[i] = orig_row[last];
            }
            --rows;
        }
    }

    // Phase 2.
    std::vector<S> cost(cols, S(0));
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    recompute_costs(cost);
    const Status st = run(false);
    if (st == Status::Unbounded) return {Status::Unbounded, S(0), {}, {}};

    Result<S> res;
    res.status = Status::Optimal;
    res.objective = z;
    res.x.assign(n, S(0));
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i * width + cols];
    // Row multipliers: pi = c_B B^{-1}, read through the artificial columns.
    res.dual.assign(m, S(0));
    for (std::size_t i = 0; i < rows; ++i) {
        const S cb = cost[basis[i]];
        if (cb == S(0)) continue;
        for (std::size_t k = 0; k < m; ++k) res.dual[k] += cb * t[i * width + n + k];
    }
    // Artificial column k tracks the possibly sign-flipped row k.
    for (std::size_t k = 0; k < m; ++k)
        if (flipped[k]) res.dual[k] = -res.dual[k];
    return res;
}

}  // namespace bellrand::simplex
