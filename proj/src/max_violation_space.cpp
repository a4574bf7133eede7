#include "bellrand/max_violation_space.hpp"

#include "bellrand/mermin.hpp"

namespace bellrand {

namespace {

// Union-find with a relative sign on each link and a per-class pinned constant.
struct SignedUnionFind {
    std::vector<int> parent;
    std::vector<int> sign;       // sign of node relative to its parent
    std::vector<int> pinned;     // root only: 0 = unpinned, else the class constant
    std::vector<bool> has_pin;   // root only
    std::vector<bool> zero;      // root only: class collapsed to 0 by a sign conflict

    explicit SignedUnionFind(std::size_t n)
        : parent(n), sign(n, 1), pinned(n, 0), has_pin(n, false), zero(n, false) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }

    // Returns (root, sign of node relative to root).
    std::pair<int, int> find(int v) {
        if (parent[v] == v) return {v, 1};
        auto [root, s] = find(parent[v]);
        parent[v] = root;
        sign[v] *= s;
        return {root, sign[v]};
    }

    void pin(int v, int value) {
        auto [root, s] = find(v);
        const int c = s * value;
        if (has_pin[root] && pinned[root] != c) zero[root] = true;
        has_pin[root] = true;
        pinned[root] = c;
    }

    // Assert a = rel * b.
    void relate(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) {
            if (sa != rel * sb) zero[ra] = true;
            return;
        }
        // a = sa * ra, b = sb * rb, a = rel*b  =>  ra = sa*rel*sb * rb
        parent[ra] = rb;
        sign[ra] = sa * rel * sb;
        if (zero[ra]) zero[rb] = true;
        if (has_pin[ra]) {
            const int c = sign[ra] * pinned[ra];
            if (has_pin[rb] && pinned[rb] != c) zero[rb] = true;
            has_pin[rb] = true;
            pinned[rb] = c;
        }
    }
};

}  // namespace

MaxViolationSpace::MaxViolationSpace(PartyCount n) : n_(n.value()) {
    n.require_odd();
    const std::size_t total = pow3(n_);
    const Mask full = (Mask{1} << n_) - 1;
    SignedUnionFind uf(total);

    for (Mask x = 0; x <= full; ++x) {
        if (input_parity(x) != 1) continue;
        const int s = mermin_required_sign(x);
        uf.pin(static_cast<int>(CorrelatorRep::index_of(full, x, n_)), s);
        // <x|_S> = s * <x|_{S^c}> for every proper nonempty subset.
        for (Mask sub = 1; sub < full; ++sub) {
            const Mask comp = full & ~sub;
            if (sub > comp) continue;  // each pair once
            uf.relate(static_cast<int>(CorrelatorRep::index_of(sub, x & sub, n_)),
                      static_cast<int>(CorrelatorRep::index_of(comp, x & comp, n_)), s);
        }
    }

    exprs_.assign(total, Expr{-1, 1, 0});
    std::vector<int> var_of_root(total, -1);
    std::vector<int> rep_sign(total, 1);  // sign of the representative w.r.t. its root
    for (std::size_t idx = 1; idx < total; ++idx) {
        auto [root, s] = uf.find(static_cast<int>(idx));
        if (uf.zero[root]) {
            exprs_[idx] = Expr{-1, 1, 0};
        } else if (uf.has_pin[root]) {
            exprs_[idx] = Expr{-1, 1, s * uf.pinned[root]};
        } else {
            if (var_of_root[root] < 0) {
                var_of_root[root] = static_cast<int>(free_reps_.size());
                rep_sign[root] = s;
                free_reps_.push_back(idx);
            }
            // Coordinates are the representatives' values, so signs are
            // expressed relative to the representative, not the root.
            exprs_[idx] = Expr{var_of_root[root], s * rep_sign[root], 0};
        }
    }
}

CorrelatorRep MaxViolationSpace::realize(std::span<const Rational> free_values) const {
    if (static_cast<int>(free_values.size()) != free_count())
        throw DimensionMismatch("expected " + std::to_string(free_count()) +
                                " free coordinates, got " + std::to_string(free_values.size()));
    CorrelatorRep c((PartyCount(n_)));
    for (std::size_t idx = 1; idx < c.size(); ++idx) {
        const Expr& e = exprs_[idx];
        if (e.var < 0)
            c[idx] = e.constant;
        else
            c[idx] = e.sign * free_values[static_cast<std::size_t>(e.var)];
    }
    return c;
}

std::vector<Rational> MaxViolationSpace::project(const CorrelatorRep& c) const {
    if (c.parties() != n_) throw DimensionMismatch("party count mismatch in project");
    std::vector<Rational> t(static_cast<std::size_t>(free_count()));
    for (std::size_t j = 0; j < free_reps_.size(); ++j) t[j] = c[free_reps_[j]];
    for (std::size_t idx = 1; idx < c.size(); ++idx) {
        const Expr& e = exprs_[idx];
        const Rational expected =
            e.var < 0 ? Rational(e.constant) : Rational(e.sign * t[static_cast<std::size_t>(e.var)]);
        if (c[idx] != expected)
            throw MerminConditionsNotImposed(
                "correlator " + std::to_string(idx) +
                " breaks a relation forced by maximal Mermin violation");
    }
    return t;
}

bool MaxViolationSpace::contains(const CorrelatorRep& c) const {
    try {
        project(c);
        return true;
    } catch (const MerminConditionsNotImposed&) {
        return false;
    }
}

}  // namespace bellrand
