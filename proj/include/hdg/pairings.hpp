#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hdg/group.hpp"
#include "hdg/report.hpp"
#include "hdg/simplicial.hpp"

namespace hdg {

/* Element of S(n): a monotone surjection [n] -> [n-r] encoded as the strictly
 * decreasing index tuple (i_r,...,i_1), 0 <= i_1 < ... < i_r <= n-1. The empty
 * tuple is the identity surjection. */
struct SurjTuple {
    int n = 0;
    std::vector<int> indices; /* decreasing; indices.back() is the smallest */

    SurjTuple() = default;
    SurjTuple(int n_, std::vector<int> idx) : n(n_), indices(std::move(idx)) {
        for (std::size_t t = 0; t + 1 < indices.size(); ++t)
            if (indices[t] <= indices[t + 1])
                throw Error(ErrKind::ShapeMismatch, "tuple indices must strictly decrease");
        if (!indices.empty() && (indices.back() < 0 || indices.front() > n - 1))
            throw Error(ErrKind::ShapeMismatch, "tuple index out of [0, n-1]");
    }

    std::size_t size() const { return indices.size(); }
    bool empty() const { return indices.empty(); }

    bool disjoint(const SurjTuple& other) const {
        for (int a : indices)
            for (int b : other.indices)
                if (a == b) return false;
        return true;
    }

    bool operator==(const SurjTuple& other) const {
        return n == other.n && indices == other.indices;
    }

    std::string str() const {
        if (indices.empty()) return "0";
        std::string s = "(";
        for (std::size_t t = 0; t < indices.size(); ++t) {
            if (t) s += ",";
            s += std::to_string(indices[t]);
        }
        return s + ")";
    }
};

/* The order of S(n): compare from the small end; at the first difference the
 * larger index ranks smaller, and a proper prefix ranks smaller. */
inline bool surj_less(const SurjTuple& a, const SurjTuple& b) {
    std::size_t ra = a.size(), rb = b.size();
    for (std::size_t t = 1; t <= std::min(ra, rb); ++t) {
        int ia = a.indices[ra - t];
        int ib = b.indices[rb - t];
        if (ia != ib) return ia > ib;
    }
    return ra < rb;
}

inline std::vector<SurjTuple> gen_S(int n) {
    if (n < 0) throw Error(ErrKind::ShapeMismatch, "gen_S needs n >= 0");
    std::vector<SurjTuple> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = n - 1; i >= 0; --i)
            if (mask & (1u << i)) idx.push_back(i);
        out.emplace_back(n, std::move(idx));
    }
    std::sort(out.begin(), out.end(), surj_less);
    return out;
}

/* Ordered pair indexing a Peiffer pairing: alpha and beta nonempty, disjoint
 * as index sets, beta < alpha. The empty tuple never participates: the n=3
 * and n=4 listings contain no such pair and F would degenerate. */
struct PairingIndex {
    SurjTuple alpha;
    SurjTuple beta;

    std::string str() const { return alpha.str() + beta.str(); }
    bool operator==(const PairingIndex& other) const {
        return alpha == other.alpha && beta == other.beta;
    }
};

inline std::vector<PairingIndex> gen_P(int n) {
    auto s = gen_S(n);
    std::vector<PairingIndex> out;
    for (const auto& a : s) {
        if (a.empty()) continue;
        for (const auto& b : s) {
            if (b.empty() || !surj_less(b, a) || !a.disjoint(b)) continue;
            out.push_back({a, b});
        }
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* F pairings                                                           */
/* ------------------------------------------------------------------ */

/* p = p_{n-1} o ... o p_0 with p_j(z) = z s_j(d_j z)^{-1}; projects G_n onto
 * the Moore term. */
inline Elt moore_projection(const TruncatedSimplicialGroup& t, int n, Elt z) {
    const auto& g = t.levels[n];
    Elt u = z;
    for (int j = 0; j < n; ++j) u = g->mul(u, g->inv(t.s(n - 1, j)(t.d(n, j)(u))));
    return u;
}

inline bool in_moore_term(const TruncatedSimplicialGroup& t, int n, Elt x) {
    for (int i = 0; i < n; ++i)
        if (t.d(n, i)(x) != t.levels[n - 1]->identity()) return false;
    return true;
}

/* F_{alpha,beta}(x, y) = p([s_alpha x, s_beta y]) in NG_n. */
inline Elt f_pairing(const TruncatedSimplicialGroup& t, const PairingIndex& pr, Elt x, Elt y) {
    int n = pr.alpha.n;
    if (n > t.k) throw Error(ErrKind::InsufficientTruncation, "pairing level exceeds truncation");
    int la = n - static_cast<int>(pr.alpha.size());
    int lb = n - static_cast<int>(pr.beta.size());
    if (!in_moore_term(t, la, x))
        throw Error(ErrKind::ElementNotInMoore,
                    "first argument of F_" + pr.str() + " not in NG_" + std::to_string(la));
    if (!in_moore_term(t, lb, y))
        throw Error(ErrKind::ElementNotInMoore,
                    "second argument of F_" + pr.str() + " not in NG_" + std::to_string(lb));
    const auto& g = t.levels[n];
    Elt z = g->comm(t.s_alpha(n, pr.alpha.indices, x), t.s_alpha(n, pr.beta.indices, y));
    Elt f = moore_projection(t, n, z);
    if (!in_moore_term(t, n, f))
        throw Error(ErrKind::ConstructionInconsistent,
                    "F_" + pr.str() + " left the Moore term");
    return f;
}

/* N_n: normal closure of all F_{alpha,beta} values at level n. */
inline Subgroup pairing_subgroup(const TruncatedSimplicialGroup& t, int n) {
    MooreComplex m = moore_complex(t);
    std::vector<Elt> gens;
    for (const auto& pr : gen_P(n)) {
        int la = n - static_cast<int>(pr.alpha.size());
        int lb = n - static_cast<int>(pr.beta.size());
        for (Elt x : m.terms[la].members())
            for (Elt y : m.terms[lb].members()) gens.push_back(f_pairing(t, pr, x, y));
    }
    return normal_closure(t.levels[n], gens);
}

/* ------------------------------------------------------------------ */
/* Table 1 (the 25 boundary images of the n=4 pairings)                 */
/* ------------------------------------------------------------------ */

namespace table1 {

/* One side of a commutator: argument 0 or 1, optionally pushed down one
 * level by its top face (the Moore boundary), then lifted by the s-word
 * (decreasing indices). All terms end at level 3. */
struct Term {
    int arg;
    bool bnd;
    std::vector<int> s;
};

struct Row {
    int number;
    std::vector<int> alpha, beta;
    std::vector<std::pair<Term, Term>> comms;
    const char* note; /* typo assumption exercised, when any */
};

inline const std::vector<Row>& rows() {
    static const std::vector<Row> r = {
        {1, {0}, {3, 2, 1}, {{{0, true, {0}}, {1, false, {2, 1}}},
                             {{1, false, {2, 1}}, {0, true, {1}}},
                             {{0, true, {2}}, {1, false, {2, 1}}},
                             {{1, false, {2, 1}}, {0, false, {}}}}, nullptr},
        {2, {3, 2, 0}, {1}, {{{0, false, {2, 0}}, {1, true, {1}}},
                             {{1, true, {1}}, {0, false, {2, 1}}},
                             {{0, false, {2, 1}}, {1, true, {2}}},
                             {{1, true, {2}}, {0, false, {2, 0}}},
                             {{0, false, {2, 0}}, {1, false, {}}},
                             {{1, false, {}}, {0, false, {2, 1}}}}, nullptr},
        {3, {3, 1, 0}, {2}, {{{0, false, {1, 0}}, {1, true, {2}}},
                             {{1, true, {2}}, {0, false, {2, 0}}},
                             {{0, false, {2, 0}}, {1, false, {}}},
                             {{1, false, {}}, {0, false, {1, 0}}}}, nullptr},
        {4, {2, 1, 0}, {3}, {{{0, true, {2, 1, 0}}, {1, false, {}}},
                             {{1, false, {}}, {0, false, {1, 0}}}}, nullptr},
        {5, {3, 0}, {2, 1}, {{{0, false, {0}}, {1, true, {2, 1}}},
                             {{1, true, {2, 1}}, {0, false, {1}}},
                             {{0, false, {2}}, {1, true, {2, 1}}},
                             {{1, false, {1}}, {0, false, {2}}},
                             {{0, false, {1}}, {1, false, {1}}},
                             {{1, false, {1}}, {0, false, {0}}}}, nullptr},
        {6, {2, 0}, {3, 1}, {{{0, true, {2, 0}}, {1, false, {1}}},
                             {{1, false, {1}}, {0, true, {2, 1}}},
                             {{0, true, {2, 1}}, {1, false, {2}}},
                             {{1, false, {2}}, {0, true, {2, 0}}},
                             {{0, false, {0}}, {1, false, {2}}},
                             {{1, false, {2}}, {0, false, {1}}},
                             {{0, false, {1}}, {1, false, {1}}},
                             {{1, false, {1}}, {0, false, {0}}}}, nullptr},
        {7, {1, 0}, {3, 2}, {{{0, true, {1, 0}}, {1, false, {2}}},
                             {{1, false, {2}}, {0, true, {2, 0}}},
                             {{0, false, {0}}, {1, false, {2}}}}, nullptr},
        {8, {1}, {3, 2}, {{{0, true, {1}}, {1, false, {2}}},
                          {{1, false, {2}}, {0, true, {2}}},
                          {{0, false, {}}, {1, false, {2}}}}, nullptr},
        {9, {0}, {3, 2}, {{{0, true, {0}}, {1, false, {2}}}}, nullptr},
        {10, {0}, {3, 1}, {{{0, true, {0}}, {1, false, {1}}},
                           {{1, false, {1}}, {0, true, {1}}},
                           {{0, true, {2}}, {1, false, {2}}},
                           {{1, false, {2}}, {0, false, {}}}},
         "row printed as F_(3,1)(2)(x3,x2); expression matches F_(0)(3,1)"},
        {11, {0}, {2, 1}, {{{0, true, {0}}, {1, true, {2, 1}}},
                           {{1, true, {2, 1}}, {0, true, {1}}},
                           {{0, true, {2}}, {1, true, {2, 1}}},
                           {{1, false, {1}}, {0, false, {}}}}, nullptr},
        {12, {3, 1}, {2}, {{{0, false, {1}}, {1, true, {2}}},
                           {{1, true, {2}}, {0, false, {2}}},
                           {{0, false, {2}}, {1, false, {}}},
                           {{1, false, {}}, {0, false, {1}}}},
         "undeclared symbol l in [s2 l, x3] read as the row argument x2"},
        {13, {2, 1}, {3}, {{{0, true, {2, 1}}, {1, false, {}}},
                           {{1, false, {}}, {0, false, {1}}}}, nullptr},
        {14, {3, 0}, {2}, {{{0, false, {0}}, {1, true, {2}}},
                           {{1, false, {}}, {0, false, {0}}}}, nullptr},
        {15, {3, 0}, {1}, {{{0, false, {0}}, {1, true, {1}}},
                           {{1, true, {1}}, {0, false, {1}}},
                           {{0, false, {2}}, {1, true, {2}}},
                           {{1, false, {}}, {0, false, {2}}}}, nullptr},
        {16, {2, 0}, {3}, {{{0, true, {2, 0}}, {1, false, {}}},
                           {{1, false, {}}, {0, false, {0}}}}, nullptr},
        {17, {2, 0}, {1}, {{{0, true, {2, 0}}, {1, true, {1}}},
                           {{1, true, {1}}, {0, true, {2, 1}}},
                           {{0, true, {2, 1}}, {1, true, {2}}},
                           {{1, true, {2}}, {0, true, {2, 0}}},
                           {{0, false, {0}}, {1, false, {}}},
                           {{1, false, {}}, {0, false, {1}}}}, nullptr},
        {18, {1, 0}, {3}, {{{0, true, {1, 0}}, {1, false, {}}}}, nullptr},
        {19, {1, 0}, {2}, {{{0, true, {1, 0}}, {1, true, {2}}},
                           {{1, true, {2}}, {0, true, {2, 0}}},
                           {{0, false, {0}}, {1, false, {}}}}, nullptr},
        {20, {2}, {3}, {{{0, true, {2}}, {1, false, {}}},
                        {{1, false, {}}, {0, false, {}}}}, nullptr},
        {21, {1}, {3}, {{{0, true, {1}}, {1, false, {}}}}, nullptr},
        {22, {0}, {3}, {{{0, true, {0}}, {1, false, {}}}}, nullptr},
        {23, {1}, {2}, {{{0, true, {1}}, {1, true, {2}}},
                        {{1, true, {2}}, {0, true, {2}}},
                        {{0, false, {}}, {1, false, {}}}}, nullptr},
        {24, {0}, {2}, {{{0, true, {0}}, {1, true, {2}}}}, nullptr},
        {25, {0}, {1}, {{{0, true, {0}}, {1, true, {1}}},
                        {{1, true, {1}}, {0, true, {1}}},
                        {{0, true, {2}}, {1, true, {2}}},
                        {{1, false, {}}, {0, false, {}}}}, nullptr},
    };
    return r;
}

inline Elt eval_term(const TruncatedSimplicialGroup& t, const Term& term, Elt a, int la, Elt b,
                     int lb) {
    Elt v = term.arg == 0 ? a : b;
    int lvl = term.arg == 0 ? la : lb;
    if (term.bnd) {
        v = t.d(lvl, lvl)(v);
        --lvl;
    }
    Elt out = t.s_alpha(lvl + static_cast<int>(term.s.size()), term.s, v);
    if (lvl + static_cast<int>(term.s.size()) != 3)
        throw Error(ErrKind::ShapeMismatch, "table 1 term does not land in level 3");
    return out;
}

inline Elt eval_row(const TruncatedSimplicialGroup& t, const Row& row, Elt a, Elt b) {
    int la = 4 - static_cast<int>(row.alpha.size());
    int lb = 4 - static_cast<int>(row.beta.size());
    const auto& g3 = t.levels[3];
    Elt acc = g3->identity();
    for (const auto& [ta, tb] : row.comms)
        acc = g3->mul(acc, g3->comm(eval_term(t, ta, a, la, b, lb),
                                    eval_term(t, tb, a, la, b, lb)));
    return acc;
}

}  // namespace table1

/* Checks, for a 4-truncated simplicial group with Moore length <= 3, that
 * each printed Table 1 expression is trivial for all argument tuples and
 * that it coincides with d_4(F_{alpha,beta}(...)) computed through the
 * projection pipeline. */
inline StructureReport table1_check(const TruncatedSimplicialGroup& t) {
    if (t.k < 4)
        throw Error(ErrKind::InsufficientTruncation, "table 1 lives at level 4");
    StructureReport rep;
    rep.structure = "table1";
    if (moore_length(t) > 3) {
        rep.note("moore length exceeds 3; Table 1 hypotheses not met");
        rep.fail("hypothesis moore_length<=3", {}, std::to_string(moore_length(t)), "<=3");
        return rep;
    }
    MooreComplex m = moore_complex(t);
    for (const auto& row : table1::rows()) {
        if (row.note) rep.note("row " + std::to_string(row.number) + ": " + std::string(row.note));
        int la = 4 - static_cast<int>(row.alpha.size());
        int lb = 4 - static_cast<int>(row.beta.size());
        PairingIndex pr{SurjTuple(4, row.alpha), SurjTuple(4, row.beta)};
        std::string ax_triv = "row " + std::to_string(row.number) + " trivial";
        std::string ax_dual = "row " + std::to_string(row.number) + " = d4(F_" + pr.str() + ")";
        auto& st_triv = rep.axiom(ax_triv);
        auto& st_dual = rep.axiom(ax_dual);
        for (Elt a : m.terms[la].members())
            for (Elt b : m.terms[lb].members()) {
                Elt v = table1::eval_row(t, row, a, b);
                ++st_triv.checked;
                if (v != t.levels[3]->identity())
                    rep.fail(ax_triv, {a, b}, t.levels[3]->label(v), "e");
                Elt f = f_pairing(t, pr, a, b);
                Elt dv = t.d(4, 4)(f);
                ++st_dual.checked;
                if (v != dv) rep.fail(ax_dual, {a, b}, t.levels[3]->label(v),
                                      t.levels[3]->label(dv));
            }
    }
    return rep;
}

/* ------------------------------------------------------------------ */
/* Theorem 3 boundary image check                                       */
/* ------------------------------------------------------------------ */

struct BoundaryImageReport {
    bool hypothesis_holds = false; /* G_n = D_n */
    std::size_t lhs_order = 0;     /* |d_n(NG_n)| */
    std::size_t rhs_order = 0;     /* |prod [K_I, K_J]| */
    bool equal = false;
    std::vector<std::string> notes;
};

/* d_n(NG_n) vs the product of [K_I, K_J] over (alpha,beta) in P(n), with
 * I = [n-1] minus the index set of alpha (resp. beta) and K_I the meet of
 * the corresponding face kernels one level down. */
inline BoundaryImageReport boundary_image_check(const TruncatedSimplicialGroup& t, int n) {
    if (n < 2 || n > t.k)
        throw Error(ErrKind::InsufficientTruncation, "boundary image check needs 2 <= n <= k");
    BoundaryImageReport rep;
    Subgroup dn = degenerate_subgroup(t, n);
    rep.hypothesis_holds = dn.is_whole();
    if (!rep.hypothesis_holds)
        rep.notes.push_back("HypothesisFailed: G_" + std::to_string(n) + " != D_" +
                            std::to_string(n) + " (|D|=" + std::to_string(dn.order()) + ")");

    Subgroup ng = moore_term(t, n);
    std::vector<Elt> lhs_members;
    for (Elt x : ng.members()) lhs_members.push_back(t.d(n, n)(x));
    Subgroup lhs = subgroup_closure(t.levels[n - 1], lhs_members);
    rep.lhs_order = lhs.order();

    auto kernel_meet = [&](const std::vector<int>& exclude) {
        /* K_I with I = [n-1] minus the excluded indices */
        std::vector<bool> excl(n, false);
        for (int i : exclude) excl[i] = true;
        std::vector<Elt> mem;
        const auto& g = t.levels[n - 1];
        for (Elt x = 0; x < g->order(); ++x) {
            bool in = true;
            for (int i = 0; i < n && in; ++i)
                if (!excl[i]) in = t.d(n - 1, i)(x) == t.levels[n - 2]->identity();
            if (in) mem.push_back(x);
        }
        return Subgroup(g, std::move(mem));
    };

    std::vector<Elt> gens;
    for (const auto& pr : gen_P(n)) {
        Subgroup ki = kernel_meet(pr.alpha.indices);
        Subgroup kj = kernel_meet(pr.beta.indices);
        for (Elt a : ki.members())
            for (Elt b : kj.members()) gens.push_back(t.levels[n - 1]->comm(a, b));
    }
    Subgroup rhs = subgroup_closure(t.levels[n - 1], gens);
    rep.rhs_order = rhs.order();
    rep.equal = lhs == rhs;
    return rep;
}

}  // namespace hdg
