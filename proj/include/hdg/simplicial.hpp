#pragma once

#include <string>
#include <vector>

#include "hdg/group.hpp"
#include "hdg/report.hpp"

namespace hdg {

/* A k-truncated simplicial group: levels G_0..G_k, faces d_i^n : G_n -> G_{n-1}
 * (1 <= n <= k, 0 <= i <= n) and degeneracies s_i^n : G_n -> G_{n+1}
 * (0 <= n < k, 0 <= i <= n). The degeneracy index range is the standard one;
 * the source text prints "0 <= i <= n" for maps out of G_{n-1}, which does not
 * typecheck, so s_i^n here always raises one level with 0 <= i <= n. */
struct TruncatedSimplicialGroup {
    int k = 0;
    std::vector<GroupPtr> levels;                   /* size k+1 */
    std::vector<std::vector<Homomorphism>> faces;   /* faces[n-1][i] = d_i^n   */
    std::vector<std::vector<Homomorphism>> degens;  /* degens[n][i] = s_i^n    */

    const GroupPtr& level(int n) const { return levels.at(n); }
    const Homomorphism& d(int n, int i) const { return faces.at(n - 1).at(i); }
    const Homomorphism& s(int n, int i) const { return degens.at(n).at(i); }

    /* s_alpha = s_{i_r} ... s_{i_1} applied to x in G_{n - r}, alpha strictly
     * decreasing; returns the image in G_n. */
    Elt s_alpha(int n, const std::vector<int>& alpha, Elt x) const {
        int lvl = n - static_cast<int>(alpha.size());
        Elt v = x;
        for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
            v = s(lvl, *it)(v);
            ++lvl;
        }
        return v;
    }
};

inline void require_shapes(const TruncatedSimplicialGroup& t) {
    if (t.k < 0 || t.levels.size() != static_cast<std::size_t>(t.k) + 1)
        throw Error(ErrKind::ShapeMismatch, "levels size != k+1");
    if (t.faces.size() != static_cast<std::size_t>(t.k))
        throw Error(ErrKind::ShapeMismatch, "faces size != k");
    if (t.degens.size() != static_cast<std::size_t>(t.k))
        throw Error(ErrKind::ShapeMismatch, "degeneracies size != k");
    for (int n = 1; n <= t.k; ++n) {
        if (t.faces[n - 1].size() != static_cast<std::size_t>(n) + 1)
            throw Error(ErrKind::ShapeMismatch, "level " + std::to_string(n) + " needs " +
                                                    std::to_string(n + 1) + " faces");
        for (int i = 0; i <= n; ++i) {
            const auto& f = t.d(n, i);
            if (f.domain() != t.levels[n] || f.codomain() != t.levels[n - 1])
                throw Error(ErrKind::ShapeMismatch,
                            "d_" + std::to_string(i) + "^" + std::to_string(n) + " has wrong ends");
        }
    }
    for (int n = 0; n < t.k; ++n) {
        if (t.degens[n].size() != static_cast<std::size_t>(n) + 1)
            throw Error(ErrKind::ShapeMismatch, "level " + std::to_string(n) + " needs " +
                                                    std::to_string(n + 1) + " degeneracies");
        for (int i = 0; i <= n; ++i) {
            const auto& f = t.s(n, i);
            if (f.domain() != t.levels[n] || f.codomain() != t.levels[n + 1])
                throw Error(ErrKind::ShapeMismatch,
                            "s_" + std::to_string(i) + "^" + std::to_string(n) + " has wrong ends");
        }
    }
}

/* Verifies homomorphism property of every structure map and all simplicial
 * identities elementwise. Witness args are (level, i, j, element). */
inline StructureReport check_simplicial(const TruncatedSimplicialGroup& t) {
    require_shapes(t);
    StructureReport rep;
    rep.structure = "simplicial(k=" + std::to_string(t.k) + ")";

    /* exhaustive up to the materialization cap; seeded sample above it (the
     * oversized levels are structured products whose maps are slot
     * projections, the sample is a smoke check) */
    auto check_hom = [&](const Homomorphism& f, const std::string& name, int n, int i) {
        auto& st = rep.axiom("maps are homomorphisms");
        ++st.checked;
        const auto& dom = *f.domain();
        const auto& cod = *f.codomain();
        auto fail = [&](Elt a, Elt b) {
            rep.fail("maps are homomorphisms", {static_cast<Elt>(n), static_cast<Elt>(i), a, b},
                     name, "f(xy) != f(x)f(y)");
        };
        if (f(dom.identity()) != cod.identity()) {
            rep.fail("maps are homomorphisms", {static_cast<Elt>(n), static_cast<Elt>(i)}, name,
                     "identity not preserved");
            return;
        }
        if (dom.order() <= kDefaultOrderCap) {
            for (Elt a = 0; a < dom.order(); ++a)
                for (Elt b = 0; b < dom.order(); ++b)
                    if (f(dom.mul(a, b)) != cod.mul(f(a), f(b))) {
                        fail(a, b);
                        return;
                    }
        } else {
            std::mt19937_64 rng(0x5bd1e995u ^ dom.order());
            std::uniform_int_distribution<Elt> d(0, static_cast<Elt>(dom.order() - 1));
            for (std::uint64_t s = 0; s < (1u << 20); ++s) {
                Elt a = d(rng), b = d(rng);
                if (f(dom.mul(a, b)) != cod.mul(f(a), f(b))) {
                    fail(a, b);
                    return;
                }
            }
        }
    };
    for (int n = 1; n <= t.k; ++n)
        for (int i = 0; i <= n; ++i)
            check_hom(t.d(n, i), "d_" + std::to_string(i) + "^" + std::to_string(n), n, i);
    for (int n = 0; n < t.k; ++n)
        for (int i = 0; i <= n; ++i)
            check_hom(t.s(n, i), "s_" + std::to_string(i) + "^" + std::to_string(n), n, i);

    auto scan = [&](const std::string& name, int n, int i, int j, const Homomorphism& lhs1,
                    const Homomorphism& lhs2, const Homomorphism& rhs1, const Homomorphism& rhs2) {
        /* compares lhs1(lhs2(x)) with rhs1(rhs2(x)) */
        auto& st = rep.axiom(name);
        const auto& dom = lhs2.domain();
        for (Elt x = 0; x < dom->order(); ++x) {
            ++st.checked;
            Elt l = lhs1(lhs2(x));
            Elt r = rhs1(rhs2(x));
            if (l != r)
                rep.fail(name, {static_cast<Elt>(n), static_cast<Elt>(i), static_cast<Elt>(j), x},
                         lhs1.codomain()->label(l), rhs1.codomain()->label(r));
        }
    };
    auto scan_id = [&](const std::string& name, int n, int i, int j, const Homomorphism& out,
                       const Homomorphism& in) {
        auto& st = rep.axiom(name);
        const auto& dom = in.domain();
        for (Elt x = 0; x < dom->order(); ++x) {
            ++st.checked;
            Elt l = out(in(x));
            if (l != x)
                rep.fail(name, {static_cast<Elt>(n), static_cast<Elt>(i), static_cast<Elt>(j), x},
                         dom->label(l), dom->label(x));
        }
    };

    /* d_i d_j = d_{j-1} d_i (i < j) on G_n, n >= 2 */
    for (int n = 2; n <= t.k; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                scan("d_i d_j = d_{j-1} d_i", n, i, j, t.d(n - 1, i), t.d(n, j), t.d(n - 1, j - 1),
                     t.d(n, i));
    /* d_i s_j = s_{j-1} d_i (i < j) on G_n, n >= 1 */
    for (int n = 1; n < t.k; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                scan("d_i s_j = s_{j-1} d_i", n, i, j, t.d(n + 1, i), t.s(n, j), t.s(n - 1, j - 1),
                     t.d(n, i));
    /* d_j s_j = id = d_{j+1} s_j on G_n */
    for (int n = 0; n < t.k; ++n)
        for (int j = 0; j <= n; ++j) {
            scan_id("d_j s_j = id", n, j, j, t.d(n + 1, j), t.s(n, j));
            scan_id("d_{j+1} s_j = id", n, j + 1, j, t.d(n + 1, j + 1), t.s(n, j));
        }
    /* d_i s_j = s_j d_{i-1} (i > j+1) on G_n, n >= 1 */
    for (int n = 1; n < t.k; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = j + 2; i <= n + 1; ++i)
                scan("d_i s_j = s_j d_{i-1}", n, i, j, t.d(n + 1, i), t.s(n, j), t.s(n - 1, j),
                     t.d(n, i - 1));
    /* s_i s_j = s_{j+1} s_i (i <= j) on G_n, n <= k-2 */
    for (int n = 0; n + 1 < t.k; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                scan("s_i s_j = s_{j+1} s_i", n, i, j, t.s(n + 1, i), t.s(n, j), t.s(n + 1, j + 1),
                     t.s(n, i));

    return rep;
}

/* ------------------------------------------------------------------ */
/* Moore complex                                                        */
/* ------------------------------------------------------------------ */

struct MooreComplex {
    std::vector<Subgroup> terms;        /* NG_n inside G_n, n = 0..k */
    std::vector<GroupPtr> term_groups;  /* NG_n materialized */
    std::vector<Homomorphism> include;  /* term_groups[n] -> G_n */
    std::vector<Homomorphism> boundary; /* boundary[n] : NG_n -> NG_{n-1}, n >= 1 (slot 0 unused) */
};

inline Subgroup moore_term(const TruncatedSimplicialGroup& t, int n) {
    if (n == 0) return whole_subgroup(t.levels[0]);
    std::vector<Elt> mem;
    const auto& g = t.levels[n];
    for (Elt x = 0; x < g->order(); ++x) {
        bool in = true;
        for (int i = 0; i < n && in; ++i) in = t.d(n, i)(x) == t.levels[n - 1]->identity();
        if (in) mem.push_back(x);
    }
    return Subgroup(g, std::move(mem));
}

inline MooreComplex moore_complex(const TruncatedSimplicialGroup& t) {
    MooreComplex m;
    m.boundary.resize(t.k + 1);
    for (int n = 0; n <= t.k; ++n) {
        m.terms.push_back(moore_term(t, n));
        auto [grp, inc] = subgroup_as_group(m.terms[n]);
        m.term_groups.push_back(grp);
        m.include.push_back(inc);
    }
    for (int n = 1; n <= t.k; ++n) {
        /* boundary = d_n restricted; image must land in NG_{n-1} */
        std::unordered_map<Elt, Elt> back;
        const auto& mem = m.terms[n - 1].members();
        for (std::size_t i = 0; i < mem.size(); ++i) back[mem[i]] = static_cast<Elt>(i);
        std::vector<Elt> img(m.term_groups[n]->order());
        for (Elt x = 0; x < m.term_groups[n]->order(); ++x) {
            Elt y = t.d(n, n)(m.include[n](x));
            auto it = back.find(y);
            if (it == back.end())
                throw Error(ErrKind::ConstructionInconsistent,
                            "d_n(NG_n) escapes NG_{n-1} at level " + std::to_string(n));
            img[x] = it->second;
        }
        m.boundary[n] = Homomorphism(m.term_groups[n], m.term_groups[n - 1], std::move(img));
    }
    /* chain property */
    for (int n = 2; n <= t.k; ++n)
        for (Elt x = 0; x < m.term_groups[n]->order(); ++x)
            if (m.boundary[n - 1](m.boundary[n](x)) != m.term_groups[n - 2]->identity())
                throw Error(ErrKind::ConstructionInconsistent,
                            "boundary of boundary nontrivial at level " + std::to_string(n));
    return m;
}

inline int moore_length(const TruncatedSimplicialGroup& t) {
    int len = 0;
    for (int n = 1; n <= t.k; ++n)
        if (moore_term(t, n).order() > 1) len = n;
    return len;
}

/* D_n: subgroup generated by all degeneracy images at level n. Each image
 * s_i(G_{n-1}) is generated by the images of a generating sequence. */
inline Subgroup degenerate_subgroup(const TruncatedSimplicialGroup& t, int n) {
    if (n < 1 || n > t.k) throw Error(ErrKind::ShapeMismatch, "degenerate level out of range");
    std::vector<Elt> gens;
    for (int i = 0; i < n; ++i)
        for (Elt x : generating_sequence(t.levels[n - 1])) gens.push_back(t.s(n - 1, i)(x));
    return subgroup_closure(t.levels[n], gens);
}

/* ------------------------------------------------------------------ */
/* Semidirect coordinates (normal form over S(n))                      */
/* ------------------------------------------------------------------ */

/* One coordinate of the iterated-semidirect normal form: alpha is the
 * strictly decreasing index tuple, value lives in G_{n-#alpha} and lies in
 * the Moore term there. Entries are produced in the product order of the
 * level-n bracketing, which is the S(n) order. */
struct Coordinate {
    std::vector<int> alpha;
    Elt value;
};

namespace detail {

/* Peel x along G_m ~ (cap Ker d_{<i}) x| s_i(...) for i = 0..m-1, recursing
 * into the split-off level-(m-1) parts. Emits the S(m) product order. */
inline std::vector<Coordinate> coordinates_rec(const TruncatedSimplicialGroup& t, int m, Elt x) {
    std::vector<Coordinate> out;
    if (m == 0) {
        out.push_back({{}, x});
        return out;
    }
    Elt u = x;
    std::vector<Elt> v(m);
    for (int i = 0; i < m; ++i) {
        v[i] = t.d(m, i)(u);
        u = t.levels[m]->mul(u, t.levels[m]->inv(t.s(m - 1, i)(v[i])));
    }
    out.push_back({{}, u});
    for (int i = m - 1; i >= 0; --i) {
        for (auto& c : coordinates_rec(t, m - 1, v[i])) {
            if (!c.alpha.empty() && c.alpha.back() < i) {
                /* v_i lies in the first i face kernels, so these slots carry
                 * the identity; anything else means the input was not simplicial */
                if (c.value != t.levels[m - 1 - static_cast<int>(c.alpha.size())]->identity())
                    throw Error(ErrKind::ConstructionInconsistent,
                                "nonzero coordinate in a kernel-forced slot");
                continue;
            }
            std::vector<int> alpha;
            alpha.reserve(c.alpha.size() + 1);
            for (int a : c.alpha) alpha.push_back(a + 1);
            alpha.push_back(i);
            out.push_back({std::move(alpha), c.value});
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<Coordinate> coordinates(const TruncatedSimplicialGroup& t, int n, Elt x) {
    return detail::coordinates_rec(t, n, x);
}

inline Elt recompose(const TruncatedSimplicialGroup& t, int n,
                     const std::vector<Coordinate>& coords) {
    const auto& g = t.levels[n];
    Elt acc = g->identity();
    for (const auto& c : coords) acc = g->mul(acc, t.s_alpha(n, c.alpha, c.value));
    return acc;
}

/* ------------------------------------------------------------------ */
/* Homotopy groups                                                      */
/* ------------------------------------------------------------------ */

struct HomotopyGroups {
    /* paper indexing: pi[1] = NG_0/d_1(NG_1), pi[n] = (ker d_{n-1} cap NG_{n-1}) / d_n(NG_n),
     * pi[k+1] = ker boundary_k (no image left to kill at the truncation edge). */
    std::vector<GroupPtr> pi; /* slot 0 unused (paper's pi_0 = 0) */
    bool top_is_relative = false;
};

inline HomotopyGroups homotopy_groups(const TruncatedSimplicialGroup& t) {
    MooreComplex m = moore_complex(t);
    HomotopyGroups h;
    h.pi.resize(t.k + 2);
    for (int n = 1; n <= t.k + 1; ++n) {
        /* cycles in NG_{n-1} */
        Subgroup cycles = n == 1 ? whole_subgroup(m.term_groups[0])
                                 : kernel_image(m.boundary[n - 1]).first;
        std::vector<Elt> img_members;
        if (n <= t.k) {
            for (Elt x = 0; x < m.term_groups[n]->order(); ++x)
                img_members.push_back(m.boundary[n](x));
        } else {
            img_members.push_back(m.term_groups[n - 1]->identity());
            h.top_is_relative = moore_term(t, t.k).order() > 1;
        }
        auto [zgrp, zinc] = subgroup_as_group(cycles);
        std::unordered_map<Elt, Elt> back;
        for (Elt i = 0; i < zgrp->order(); ++i) back[zinc(i)] = i;
        std::vector<Elt> b;
        for (Elt y : img_members) {
            auto it = back.find(y);
            if (it == back.end())
                throw Error(ErrKind::ConstructionInconsistent,
                            "boundary image not inside cycles at n=" + std::to_string(n));
            b.push_back(it->second);
        }
        Subgroup bsub(zgrp, std::move(b));
        auto [q, proj] = quotient(zgrp, bsub);
        (void)proj;
        if (n >= 2 && !q->is_abelian())
            throw Error(ErrKind::ConstructionInconsistent,
                        "homotopy group pi_" + std::to_string(n) + " is not abelian");
        h.pi[n] = q;
    }
    return h;
}

}  // namespace hdg
