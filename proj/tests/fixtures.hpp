#pragma once

/* Shared test fixtures and independent oracles. Everything here is built by
 * routes that do not go through the code paths under test: permutation
 * composition for symmetric groups, explicit tuple arithmetic for nerves and
 * products, hand-written tables for the crossed-structure examples. */

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "hdg/functors.hpp"
#include "hdg/group.hpp"
#include "hdg/simplicial.hpp"
#include "hdg/structures.hpp"

namespace fx {

using namespace hdg;

/* S_n from permutation composition: elements are the permutations of
 * {0..n-1} in lexicographic order, (p*q)(i) = p(q(i)). */
inline GroupPtr symmetric_group(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, Elt> idx;
    for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<Elt>(i);
    std::vector<std::string> labels;
    for (const auto& q : perms) {
        std::string s;
        for (int v : q) s += std::to_string(v);
        labels.push_back(s);
    }
    std::vector<std::vector<Elt>> table(perms.size(), std::vector<Elt>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = idx.at(c);
        }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return group_from_table(std::move(labels), idx.at(id), table);
}

inline Elt perm_elt(const GroupPtr& sn, const std::vector<int>& perm) {
    std::string want;
    for (int v : perm) want += std::to_string(v);
    for (Elt a = 0; a < sn->order(); ++a)
        if (sn->label(a) == want) return a;
    throw std::runtime_error("permutation not found");
}

/* Constant simplicial group: every level G, every map the identity. */
inline TruncatedSimplicialGroup constant_simplicial(const GroupPtr& g, int k) {
    TruncatedSimplicialGroup t;
    t.k = k;
    for (int n = 0; n <= k; ++n) t.levels.push_back(g);
    t.faces.resize(k);
    t.degens.resize(k);
    for (int n = 1; n <= k; ++n)
        for (int i = 0; i <= n; ++i) t.faces[n - 1].push_back(Homomorphism::identity_map(g));
    for (int n = 0; n < k; ++n)
        for (int i = 0; i <= n; ++i) t.degens[n].push_back(Homomorphism::identity_map(g));
    return t;
}

/* k-truncated nerve of an abelian group: level n is A^n with componentwise
 * multiplication, faces drop an end or multiply neighbours, degeneracies
 * insert the identity. Componentwise products make the faces homomorphisms
 * only when A is abelian. Materialized directly, an independent route from
 * the semidirect machinery. */
struct NerveBuilder {
    GroupPtr a;
    std::vector<GroupPtr> levels;
    std::vector<std::vector<std::vector<Elt>>> elems; /* per level: tuples */

    explicit NerveBuilder(GroupPtr base, int k) : a(std::move(base)) {
        if (!a->is_abelian())
            throw Error(ErrKind::ShapeMismatch, "nerve fixture needs an abelian base");
        for (int n = 0; n <= k; ++n) {
            std::vector<std::vector<Elt>> tuples;
            std::vector<Elt> cur(n, 0);
            while (true) {
                tuples.push_back(cur);
                int pos = n - 1;
                while (pos >= 0 && cur[pos] + 1 == a->order()) cur[pos--] = 0;
                if (pos < 0) break;
                ++cur[pos];
            }
            std::map<std::vector<Elt>, Elt> idx;
            for (std::size_t i = 0; i < tuples.size(); ++i) idx[tuples[i]] = static_cast<Elt>(i);
            std::vector<std::string> labels;
            for (const auto& tup : tuples) {
                std::string s = "<";
                for (std::size_t i = 0; i < tup.size(); ++i) {
                    if (i) s += ",";
                    s += a->label(tup[i]);
                }
                labels.push_back(s + ">");
            }
            std::vector<std::vector<Elt>> table(tuples.size(), std::vector<Elt>(tuples.size()));
            for (std::size_t x = 0; x < tuples.size(); ++x)
                for (std::size_t y = 0; y < tuples.size(); ++y) {
                    std::vector<Elt> z(n);
                    for (int i = 0; i < n; ++i) z[i] = a->mul(tuples[x][i], tuples[y][i]);
                    table[x][y] = idx.at(z);
                }
            levels.push_back(group_from_table(std::move(labels), idx.at(std::vector<Elt>(n, 0)),
                                              table));
            elems.push_back(std::move(tuples));
        }
    }

    Elt find(int n, const std::vector<Elt>& tup) const {
        for (std::size_t i = 0; i < elems[n].size(); ++i)
            if (elems[n][i] == tup) return static_cast<Elt>(i);
        throw std::runtime_error("nerve tuple not found");
    }
};

inline TruncatedSimplicialGroup nerve_truncation(const GroupPtr& a, int k) {
    auto nb = std::make_shared<NerveBuilder>(a, k);
    TruncatedSimplicialGroup t;
    t.k = k;
    t.levels = nb->levels;
    t.faces.resize(k);
    t.degens.resize(k);
    for (int n = 1; n <= k; ++n)
        for (int i = 0; i <= n; ++i)
            t.faces[n - 1].push_back(Homomorphism::from_function(
                nb->levels[n], nb->levels[n - 1],
                [nb, n, i, a](Elt v) {
                    const auto& tup = nb->elems[n][v];
                    std::vector<Elt> out;
                    if (i == 0)
                        out.assign(tup.begin() + 1, tup.end());
                    else if (i == n)
                        out.assign(tup.begin(), tup.end() - 1);
                    else {
                        out.assign(tup.begin(), tup.end());
                        out[i - 1] = a->mul(tup[i - 1], tup[i]);
                        out.erase(out.begin() + i);
                    }
                    return nb->find(n - 1, out);
                },
                false));
    for (int n = 0; n < k; ++n)
        for (int i = 0; i <= n; ++i)
            t.degens[n].push_back(Homomorphism::from_function(
                nb->levels[n], nb->levels[n + 1],
                [nb, n, i, a](Elt v) {
                    auto out = nb->elems[n][v];
                    out.insert(out.begin() + i, a->identity());
                    return nb->find(n + 1, out);
                },
                false));
    return t;
}

/* ------------------------------------------------------------------ */
/* Hand-built 3-crossed modules                                        */
/* ------------------------------------------------------------------ */

inline ThreeCrossedModule xmod3_trivial_liftings(GroupPtr k, GroupPtr l, GroupPtr m, GroupPtr n,
                                                 Homomorphism d3, Homomorphism d2,
                                                 Homomorphism d1, GroupAction nk, GroupAction nl,
                                                 GroupAction nm, GroupAction mk, GroupAction ml,
                                                 GroupAction lk) {
    return ThreeCrossedModule{k,
                              l,
                              m,
                              n,
                              std::move(d3),
                              std::move(d2),
                              std::move(d1),
                              std::move(nk),
                              std::move(nl),
                              std::move(nm),
                              std::move(mk),
                              std::move(ml),
                              std::move(lk),
                              LiftTable::trivial(m, m, l),
                              LiftTable::trivial(l, l, k),
                              LiftTable::trivial(l, l, k),
                              LiftTable::trivial(l, l, k),
                              LiftTable::trivial(m, l, k),
                              LiftTable::trivial(m, l, k),
                              LiftTable::trivial(l, m, k)};
}

/* (1 -> 1 -> 1 -> N) */
inline ThreeCrossedModule xmod3_bottom_only(const GroupPtr& n) {
    GroupPtr one = trivial_group();
    return xmod3_trivial_liftings(
        one, one, one, n, Homomorphism::trivial_map(one, one),
        Homomorphism::trivial_map(one, one), Homomorphism::trivial_map(one, n),
        GroupAction::trivial(n, one), GroupAction::trivial(n, one), GroupAction::trivial(n, one),
        GroupAction::trivial(one, one), GroupAction::trivial(one, one),
        GroupAction::trivial(one, one));
}

/* inclusion crossed module N' <| P lifted to (1 -> 1 -> N' -> P) */
inline ThreeCrossedModule xmod3_from_inclusion(const GroupPtr& p, const Subgroup& nsub) {
    CrossedModule cm = xmod_normal_inclusion(p, nsub);
    GroupPtr one = trivial_group();
    return xmod3_trivial_liftings(
        one, one, cm.m, cm.p, Homomorphism::trivial_map(one, one),
        Homomorphism::trivial_map(one, cm.m), cm.bnd, GroupAction::trivial(cm.p, one),
        GroupAction::trivial(cm.p, one), cm.act, GroupAction::trivial(cm.m, one),
        GroupAction::trivial(cm.m, one), GroupAction::trivial(one, one));
}

/* (K = G --id--> L = G -> 1 -> 1), L acting on K by conjugation. The (1)(0)
 * and (2)(1) liftings are forced to commutators through the identity d3. */
inline ThreeCrossedModule xmod3_identity_top(const GroupPtr& g) {
    GroupPtr one = trivial_group();
    Homomorphism id = Homomorphism::identity_map(g);
    ThreeCrossedModule x{
        g,
        g,
        one,
        one,
        id,
        Homomorphism::trivial_map(g, one),
        Homomorphism::trivial_map(one, one),
        GroupAction::trivial(one, g),
        GroupAction::trivial(one, g),
        GroupAction::trivial(one, one),
        GroupAction::trivial(one, g),
        GroupAction::trivial(one, g),
        GroupAction::conjugation(g),
        LiftTable::trivial(one, one, g),
        /* d3 = id forces (1)(0) to [a,b] and (2)(1) to [b,a] */
        LiftTable::from_function(g, g, g, [&](Elt a, Elt b) { return g->comm(a, b); }),
        LiftTable::trivial(g, g, g),
        LiftTable::from_function(g, g, g, [&](Elt a, Elt b) { return g->comm(b, a); }),
        LiftTable::trivial(one, g, g),
        LiftTable::trivial(one, g, g),
        LiftTable::trivial(g, one, g)};
    return x;
}

/* all four groups C2, identity d3, trivial d2, identity d1 */
inline ThreeCrossedModule xmod3_all_c2() {
    GroupPtr c2a = cyclic_group(2), c2b = cyclic_group(2), c2c = cyclic_group(2),
             c2d = cyclic_group(2);
    return xmod3_trivial_liftings(
        c2a, c2b, c2c, c2d, Homomorphism(c2a, c2b, {0, 1}),
        Homomorphism::trivial_map(c2b, c2c),
        Homomorphism(c2c, c2d, {0, 1}), GroupAction::trivial(c2d, c2a),
        GroupAction::trivial(c2d, c2b), GroupAction::trivial(c2d, c2c),
        GroupAction::trivial(c2c, c2a), GroupAction::trivial(c2c, c2b),
        GroupAction::trivial(c2b, c2a));
}

/* K = C3 --id--> L = C3 -> M = C2 -> 1, M inverting K and L; the (0)(2,1)
 * lifting is forced by the boundary computation and identity d3. */
inline ThreeCrossedModule xmod3_c3_inversion() {
    GroupPtr k = cyclic_group(3), l = cyclic_group(3), m = cyclic_group(2),
             n = trivial_group();
    auto invert_on = [](const GroupPtr& c2, const GroupPtr& tgt) {
        return GroupAction::from_function(
            c2, tgt, [tgt](Elt a, Elt x) { return a == 0 ? x : tgt->inv(x); });
    };
    ThreeCrossedModule x{
        k,
        l,
        m,
        n,
        Homomorphism(k, l, {0, 1, 2}), /* K and L share the C3 layout */
        Homomorphism::trivial_map(l, m),
        Homomorphism::trivial_map(m, n),
        GroupAction::trivial(n, k),
        GroupAction::trivial(n, l),
        GroupAction::trivial(n, m),
        invert_on(m, k),
        invert_on(m, l),
        GroupAction::trivial(l, k),
        LiftTable::trivial(m, m, l),
        LiftTable::trivial(l, l, k),
        LiftTable::trivial(l, l, k),
        LiftTable::trivial(l, l, k),
        LiftTable::trivial(m, l, k),
        LiftTable::trivial(m, l, k),
        /* {l, m}_(0)(2,1) = l (m.l)^-1 transported through d3 = id */
        LiftTable::from_function(l, m, k,
                                 [l](Elt ll, Elt mm) {
                                     Elt act = mm == 0 ? ll : l->inv(ll);
                                     return l->mul(ll, l->inv(act));
                                 })};
    return x;
}

/* A 3-truncation with nonabelian levels and Moore terms (C3, C3, C2, 1):
 * the inverse-functor output of the inversion fixture. */
inline TruncatedSimplicialGroup rich_simplicial() {
    return to_simplicial(xmod3_c3_inversion()).t;
}

/* Nonabelian top pair: K = L = S3 with identity boundary. */
inline TruncatedSimplicialGroup to_simplicial_of_s3_top() {
    return to_simplicial(xmod3_identity_top(symmetric_group(3))).t;
}

}  // namespace fx
