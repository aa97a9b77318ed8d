#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdg/error.hpp"

namespace hdg {

using Elt = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/* Order cap above which multiplication tables are never materialized and
 * exhaustive scans switch to sampling. Mirrors the CLI --max-order flag. */
inline constexpr std::size_t kDefaultOrderCap = 4096;

/* Exhaustive associativity is cubic; past this order a seeded sample of
 * triples is used instead (structured products are associative by
 * construction, the sample is a smoke check). */
inline constexpr std::size_t kExhaustiveAssocCap = 128;
inline constexpr std::uint64_t kAssocSampleCap = 1u << 16;

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    virtual ~FiniteGroup() = default;

    std::size_t order() const { return order_; }
    Elt identity() const { return identity_; }

    virtual Elt mul(Elt a, Elt b) const = 0;
    virtual Elt inv(Elt a) const = 0;
    virtual std::string label(Elt a) const = 0;

    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }

    /* Commutator convention [a,b] = a b a^-1 b^-1, fixed globally. */
    Elt comm(Elt a, Elt b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

    Elt power(Elt a, std::uint64_t n) const {
        Elt r = identity();
        for (std::uint64_t i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

    std::uint32_t element_order(Elt a) const {
        Elt x = a;
        std::uint32_t n = 1;
        while (x != identity()) {
            x = mul(x, a);
            ++n;
        }
        return n;
    }

    bool is_abelian() const {
        for (Elt a = 0; a < order(); ++a)
            for (Elt b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

protected:
    FiniteGroup(std::size_t order, Elt identity) : order_(order), identity_(identity) {}

    /* Shared sanity pass for every backing kind: identity two-sided, inverses
     * two-sided, associativity exhaustive up to kExhaustiveAssocCap and
     * seeded-sampled beyond. */
    void validate_axioms() const {
        const Elt e = identity_;
        for (Elt a = 0; a < order_; ++a) {
            if (mul(e, a) != a || mul(a, e) != a)
                throw Error(ErrKind::NoIdentity,
                            "element " + std::to_string(a) + " not fixed by identity");
            Elt ai = inv(a);
            if (ai >= order_ || mul(a, ai) != e || mul(ai, a) != e)
                throw Error(ErrKind::NoInverse, "witness element " + std::to_string(a));
        }
        if (order_ <= kExhaustiveAssocCap) {
            for (Elt a = 0; a < order_; ++a)
                for (Elt b = 0; b < order_; ++b)
                    for (Elt c = 0; c < order_; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw Error(ErrKind::NotAssociative,
                                        "witness triple (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
        } else {
            std::uint64_t n = std::min<std::uint64_t>(
                kAssocSampleCap, static_cast<std::uint64_t>(order_) * order_);
            std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ order_);
            std::uniform_int_distribution<Elt> d(0, static_cast<Elt>(order_ - 1));
            for (std::uint64_t i = 0; i < n; ++i) {
                Elt a = d(rng), b = d(rng), c = d(rng);
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error(ErrKind::NotAssociative,
                                "witness triple (" + std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(c) + ")");
            }
        }
    }

    std::size_t order_;
    Elt identity_;
};

/* ------------------------------------------------------------------ */
/* Materialized multiplication table                                    */
/* ------------------------------------------------------------------ */

class TableGroup final : public FiniteGroup {
public:
    TableGroup(std::vector<std::string> labels, Elt identity, std::vector<Elt> flat_table)
        : FiniteGroup(labels.size(), identity),
          labels_(std::move(labels)),
          table_(std::move(flat_table)) {
        if (order_ == 0) throw Error(ErrKind::BadTableShape, "empty group");
        if (table_.size() != order_ * order_)
            throw Error(ErrKind::BadTableShape, "mul table is not order x order");
        for (Elt v : table_)
            if (v >= order_) throw Error(ErrKind::NotClosed, "table entry out of range");
        if (identity_ >= order_) throw Error(ErrKind::NoIdentity, "identity index out of range");
        inv_.assign(order_, order_);
        for (Elt a = 0; a < order_; ++a) {
            for (Elt b = 0; b < order_; ++b)
                if (table_[a * order_ + b] == identity_ && table_[b * order_ + a] == identity_) {
                    inv_[a] = b;
                    break;
                }
            if (inv_[a] == order_)
                throw Error(ErrKind::NoInverse, "witness element " + std::to_string(a));
        }
        validate_axioms();
    }

    Elt mul(Elt a, Elt b) const override { return table_[a * order_ + b]; }
    Elt inv(Elt a) const override { return inv_[a]; }
    std::string label(Elt a) const override { return labels_[a]; }

private:
    std::vector<std::string> labels_;
    std::vector<Elt> table_;
    std::vector<Elt> inv_;
};

inline GroupPtr group_from_table(std::vector<std::string> labels, Elt identity,
                                 const std::vector<std::vector<Elt>>& table) {
    std::size_t n = labels.size();
    if (table.size() != n) throw Error(ErrKind::BadTableShape, "row count != order");
    std::vector<Elt> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw Error(ErrKind::BadTableShape, "row " + std::to_string(r) + " has wrong length");
        flat.insert(flat.end(), table[r].begin(), table[r].end());
    }
    return std::make_shared<TableGroup>(std::move(labels), identity, std::move(flat));
}

inline GroupPtr trivial_group() {
    return group_from_table({"e"}, 0, {{0}});
}

inline GroupPtr cyclic_group(std::uint32_t n, const std::string& gen = "a") {
    if (n == 0) throw Error(ErrKind::BadTableShape, "cyclic group of order 0");
    std::vector<std::string> labels(n);
    for (std::uint32_t i = 0; i < n; ++i)
        labels[i] = i == 0 ? "e" : (i == 1 ? gen : gen + "^" + std::to_string(i));
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return group_from_table(std::move(labels), 0, t);
}

/* ------------------------------------------------------------------ */
/* Semidirect product, multiplication computed from the factors        */
/* ------------------------------------------------------------------ */

/* Elements are pairs (x, a), x in the normal factor, a in the actor;
 * (x,a)(y,b) = (x * act(a,y), a*b). Index packing: x * |actor| + a. */
class SemidirectGroup final : public FiniteGroup {
public:
    SemidirectGroup(GroupPtr normal, GroupPtr actor, std::function<Elt(Elt, Elt)> act)
        : FiniteGroup(normal->order() * actor->order(),
                      static_cast<Elt>(normal->identity() * actor->order() + actor->identity())),
          normal_(std::move(normal)),
          actor_(std::move(actor)),
          act_(std::move(act)) {
        validate_axioms();
    }

    Elt mul(Elt p, Elt q) const override {
        auto [x, a] = unpack(p);
        auto [y, b] = unpack(q);
        return pack(normal_->mul(x, act_(a, y)), actor_->mul(a, b));
    }

    Elt inv(Elt p) const override {
        auto [x, a] = unpack(p);
        Elt ai = actor_->inv(a);
        return pack(act_(ai, normal_->inv(x)), ai);
    }

    std::string label(Elt p) const override {
        auto [x, a] = unpack(p);
        return "(" + normal_->label(x) + "," + actor_->label(a) + ")";
    }

    std::pair<Elt, Elt> unpack(Elt p) const {
        return {static_cast<Elt>(p / actor_->order()), static_cast<Elt>(p % actor_->order())};
    }
    Elt pack(Elt x, Elt a) const { return static_cast<Elt>(x * actor_->order() + a); }

    const GroupPtr& normal_factor() const { return normal_; }
    const GroupPtr& actor_factor() const { return actor_; }

private:
    GroupPtr normal_;
    GroupPtr actor_;
    std::function<Elt(Elt, Elt)> act_;
};

/* ------------------------------------------------------------------ */
/* Subgroup of a tuple power G^k, componentwise operations             */
/* ------------------------------------------------------------------ */

/* Enumerated once from generators; used for the degenerate level-4 group,
 * whose elements are face-compatible tuples over level 3. Tuples are packed
 * into 64-bit keys (12 bits per slot), which caps the base order at 4096 and
 * the arity at 5 -- exactly the scale this artifact works at. */
class TupleGroup final : public FiniteGroup {
public:
    TupleGroup(GroupPtr base, std::size_t arity, const std::vector<std::vector<Elt>>& generators)
        : FiniteGroup(0, 0), base_(std::move(base)), arity_(arity) {
        if (arity_ > 5 || base_->order() > 4096)
            throw Error(ErrKind::OrderCapExceeded, "tuple group limited to arity 5 over order 4096");
        std::vector<Elt> id(arity_, base_->identity());
        intern(id);
        std::vector<std::vector<Elt>> gens = generators;
        for (const auto& g : generators) {
            std::vector<Elt> gi(arity_);
            for (std::size_t i = 0; i < arity_; ++i) gi[i] = base_->inv(g[i]);
            gens.push_back(gi);
        }
        for (const auto& g : gens) {
            if (g.size() != arity_) throw Error(ErrKind::BadTableShape, "generator arity mismatch");
            intern(g);
        }
        std::size_t head = 0;
        std::vector<Elt> prod(arity_);
        while (head < elems_.size()) {
            std::vector<Elt> cur = elems_[head];
            for (const auto& g : gens) {
                for (std::size_t i = 0; i < arity_; ++i) prod[i] = base_->mul(cur[i], g[i]);
                intern(prod);
            }
            ++head;
        }
        order_ = elems_.size();
        identity_ = index_.at(key(id.data()));
        validate_axioms();
    }

    Elt mul(Elt a, Elt b) const override {
        Elt r[5];
        const auto& ta = elems_[a];
        const auto& tb = elems_[b];
        for (std::size_t i = 0; i < arity_; ++i) r[i] = base_->mul(ta[i], tb[i]);
        auto it = index_.find(key(r));
        if (it == index_.end()) throw Error(ErrKind::NotClosed, "tuple product left the subgroup");
        return it->second;
    }

    Elt inv(Elt a) const override {
        Elt r[5];
        for (std::size_t i = 0; i < arity_; ++i) r[i] = base_->inv(elems_[a][i]);
        return index_.at(key(r));
    }

    std::string label(Elt a) const override {
        std::string s = "[";
        for (std::size_t i = 0; i < arity_; ++i) {
            if (i) s += ",";
            s += base_->label(elems_[a][i]);
        }
        return s + "]";
    }

    const std::vector<Elt>& tuple(Elt a) const { return elems_[a]; }
    Elt component(Elt a, std::size_t i) const { return elems_[a][i]; }

    std::optional<Elt> find(const std::vector<Elt>& t) const {
        auto it = index_.find(key(t.data()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const GroupPtr& base() const { return base_; }

private:
    std::uint64_t key(const Elt* t) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < arity_; ++i) k = (k << 12) | t[i];
        return k;
    }
    void intern(const std::vector<Elt>& t) {
        auto [it, fresh] = index_.try_emplace(key(t.data()), static_cast<Elt>(elems_.size()));
        if (fresh) elems_.push_back(t);
    }

    GroupPtr base_;
    std::size_t arity_;
    std::vector<std::vector<Elt>> elems_;
    std::unordered_map<std::uint64_t, Elt> index_;
};

/* ------------------------------------------------------------------ */
/* Subgroups                                                           */
/* ------------------------------------------------------------------ */

class Subgroup {
public:
    struct Trusted {}; /* construction sites that guarantee closure skip the scan */

    Subgroup() = default;
    Subgroup(GroupPtr parent, std::vector<Elt> members) : Subgroup(parent, members, Trusted{}) {
        if (!contains(parent_->identity()))
            throw Error(ErrKind::NotClosed, "subgroup must contain the identity");
        for (Elt a : members_) {
            if (!contains(parent_->inv(a)))
                throw Error(ErrKind::NotClosed, "missing inverse of " + std::to_string(a));
            for (Elt b : members_)
                if (!contains(parent_->mul(a, b)))
                    throw Error(ErrKind::NotClosed, "product " + std::to_string(a) + "*" +
                                                        std::to_string(b) + " escapes");
        }
    }

    Subgroup(GroupPtr parent, std::vector<Elt> members, Trusted) : parent_(std::move(parent)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
        mask_.assign(parent_->order(), false);
        for (Elt m : members_) {
            if (m >= parent_->order())
                throw Error(ErrKind::ShapeMismatch, "subgroup member out of range");
            mask_[m] = true;
        }
    }

    const GroupPtr& parent() const { return parent_; }
    const std::vector<Elt>& members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool contains(Elt x) const { return mask_[x]; }

    bool is_trivial() const { return members_.size() == 1; }
    bool is_whole() const { return members_.size() == parent_->order(); }

    bool operator==(const Subgroup& other) const {
        return parent_ == other.parent_ && members_ == other.members_;
    }

private:
    GroupPtr parent_;
    std::vector<Elt> members_;
    std::vector<bool> mask_;
};

namespace detail {

/* <gens>: breadth-first over right multiplication by generators and their
 * inverses; linear in |result| * |gens|. */
inline std::vector<Elt> closure(const FiniteGroup& g, const std::vector<Elt>& seed) {
    std::vector<Elt> gens;
    for (Elt s : seed) {
        gens.push_back(s);
        gens.push_back(g.inv(s));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<bool> seen(g.order(), false);
    std::vector<Elt> out;
    seen[g.identity()] = true;
    out.push_back(g.identity());
    std::size_t head = 0;
    while (head < out.size()) {
        Elt x = out[head++];
        for (Elt gg : gens) {
            Elt y = g.mul(x, gg);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    return out;
}

}  // namespace detail

/* A compact generating sequence (greedy): each element enlarges the closure. */
inline std::vector<Elt> generating_sequence(const GroupPtr& g);

inline Subgroup subgroup_closure(const GroupPtr& g, const std::vector<Elt>& generators) {
    return Subgroup(g, detail::closure(*g, generators), Subgroup::Trusted{});
}

/* Smallest normal subgroup containing the seed: close under multiplication,
 * then conjugate by group generators until stable. */
inline Subgroup normal_closure(const GroupPtr& g, const std::vector<Elt>& seed) {
    std::vector<Elt> ggens = generating_sequence(g);
    std::vector<Elt> gens = seed;
    std::vector<Elt> mem = detail::closure(*g, gens);
    while (true) {
        std::vector<bool> in(g->order(), false);
        for (Elt x : mem) in[x] = true;
        bool grew = false;
        for (Elt t : ggens)
            for (Elt x : mem) {
                Elt y = g->conj(t, x);
                if (!in[y]) {
                    gens.push_back(y);
                    grew = true;
                }
            }
        if (!grew) break;
        mem = detail::closure(*g, gens);
    }
    return Subgroup(g, std::move(mem), Subgroup::Trusted{});
}

inline Subgroup trivial_subgroup(const GroupPtr& g) {
    return Subgroup(g, {g->identity()}, Subgroup::Trusted{});
}

inline Subgroup whole_subgroup(const GroupPtr& g) {
    std::vector<Elt> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all), Subgroup::Trusted{});
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<Elt> out;
    for (Elt x : a.members())
        if (b.contains(x)) out.push_back(x);
    return Subgroup(a.parent(), std::move(out), Subgroup::Trusted{});
}

inline bool is_normal(const Subgroup& s) {
    const auto& g = *s.parent();
    for (Elt t = 0; t < g.order(); ++t)
        for (Elt x : s.members())
            if (!s.contains(g.conj(t, x))) return false;
    return true;
}

inline std::optional<std::pair<Elt, Elt>> normality_witness(const Subgroup& s) {
    const auto& g = *s.parent();
    for (Elt t = 0; t < g.order(); ++t)
        for (Elt x : s.members())
            if (!s.contains(g.conj(t, x))) return std::make_pair(t, x);
    return std::nullopt;
}

/* Subgroup generated by all [a,b], a in A, b in B, closed normally inside
 * the subgroup generated by A and B. */
inline Subgroup commutator_subgroup_of(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
    std::vector<Elt> gens;
    for (Elt x : a.members())
        for (Elt y : b.members()) gens.push_back(g->comm(x, y));
    std::vector<Elt> ambient_gens = a.members();
    ambient_gens.insert(ambient_gens.end(), b.members().begin(), b.members().end());
    Subgroup ambient = subgroup_closure(g, ambient_gens);
    std::vector<Elt> mem = detail::closure(*g, gens);
    while (true) {
        std::vector<bool> in(g->order(), false);
        for (Elt x : mem) in[x] = true;
        bool grew = false;
        for (Elt t : ambient.members())
            for (Elt x : mem) {
                Elt y = g->conj(t, x);
                if (!in[y]) {
                    gens.push_back(y);
                    grew = true;
                }
            }
        if (!grew) break;
        mem = detail::closure(*g, gens);
    }
    return Subgroup(g, std::move(mem), Subgroup::Trusted{});
}

/* ------------------------------------------------------------------ */
/* Homomorphisms and actions                                           */
/* ------------------------------------------------------------------ */

class Homomorphism {
public:
    Homomorphism() = default;
    Homomorphism(GroupPtr domain, GroupPtr codomain, std::vector<Elt> image, bool validate = true)
        : dom_(std::move(domain)), cod_(std::move(codomain)), img_(std::move(image)) {
        if (img_.size() != dom_->order())
            throw Error(ErrKind::ShapeMismatch, "image array size != domain order");
        for (Elt v : img_)
            if (v >= cod_->order())
                throw Error(ErrKind::ShapeMismatch, "image index out of codomain range");
        if (validate) {
            if (img_[dom_->identity()] != cod_->identity())
                throw Error(ErrKind::NotAHomomorphism, "identity not preserved");
            for (Elt a = 0; a < dom_->order(); ++a)
                for (Elt b = 0; b < dom_->order(); ++b)
                    if (img_[dom_->mul(a, b)] != cod_->mul(img_[a], img_[b]))
                        throw Error(ErrKind::NotAHomomorphism,
                                    "f(xy) != f(x)f(y) at (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
    }

    static Homomorphism from_function(GroupPtr domain, GroupPtr codomain,
                                      const std::function<Elt(Elt)>& f, bool validate = true) {
        std::vector<Elt> img(domain->order());
        for (Elt a = 0; a < domain->order(); ++a) img[a] = f(a);
        return Homomorphism(std::move(domain), std::move(codomain), std::move(img), validate);
    }

    static Homomorphism identity_map(const GroupPtr& g) {
        std::vector<Elt> img(g->order());
        std::iota(img.begin(), img.end(), 0);
        return Homomorphism(g, g, std::move(img), false);
    }

    static Homomorphism trivial_map(const GroupPtr& domain, const GroupPtr& codomain) {
        return Homomorphism(domain, codomain,
                            std::vector<Elt>(domain->order(), codomain->identity()), false);
    }

    const GroupPtr& domain() const { return dom_; }
    const GroupPtr& codomain() const { return cod_; }
    Elt operator()(Elt a) const { return img_[a]; }
    const std::vector<Elt>& image_array() const { return img_; }

    /* true iff well-defined homomorphism; cheap re-check used by gates */
    bool check(std::string* why = nullptr) const {
        if (img_[dom_->identity()] != cod_->identity()) {
            if (why) *why = "identity not preserved";
            return false;
        }
        for (Elt a = 0; a < dom_->order(); ++a)
            for (Elt b = 0; b < dom_->order(); ++b)
                if (img_[dom_->mul(a, b)] != cod_->mul(img_[a], img_[b])) {
                    if (why)
                        *why = "f(xy)!=f(x)f(y) at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")";
                    return false;
                }
        return true;
    }

    Homomorphism then(const Homomorphism& g) const {
        std::vector<Elt> img(dom_->order());
        for (Elt a = 0; a < dom_->order(); ++a) img[a] = g(img_[a]);
        return Homomorphism(dom_, g.codomain(), std::move(img), false);
    }

    bool is_bijective() const {
        if (dom_->order() != cod_->order()) return false;
        std::vector<bool> hit(cod_->order(), false);
        for (Elt v : img_) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }

private:
    GroupPtr dom_;
    GroupPtr cod_;
    std::vector<Elt> img_;
};

inline std::pair<Subgroup, Subgroup> kernel_image(const Homomorphism& f) {
    std::vector<Elt> ker, img;
    for (Elt a = 0; a < f.domain()->order(); ++a) {
        if (f(a) == f.codomain()->identity()) ker.push_back(a);
        img.push_back(f(a));
    }
    return {Subgroup(f.domain(), std::move(ker)), Subgroup(f.codomain(), std::move(img))};
}

/* Action of `actor` on `target` by automorphisms, materialized table. */
class GroupAction {
public:
    GroupAction() = default;
    GroupAction(GroupPtr actor, GroupPtr target, std::vector<std::vector<Elt>> table,
                bool validate = true)
        : actor_(std::move(actor)), target_(std::move(target)), table_(std::move(table)) {
        if (table_.size() != actor_->order())
            throw Error(ErrKind::ShapeMismatch, "action table row count != actor order");
        for (const auto& row : table_) {
            if (row.size() != target_->order())
                throw Error(ErrKind::ShapeMismatch, "action table row length != target order");
            for (Elt v : row)
                if (v >= target_->order())
                    throw Error(ErrKind::ShapeMismatch, "action entry out of range");
        }
        if (validate) {
            std::string why;
            if (!check(&why)) throw Error(ErrKind::NotAnAction, why);
        }
    }

    static GroupAction from_function(GroupPtr actor, GroupPtr target,
                                     const std::function<Elt(Elt, Elt)>& f, bool validate = true) {
        std::vector<std::vector<Elt>> t(actor->order(), std::vector<Elt>(target->order()));
        for (Elt a = 0; a < actor->order(); ++a)
            for (Elt x = 0; x < target->order(); ++x) t[a][x] = f(a, x);
        return GroupAction(std::move(actor), std::move(target), std::move(t), validate);
    }

    static GroupAction trivial(GroupPtr actor, GroupPtr target) {
        std::vector<std::vector<Elt>> t(actor->order(), std::vector<Elt>(target->order()));
        for (auto& row : t) std::iota(row.begin(), row.end(), 0);
        return GroupAction(std::move(actor), std::move(target), std::move(t), false);
    }

    static GroupAction conjugation(const GroupPtr& g) {
        return from_function(g, g, [&](Elt a, Elt x) { return g->conj(a, x); }, false);
    }

    const GroupPtr& actor() const { return actor_; }
    const GroupPtr& target() const { return target_; }
    Elt operator()(Elt a, Elt x) const { return table_[a][x]; }

    bool check(std::string* why = nullptr) const {
        const auto& A = *actor_;
        const auto& X = *target_;
        for (Elt x = 0; x < X.order(); ++x)
            if (table_[A.identity()][x] != x) {
                if (why) *why = "identity actor moves " + std::to_string(x);
                return false;
            }
        for (Elt a = 0; a < A.order(); ++a)
            for (Elt b = 0; b < A.order(); ++b)
                for (Elt x = 0; x < X.order(); ++x)
                    if (table_[A.mul(a, b)][x] != table_[a][table_[b][x]]) {
                        if (why)
                            *why = "not compatible with actor multiplication at a=" +
                                   std::to_string(a) + " b=" + std::to_string(b) +
                                   " x=" + std::to_string(x);
                        return false;
                    }
        for (Elt a = 0; a < A.order(); ++a)
            for (Elt x = 0; x < X.order(); ++x)
                for (Elt y = 0; y < X.order(); ++y)
                    if (table_[a][X.mul(x, y)] != X.mul(table_[a][x], table_[a][y])) {
                        if (why)
                            *why = "actor " + std::to_string(a) + " is not an automorphism at (" +
                                   std::to_string(x) + "," + std::to_string(y) + ")";
                        return false;
                    }
        return true;
    }

private:
    GroupPtr actor_;
    GroupPtr target_;
    std::vector<std::vector<Elt>> table_;
};

/* ------------------------------------------------------------------ */
/* Quotients, materialized subgroups, semidirect products              */
/* ------------------------------------------------------------------ */

/* Coset representatives are the minimal element index in each coset, so
 * quotient layouts are deterministic and reproducible across runs. */
inline std::pair<GroupPtr, Homomorphism> quotient(const GroupPtr& g, const Subgroup& n) {
    if (auto w = normality_witness(n))
        throw Error(ErrKind::NotNormal, "conjugation witness (t=" + std::to_string(w->first) +
                                            ", x=" + std::to_string(w->second) + ")");
    std::vector<Elt> rep_of(g->order());
    std::vector<Elt> reps;
    std::vector<bool> seen(g->order(), false);
    for (Elt x = 0; x < g->order(); ++x) {
        if (seen[x]) continue;
        Elt r = x; /* minimal: iteration order is ascending */
        reps.push_back(r);
        for (Elt h : n.members()) {
            Elt y = g->mul(x, h);
            seen[y] = true;
            rep_of[y] = r;
        }
    }
    std::unordered_map<Elt, Elt> idx;
    for (std::size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<Elt>(i);
    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (Elt r : reps) labels.push_back("[" + g->label(r) + "]");
    std::vector<std::vector<Elt>> table(reps.size(), std::vector<Elt>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            table[i][j] = idx.at(rep_of[g->mul(reps[i], reps[j])]);
    GroupPtr q = group_from_table(std::move(labels), idx.at(rep_of[g->identity()]), table);
    std::vector<Elt> proj(g->order());
    for (Elt x = 0; x < g->order(); ++x) proj[x] = idx.at(rep_of[x]);
    return {q, Homomorphism(g, q, std::move(proj), false)};
}

/* Subgroup as a group in its own right plus the inclusion map. */
inline std::pair<GroupPtr, Homomorphism> subgroup_as_group(const Subgroup& s) {
    const auto& g = *s.parent();
    const auto& mem = s.members();
    std::unordered_map<Elt, Elt> idx;
    for (std::size_t i = 0; i < mem.size(); ++i) idx[mem[i]] = static_cast<Elt>(i);
    std::vector<std::string> labels;
    labels.reserve(mem.size());
    for (Elt m : mem) labels.push_back(g.label(m));
    std::vector<std::vector<Elt>> table(mem.size(), std::vector<Elt>(mem.size()));
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = 0; j < mem.size(); ++j) table[i][j] = idx.at(g.mul(mem[i], mem[j]));
    GroupPtr sub = group_from_table(std::move(labels), idx.at(g.identity()), table);
    return {sub, Homomorphism(sub, s.parent(), mem, false)};
}

/* Semidirect product target x| actor. Materializes a table group below the
 * order cap; larger products stay pair-backed with on-demand multiplication. */
inline GroupPtr semidirect(const GroupAction& act, std::size_t order_cap = kDefaultOrderCap) {
    GroupPtr normal = act.target();
    GroupPtr actor = act.actor();
    auto fn = [act](Elt a, Elt x) { return act(a, x); };
    auto sd = std::make_shared<SemidirectGroup>(normal, actor, fn);
    if (sd->order() > order_cap) return sd;
    std::vector<std::string> labels(sd->order());
    for (Elt p = 0; p < sd->order(); ++p) labels[p] = sd->label(p);
    std::vector<std::vector<Elt>> table(sd->order(), std::vector<Elt>(sd->order()));
    for (Elt p = 0; p < sd->order(); ++p)
        for (Elt q = 0; q < sd->order(); ++q) table[p][q] = sd->mul(p, q);
    return group_from_table(std::move(labels), sd->identity(), table);
}

inline GroupPtr semidirect_lazy(GroupPtr normal, GroupPtr actor, std::function<Elt(Elt, Elt)> fn) {
    return std::make_shared<SemidirectGroup>(std::move(normal), std::move(actor), std::move(fn));
}

inline GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                               std::size_t order_cap = kDefaultOrderCap) {
    return semidirect(GroupAction::trivial(b, a), order_cap);
}

/* ------------------------------------------------------------------ */
/* Isomorphism search                                                  */
/* ------------------------------------------------------------------ */

namespace detail {

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<Elt> gen;           /* generating sequence of g */
    std::vector<std::uint32_t> go;  /* element orders in g */
    std::vector<std::uint32_t> ho;  /* element orders in h */

    /* partial map g-elt -> h-elt, kUnset when unknown */
    static constexpr Elt kUnset = static_cast<Elt>(-1);

    std::optional<std::vector<Elt>> run() {
        std::vector<Elt> map(g.order(), kUnset);
        std::vector<bool> used(h.order(), false);
        map[g.identity()] = h.identity();
        used[h.identity()] = true;
        if (extend(0, map, used)) return map;
        return std::nullopt;
    }

    bool extend(std::size_t gi, std::vector<Elt>& map, std::vector<bool>& used) {
        if (gi == gen.size()) return complete(map);
        Elt x = gen[gi];
        if (map[x] != kUnset) return extend(gi + 1, map, used);
        for (Elt y = 0; y < h.order(); ++y) {
            if (used[y] || ho[y] != go[x]) continue;
            auto saved_map = map;
            auto saved_used = used;
            if (assign(x, y, map, used) && extend(gi + 1, map, used)) return true;
            map = std::move(saved_map);
            used = std::move(saved_used);
        }
        return false;
    }

    /* propagate: close the partial map under multiplication */
    bool assign(Elt x, Elt y, std::vector<Elt>& map, std::vector<bool>& used) {
        if (map[x] != kUnset) return map[x] == y;
        if (used[y]) return false;
        map[x] = y;
        used[y] = true;
        std::vector<Elt> known;
        for (Elt a = 0; a < g.order(); ++a)
            if (map[a] != kUnset) known.push_back(a);
        for (std::size_t i = 0; i < known.size(); ++i)
            for (std::size_t j = 0; j < known.size(); ++j) {
                Elt a = known[i], b = known[j];
                Elt ab = g.mul(a, b);
                Elt img = h.mul(map[a], map[b]);
                if (map[ab] == kUnset) {
                    if (used[img]) return false;
                    if (go[ab] != ho[img]) return false;
                    map[ab] = img;
                    used[img] = true;
                    known.push_back(ab);
                } else if (map[ab] != img) {
                    return false;
                }
            }
        return true;
    }

    bool complete(std::vector<Elt>& map) {
        for (Elt a = 0; a < g.order(); ++a)
            if (map[a] == kUnset) return false; /* gen did not generate: cannot happen */
        for (Elt a = 0; a < g.order(); ++a)
            for (Elt b = 0; b < g.order(); ++b)
                if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
        return true;
    }
};

}  // namespace detail

inline std::vector<Elt> generating_sequence(const GroupPtr& g) {
    std::vector<Elt> gens;
    Subgroup cur = trivial_subgroup(g);
    while (cur.order() < g->order()) {
        for (Elt x = 0; x < g->order(); ++x)
            if (!cur.contains(x)) {
                gens.push_back(x);
                break;
            }
        cur = subgroup_closure(g, gens);
    }
    return gens;
}

inline std::optional<Homomorphism> is_isomorphic_small(const GroupPtr& g, const GroupPtr& h,
                                                       std::size_t order_cap = kDefaultOrderCap) {
    if (g->order() > order_cap || h->order() > order_cap)
        throw Error(ErrKind::OrderCapExceeded, "isomorphism search capped at order " +
                                                   std::to_string(order_cap));
    if (g->order() != h->order()) return std::nullopt;
    /* cheap invariant: element order multiset */
    std::vector<std::uint32_t> go(g->order()), ho(h->order());
    for (Elt a = 0; a < g->order(); ++a) go[a] = g->element_order(a);
    for (Elt a = 0; a < h->order(); ++a) ho[a] = h->element_order(a);
    {
        auto gs = go, hs = ho;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return std::nullopt;
    }
    detail::IsoSearch search{*g, *h, generating_sequence(g), go, ho};
    auto map = search.run();
    if (!map) return std::nullopt;
    return Homomorphism(g, h, std::move(*map), false);
}

}  // namespace hdg
