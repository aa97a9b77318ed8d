#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hdg/simplicial.hpp"

using namespace hdg;

TEST_CASE("constant simplicial group passes the identity check") {
    auto t = fx::constant_simplicial(fx::symmetric_group(3), 3);
    auto rep = check_simplicial(t);
    CHECK(rep.pass());
}

TEST_CASE("nerve truncation passes the identity check") {
    auto t = fx::nerve_truncation(cyclic_group(2), 4);
    auto rep = check_simplicial(t);
    if (!rep.pass())
        for (const auto& w : rep.witnesses)
            UNSCOPED_INFO(w.axiom << " " << w.lhs << " != " << w.rhs);
    CHECK(rep.pass());
}

TEST_CASE("swapping two face maps breaks an identity with a witness") {
    auto t = fx::nerve_truncation(cyclic_group(2), 3);
    std::swap(t.faces[1][0], t.faces[1][2]); /* d_0^2 <-> d_2^2 */
    auto rep = check_simplicial(t);
    CHECK_FALSE(rep.pass());
    bool has_dd = false;
    for (const auto& w : rep.witnesses)
        if (w.axiom.find("d_i d_j") != std::string::npos ||
            w.axiom.find("d_j s_j") != std::string::npos ||
            w.axiom.find("s_{j-1}") != std::string::npos)
            has_dd = true;
    CHECK(has_dd);
}

TEST_CASE("moore complex of a constant simplicial group") {
    auto g = fx::symmetric_group(3);
    auto t = fx::constant_simplicial(g, 3);
    auto m = moore_complex(t);
    CHECK(m.terms[0].order() == 6);
    CHECK(m.terms[1].order() == 1);
    CHECK(m.terms[2].order() == 1);
    CHECK(m.terms[3].order() == 1);
    CHECK(moore_length(t) == 0);
}

TEST_CASE("moore complex of the nerve") {
    auto t = fx::nerve_truncation(cyclic_group(2), 3);
    auto m = moore_complex(t);
    CHECK(m.terms[0].order() == 1);
    CHECK(m.terms[1].order() == 2); /* ker d_0 at level 1 */
    CHECK(m.terms[2].order() == 1);
    CHECK(m.terms[3].order() == 1);
    CHECK(moore_length(t) == 1);
}

TEST_CASE("degenerate subgroup") {
    SECTION("constant: everything is degenerate") {
        auto t = fx::constant_simplicial(cyclic_group(4), 3);
        for (int n = 1; n <= 3; ++n) CHECK(degenerate_subgroup(t, n).is_whole());
    }
    SECTION("nerve of C2: D_n is proper exactly at n = 1") {
        auto t = fx::nerve_truncation(cyclic_group(2), 3);
        CHECK(degenerate_subgroup(t, 1).order() == 1);
        CHECK(t.levels[1]->order() == 2);
        /* at level 2 the degeneracies generate everything: NG_2 = 1 */
        CHECK(degenerate_subgroup(t, 2).is_whole());
        CHECK(degenerate_subgroup(t, 3).is_whole());
    }
    SECTION("D_n is normal on these fixtures") {
        auto t = fx::rich_simplicial();
        for (int n = 1; n <= 3; ++n) CHECK(is_normal(degenerate_subgroup(t, n)));
    }
}

TEST_CASE("coordinates: peel and recompose") {
    auto check_bijection = [](const TruncatedSimplicialGroup& t) {
        for (int n = 0; n <= t.k; ++n) {
            for (Elt x = 0; x < t.levels[n]->order(); ++x) {
                auto c = coordinates(t, n, x);
                CHECK(recompose(t, n, c) == x);
                /* membership: each coordinate lies in its Moore term */
                for (const auto& co : c) {
                    int lvl = n - static_cast<int>(co.alpha.size());
                    for (int i = 0; i < lvl; ++i)
                        CHECK(t.d(lvl, i)(co.value) == t.levels[lvl - 1]->identity());
                }
            }
        }
    };
    check_bijection(fx::constant_simplicial(fx::symmetric_group(3), 3));
    check_bijection(fx::nerve_truncation(cyclic_group(2), 4));
}

TEST_CASE("coordinates: order product identity") {
    auto t = fx::nerve_truncation(cyclic_group(2), 4);
    auto m = moore_complex(t);
    for (int n = 0; n <= 4; ++n) {
        auto coords = coordinates(t, n, t.levels[n]->identity());
        std::size_t prod = 1;
        for (const auto& co : coords) prod *= m.terms[n - co.alpha.size()].order();
        CHECK(prod == t.levels[n]->order());
        CHECK(coords.size() == (1u << n));
    }
}

TEST_CASE("degenerate element coordinates") {
    auto t = fx::nerve_truncation(cyclic_group(2), 3);
    /* x = s_0(g) at n = 1 has coordinates (e, g) */
    for (Elt g = 0; g < t.levels[0]->order(); ++g) {
        auto c = coordinates(t, 1, t.s(0, 0)(g));
        REQUIRE(c.size() == 2);
        CHECK(c[0].alpha.empty());
        CHECK(c[0].value == t.levels[1]->identity());
        CHECK(c[1].alpha == std::vector<int>{0});
        CHECK(c[1].value == g);
    }
    /* x in NG_1: coordinates (x, e) */
    auto m = moore_complex(t);
    for (Elt x : m.terms[1].members()) {
        auto c = coordinates(t, 1, x);
        CHECK(c[0].value == x);
        CHECK(c[1].value == t.levels[0]->identity());
    }
}

TEST_CASE("homotopy groups") {
    SECTION("constant on A: pi_1 = A, higher trivial") {
        auto g = fx::symmetric_group(3);
        auto t = fx::constant_simplicial(g, 3);
        auto h = homotopy_groups(t);
        REQUIRE(is_isomorphic_small(h.pi[1], g).has_value());
        for (int n = 2; n <= 4; ++n) CHECK(h.pi[n]->order() == 1);
    }
    SECTION("nerve of C2: pi_2 = C2 in paper indexing") {
        auto t = fx::nerve_truncation(cyclic_group(2), 3);
        auto h = homotopy_groups(t);
        /* paper indexing: pi_1 = NG_0/d_1 NG_1 = 1, pi_2 = ker d_1 cap NG_1 / d_2 NG_2 */
        CHECK(h.pi[1]->order() == 1);
        CHECK(h.pi[2]->order() == 2);
        CHECK(h.pi[3]->order() == 1);
    }
}
