#include "doctest.h"

#include "fixtures.hpp"
#include "scm/generators.hpp"
#include "scm/homology.hpp"
#include "scm/poset.hpp"

using namespace scm;

namespace {

const CoefficientSpec Z = CoefficientSpec::integers();

// chains 0<a and 0<b<c joined at the bottom: the semipure fan
FinitePoset semipure_fan() {
    // 0 = bottom, 1 = a, 2 = b, 3 = c
    return FinitePoset::from_covers({0, 1, 2, 3}, {{0, 1}, {0, 2}, {2, 3}});
}

FinitePoset boolean_lattice(int n) {
    std::vector<int> elems;
    std::vector<std::pair<int, int>> covers;
    for (int mask = 0; mask < (1 << n); ++mask) {
        elems.push_back(mask);
        for (int b = 0; b < n; ++b)
            if (!(mask & (1 << b))) covers.emplace_back(mask, mask | (1 << b));
    }
    return FinitePoset::from_covers(elems, covers);
}

// purity of every principal ideal, straight from the definition
bool semipure_by_definition(const FinitePoset& p) {
    FinitePoset based = p.minimum() ? p : adjoin_bounds(p, true, false).poset;
    for (int x : based.elements())
        if (!order_complex(principal_ideal(based, x)).is_pure()) return false;
    return true;
}

} // namespace

TEST_CASE("poset construction and validation") {
    CHECK_THROWS(FinitePoset::from_covers({1, 2}, {{1, 2}, {2, 1}}));
    // redundant cover: 1<3 implied by 1<2<3
    CHECK_THROWS(FinitePoset::from_covers({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}));
    FinitePoset p = FinitePoset::from_relations({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(p.less(1, 3));
    CHECK(!p.less(3, 1));
    CHECK(p.leq(2, 2));
    CHECK(p.height(3) == 2);
    CHECK(p.length() == 2);
}

TEST_CASE("order complex") {
    FinitePoset antichain = FinitePoset::from_covers({1, 2, 3}, {});
    SimplicialComplex pts = order_complex(antichain);
    CHECK(pts.facets() == std::vector<Face>{Face{1}, Face{2}, Face{3}});

    FinitePoset chain = FinitePoset::from_covers({1, 2, 3}, {{1, 2}, {2, 3}});
    CHECK(order_complex(chain) == full_simplex({1, 2, 3}));

    // proper part of B_3 is a hexagon
    FinitePoset b3 = boolean_lattice(3);
    FinitePoset proper = open_interval(b3, 0, 7);
    SimplicialComplex hex = order_complex(proper);
    CHECK(hex.facet_count() == 6);
    CHECK(reduced_homology(hex, Z).betti_at(1) == 1);

    CHECK(order_complex(FinitePoset()).is_empty_complex());
}

TEST_CASE("face poset") {
    SimplicialComplex edge = from_facets({Face{1, 2}}, {1, 2});
    FacePoset fp = face_poset(edge);
    CHECK(fp.poset.size() == 3);
    CHECK(fp.poset.maximal_elements().size() == 1);
    CHECK(fp.poset.minimal_elements().size() == 2);

    SimplicialComplex pt = from_facets({Face{1}}, {1});
    CHECK(face_poset(pt).poset.size() == 1);

    // barycentric subdivision of the full triangle: 7 vertices, 12 edges,
    // 6 triangles
    SimplicialComplex sd = order_complex(face_poset(full_simplex({1, 2, 3})).poset);
    CHECK(sd.faces_of_dim(0).size() == 7);
    CHECK(sd.faces_of_dim(1).size() == 12);
    CHECK(sd.faces_of_dim(2).size() == 6);

    CHECK_THROWS(face_poset(from_facets({}, {})));
    CHECK_THROWS(face_poset(from_facets({Face{}}, {})));
}

TEST_CASE("barycentric subdivision preserves homology") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        SimplicialComplex cx = generate_random_complex(5, 0.5, seed);
        if (cx.is_void() || cx.is_empty_complex()) continue;
        SimplicialComplex sd = order_complex(face_poset(cx).poset);
        CHECK(reduced_homology(cx, Z) == reduced_homology(sd, Z));
    }
}

TEST_CASE("adjoin bounds") {
    FinitePoset antichain = FinitePoset::from_covers({1, 2}, {});
    BoundedPoset diamond = adjoin_bounds(antichain, true, true);
    CHECK(diamond.poset.size() == 4);
    CHECK(diamond.poset.is_bounded());
    CHECK(diamond.poset.length() == 2);

    FinitePoset chain = FinitePoset::from_covers({5, 6}, {{5, 6}});
    BoundedPoset longer = adjoin_bounds(chain, true, false);
    CHECK(longer.poset.length() == chain.length() + 1);
    CHECK(adjoin_bounds(chain, true, true).poset.length() == chain.length() + 2);
}

TEST_CASE("intervals and filters") {
    FinitePoset b3 = boolean_lattice(3);
    CHECK(closed_interval(b3, 1, 1).size() == 1);
    FinitePoset mid = open_interval(b3, 0, 3); // between bottom and {1,2}
    CHECK(mid.size() == 2);
    CHECK(mid.covers().empty());
    CHECK(principal_filter(b3, 3).size() == 2);
    CHECK(strict_filter(b3, 3).size() == 1);
    CHECK(principal_ideal(b3, 3).size() == 4);
    CHECK(strict_ideal(b3, 3).size() == 3);
    CHECK_THROWS(open_interval(b3, 1, 2));
}

TEST_CASE("ordinal sum") {
    FinitePoset a = FinitePoset::from_covers({1}, {});
    FinitePoset b = FinitePoset::from_covers({2}, {});
    FinitePoset sum = ordinal_sum(a, b);
    CHECK(sum.covers() == std::vector<std::pair<int, int>>{{1, 2}});

    CHECK(ordinal_sum(FinitePoset(), b) == b);
    CHECK(ordinal_sum(a, FinitePoset()) == a);
    CHECK_THROWS(ordinal_sum(a, a));

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        FinitePoset p = generate_random_poset(4, 0.4, seed);
        FinitePoset q = generate_random_poset(3, 0.4, seed + 50);
        std::vector<int> shifted_elems;
        std::vector<std::pair<int, int>> shifted_covers;
        for (int x : q.elements()) shifted_elems.push_back(x + 100);
        for (auto [u, v] : q.covers()) shifted_covers.emplace_back(u + 100, v + 100);
        FinitePoset qs = FinitePoset::from_covers(shifted_elems, shifted_covers);
        CHECK(order_complex(ordinal_sum(p, qs)) ==
              join(order_complex(p), order_complex(qs)));
    }
}

TEST_CASE("product") {
    FinitePoset two = FinitePoset::from_covers({0, 1}, {{0, 1}});
    FinitePoset square = product(two, two);
    CHECK(square.size() == 4);
    CHECK(square.is_bounded());
    CHECK(square.length() == 2);
    CHECK(posets_isomorphic(square, boolean_lattice(2)));

    FinitePoset single = FinitePoset::from_covers({9}, {});
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        FinitePoset p = generate_random_poset(4, 0.4, seed);
        CHECK(posets_isomorphic(product(p, single), p));
        FinitePoset q = generate_random_poset(3, 0.4, seed + 9);
        CHECK(product(p, q).size() == p.size() * q.size());
    }
}

TEST_CASE("interval poset") {
    FinitePoset antichain = FinitePoset::from_covers({1, 2, 3}, {});
    IntervalPoset ia = interval_poset(antichain);
    CHECK(ia.poset.size() == 3);
    CHECK(ia.poset.covers().empty());

    FinitePoset two = FinitePoset::from_covers({0, 1}, {{0, 1}});
    IntervalPoset i2 = interval_poset(two);
    CHECK(i2.poset.size() == 3);
    CHECK(i2.poset.maximal_elements().size() == 1);

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        FinitePoset p = generate_random_poset(4, 0.4, seed);
        std::size_t comparable_pairs = 0;
        for (int x : p.elements())
            for (int y : p.elements())
                if (p.leq(x, y)) ++comparable_pairs;
        CHECK(interval_poset(p).poset.size() == comparable_pairs);
        // Int(P*) is isomorphic to Int(P)
        CHECK(posets_isomorphic(interval_poset(p.dual()).poset,
                                interval_poset(p).poset));
    }
}

TEST_CASE("rank profile") {
    FinitePoset chain = FinitePoset::from_covers({0, 1, 2}, {{0, 1}, {1, 2}});
    RankProfile rp = rank_profile(chain);
    CHECK(rp.has_minimum);
    CHECK(rp.rank.at(0) == 0);
    CHECK(rp.rank.at(1) == 1);
    CHECK(rp.rank.at(2) == 2);
    CHECK(rp.length == 2);
    REQUIRE(rp.corank.has_value());
    CHECK(rp.corank->at(0) == 2);
    CHECK(rp.corank->at(2) == 0);

    RankProfile fan = rank_profile(semipure_fan());
    CHECK(fan.rank.at(0) == 0);
    CHECK(fan.rank.at(1) == 1);
    CHECK(fan.rank.at(3) == 2);
    CHECK(!fan.corank.has_value()); // not bounded

    // atoms get rank 1 when the minimum is missing
    FinitePoset no_min = FinitePoset::from_covers({1, 2, 3}, {{1, 3}, {2, 3}});
    RankProfile rp2 = rank_profile(no_min);
    CHECK(!rp2.has_minimum);
    CHECK(rp2.rank.at(1) == 1);
    CHECK(rp2.rank.at(3) == 2);

    // corank of a pure bounded poset is the complementary rank
    FinitePoset b3 = boolean_lattice(3);
    RankProfile rb = rank_profile(b3);
    REQUIRE(rb.corank.has_value());
    for (int x : b3.elements())
        CHECK(rb.corank->at(x) == rb.length - rb.rank.at(x));
}

TEST_CASE("semipurity and purity") {
    CHECK(is_semipure(semipure_fan()));
    CHECK(!is_pure_poset(semipure_fan()));
    CHECK(is_pure_poset(boolean_lattice(3)));

    // some [0,x] with maximal chains of two lengths
    FinitePoset bad = FinitePoset::from_covers(
        {0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
    CHECK(!is_semipure(bad));

    FinitePoset bad2 = FinitePoset::from_relations(
        {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    CHECK(!is_semipure(bad2));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        FinitePoset p = generate_random_poset(5, 0.35, seed);
        CHECK(is_semipure(p) == semipure_by_definition(p));
        CHECK(is_pure_poset(p) == order_complex(p).is_pure());
    }
}

TEST_CASE("rank selection") {
    FinitePoset b3 = boolean_lattice(3);
    CHECK(rank_selected(b3, {0, 1, 2, 3}) == b3);
    FinitePoset mids = rank_selected(b3, {1, 2});
    SimplicialComplex hex = order_complex(mids);
    CHECK(hex.facet_count() == 6);
    CHECK(reduced_homology(hex, Z).betti_at(1) == 1);
    FinitePoset bottom = rank_selected(b3, {0});
    CHECK(bottom.size() == 1);
    CHECK_THROWS(rank_selected(b3, {7}));

    // selection on a minimum-free poset goes through the adjoined bottom
    FinitePoset no_min = FinitePoset::from_covers({1, 2, 3}, {{1, 3}, {2, 3}});
    FinitePoset atoms = rank_selected(no_min, {1});
    CHECK(atoms.size() == 2);
    FinitePoset with_zero = rank_selected(no_min, {0, 1});
    CHECK(with_zero.size() == 3); // the virtual bottom is kept when selected
    CHECK(with_zero.minimum().has_value());
}

TEST_CASE("birank selection and truncation") {
    FinitePoset b3 = boolean_lattice(3);
    CHECK(birank_selected(b3, {0, 1, 2, 3}, {0, 1, 2, 3}) == b3);
    // truncation by S = {1,2,3}, T = {1,2,3} removes both bounds
    FinitePoset trunc = birank_selected(b3, {1, 2, 3}, {1, 2, 3});
    CHECK(posets_isomorphic(trunc, open_interval(b3, 0, 7)));
    // corank identity on a pure bounded poset
    FinitePoset by_corank = birank_selected(b3, {0, 1, 2, 3}, {1});
    FinitePoset by_rank = rank_selected(b3, {2});
    CHECK(by_corank == by_rank);
    CHECK_THROWS(birank_selected(semipure_fan(), {0}, {0}));
}

TEST_CASE("max deletion") {
    FinitePoset fan = semipure_fan();
    CHECK(max_deleted(fan, 10) == fan);
    FinitePoset cut = max_deleted(fan, 2);
    CHECK(cut.size() == 3); // only the rank-2 maximal element goes
    CHECK(!cut.has_element(3));

    FinitePoset hat = adjoin_bounds(FinitePoset::from_covers({1, 2}, {}), true, false).poset;
    FinitePoset only_bottom = max_deleted(hat, 0);
    CHECK(only_bottom.size() == 1);
    CHECK(only_bottom.minimum().has_value());
}

TEST_CASE("layer ideals") {
    FinitePoset fan = semipure_fan();
    CHECK(maxrank_ideal(fan, 0) == fan);
    FinitePoset top = maxrank_ideal(fan, 2);
    CHECK(top.size() == 3); // 0 < b < c survives
    CHECK(!top.has_element(1));
    FinitePoset layer1 = rank_generated_ideal(fan, 1);
    CHECK(layer1.size() == 3); // 0, a, b

    FinitePoset b3 = boolean_lattice(3);
    CHECK(rank_generated_ideal(b3, 3) == b3);
    CHECK(maxrank_ideal(b3, 3) == b3);

    FinitePoset bad = FinitePoset::from_covers(
        {0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
    CHECK_THROWS(rank_generated_ideal(bad, 1));

    // the complex identity defining the grading
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        FinitePoset p = generate_semipure_poset(6, seed);
        for (int j = 0; j <= p.length(); ++j) {
            CHECK(order_complex(maxrank_ideal(p, j)) ==
                  generated_above(order_complex(p), j));
        }
    }
}

TEST_CASE("rank selection matches type selection of the order complex") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        FinitePoset p = generate_semipure_poset(6, seed);
        if (p.minimum()) continue; // compare on minimum-free instances
        SimplicialComplex cx = order_complex(p);
        VertexColoring coloring;
        for (int x : p.elements()) coloring.color[x] = p.height(x);
        if (!is_completely_balanced(cx, coloring)) continue;
        const int len = p.length();
        for (std::uint32_t mask = 1; mask < (1u << (len + 1)); ++mask) {
            std::set<int> ranks, colors;
            for (int t = 0; t <= len; ++t)
                if (mask & (1u << t)) {
                    ranks.insert(t + 1); // selection ranks shift by one
                    colors.insert(t);
                }
            CHECK(order_complex(rank_selected(p, ranks)) ==
                  type_selected(cx, coloring, colors));
        }
    }
}

TEST_CASE("poset isomorphism") {
    FinitePoset a = boolean_lattice(2);
    FinitePoset b = FinitePoset::from_covers({10, 20, 30, 40},
                                             {{10, 20}, {10, 30}, {20, 40}, {30, 40}});
    CHECK(posets_isomorphic(a, b));
    FinitePoset c = FinitePoset::from_covers({1, 2, 3, 4},
                                             {{1, 2}, {2, 3}, {3, 4}});
    CHECK(!posets_isomorphic(a, c));
}
