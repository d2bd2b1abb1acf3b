#include "doctest.h"

#include "scm/complex.hpp"
#include "scm/generators.hpp"

using namespace scm;

namespace {

SimplicialComplex path34() {
    return from_facets({Face{1, 2, 3}, Face{3, 4}}, {1, 2, 3, 4});
}

// brute-force face set over the ground power set, for cross-checks
std::set<Face> brute_face_set(const SimplicialComplex& cx) {
    std::set<Face> out;
    const auto& g = cx.ground_set();
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (mask & (1u << i)) sub.push_back(g[i]);
        Face f(sub);
        for (const Face& k : cx.facets())
            if (f.subset_of(k)) {
                out.insert(f);
                break;
            }
    }
    return out;
}

} // namespace

TEST_CASE("face invariants") {
    CHECK_THROWS(Face({1, 1}));
    CHECK_THROWS(Face({-1}));
    Face f{3, 1, 2};
    CHECK(f.vertices() == std::vector<int>{1, 2, 3});
    CHECK(f.dim() == 2);
    CHECK(Face{}.dim() == -1);
    CHECK(Face{1, 2}.subset_of(Face{1, 2, 3}));
    CHECK(face_union(Face{1, 3}, Face{2}) == Face{1, 2, 3});
    CHECK(face_intersection(Face{1, 2}, Face{2, 3}) == Face{2});
    CHECK(face_difference(Face{1, 2, 3}, Face{2}) == Face{1, 3});
    CHECK(Face{1, 2} < Face{3, 4}); // lexicographic on vertex sequences
}

TEST_CASE("from_facets removes dominated and duplicate faces") {
    SimplicialComplex cx = from_facets({Face{1, 2}, Face{1}, Face{1, 2}}, {1, 2});
    CHECK(cx.facets() == std::vector<Face>{Face{1, 2}});

    CHECK(from_facets({}, {}).is_void());
    CHECK(from_facets({Face{}}, {}).is_empty_complex());

    SimplicialComplex two = path34();
    CHECK(two.facets() == std::vector<Face>{Face{1, 2, 3}, Face{3, 4}});
    CHECK(two.dim() == 2);
    CHECK(!two.is_pure());

    CHECK_THROWS(from_facets({Face{5}}, {1, 2}));
}

TEST_CASE("degenerate complexes") {
    SimplicialComplex v = from_facets({}, {1, 2});
    CHECK(v.is_void());
    CHECK(v.dim() == kVoidDim);
    CHECK(!v.contains(Face{}));
    SimplicialComplex e = from_facets({Face{}}, {1, 2});
    CHECK(e.is_empty_complex());
    CHECK(e.dim() == -1);
    CHECK(e.contains(Face{}));
    CHECK(e.is_pure());
}

TEST_CASE("membership is the downward closure") {
    SimplicialComplex cx = path34();
    for (const Face& f : brute_face_set(cx)) CHECK(cx.contains(f));
    CHECK(!cx.contains(Face{1, 4}));
    CHECK(!cx.contains(Face{2, 4}));
    CHECK(cx.contains(Face{}));
    // every subset of every facet answers true
    for (const Face& facet : cx.facets())
        for (std::uint32_t mask = 0; mask < (1u << facet.card()); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < facet.card(); ++i)
                if (mask & (1u << i)) sub.push_back(facet.vertices()[i]);
            CHECK(cx.contains(Face(sub)));
        }
}

TEST_CASE("all_faces agrees with brute force") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        SimplicialComplex cx = generate_random_complex(5, 0.5, seed);
        auto faces = cx.all_faces();
        std::set<Face> got(faces.begin(), faces.end());
        CHECK(got == brute_face_set(cx));
    }
}

TEST_CASE("link") {
    SimplicialComplex cx = path34();
    CHECK(link(cx, Face{}) == cx);
    SimplicialComplex lk3 = link(cx, Face{3});
    CHECK(lk3.facets() == std::vector<Face>{Face{1, 2}, Face{4}});
    CHECK(lk3.ground_set() == std::vector<int>{1, 2, 4});
    // brute-force: faces G with G ∪ {3} a face, G disjoint from {3}
    std::set<Face> expected;
    for (const Face& f : brute_face_set(cx))
        if (!f.contains(3) && cx.contains(face_union(f, Face{3})))
            expected.insert(f);
    auto got_list = lk3.all_faces();
    std::set<Face> got(got_list.begin(), got_list.end());
    CHECK(got == expected);
    // link of a facet is EMPTY
    CHECK(link(cx, Face{3, 4}).is_empty_complex());
    CHECK_THROWS(link(cx, Face{1, 4}));
}

TEST_CASE("generated_above") {
    SimplicialComplex cx = path34();
    CHECK(generated_above(cx, 2).facets() == std::vector<Face>{Face{1, 2, 3}});
    CHECK(generated_above(cx, 0) == cx);
    CHECK(generated_above(cx, 3).is_void());
    CHECK(generated_above(from_facets({Face{}}, {}), 0).is_void());
}

TEST_CASE("pure_skeleton") {
    SimplicialComplex cx = path34();
    SimplicialComplex ps = pure_skeleton(cx, 1);
    CHECK(ps.facets() ==
          std::vector<Face>{Face{1, 2}, Face{1, 3}, Face{2, 3}, Face{3, 4}});
    SimplicialComplex pure = from_facets({Face{1, 2}, Face{2, 3}}, {1, 2, 3});
    CHECK(pure_skeleton(pure, 1) == pure);
    SimplicialComplex pts = pure_skeleton(cx, 0);
    CHECK(pts.facets() ==
          std::vector<Face>{Face{1}, Face{2}, Face{3}, Face{4}});
    CHECK(pure_skeleton(cx, -1).is_empty_complex());
    CHECK_THROWS(pure_skeleton(cx, 3));
}

TEST_CASE("facet_layer") {
    SimplicialComplex cx = path34();
    CHECK(facet_layer(cx, 1).facets() == std::vector<Face>{Face{3, 4}});
    CHECK(facet_layer(cx, 2) == generated_above(cx, 2));
    CHECK(facet_layer(cx, 0).is_void());
}

TEST_CASE("skeleton") {
    SimplicialComplex cx = path34();
    CHECK(skeleton(cx, 5) == cx);
    SimplicialComplex full = full_simplex({1, 2, 3});
    CHECK(skeleton(full, 1).facets() ==
          std::vector<Face>{Face{1, 2}, Face{1, 3}, Face{2, 3}});
    CHECK(skeleton(cx, -1).is_empty_complex());
    CHECK(skeleton(cx, 1).facets() ==
          std::vector<Face>{Face{1, 2}, Face{1, 3}, Face{2, 3}, Face{3, 4}});
}

TEST_CASE("join") {
    SimplicialComplex pt1 = from_facets({Face{1}}, {1});
    SimplicialComplex pt2 = from_facets({Face{2}}, {2});
    CHECK(join(pt1, pt2).facets() == std::vector<Face>{Face{1, 2}});

    SimplicialComplex cx = path34();
    SimplicialComplex e = from_facets({Face{}}, {});
    CHECK(join(cx, e) == cx);

    SimplicialComplex a = from_facets({Face{1}, Face{2}}, {1, 2});
    SimplicialComplex b = from_facets({Face{3}, Face{4}}, {3, 4});
    SimplicialComplex cycle = join(a, b);
    CHECK(cycle.facets() == std::vector<Face>{Face{1, 3}, Face{1, 4},
                                              Face{2, 3}, Face{2, 4}});
    CHECK(cycle.facet_count() == a.facet_count() * b.facet_count());
    CHECK_THROWS(join(cx, from_facets({Face{3}}, {3})));
    CHECK(join(cx, from_facets({}, {9})).is_void());
}

TEST_CASE("induced") {
    SimplicialComplex cx = path34();
    CHECK(induced(cx, {1, 2, 3, 4}) == cx);
    SimplicialComplex sub = induced(cx, {1, 2, 4});
    CHECK(sub.facets() == std::vector<Face>{Face{1, 2}, Face{4}});
    CHECK(induced(cx, {}).is_empty_complex());
    CHECK_THROWS(induced(cx, {7}));
}

TEST_CASE("alexander dual") {
    SimplicialComplex cx = from_facets({Face{1, 2}, Face{3}}, {1, 2, 3});
    SimplicialComplex dual = alexander_dual(cx);
    CHECK(dual.facets() == std::vector<Face>{Face{1, 3}, Face{2, 3}});

    // brute-force definition: A is a dual face iff complement(A) not in cx
    std::set<Face> expected;
    for (std::uint32_t mask = 0; mask < 8u; ++mask) {
        std::vector<int> a, comp;
        for (int v = 1; v <= 3; ++v)
            (mask & (1u << (v - 1)) ? a : comp).push_back(v);
        if (!cx.contains(Face(comp))) expected.insert(Face(a));
    }
    auto got_list = dual.all_faces();
    CHECK(std::set<Face>(got_list.begin(), got_list.end()) == expected);

    // boundary of the simplex dualizes to EMPTY
    SimplicialComplex boundary = skeleton(full_simplex({1, 2, 3, 4}), 2);
    CHECK(alexander_dual(boundary).is_empty_complex());
    // degenerate pair
    CHECK(alexander_dual(full_simplex({1, 2, 3})).is_void());
    CHECK(alexander_dual(from_facets({}, {1, 2, 3})) == full_simplex({1, 2, 3}));
}

TEST_CASE("alexander dual is an involution") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        SimplicialComplex cx = generate_random_complex(5, 0.45, seed);
        CHECK(alexander_dual(alexander_dual(cx)) == cx);
    }
    SimplicialComplex e = from_facets({Face{}}, {1, 2, 3});
    CHECK(alexander_dual(alexander_dual(e)) == e);
}

TEST_CASE("cone") {
    CHECK(cone(from_facets({Face{}}, {}), 7).facets() ==
          std::vector<Face>{Face{7}});
    CHECK(cone(from_facets({}, {}), 7).facets() == std::vector<Face>{Face{7}});
    SimplicialComplex hollow = skeleton(full_simplex({1, 2, 3}), 1);
    SimplicialComplex c = cone(hollow, 9);
    CHECK(c.facet_count() == 3);
    CHECK(c.dim() == 2);
    CHECK_THROWS(cone(hollow, 2));
}

TEST_CASE("intersect matches face-set intersection") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SimplicialComplex a = generate_random_complex(5, 0.5, seed);
        SimplicialComplex b = generate_random_complex(5, 0.5, seed + 100);
        SimplicialComplex meet = intersect(a, b);
        std::set<Face> fa = brute_face_set(a);
        std::set<Face> fb = brute_face_set(b);
        std::set<Face> expected;
        for (const Face& f : fa)
            if (fb.count(f)) expected.insert(f);
        auto got_list = meet.all_faces();
        std::set<Face> got(got_list.begin(), got_list.end());
        if (meet.is_void()) got.clear();
        CHECK(got == expected);
    }
}

TEST_CASE("complete balancedness and type selection") {
    // order complex of a length-2 chain poset, by hand: chain a<b<c
    SimplicialComplex chain = full_simplex({1, 2, 3});
    VertexColoring rank_color;
    rank_color.color = {{1, 0}, {2, 1}, {3, 2}};
    CHECK(is_completely_balanced(chain, rank_color));
    SimplicialComplex mid = type_selected(chain, rank_color, {1});
    CHECK(mid.facets() == std::vector<Face>{Face{2}});

    VertexColoring bad;
    bad.color = {{1, 0}, {2, 0}, {3, 0}};
    SimplicialComplex edge = from_facets({Face{1, 2}}, {1, 2});
    VertexColoring both_zero;
    both_zero.color = {{1, 0}, {2, 0}};
    CHECK(!is_completely_balanced(edge, both_zero));
    CHECK(is_completely_balanced(from_facets({Face{}}, {}), VertexColoring{}));

    CHECK(type_selected(chain, rank_color, {0, 1, 2}) == chain);
    CHECK(type_selected(chain, rank_color, {}).is_empty_complex());
    CHECK_THROWS(type_selected(edge, both_zero, {0}));
}

TEST_CASE("structural identities on random complexes") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimplicialComplex cx = generate_random_complex(6, 0.5, seed);
        const int d = cx.dim();
        for (int m = 0; m <= d; ++m) {
            // generated_above as the union of facet layers
            std::vector<Face> gens;
            for (int j = m; j <= d; ++j)
                for (const Face& f : facet_layer(cx, j).facets())
                    gens.push_back(f);
            CHECK(generated_above(cx, m) == from_facets(gens, cx.ground_set()));
        }
        for (int r = 0; r <= d; ++r)
            CHECK(pure_skeleton(cx, r) == skeleton(generated_above(cx, r), r));
    }
}

TEST_CASE("link and induced commute") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SimplicialComplex cx = generate_random_complex(6, 0.5, seed);
        Rng rng(seed + 55);
        auto faces = cx.all_faces();
        const Face f = faces[static_cast<std::size_t>(
            rng.next_int(0, static_cast<int>(faces.size()) - 1))];
        std::vector<int> a;
        for (int v : cx.ground_set())
            if (!f.contains(v) && rng.next_bool(0.6)) a.push_back(v);
        std::vector<int> a_union_f = a;
        for (int v : f.vertices()) a_union_f.push_back(v);
        SimplicialComplex inner = induced(cx, a_union_f);
        if (!inner.contains(f)) continue;
        CHECK(induced(link(cx, f), a) == link(inner, f));
    }
}

TEST_CASE("minimal nonfaces") {
    SimplicialComplex cx = from_facets({Face{1, 2}, Face{3}}, {1, 2, 3});
    CHECK(minimal_nonfaces(cx) == std::vector<Face>{Face{1, 3}, Face{2, 3}});
    CHECK(minimal_nonfaces(full_simplex({1, 2})).empty());
    SimplicialComplex hollow = skeleton(full_simplex({1, 2, 3}), 1);
    CHECK(minimal_nonfaces(hollow) == std::vector<Face>{Face{1, 2, 3}});
    // reconstruction round-trip
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        SimplicialComplex r = generate_random_complex(5, 0.5, seed);
        CHECK(complex_from_minimal_nonfaces(minimal_nonfaces(r),
                                            r.ground_set()) == r);
    }
}
