// Shared homology fixtures.
#pragma once

#include "scm/complex.hpp"

namespace fixtures {

/// Boundary of the simplex on d+2 vertices: the d-sphere.
inline scm::SimplicialComplex sphere(int d) {
    std::vector<int> verts;
    for (int v = 1; v <= d + 2; ++v) verts.push_back(v);
    return scm::skeleton(scm::full_simplex(verts), d);
}

/// The 7-vertex triangulation of the torus: triangles {i, i+1, i+3} and
/// {i, i+2, i+3} cyclically.
inline scm::SimplicialComplex torus7() {
    std::vector<scm::Face> facets;
    for (int i = 0; i < 7; ++i) {
        auto v = [&](int k) { return (i + k) % 7 + 1; };
        facets.push_back(scm::Face{v(0), v(1), v(3)});
        facets.push_back(scm::Face{v(0), v(2), v(3)});
    }
    return scm::from_facets(facets, {1, 2, 3, 4, 5, 6, 7});
}

/// The 6-vertex triangulation of the real projective plane (every edge in
/// exactly two triangles, Euler characteristic 1).
inline scm::SimplicialComplex rp2_6() {
    return scm::from_facets(
        {scm::Face{1, 2, 3}, scm::Face{1, 2, 4}, scm::Face{1, 3, 5},
         scm::Face{1, 4, 6}, scm::Face{1, 5, 6}, scm::Face{2, 3, 6},
         scm::Face{2, 4, 5}, scm::Face{2, 5, 6}, scm::Face{3, 4, 5},
         scm::Face{3, 4, 6}},
        {1, 2, 3, 4, 5, 6});
}

} // namespace fixtures
