#include "scm/complex.hpp"

#include <atomic>
#include <functional>

namespace scm {

namespace {

std::atomic<std::size_t> g_index_cap{std::size_t(1) << 20};

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Enumerates the downward closure of the facets into `out`, stopping early
// when the cap is exceeded.  Returns false on overflow.
bool enumerate_closure(const std::vector<Face>& facets,
                       std::unordered_set<Face, FaceHash>& out,
                       std::size_t cap) {
    for (const Face& k : facets) {
        const auto& vs = k.vertices();
        const std::size_t n = vs.size();
        if (n >= 28) return false; // subset count would dwarf any sane cap
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t(1) << i)) sub.push_back(vs[i]);
            out.insert(Face(std::move(sub)));
            if (out.size() > cap) return false;
        }
    }
    return true;
}

} // namespace

std::size_t SimplicialComplex::membership_index_cap() { return g_index_cap; }
void SimplicialComplex::set_membership_index_cap(std::size_t cap) {
    g_index_cap = cap;
}

bool SimplicialComplex::contains(const Face& f) const {
    std::call_once(index_->once, [this] {
        std::unordered_set<Face, FaceHash> closure;
        if (enumerate_closure(facets_, closure, membership_index_cap()))
            index_->faces = std::move(closure);
    });
    if (index_->faces) return index_->faces->count(f) > 0;
    for (const Face& k : facets_)
        if (f.subset_of(k)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::unordered_set<Face, FaceHash> closure;
    if (!enumerate_closure(facets_, closure, membership_index_cap()))
        throw std::length_error("all_faces: face count exceeds enumeration cap");
    std::vector<Face> out(closure.begin(), closure.end());
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.card() != b.card()) return a.card() < b.card();
        return a < b;
    });
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int r) const {
    std::set<Face> out;
    if (r < -1) return {};
    if (r == -1) {
        if (!is_void()) return {Face{}};
        return {};
    }
    const std::size_t k = static_cast<std::size_t>(r) + 1;
    for (const Face& facet : facets_) {
        const auto& vs = facet.vertices();
        if (vs.size() < k) continue;
        // enumerate k-subsets of the facet
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<int> sub(k);
            for (std::size_t i = 0; i < k; ++i) sub[i] = vs[idx[i]];
            out.insert(Face(std::move(sub)));
            // next combination
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == vs.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

std::string SimplicialComplex::to_string() const {
    if (is_void()) return "VOID";
    std::string s = "<";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (i) s += ',';
        s += facets_[i].to_string();
    }
    s += '>';
    return s;
}

SimplicialComplex from_facets(const std::vector<Face>& faces,
                              const std::vector<int>& ground_set) {
    SimplicialComplex cx;
    cx.ground_ = sorted_unique(ground_set);
    for (const Face& f : faces)
        for (int v : f.vertices())
            if (!std::binary_search(cx.ground_.begin(), cx.ground_.end(), v))
                throw std::invalid_argument(
                    "from_facets: vertex " + std::to_string(v) +
                    " outside ground set");

    std::vector<Face> maximal;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& g : faces) {
            if (f.subset_of(g) && f != g) { dominated = true; break; }
        }
        if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    cx.facets_ = std::move(maximal);
    return cx;
}

SimplicialComplex from_facets(const std::vector<Face>& faces) {
    std::vector<int> ground;
    for (const Face& f : faces)
        ground.insert(ground.end(), f.vertices().begin(), f.vertices().end());
    return from_facets(faces, ground);
}

SimplicialComplex full_simplex(const std::vector<int>& ground_set) {
    return from_facets({Face(ground_set)}, ground_set);
}

SimplicialComplex link(const SimplicialComplex& cx, const Face& f) {
    if (!cx.contains(f))
        throw std::invalid_argument("link: " + f.to_string() +
                                    " is not a face of the complex");
    std::vector<Face> gens;
    for (const Face& k : cx.facets())
        if (f.subset_of(k)) gens.push_back(face_difference(k, f));
    std::vector<int> ground;
    for (int v : cx.ground_set())
        if (!f.contains(v)) ground.push_back(v);
    return from_facets(gens, ground);
}

SimplicialComplex generated_above(const SimplicialComplex& cx, int m) {
    std::vector<Face> gens;
    for (const Face& k : cx.facets())
        if (k.dim() >= m) gens.push_back(k);
    return from_facets(gens, cx.ground_set());
}

SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int r) {
    if (cx.is_void() || r < -1 || r > cx.dim())
        throw std::invalid_argument("pure_skeleton: degree out of range");
    return from_facets(cx.faces_of_dim(r), cx.ground_set());
}

SimplicialComplex facet_layer(const SimplicialComplex& cx, int j) {
    std::vector<Face> gens;
    for (const Face& k : cx.facets())
        if (k.dim() == j) gens.push_back(k);
    return from_facets(gens, cx.ground_set());
}

SimplicialComplex skeleton(const SimplicialComplex& cx, int r) {
    if (r < -1) throw std::invalid_argument("skeleton: r must be >= -1");
    if (cx.is_void()) return cx;
    if (r >= cx.dim()) return cx;
    std::vector<Face> gens = cx.faces_of_dim(r);
    for (const Face& k : cx.facets())
        if (k.dim() < r) gens.push_back(k);
    return from_facets(gens, cx.ground_set());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (int v : a.ground_set())
        if (std::binary_search(b.ground_set().begin(), b.ground_set().end(), v))
            throw std::invalid_argument(
                "join: ground sets overlap at vertex " + std::to_string(v));
    std::vector<int> ground = a.ground_set();
    ground.insert(ground.end(), b.ground_set().begin(), b.ground_set().end());
    std::vector<Face> gens;
    gens.reserve(a.facet_count() * b.facet_count());
    for (const Face& f : a.facets())
        for (const Face& g : b.facets())
            gens.push_back(face_union(f, g));
    return from_facets(gens, ground);
}

SimplicialComplex induced(const SimplicialComplex& cx,
                          const std::vector<int>& vertex_subset) {
    std::vector<int> a = sorted_unique(vertex_subset);
    for (int v : a)
        if (!std::binary_search(cx.ground_set().begin(), cx.ground_set().end(), v))
            throw std::invalid_argument(
                "induced: vertex " + std::to_string(v) + " outside ground set");
    Face af(a);
    std::vector<Face> gens;
    for (const Face& k : cx.facets()) gens.push_back(face_intersection(k, af));
    return from_facets(gens, a);
}

std::vector<Face> minimal_transversals(const std::vector<Face>& edges,
                                       const std::vector<int>& vertices) {
    for (const Face& e : edges)
        if (e.empty()) return {}; // the empty edge cannot be hit
    // Incremental construction: maintain the minimal transversals of the
    // edges processed so far.
    std::vector<std::vector<int>> current = {{}};
    for (const Face& e : edges) {
        std::vector<std::vector<int>> next;
        for (const auto& t : current) {
            Face tf(t);
            if (!tf.disjoint_from(e)) {
                next.push_back(t);
                continue;
            }
            for (int v : e.vertices()) {
                std::vector<int> ext = t;
                ext.insert(std::lower_bound(ext.begin(), ext.end(), v), v);
                next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& x, const auto& y) {
                      if (x.size() != y.size()) return x.size() < y.size();
                      return x < y;
                  });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // prune non-minimal candidates
        std::vector<std::vector<int>> pruned;
        for (const auto& t : next) {
            Face tf(t);
            bool keep = true;
            for (const auto& s : pruned) {
                if (Face(s).subset_of(tf)) { keep = false; break; }
            }
            if (keep) pruned.push_back(t);
        }
        current = std::move(pruned);
    }
    (void)vertices;
    std::vector<Face> out;
    out.reserve(current.size());
    for (auto& t : current) out.push_back(Face(std::move(t)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx) {
    // A is a nonface iff A meets the complement of every facet, so the
    // minimal nonfaces are the minimal transversals of those complements.
    Face ground(cx.ground_set());
    std::vector<Face> complements;
    complements.reserve(cx.facet_count());
    for (const Face& k : cx.facets())
        complements.push_back(face_difference(ground, k));
    if (cx.is_void()) return {Face{}}; // nothing is a face, {} is minimal
    return minimal_transversals(complements, cx.ground_set());
}

SimplicialComplex complex_from_minimal_nonfaces(
    const std::vector<Face>& nonfaces, const std::vector<int>& ground_set) {
    // Faces avoid every nonface, so facets are complements of the minimal
    // transversals of the nonface family.
    Face ground((std::vector<int>(ground_set)));
    std::vector<Face> transversals = minimal_transversals(nonfaces, ground_set);
    if (transversals.empty() && !nonfaces.empty())
        return from_facets({}, ground_set); // {} itself is a nonface: VOID
    std::vector<Face> gens;
    gens.reserve(transversals.size());
    for (const Face& t : transversals)
        gens.push_back(face_difference(ground, t));
    if (nonfaces.empty()) return full_simplex(ground_set);
    return from_facets(gens, ground_set);
}

SimplicialComplex alexander_dual(const SimplicialComplex& cx) {
    // Minimal nonfaces of the dual are the complements of the facets.
    Face ground(cx.ground_set());
    std::vector<Face> dual_nonfaces;
    dual_nonfaces.reserve(cx.facet_count());
    for (const Face& k : cx.facets())
        dual_nonfaces.push_back(face_difference(ground, k));
    if (cx.is_void()) return full_simplex(cx.ground_set());
    return complex_from_minimal_nonfaces(dual_nonfaces, cx.ground_set());
}

SimplicialComplex cone(const SimplicialComplex& cx, int apex) {
    if (std::binary_search(cx.ground_set().begin(), cx.ground_set().end(), apex))
        throw std::invalid_argument("cone: apex already in ground set");
    std::vector<int> ground = cx.ground_set();
    ground.push_back(apex);
    if (cx.is_void()) return from_facets({Face{apex}}, ground);
    std::vector<Face> gens;
    gens.reserve(cx.facet_count());
    for (const Face& k : cx.facets())
        gens.push_back(face_union(k, Face{apex}));
    return from_facets(gens, ground);
}

SimplicialComplex intersect(const SimplicialComplex& a,
                            const SimplicialComplex& b) {
    // The faces of the intersection are exactly the subsets of pairwise
    // facet intersections.
    std::vector<int> ground = a.ground_set();
    ground.insert(ground.end(), b.ground_set().begin(), b.ground_set().end());
    std::vector<Face> gens;
    for (const Face& f : a.facets())
        for (const Face& g : b.facets())
            gens.push_back(face_intersection(f, g));
    if (a.is_void() || b.is_void()) gens.clear();
    return from_facets(gens, ground);
}

bool is_completely_balanced(const SimplicialComplex& cx,
                            const VertexColoring& coloring) {
    for (const Face& facet : cx.facets()) {
        std::set<int> colors;
        for (int v : facet.vertices()) colors.insert(coloring.at(v));
        if (colors.size() != facet.card()) return false;
        int expect = 0;
        for (int c : colors)
            if (c != expect++) return false;
    }
    return true;
}

SimplicialComplex type_selected(const SimplicialComplex& cx,
                                const VertexColoring& coloring,
                                const std::set<int>& colors) {
    if (!is_completely_balanced(cx, coloring))
        throw std::invalid_argument("type_selected: coloring is not completely balanced");
    std::vector<int> keep;
    for (int v : cx.ground_set())
        if (colors.count(coloring.at(v))) keep.push_back(v);
    return induced(cx, keep);
}

RelativePair::RelativePair(SimplicialComplex ambient_cx,
                           SimplicialComplex sub_cx)
    : ambient(std::move(ambient_cx)), sub(std::move(sub_cx)) {
    for (const Face& k : sub.facets())
        if (!ambient.contains(k))
            throw std::invalid_argument(
                "RelativePair: subcomplex face " + k.to_string() +
                " missing from the ambient complex");
}

} // namespace scm
