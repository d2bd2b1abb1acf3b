#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "scm/face.hpp"

namespace scm {

/// Sentinel returned by dim() for the void complex (no faces at all).
inline constexpr int kVoidDim = -2;

/// A finite simplicial complex, stored as an explicit ground set plus the
/// list of inclusion-maximal faces (facets) in canonical order.  The face
/// set is the downward closure of the facets.
///
/// Two degenerate values are distinguished: the VOID complex has no faces
/// at all (empty facet list), while the EMPTY complex has the single facet
/// {} and therefore exactly one face, the empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::vector<int>& ground_set() const { return ground_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const {
        return facets_.size() == 1 && facets_[0].empty();
    }

    /// Max facet dimension; -1 for EMPTY, kVoidDim for VOID.
    int dim() const {
        if (is_void()) return kVoidDim;
        int d = -1;
        for (const Face& f : facets_) d = std::max(d, f.dim());
        return d;
    }

    bool is_pure() const {
        for (const Face& f : facets_)
            if (f.dim() != facets_.front().dim()) return false;
        return true;
    }

    /// Membership in the downward closure of the facets.  Uses a memoized
    /// face index (built on first query, thread-safe) when the total face
    /// count stays below membership_index_cap(); falls back to a facet
    /// containment scan otherwise.
    bool contains(const Face& f) const;

    /// All faces including the empty face (unless VOID), sorted by
    /// dimension then lexicographically.  Throws std::length_error if the
    /// face count exceeds the enumeration cap.
    std::vector<Face> all_faces() const;

    /// Faces of dimension exactly r, sorted lexicographically.
    std::vector<Face> faces_of_dim(int r) const;

    std::size_t facet_count() const { return facets_.size(); }

    bool operator==(const SimplicialComplex& other) const {
        return ground_ == other.ground_ && facets_ == other.facets_;
    }

    std::string to_string() const;

    /// Cap on memoized/enumerated face counts (shared, configurable).
    static std::size_t membership_index_cap();
    static void set_membership_index_cap(std::size_t cap);

private:
    friend SimplicialComplex from_facets(const std::vector<Face>&,
                                         const std::vector<int>&);

    std::vector<int> ground_;   // sorted, may strictly contain facet support
    std::vector<Face> facets_;  // canonical: lexicographic, incomparable

    struct IndexCache {
        std::once_flag once;
        std::optional<std::unordered_set<Face, FaceHash>> faces; // nullopt = too big
    };
    mutable std::shared_ptr<IndexCache> index_ = std::make_shared<IndexCache>();
};

/// Builds a complex from a generating face list: dominated and duplicate
/// faces are removed and facets stored in canonical (lexicographic) order.
/// An empty list yields VOID; the list [{}] yields EMPTY.
/// Throws if a vertex lies outside the ground set.
SimplicialComplex from_facets(const std::vector<Face>& faces,
                              const std::vector<int>& ground_set);

/// Convenience: ground set defaults to the union of the listed vertices.
SimplicialComplex from_facets(const std::vector<Face>& faces);

/// The full simplex on a ground set (VOID on the empty set? no: the full
/// simplex on {} is EMPTY, whose single face is {}).
SimplicialComplex full_simplex(const std::vector<int>& ground_set);

/// lk_Δ(F) = { G | F ∪ G ∈ Δ, F ∩ G = ∅ }, over ground_set(Δ) \ F.
/// Throws if F is not a face of the complex.
SimplicialComplex link(const SimplicialComplex& cx, const Face& f);

/// Subcomplex generated by the facets of dimension >= m; VOID when no
/// facet qualifies.
SimplicialComplex generated_above(const SimplicialComplex& cx, int m);

/// Pure r-skeleton: the subcomplex generated by all r-faces.
/// Requires -1 <= r <= dim.
SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int r);

/// Subcomplex generated by the facets of dimension exactly j; VOID when
/// none exists.
SimplicialComplex facet_layer(const SimplicialComplex& cx, int j);

/// All faces of dimension <= r.  Requires r >= -1.
SimplicialComplex skeleton(const SimplicialComplex& cx, int r);

/// Join: facets are F ∪ G over the disjoint union of the ground sets.
/// Overlapping ground sets are an error, not an implicit relabeling.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Induced subcomplex on a vertex subset A of the ground set.
SimplicialComplex induced(const SimplicialComplex& cx,
                          const std::vector<int>& vertex_subset);

/// Combinatorial Alexander dual over the complex's own ground set:
/// Δ* = { A | complement(A) ∉ Δ }.
SimplicialComplex alexander_dual(const SimplicialComplex& cx);

/// Cone with a fresh apex; the cone over VOID is the point {apex}.
SimplicialComplex cone(const SimplicialComplex& cx, int apex);

/// Face-wise intersection of two complexes over the union ground set.
SimplicialComplex intersect(const SimplicialComplex& a,
                            const SimplicialComplex& b);

/// Assignment of a color to every ground-set vertex.
struct VertexColoring {
    std::map<int, int> color;

    int at(int v) const {
        auto it = color.find(v);
        if (it == color.end())
            throw std::invalid_argument("VertexColoring: vertex " +
                                        std::to_string(v) + " is uncolored");
        return it->second;
    }
};

/// True iff every facet F carries the full color set {0, ..., |F|-1}.
bool is_completely_balanced(const SimplicialComplex& cx,
                            const VertexColoring& coloring);

/// Type-selected subcomplex Δ_S = { G | τ(G) ⊆ S }; requires the coloring
/// to be completely balanced.
SimplicialComplex type_selected(const SimplicialComplex& cx,
                                const VertexColoring& coloring,
                                const std::set<int>& colors);

/// A complex together with a distinguished subcomplex.
struct RelativePair {
    SimplicialComplex ambient;
    SimplicialComplex sub;

    RelativePair(SimplicialComplex ambient_cx, SimplicialComplex sub_cx);
};

/// Minimal transversals of a hypergraph given by edges over a vertex set.
/// An edge equal to {} makes any transversal impossible (empty result).
/// Shared by the Alexander dual and the minimal-nonface computations.
std::vector<Face> minimal_transversals(const std::vector<Face>& edges,
                                       const std::vector<int>& vertices);

/// Minimal nonfaces of a complex within its own ground set.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx);

/// The complex whose minimal nonfaces are the given incomparable sets.
SimplicialComplex complex_from_minimal_nonfaces(
    const std::vector<Face>& nonfaces, const std::vector<int>& ground_set);

} // namespace scm
