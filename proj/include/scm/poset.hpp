#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "scm/complex.hpp"

namespace scm {

/// A finite poset on integer identifiers, stored as the irredundant cover
/// relation with the full strict-order reachability cached at
/// construction.  Values are immutable.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Builds from explicit covers; rejects cyclic or redundant input (a
    /// cover implied by a two-step path is an error).
    static FinitePoset from_covers(std::vector<int> elements,
                                   std::vector<std::pair<int, int>> covers);

    /// Builds from arbitrary strict relations: takes the transitive
    /// closure and stores its transitive reduction.  Rejects cycles.
    static FinitePoset from_relations(std::vector<int> elements,
                                      const std::vector<std::pair<int, int>>& relations);

    const std::vector<int>& elements() const { return elems_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool has_element(int x) const;
    bool less(int a, int b) const;
    bool leq(int a, int b) const { return a == b ? has_element(a) : less(a, b); }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::optional<int> minimum() const;
    std::optional<int> maximum() const;
    bool is_bounded() const { return minimum() && maximum(); }

    /// Length of the longest chain ending at x, counted in cover steps.
    int height(int x) const;
    /// Length of the longest chain of the poset; -1 when empty.
    int length() const;

    /// Induced subposet on a subset of the elements.
    FinitePoset induced(const std::vector<int>& subset) const;

    FinitePoset dual() const;

    bool operator==(const FinitePoset& other) const {
        return elems_ == other.elems_ && covers_ == other.covers_;
    }

private:
    std::vector<int> elems_;                  // sorted
    std::vector<std::pair<int, int>> covers_; // sorted
    std::vector<std::vector<char>> less_;     // reachability on element indices
    std::vector<int> height_;

    std::size_t index_of(int x) const;
    void build_caches();
};

/// Order complex: faces are the chains, facets the maximal chains; the
/// ground set is the element set.  The empty poset yields EMPTY.
SimplicialComplex order_complex(const FinitePoset& p);

/// Poset of nonempty faces ordered by inclusion; element i corresponds to
/// faces[i].  Rejects VOID and EMPTY.
struct FacePoset {
    FinitePoset poset;
    std::vector<Face> faces; // id -> face, lexicographic by (dim, verts)
};
FacePoset face_poset(const SimplicialComplex& cx);

/// P with a new minimum and/or maximum attached (fresh identifiers).
struct BoundedPoset {
    FinitePoset poset;
    int bottom = -1; // id of the adjoined minimum, when requested
    int top = -1;    // id of the adjoined maximum, when requested
};
BoundedPoset adjoin_bounds(const FinitePoset& p, bool bottom, bool top);

FinitePoset open_interval(const FinitePoset& p, int x, int y);
FinitePoset closed_interval(const FinitePoset& p, int x, int y);
FinitePoset principal_filter(const FinitePoset& p, int x);       // { y | y >= x }
FinitePoset principal_ideal(const FinitePoset& p, int x);        // { y | y <= x }
FinitePoset strict_filter(const FinitePoset& p, int x);          // { y | y > x }
FinitePoset strict_ideal(const FinitePoset& p, int x);           // { y | y < x }

/// Ordinal sum: everything in P below everything in Q.  Identifier
/// collisions are an error.
FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q);

/// Direct product with componentwise order.  The pair (p_i, q_j) is
/// relabeled deterministically as i * |Q| + j over the sorted element
/// lists.
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

/// Poset of closed intervals [x, y] ordered by inclusion; element ids
/// index the intervals list.
struct IntervalPoset {
    FinitePoset poset;
    std::vector<std::pair<int, int>> intervals;
};
IntervalPoset interval_poset(const FinitePoset& p);

/// Ranks follow the convention that adjoins a virtual minimum when the
/// poset lacks one: r(x) = height(x) when a minimum exists, height(x) + 1
/// otherwise, so atoms always get rank 1 above a (possibly virtual)
/// bottom at rank 0.  Coranks exist only for bounded posets.
struct RankProfile {
    std::map<int, int> rank;
    std::optional<std::map<int, int>> corank;
    int length = -1;       // of the poset itself
    bool has_minimum = false;
};
RankProfile rank_profile(const FinitePoset& p);

/// Every principal ideal [0̂, x] is pure (evaluated with the virtual
/// bottom when there is no minimum); equivalently every cover raises the
/// rank by exactly one.
bool is_semipure(const FinitePoset& p);
bool is_pure_poset(const FinitePoset& p);

/// Rank-selected subposet P_S under the rank convention above.  When the
/// poset lacks a minimum the selection happens in P with a virtual bottom
/// adjoined, so 0 in S contributes the adjoined bottom element.
/// S must lie within {0, ..., length of the (possibly extended) poset}.
FinitePoset rank_selected(const FinitePoset& p, const std::set<int>& s);

/// P_S^T: elements with rank in S and corank in T; requires bounded P.
FinitePoset birank_selected(const FinitePoset& p, const std::set<int>& s,
                            const std::set<int>& t);

/// Removes the maximal elements of rank >= t.
FinitePoset max_deleted(const FinitePoset& p, int t);

/// Lower order ideal generated by all elements of height j (the paper's
/// P^[j]).  The grading is by chain length from the bottom of P itself,
/// which coincides with the rank when a minimum is present; this is the
/// normalization under which the order complex of the ideal is the pure
/// part of the order complex.  Requires a semipure poset.
FinitePoset rank_generated_ideal(const FinitePoset& p, int j);

/// Lower order ideal generated by the maximal elements of height >= j
/// (the paper's P^<j>); satisfies order_complex(P^<j>) ==
/// generated_above(order_complex(P), j).  Requires a semipure poset.
FinitePoset maxrank_ideal(const FinitePoset& p, int j);

/// Brute-force poset isomorphism with degree/height pruning; intended for
/// posets of at most ~15 elements.
bool posets_isomorphic(const FinitePoset& a, const FinitePoset& b);

} // namespace scm
