#pragma once

#include <optional>
#include <string>

#include "scm/homology.hpp"
#include "scm/poset.hpp"

namespace scm {

/// Diagnostic payload for a failed verdict: the offending subcomplex
/// together with the degree whose homology is nonzero, so a single
/// homology call re-verifies the failure.
struct ScmWitness {
    std::string context;       // human-readable: which face/interval/layer
    SimplicialComplex complex; // the subcomplex with nonvanishing homology
    // set when the failure lives in the homology of a relative pair
    std::optional<SimplicialComplex> relative_sub;
    int level_m = -1;          // facet-dimension level, when applicable
    int degree = 0;            // degree with nonzero reduced homology
};

struct ScmVerdict {
    bool ok = true;
    CoefficientSpec coeff;
    std::optional<ScmWitness> witness;

    explicit operator bool() const { return ok; }
};

/// Re-runs the single homology computation encoded in a witness and
/// confirms the failure is real.
bool witness_confirms_failure(const ScmWitness& w, const CoefficientSpec& k);

/// Δ^<m> is (m-1)-acyclic for m = 0, ..., dim.
ScmVerdict is_sequentially_acyclic(const SimplicialComplex& cx,
                                   const CoefficientSpec& k);

/// Reduced homology vanishes below the top dimension.  EMPTY and VOID
/// pass by convention.
bool is_homology_spherical(const SimplicialComplex& cx,
                           const CoefficientSpec& k);

/// Reisner-style criterion: every link (including the one of the empty
/// face, i.e. the complex itself) is homology-spherical.
ScmVerdict is_CM(const SimplicialComplex& cx, const CoefficientSpec& k);

/// Definition route: every link is sequentially acyclic.
ScmVerdict is_SCM_links(const SimplicialComplex& cx, const CoefficientSpec& k);

/// Pure-skeleton route: Δ^[r] is CM for all 0 <= r <= dim.
ScmVerdict is_SCM_duval(const SimplicialComplex& cx, const CoefficientSpec& k);

/// A poset is SCM iff its order complex is; this route decides it through
/// open intervals of the bounded extension instead.
ScmVerdict poset_is_SCM_intervals(const FinitePoset& p,
                                  const CoefficientSpec& k);

/// Layer route for semipure posets: Δ(P^[j]) is CM for every j.
ScmVerdict semipure_is_SCM_rankgen(const FinitePoset& p,
                                   const CoefficientSpec& k);

enum class SelectionMode { AllSubsets, RankIntervals };
enum class SelectionLevel {
    Layers, // rank-selections of each P^[j]
    Ideals, // rank-selections of each P^<j>
    Direct  // rank-selections of P itself, tested for sequential acyclicity
};

/// Rank-selection conditions on a semipure poset.  For Layers/Ideals the
/// selected subposet of the j-th generated ideal must have vanishing
/// homology below dimension |S|-1; Direct instead asks every selection of
/// P itself to be sequentially acyclic (the naive extension probed by the
/// counterexample search).
ScmVerdict rank_selection_profile(const FinitePoset& p,
                                  const CoefficientSpec& k, SelectionMode mode,
                                  SelectionLevel level);

enum class Shellability { Shellable, NotShellable, Unknown };

struct ShellingResult {
    Shellability status = Shellability::Unknown;
    std::vector<Face> order; // a certified shelling order, when found
};

struct ShellingSearchConfig {
    std::size_t max_facets = 8;
    long long step_budget = 2'000'000;
};

/// Brute-force search for a nonpure shelling order: each facet must meet
/// the complex spanned by its predecessors in a pure subcomplex of
/// codimension one.  Intended as an oracle and instance generator at
/// small facet counts; beyond the budget it reports Unknown.
ShellingResult is_shellable(const SimplicialComplex& cx,
                            const ShellingSearchConfig& config = {});

/// Checks the Björner-Wachs attachment condition for appending `facet` to
/// the complex spanned by `previous`.
bool shelling_step_ok(const std::vector<Face>& previous, const Face& facet);

} // namespace scm
