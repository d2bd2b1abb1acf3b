#pragma once

#include <map>

#include "scm/scm_checks.hpp"

namespace scm {

/// A squarefree monomial ideal in k[x_1..x_n], stored by the supports of
/// its minimal generators (pairwise incomparable subsets of {1..n}).
struct SquarefreeIdeal {
    int n = 0;
    std::vector<Face> generators;

    SquarefreeIdeal() = default;
    SquarefreeIdeal(int ground_size, std::vector<Face> gens);

    bool is_zero() const { return generators.empty(); }
    bool is_unit() const {
        return generators.size() == 1 && generators[0].empty();
    }
};

/// Minimal nonfaces of a complex over the ground set {1..n}.
SquarefreeIdeal stanley_reisner_generators(const SimplicialComplex& cx, int n);

/// The complex Γ with I_Γ = J: supports avoiding every generator.
SimplicialComplex complex_from_ideal(const SquarefreeIdeal& j);

/// Stanley's criterion for a relative pair: for every face A of the
/// ambient complex and every degree i below dim lk(A), the relative
/// homology of (lk_ambient(A), lk_sub(A)) vanishes.  A VOID subcomplex
/// reduces this to the absolute CM check.
ScmVerdict relative_is_CM(const RelativePair& pair, const CoefficientSpec& k);

/// Filtration route: every facet layer Δ_i, relative to its intersection
/// with Δ^<i+1>, is a Cohen-Macaulay relative pair.
ScmVerdict is_SCM_filtration(const SimplicialComplex& cx,
                             const CoefficientSpec& k);

/// Eagon-Reiner test for an ideal generated in a single degree d:
/// reconstruct Γ with I_Γ = J and decide CM-ness of its Alexander dual.
/// Mixed generator degrees are an error; the zero ideal passes.
bool has_linear_resolution(const SquarefreeIdeal& j, const CoefficientSpec& k);

/// Componentwise linearity via the squarefree parts J_[d].
bool is_componentwise_linear(const SquarefreeIdeal& j,
                             const CoefficientSpec& k);

/// Graded Betti numbers beta_{i,j} of the Stanley-Reisner quotient ring,
/// by Hochster's formula; the ideal's table is the same shifted by one in
/// the homological index.  Field coefficients only.
struct GradedBettiTable {
    std::map<std::pair<int, int>, long long> beta;

    long long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
};

GradedBettiTable hochster_betti(const SimplicialComplex& cx,
                                const CoefficientSpec& k);

/// Linearity read off a quotient Betti table: the ideal (generated in
/// degree d) has a linear resolution iff beta_{i,j} vanishes for i >= 1
/// unless j = i - 1 + d.
bool betti_table_is_linear(const GradedBettiTable& table, int d);

} // namespace scm
