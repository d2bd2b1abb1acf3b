#pragma once

#include <map>
#include <vector>

#include "scm/coeff.hpp"
#include "scm/complex.hpp"
#include "scm/linalg.hpp"

namespace scm {

/// Signed incidence matrix of the augmented chain complex at one degree:
/// rows are indexed by the (degree-1)-faces, columns by the degree-faces,
/// both in lexicographic order.  Degree 0 is the augmentation map onto the
/// empty face.
struct BoundaryMatrix {
    int degree = 0;
    std::vector<Face> row_faces;
    std::vector<Face> col_faces;
    IntMatrix matrix;
};

/// Requires -1 <= degree <= dim.
BoundaryMatrix boundary_matrix(const SimplicialComplex& cx, int degree);

/// Reduced homology in one degree: the free rank plus the invariant
/// factors greater than one (torsion is always empty over a field).
struct HomologyProfile {
    // degree -> index min_degree + i; degrees outside the stored range are
    // implicitly zero.
    int min_degree = -1;
    std::vector<long long> betti;
    std::vector<std::vector<BigInt>> torsion;

    long long betti_at(int r) const {
        int i = r - min_degree;
        if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(i)];
    }
    const std::vector<BigInt>& torsion_at(int r) const {
        static const std::vector<BigInt> none;
        int i = r - min_degree;
        if (i < 0 || i >= static_cast<int>(torsion.size())) return none;
        return torsion[static_cast<std::size_t>(i)];
    }
    int max_degree() const {
        return min_degree + static_cast<int>(betti.size()) - 1;
    }
    bool trivial_at(int r) const {
        return betti_at(r) == 0 && torsion_at(r).empty();
    }
    bool trivial() const {
        for (int r = min_degree; r <= max_degree(); ++r)
            if (!trivial_at(r)) return false;
        return true;
    }
    bool operator==(const HomologyProfile&) const = default;
};

/// Reduced simplicial homology over the given coefficients, degrees -1
/// through dim.  VOID yields the all-zero profile; EMPTY has betti_{-1}=1.
HomologyProfile reduced_homology(const SimplicialComplex& cx,
                                 const CoefficientSpec& k);

/// Homology of the quotient chain complex spanned by the faces of the
/// ambient complex that are not in the subcomplex.  With a VOID
/// subcomplex this equals reduced_homology of the ambient complex.
HomologyProfile relative_homology(const RelativePair& pair,
                                  const CoefficientSpec& k);

/// True iff homology vanishes (free rank and torsion) in every degree
/// <= t.  VOID is t-acyclic for every t; EMPTY only for t < -1.
bool is_t_acyclic(const SimplicialComplex& cx, int t, const CoefficientSpec& k);

/// Deterministic per-thread count of homology computations, used by the
/// suite runner as a machine-independent work measure.
long long homology_work_counter();
void reset_homology_work_counter();

} // namespace scm
