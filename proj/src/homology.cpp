#include "scm/homology.hpp"

#include <algorithm>
#include <cassert>

namespace scm {

namespace {

thread_local long long g_homology_work = 0;

bool is_cone_shaped(const SimplicialComplex& cx) {
    // A common vertex across all facets makes the complex a cone, hence
    // acyclic in every degree.
    if (cx.is_void() || cx.is_empty_complex()) return false;
    const Face& first = cx.facets().front();
    for (int v : first.vertices()) {
        bool in_all = true;
        for (const Face& k : cx.facets())
            if (!k.contains(v)) {
                in_all = false;
                break;
            }
        if (in_all) return true;
    }
    return false;
}

// Ranks of one boundary matrix under the requested coefficients; the SNF
// route additionally reports invariant factors for the torsion bookkeeping.
struct DegreeRank {
    std::size_t rank = 0;
    std::vector<BigInt> factors; // only filled over Z
};

DegreeRank boundary_rank(const BoundaryMatrix& bm, const CoefficientSpec& k) {
    DegreeRank out;
    if (bm.matrix.rows == 0 || bm.matrix.cols == 0) return out;
    switch (k.kind) {
        case CoeffKind::Integers: {
            SnfResult snf = smith_normal_form(bm.matrix);
            out.rank = snf.rank;
            out.factors = std::move(snf.factors);
            break;
        }
        case CoeffKind::Rationals:
            out.rank = rank_rational(bm.matrix);
            break;
        case CoeffKind::PrimeField:
            out.rank = rank_mod_p(bm.matrix, k.p);
            break;
    }
    return out;
}

// Shared by the absolute and relative computations: chain groups are given
// per degree as face lists (quotient bases in the relative case), and the
// boundary entries are restricted to those bases.
HomologyProfile profile_from_bases(
    const std::vector<std::vector<Face>>& bases, // index i = degree i-1
    const CoefficientSpec& k, int max_degree) {
    ++g_homology_work;
    const int dim = static_cast<int>(bases.size()) - 2;
    HomologyProfile profile;
    profile.min_degree = -1;
    if (dim < -1) return profile;
    const int top = std::min(dim, max_degree);

    auto matrix_at = [&](int degree) {
        // boundary from degree-faces to (degree-1)-faces within the bases
        const auto& cols = bases[static_cast<std::size_t>(degree + 1)];
        const auto& rows = bases[static_cast<std::size_t>(degree)];
        IntMatrix m = IntMatrix::zero(rows.size(), cols.size());
        std::map<Face, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Face& f = cols[c];
            for (std::size_t pos = 0; pos < f.card(); ++pos) {
                Face g = f.without_position(pos);
                auto it = row_index.find(g);
                if (it == row_index.end()) continue; // face lies in the subcomplex
                m.at(it->second, c) = (pos % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    };

    // rank of boundary_r for r = -1 .. top+1 (the two ends are zero maps)
    std::vector<DegreeRank> ranks(static_cast<std::size_t>(top + 3));
    for (int r = 0; r <= top + 1; ++r) {
        if (r > dim) break;
        BoundaryMatrix bm;
        bm.degree = r;
        bm.matrix = matrix_at(r);
        ranks[static_cast<std::size_t>(r + 1)] = boundary_rank(bm, k);
    }

    for (int r = -1; r <= top; ++r) {
        const std::size_t nr = bases[static_cast<std::size_t>(r + 1)].size();
        const std::size_t rank_r = ranks[static_cast<std::size_t>(r + 1)].rank;
        const std::size_t rank_r1 = ranks[static_cast<std::size_t>(r + 2)].rank;
        profile.betti.push_back(static_cast<long long>(nr) -
                                static_cast<long long>(rank_r) -
                                static_cast<long long>(rank_r1));
        std::vector<BigInt> tors;
        for (const BigInt& d : ranks[static_cast<std::size_t>(r + 2)].factors)
            if (d > 1) tors.push_back(d);
        profile.torsion.push_back(std::move(tors));
    }
    return profile;
}

std::vector<std::vector<Face>> absolute_bases(const SimplicialComplex& cx) {
    const int dim = cx.dim();
    std::vector<std::vector<Face>> bases;
    for (int r = -1; r <= dim; ++r) bases.push_back(cx.faces_of_dim(r));
    return bases;
}

HomologyProfile reduced_homology_up_to(const SimplicialComplex& cx,
                                       const CoefficientSpec& k,
                                       int max_degree) {
    if (cx.is_void()) return HomologyProfile{};
    return profile_from_bases(absolute_bases(cx), k, max_degree);
}

} // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& cx, int degree) {
    if (degree < -1 || degree > cx.dim())
        throw std::invalid_argument("boundary_matrix: degree out of range");
    BoundaryMatrix bm;
    bm.degree = degree;
    bm.row_faces = cx.faces_of_dim(degree - 1);
    bm.col_faces = cx.faces_of_dim(degree);
    bm.matrix = IntMatrix::zero(bm.row_faces.size(), bm.col_faces.size());
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < bm.row_faces.size(); ++i)
        row_index[bm.row_faces[i]] = i;
    for (std::size_t c = 0; c < bm.col_faces.size(); ++c) {
        const Face& f = bm.col_faces[c];
        for (std::size_t pos = 0; pos < f.card(); ++pos) {
            Face g = f.without_position(pos);
            bm.matrix.at(row_index.at(g), c) = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return bm;
}

HomologyProfile reduced_homology(const SimplicialComplex& cx,
                                 const CoefficientSpec& k) {
    return reduced_homology_up_to(cx, k, cx.dim());
}

HomologyProfile relative_homology(const RelativePair& pair,
                                  const CoefficientSpec& k) {
    if (pair.ambient.is_void()) return HomologyProfile{};
    const int dim = pair.ambient.dim();
    std::vector<std::vector<Face>> bases;
    for (int r = -1; r <= dim; ++r) {
        std::vector<Face> quotient;
        for (Face& f : pair.ambient.faces_of_dim(r))
            if (!pair.sub.contains(f)) quotient.push_back(std::move(f));
        bases.push_back(std::move(quotient));
    }
    return profile_from_bases(bases, k, dim);
}

bool is_t_acyclic(const SimplicialComplex& cx, int t,
                  const CoefficientSpec& k) {
    if (cx.is_void()) return true;
    if (t < -1) return true;
    if (is_cone_shaped(cx)) return true;
    HomologyProfile profile =
        reduced_homology_up_to(cx, k, std::min(t, cx.dim()));
    for (int r = -1; r <= t; ++r)
        if (!profile.trivial_at(r)) return false;
    return true;
}

long long homology_work_counter() { return g_homology_work; }
void reset_homology_work_counter() { g_homology_work = 0; }

} // namespace scm
