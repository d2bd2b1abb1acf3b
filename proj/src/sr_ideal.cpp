#include "scm/sr_ideal.hpp"

#include <algorithm>

#include "scm/parallel.hpp"

namespace scm {

namespace {

std::vector<int> range_ground(int n) {
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1;
    return g;
}

} // namespace

SquarefreeIdeal::SquarefreeIdeal(int ground_size, std::vector<Face> gens)
    : n(ground_size), generators(std::move(gens)) {
    for (const Face& g : generators)
        for (int v : g.vertices())
            if (v < 1 || v > n)
                throw std::invalid_argument(
                    "SquarefreeIdeal: generator support outside {1..n}");
    for (const Face& a : generators)
        for (const Face& b : generators)
            if (a != b && a.subset_of(b))
                throw std::invalid_argument(
                    "SquarefreeIdeal: generators are not pairwise incomparable");
    std::sort(generators.begin(), generators.end());
}

SquarefreeIdeal stanley_reisner_generators(const SimplicialComplex& cx,
                                           int n) {
    std::vector<int> ground = range_ground(n);
    if (cx.ground_set() != ground)
        throw std::invalid_argument(
            "stanley_reisner_generators: ground set must be {1..n}");
    return SquarefreeIdeal(n, minimal_nonfaces(cx));
}

SimplicialComplex complex_from_ideal(const SquarefreeIdeal& j) {
    return complex_from_minimal_nonfaces(j.generators, range_ground(j.n));
}

ScmVerdict relative_is_CM(const RelativePair& pair, const CoefficientSpec& k) {
    if (pair.ambient.is_void()) return ScmVerdict{true, k, {}};
    std::vector<Face> faces = pair.ambient.all_faces();

    auto links_of = [&](const Face& a) {
        SimplicialComplex ambient_link = link(pair.ambient, a);
        SimplicialComplex sub_link =
            (!pair.sub.is_void() && pair.sub.contains(a))
                ? link(pair.sub, a)
                : from_facets({}, pair.sub.ground_set());
        return std::make_pair(std::move(ambient_link), std::move(sub_link));
    };

    auto check = [&](std::size_t i) {
        auto [ambient_link, sub_link] = links_of(faces[i]);
        const int top = ambient_link.dim();
        HomologyProfile profile =
            relative_homology(RelativePair(ambient_link, sub_link), k);
        for (int r = -1; r < top; ++r)
            if (!profile.trivial_at(r)) return false;
        return true;
    };
    auto bad = detail::first_failure(faces.size(), check);
    if (!bad) return ScmVerdict{true, k, {}};

    auto [ambient_link, sub_link] = links_of(faces[*bad]);
    HomologyProfile profile =
        relative_homology(RelativePair(ambient_link, sub_link), k);
    int degree = 0;
    for (int r = -1; r < ambient_link.dim(); ++r)
        if (!profile.trivial_at(r)) {
            degree = r;
            break;
        }
    ScmWitness w;
    w.context = "relative links of " + faces[*bad].to_string();
    w.complex = std::move(ambient_link);
    w.relative_sub = std::move(sub_link);
    w.degree = degree;
    return ScmVerdict{false, k, std::move(w)};
}

ScmVerdict is_SCM_filtration(const SimplicialComplex& cx,
                             const CoefficientSpec& k) {
    const int d = cx.dim();
    for (int i = 0; i <= d; ++i) {
        SimplicialComplex layer = facet_layer(cx, i);
        if (layer.is_void()) continue;
        SimplicialComplex above = generated_above(cx, i + 1);
        SimplicialComplex meet = intersect(layer, above);
        ScmVerdict v = relative_is_CM(RelativePair(layer, meet), k);
        if (v.ok) continue;
        ScmWitness w = std::move(*v.witness);
        w.context = "layer i=" + std::to_string(i) + ", " + w.context;
        w.level_m = i;
        return ScmVerdict{false, k, std::move(w)};
    }
    return ScmVerdict{true, k, {}};
}

bool has_linear_resolution(const SquarefreeIdeal& j, const CoefficientSpec& k) {
    if (j.is_zero()) return true;
    const int d = j.generators.front().dim() + 1;
    for (const Face& g : j.generators)
        if (g.dim() + 1 != d)
            throw std::invalid_argument(
                "has_linear_resolution: mixed generator degrees");
    return is_CM(alexander_dual(complex_from_ideal(j)), k).ok;
}

bool is_componentwise_linear(const SquarefreeIdeal& j,
                             const CoefficientSpec& k) {
    if (j.is_zero()) return true;
    int min_deg = j.n + 1;
    for (const Face& g : j.generators)
        min_deg = std::min(min_deg, g.dim() + 1);
    // J_[d]: all squarefree degree-d monomials in J, i.e. the d-element
    // supersets of the generators.
    for (int d = min_deg; d <= j.n; ++d) {
        std::vector<Face> members;
        std::vector<int> ground(static_cast<std::size_t>(j.n));
        for (int i = 0; i < j.n; ++i) ground[static_cast<std::size_t>(i)] = i + 1;
        // enumerate d-subsets of {1..n}
        std::vector<int> idx(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> sub(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                sub[static_cast<std::size_t>(i)] = ground[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            Face cand(std::move(sub));
            for (const Face& g : j.generators)
                if (g.subset_of(cand)) {
                    members.push_back(cand);
                    break;
                }
            int i = d;
            while (i > 0 && idx[static_cast<std::size_t>(i - 1)] ==
                                j.n - d + (i - 1))
                --i;
            if (i == 0) break;
            ++idx[static_cast<std::size_t>(i - 1)];
            for (int t = i; t < d; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
        if (members.empty()) continue;
        if (!has_linear_resolution(SquarefreeIdeal(j.n, std::move(members)), k))
            return false;
    }
    return true;
}

GradedBettiTable hochster_betti(const SimplicialComplex& cx,
                                const CoefficientSpec& k) {
    if (!k.is_field())
        throw std::invalid_argument("hochster_betti: field coefficients required");
    const auto& ground = cx.ground_set();
    const int n = static_cast<int>(ground.size());
    GradedBettiTable table;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> w;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i))
                w.push_back(ground[static_cast<std::size_t>(i)]);
        const int j = static_cast<int>(w.size());
        HomologyProfile profile = reduced_homology(induced(cx, w), k);
        for (int r = profile.min_degree; r <= profile.max_degree(); ++r) {
            long long dim_h = profile.betti_at(r);
            if (dim_h == 0) continue;
            // beta_{i,j} collects H~_{j-i-1} over the size-j subsets
            int i_index = j - r - 1;
            table.beta[{i_index, j}] += dim_h;
        }
    }
    return table;
}

bool betti_table_is_linear(const GradedBettiTable& table, int d) {
    for (const auto& [key, value] : table.beta) {
        auto [i, j] = key;
        if (value == 0 || i < 1) continue;
        if (j != i - 1 + d) return false;
    }
    return true;
}

} // namespace scm
