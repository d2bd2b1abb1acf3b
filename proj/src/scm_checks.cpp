#include "scm/scm_checks.hpp"

#include <algorithm>
#include <unordered_set>

#include "scm/parallel.hpp"

namespace scm {

namespace {

// First nontrivial degree <= t of the reduced homology, for witness
// reporting; call only after is_t_acyclic returned false.
int offending_degree(const SimplicialComplex& cx, int t,
                     const CoefficientSpec& k) {
    HomologyProfile profile = reduced_homology(cx, k);
    for (int r = -1; r <= t; ++r)
        if (!profile.trivial_at(r)) return r;
    return t; // unreachable for genuine failures
}

ScmVerdict pass(const CoefficientSpec& k) { return ScmVerdict{true, k, {}}; }

ScmVerdict fail(const CoefficientSpec& k, ScmWitness w) {
    return ScmVerdict{false, k, std::move(w)};
}

} // namespace

bool witness_confirms_failure(const ScmWitness& w, const CoefficientSpec& k) {
    if (w.relative_sub) {
        RelativePair pair(w.complex, *w.relative_sub);
        return !relative_homology(pair, k).trivial_at(w.degree);
    }
    return !reduced_homology(w.complex, k).trivial_at(w.degree);
}

ScmVerdict is_sequentially_acyclic(const SimplicialComplex& cx,
                                   const CoefficientSpec& k) {
    const int d = cx.dim();
    for (int m = 0; m <= d; ++m) {
        SimplicialComplex level = generated_above(cx, m);
        if (is_t_acyclic(level, m - 1, k)) continue;
        int r = offending_degree(level, m - 1, k);
        return fail(k, ScmWitness{"generated_above(m=" + std::to_string(m) + ")",
                                  std::move(level), std::nullopt, m, r});
    }
    return pass(k);
}

bool is_homology_spherical(const SimplicialComplex& cx,
                           const CoefficientSpec& k) {
    if (cx.is_void() || cx.is_empty_complex()) return true;
    return is_t_acyclic(cx, cx.dim() - 1, k);
}

ScmVerdict is_CM(const SimplicialComplex& cx, const CoefficientSpec& k) {
    if (cx.is_void()) return pass(k);
    std::vector<Face> faces = cx.all_faces();
    auto check = [&](std::size_t i) {
        return is_homology_spherical(link(cx, faces[i]), k);
    };
    auto bad = detail::first_failure(faces.size(), check);
    if (!bad) return pass(k);
    SimplicialComplex lk = link(cx, faces[*bad]);
    int r = offending_degree(lk, lk.dim() - 1, k);
    return fail(k, ScmWitness{"link of " + faces[*bad].to_string(),
                              std::move(lk), -1, r});
}

ScmVerdict is_SCM_links(const SimplicialComplex& cx,
                        const CoefficientSpec& k) {
    if (cx.is_void()) return pass(k);
    std::vector<Face> faces = cx.all_faces();
    auto check = [&](std::size_t i) {
        return is_sequentially_acyclic(link(cx, faces[i]), k).ok;
    };
    auto bad = detail::first_failure(faces.size(), check);
    if (!bad) return pass(k);
    ScmVerdict inner = is_sequentially_acyclic(link(cx, faces[*bad]), k);
    ScmWitness w = std::move(*inner.witness);
    w.context = "link of " + faces[*bad].to_string() + ", " + w.context;
    return fail(k, std::move(w));
}

ScmVerdict is_SCM_duval(const SimplicialComplex& cx,
                        const CoefficientSpec& k) {
    const int d = cx.dim();
    for (int r = 0; r <= d; ++r) {
        ScmVerdict v = is_CM(pure_skeleton(cx, r), k);
        if (v.ok) continue;
        ScmWitness w = std::move(*v.witness);
        w.context = "pure_skeleton(r=" + std::to_string(r) + "), " + w.context;
        w.level_m = r;
        return fail(k, std::move(w));
    }
    return pass(k);
}

ScmVerdict poset_is_SCM_intervals(const FinitePoset& p,
                                  const CoefficientSpec& k) {
    BoundedPoset hat = adjoin_bounds(p, true, true);
    const FinitePoset& q = hat.poset;
    std::vector<std::pair<int, int>> pairs;
    for (int x : q.elements())
        for (int y : q.elements())
            if (q.less(x, y)) pairs.emplace_back(x, y);
    auto check = [&](std::size_t i) {
        auto [x, y] = pairs[i];
        return is_sequentially_acyclic(order_complex(open_interval(q, x, y)), k)
            .ok;
    };
    auto bad = detail::first_failure(pairs.size(), check);
    if (!bad) return pass(k);
    auto [x, y] = pairs[*bad];
    ScmVerdict inner =
        is_sequentially_acyclic(order_complex(open_interval(q, x, y)), k);
    ScmWitness w = std::move(*inner.witness);
    w.context = "open interval (" + std::to_string(x) + "," +
                std::to_string(y) + ") of the bounded extension, " + w.context;
    return fail(k, std::move(w));
}

ScmVerdict semipure_is_SCM_rankgen(const FinitePoset& p,
                                   const CoefficientSpec& k) {
    if (!is_semipure(p))
        throw std::invalid_argument("semipure_is_SCM_rankgen: poset is not semipure");
    for (int j = 0; j <= p.length(); ++j) {
        ScmVerdict v = is_CM(order_complex(rank_generated_ideal(p, j)), k);
        if (v.ok) continue;
        ScmWitness w = std::move(*v.witness);
        w.context = "layer ideal j=" + std::to_string(j) + ", " + w.context;
        w.level_m = j;
        return fail(k, std::move(w));
    }
    return pass(k);
}

namespace {

std::vector<std::set<int>> admissible_selections(int max_rank,
                                                 SelectionMode mode) {
    std::vector<std::set<int>> out;
    if (max_rank < 1) return out;
    if (mode == SelectionMode::AllSubsets) {
        for (unsigned mask = 1; mask < (1u << max_rank); ++mask) {
            std::set<int> s;
            for (int r = 1; r <= max_rank; ++r)
                if (mask & (1u << (r - 1))) s.insert(r);
            out.push_back(std::move(s));
        }
    } else {
        for (int a = 1; a <= max_rank; ++a)
            for (int b = a; b <= max_rank; ++b) {
                std::set<int> s;
                for (int r = a; r <= b; ++r) s.insert(r);
                out.push_back(std::move(s));
            }
    }
    return out;
}

int selectable_length(const FinitePoset& q) {
    return q.minimum() ? q.length() : q.length() + 1;
}

std::string set_to_string(const std::set<int>& s) {
    std::string out = "{";
    for (int r : s) {
        if (out.size() > 1) out += ',';
        out += std::to_string(r);
    }
    return out + "}";
}

} // namespace

ScmVerdict rank_selection_profile(const FinitePoset& p,
                                  const CoefficientSpec& k, SelectionMode mode,
                                  SelectionLevel level) {
    if (!is_semipure(p))
        throw std::invalid_argument("rank_selection_profile: poset is not semipure");

    if (level == SelectionLevel::Direct) {
        for (const auto& s : admissible_selections(selectable_length(p), mode)) {
            SimplicialComplex cx = order_complex(rank_selected(p, s));
            ScmVerdict v = is_sequentially_acyclic(cx, k);
            if (v.ok) continue;
            ScmWitness w = std::move(*v.witness);
            w.context = "selection S=" + set_to_string(s) + " of P, " + w.context;
            return fail(k, std::move(w));
        }
        return pass(k);
    }

    for (int j = 0; j <= p.length(); ++j) {
        FinitePoset ideal = level == SelectionLevel::Layers
                                ? rank_generated_ideal(p, j)
                                : maxrank_ideal(p, j);
        for (const auto& s : admissible_selections(selectable_length(ideal), mode)) {
            SimplicialComplex cx = order_complex(rank_selected(ideal, s));
            const int t = static_cast<int>(s.size()) - 2;
            if (is_t_acyclic(cx, t, k)) continue;
            int r = offending_degree(cx, t, k);
            return fail(k, ScmWitness{
                              "selection S=" + set_to_string(s) + " of " +
                                  (level == SelectionLevel::Layers ? "P^[" : "P^<") +
                                  std::to_string(j) +
                                  (level == SelectionLevel::Layers ? "]" : ">"),
                              std::move(cx), j, r});
        }
    }
    return pass(k);
}

bool shelling_step_ok(const std::vector<Face>& previous, const Face& facet) {
    // Attachment face set: maximal intersections with the earlier facets
    // must all have dimension dim(facet) - 1 (pure codimension one).
    std::vector<Face> inters;
    inters.reserve(previous.size());
    for (const Face& k : previous) inters.push_back(face_intersection(facet, k));
    bool any = false;
    for (std::size_t i = 0; i < inters.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < inters.size() && maximal; ++j)
            if (i != j && inters[i].subset_of(inters[j]) && inters[i] != inters[j])
                maximal = false;
        if (!maximal) continue;
        any = true;
        if (inters[i].dim() != facet.dim() - 1) return false;
    }
    return any || previous.empty();
}

namespace {

struct StepBudgetExhausted {};

struct ShellingSearch {
    const std::vector<Face>& facets;
    long long budget;
    std::unordered_set<std::uint64_t> dead; // prefix sets with no completion
    std::vector<std::size_t> order;

    bool dfs(std::uint64_t mask) {
        if (order.size() == facets.size()) return true;
        if (--budget <= 0) throw StepBudgetExhausted{};
        if (dead.count(mask)) return false;
        std::vector<Face> previous;
        previous.reserve(order.size());
        for (std::size_t i : order) previous.push_back(facets[i]);
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (mask & (std::uint64_t(1) << i)) continue;
            if (!previous.empty() && !shelling_step_ok(previous, facets[i]))
                continue;
            order.push_back(i);
            if (dfs(mask | (std::uint64_t(1) << i))) return true;
            order.pop_back();
        }
        dead.insert(mask);
        return false;
    }
};

} // namespace

ShellingResult is_shellable(const SimplicialComplex& cx,
                            const ShellingSearchConfig& config) {
    ShellingResult out;
    if (cx.is_void() || cx.is_empty_complex()) {
        out.status = Shellability::Shellable;
        out.order = cx.facets();
        return out;
    }
    if (cx.facet_count() > config.max_facets) {
        out.status = Shellability::Unknown;
        return out;
    }
    ShellingSearch search{cx.facets(), config.step_budget, {}, {}};
    try {
        if (search.dfs(0)) {
            out.status = Shellability::Shellable;
            for (std::size_t i : search.order) out.order.push_back(cx.facets()[i]);
        } else {
            out.status = Shellability::NotShellable;
        }
    } catch (const StepBudgetExhausted&) {
        out.status = Shellability::Unknown;
    }
    return out;
}

} // namespace scm
