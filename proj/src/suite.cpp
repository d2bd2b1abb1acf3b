#include "scm/suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "scm/io.hpp"
#include "scm/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scm {

using ordered_json = nlohmann::ordered_json;

ScmVerdict poset_is_SCM(const FinitePoset& p, const CoefficientSpec& k) {
    return is_SCM_links(order_complex(p), k);
}

SimplicialComplex max_deleted_complex(const SimplicialComplex& cx, int t) {
    if (cx.is_void()) return cx;
    std::vector<Face> gens;
    for (const Face& f : cx.facets()) {
        if (f.dim() < t) {
            gens.push_back(f);
            continue;
        }
        for (std::size_t pos = 0; pos < f.card(); ++pos)
            gens.push_back(f.without_position(pos));
    }
    return from_facets(gens, cx.ground_set());
}

SimplicialComplex coskeleton(const SimplicialComplex& cx, int t) {
    SimplicialComplex current = cx;
    while (true) {
        SimplicialComplex next = max_deleted_complex(current, t);
        if (next == current) return current;
        current = std::move(next);
    }
}

namespace {

std::string complex_digest(const SimplicialComplex& cx) {
    return fnv_digest(format_complex(cx));
}

std::string poset_digest(const FinitePoset& p) {
    return fnv_digest(format_poset(p));
}

SimplicialComplex shift_labels(const SimplicialComplex& cx, int offset) {
    std::vector<int> ground;
    for (int v : cx.ground_set()) ground.push_back(v + offset);
    std::vector<Face> facets;
    for (const Face& f : cx.facets()) {
        std::vector<int> verts;
        for (int v : f.vertices()) verts.push_back(v + offset);
        facets.push_back(Face(std::move(verts)));
    }
    return from_facets(facets, ground);
}

FinitePoset shift_labels(const FinitePoset& p, int offset) {
    std::vector<int> elems;
    for (int x : p.elements()) elems.push_back(x + offset);
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : p.covers()) covers.emplace_back(a + offset, b + offset);
    return FinitePoset::from_covers(elems, covers);
}

struct InstancePool {
    std::vector<SimplicialComplex> complexes;
    std::vector<std::pair<SimplicialComplex, SimplicialComplex>> pairs;
    std::vector<std::pair<SimplicialComplex, SimplicialComplex>>
        acyclic_pairs; // both factors sequentially acyclic over Z
    std::vector<ShellableInstance> shellables;
    std::vector<SimplicialComplex> scm_complexes; // SCM over Z
    std::vector<FinitePoset> posets;
    std::vector<std::pair<FinitePoset, FinitePoset>> poset_pairs;
    std::vector<std::pair<FinitePoset, FinitePoset>>
        acyclic_poset_pairs; // both sequentially acyclic over Z
    std::vector<FinitePoset> semipure;
    std::vector<FinitePoset> semipure_scm; // SCM over Z
};

InstancePool build_pool(const SuiteConfig& cfg) {
    InstancePool pool;
    const auto z = CoefficientSpec::integers();
    if (cfg.exhaustive_vertices >= 1)
        pool.complexes = enumerate_complexes(cfg.exhaustive_vertices, false);

    const std::uint64_t seed = cfg.seed * 0x9e3779b97f4a7c15ull + 1;
    Rng meta(seed);

    auto random_complex = [&](int max_n, std::uint64_t salt) {
        int n = 2 + meta.next_int(0, std::max(0, max_n - 2));
        double density = 0.3 + 0.1 * meta.next_int(0, 4);
        return generate_random_complex(n, density, seed + salt);
    };

    for (int i = 0; i < cfg.samples; ++i)
        pool.complexes.push_back(
            random_complex(cfg.max_vertices, 17 * static_cast<std::uint64_t>(i) + 1));

    // pairs over disjoint ground sets, for join properties
    const int pair_n = std::min(cfg.max_vertices, 5);
    for (int i = 0; i < cfg.samples; ++i) {
        SimplicialComplex a = random_complex(pair_n, 31 * static_cast<std::uint64_t>(i) + 2);
        SimplicialComplex b = shift_labels(
            random_complex(pair_n, 37 * static_cast<std::uint64_t>(i) + 3), 100);
        pool.pairs.emplace_back(std::move(a), std::move(b));
    }
    {
        int budget = 50 * cfg.samples;
        while (static_cast<int>(pool.acyclic_pairs.size()) < cfg.samples &&
               budget-- > 0) {
            SimplicialComplex a =
                random_complex(pair_n, 41 * static_cast<std::uint64_t>(budget) + 4);
            SimplicialComplex b = shift_labels(
                random_complex(pair_n, 43 * static_cast<std::uint64_t>(budget) + 5), 100);
            if (is_sequentially_acyclic(a, z).ok &&
                is_sequentially_acyclic(b, z).ok)
                pool.acyclic_pairs.emplace_back(std::move(a), std::move(b));
        }
    }

    for (int i = 0; i < cfg.samples; ++i) {
        int n = 3 + meta.next_int(0, 3);
        int facets = 2 + meta.next_int(0, 6);
        pool.shellables.push_back(
            generate_shellable(n, facets, seed + 53 * static_cast<std::uint64_t>(i) + 6));
    }

    {
        // SCM complexes: shellable ones are SCM; pad with random SCM finds
        for (const auto& inst : pool.shellables)
            if (static_cast<int>(pool.scm_complexes.size()) < cfg.samples)
                pool.scm_complexes.push_back(inst.complex);
        int budget = 20 * cfg.samples;
        while (static_cast<int>(pool.scm_complexes.size()) < cfg.samples &&
               budget-- > 0) {
            SimplicialComplex cand =
                random_complex(pair_n, 59 * static_cast<std::uint64_t>(budget) + 7);
            if (is_SCM_links(cand, z).ok) pool.scm_complexes.push_back(std::move(cand));
        }
    }

    for (int i = 0; i < cfg.samples; ++i) {
        int m = 3 + meta.next_int(0, std::max(0, cfg.max_elements - 3));
        double density = 0.2 + 0.1 * meta.next_int(0, 3);
        pool.posets.push_back(
            generate_random_poset(m, density, seed + 61 * static_cast<std::uint64_t>(i) + 8));
    }
    for (int i = 0; i < cfg.samples; ++i) {
        int ma = 2 + meta.next_int(0, 2);
        int mb = 2 + meta.next_int(0, 2);
        FinitePoset a = generate_random_poset(
            ma, 0.4, seed + 67 * static_cast<std::uint64_t>(i) + 9);
        FinitePoset b = shift_labels(
            generate_random_poset(mb, 0.4, seed + 71 * static_cast<std::uint64_t>(i) + 10),
            1000);
        pool.poset_pairs.emplace_back(std::move(a), std::move(b));
    }
    {
        int budget = 50 * cfg.samples;
        while (static_cast<int>(pool.acyclic_poset_pairs.size()) < cfg.samples &&
               budget-- > 0) {
            FinitePoset a = generate_random_poset(
                3, 0.4, seed + 73 * static_cast<std::uint64_t>(budget) + 11);
            FinitePoset b = shift_labels(
                generate_random_poset(
                    3, 0.4, seed + 79 * static_cast<std::uint64_t>(budget) + 12),
                1000);
            if (is_sequentially_acyclic(order_complex(a), z).ok &&
                is_sequentially_acyclic(order_complex(b), z).ok)
                pool.acyclic_poset_pairs.emplace_back(std::move(a), std::move(b));
        }
    }

    for (int i = 0; i < cfg.samples; ++i) {
        int m = 3 + meta.next_int(0, std::max(0, cfg.max_elements - 3));
        pool.semipure.push_back(
            generate_semipure_poset(m, seed + 83 * static_cast<std::uint64_t>(i) + 13));
    }
    {
        int budget = 30 * cfg.samples;
        while (static_cast<int>(pool.semipure_scm.size()) < cfg.samples &&
               budget-- > 0) {
            FinitePoset cand = generate_semipure_poset(
                3 + meta.next_int(0, std::max(0, cfg.max_elements - 3)),
                seed + 89 * static_cast<std::uint64_t>(budget) + 14);
            if (poset_is_SCM(cand, z).ok) pool.semipure_scm.push_back(std::move(cand));
        }
    }
    return pool;
}

// ---------------------------------------------------------------------------
// record construction helpers

CheckRecord make_record(std::string check, std::string digest,
                        const CoefficientSpec& k) {
    CheckRecord r;
    r.check = std::move(check);
    r.instance = std::move(digest);
    r.coeff = k.to_string();
    return r;
}

void add_route(CheckRecord& r, const std::string& name, bool verdict) {
    r.verdicts.emplace_back(name, verdict);
}

void finish_agreement(CheckRecord& r) {
    for (const auto& [name, verdict] : r.verdicts)
        if (verdict != r.verdicts.front().second) {
            r.ok = false;
            if (r.witness.empty()) r.witness = "route disagreement";
        }
}

void expect(CheckRecord& r, const std::string& what, bool condition) {
    add_route(r, what, condition);
    if (!condition) {
        r.ok = false;
        if (r.witness.empty()) r.witness = "failed: " + what;
    }
}

std::string describe(const ScmWitness& w) {
    std::ostringstream out;
    out << w.context << ", degree " << w.degree;
    return out.str();
}

// ---------------------------------------------------------------------------
// property checks

CheckRecord check_four_routes(const SimplicialComplex& cx,
                              const CoefficientSpec& k) {
    CheckRecord r = make_record("four_route_scm_agreement", complex_digest(cx), k);
    ScmVerdict links = is_SCM_links(cx, k);
    ScmVerdict duval = is_SCM_duval(cx, k);
    ScmVerdict filtration = is_SCM_filtration(cx, k);
    add_route(r, "links", links.ok);
    add_route(r, "duval", duval.ok);
    add_route(r, "filtration", filtration.ok);
    if (k.is_field()) {
        const int n = static_cast<int>(cx.ground_set().size());
        Face ground(cx.ground_set());
        std::vector<Face> gens;
        for (const Face& f : cx.facets())
            gens.push_back(face_difference(ground, f));
        SquarefreeIdeal dual_ideal(n, std::move(gens));
        add_route(r, "dual_componentwise_linear",
                  is_componentwise_linear(dual_ideal, k));
    }
    finish_agreement(r);
    if (!r.ok && links.witness) r.witness += "; links: " + describe(*links.witness);
    return r;
}

CheckRecord check_pure_collapse(const SimplicialComplex& cx,
                                const CoefficientSpec& k) {
    CheckRecord r = make_record("pure_scm_equals_cm", complex_digest(cx), k);
    if (!cx.is_pure()) {
        add_route(r, "vacuous(nonpure)", true);
        return r;
    }
    add_route(r, "links", is_SCM_links(cx, k).ok);
    add_route(r, "cm", is_CM(cx, k).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_prop21_freeness(const SimplicialComplex& cx) {
    const auto z = CoefficientSpec::integers();
    CheckRecord r = make_record("seq_acyclic_free_homology", complex_digest(cx), z);
    if (!is_sequentially_acyclic(cx, z).ok) {
        add_route(r, "vacuous(not sequentially acyclic)", true);
        return r;
    }
    HomologyProfile profile = reduced_homology(cx, z);
    bool torsion_free = true;
    for (int d = profile.min_degree; d <= profile.max_degree(); ++d)
        if (!profile.torsion_at(d).empty()) torsion_free = false;
    expect(r, "torsion_free", torsion_free);
    std::set<int> facet_dims;
    for (const Face& f : cx.facets()) facet_dims.insert(f.dim());
    bool vanishing = true;
    for (int d = profile.min_degree; d <= profile.max_degree(); ++d)
        if (profile.betti_at(d) != 0 && !facet_dims.count(d)) vanishing = false;
    expect(r, "betti_zero_outside_facet_dims", vanishing);
    return r;
}

CheckRecord check_euler(const SimplicialComplex& cx) {
    const auto q = CoefficientSpec::rationals();
    CheckRecord r = make_record("euler_poincare", complex_digest(cx), q);
    long long chi_faces = 0;
    for (int d = -1; d <= cx.dim(); ++d) {
        long long count = static_cast<long long>(cx.faces_of_dim(d).size());
        chi_faces += (d % 2 == 0 ? 1 : -1) * count;
    }
    HomologyProfile profile = reduced_homology(cx, q);
    long long chi_betti = 0;
    for (int d = profile.min_degree; d <= profile.max_degree(); ++d)
        chi_betti += (d % 2 == 0 ? 1 : -1) * profile.betti_at(d);
    expect(r, "chi(faces) == chi(betti)", chi_faces == chi_betti);
    return r;
}

CheckRecord check_uct(const SimplicialComplex& cx, std::int64_t p) {
    const auto fp = CoefficientSpec::prime_field(p);
    CheckRecord r = make_record("universal_coefficients", complex_digest(cx), fp);
    HomologyProfile over_z = reduced_homology(cx, CoefficientSpec::integers());
    HomologyProfile over_p = reduced_homology(cx, fp);
    bool all_match = true;
    for (int d = -1; d <= cx.dim(); ++d) {
        long long count_p = 0;
        for (const BigInt& f : over_z.torsion_at(d))
            if (f % p == 0) ++count_p;
        for (const BigInt& f : over_z.torsion_at(d - 1))
            if (f % p == 0) ++count_p;
        if (over_p.betti_at(d) != over_z.betti_at(d) + count_p) all_match = false;
    }
    expect(r, "dim F_p == betti_Z + torsion counts", all_match);
    return r;
}

CheckRecord check_barycentric(const SimplicialComplex& cx,
                              const CoefficientSpec& k) {
    CheckRecord r = make_record("barycentric_invariance", complex_digest(cx), k);
    if (cx.is_void() || cx.is_empty_complex()) {
        add_route(r, "vacuous(degenerate)", true);
        return r;
    }
    add_route(r, "complex", is_SCM_links(cx, k).ok);
    add_route(r, "face_poset",
              poset_is_SCM_intervals(face_poset(cx).poset, k).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_relative_void(const SimplicialComplex& cx,
                                const CoefficientSpec& k) {
    CheckRecord r = make_record("relative_void_reduces_to_cm", complex_digest(cx), k);
    RelativePair pair(cx, from_facets({}, cx.ground_set()));
    add_route(r, "relative", relative_is_CM(pair, k).ok);
    add_route(r, "absolute", is_CM(cx, k).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_eagon_reiner_hochster(const SimplicialComplex& cx,
                                        const CoefficientSpec& k) {
    CheckRecord r = make_record("eagon_reiner_vs_hochster", complex_digest(cx), k);
    if (!cx.is_pure() || cx.is_void() || cx.is_empty_complex()) {
        add_route(r, "vacuous(nonpure)", true);
        return r;
    }
    const int n = static_cast<int>(cx.ground_set().size());
    const int d = n - (cx.dim() + 1); // generator degree of the dual ideal
    Face ground(cx.ground_set());
    std::vector<Face> gens;
    for (const Face& f : cx.facets()) gens.push_back(face_difference(ground, f));
    SquarefreeIdeal dual_ideal(n, std::move(gens));
    add_route(r, "cm", is_CM(cx, k).ok);
    if (d == 0) {
        // the dual ideal is the unit ideal; both routes are trivially linear
        add_route(r, "eagon_reiner", has_linear_resolution(dual_ideal, k));
        finish_agreement(r);
        return r;
    }
    add_route(r, "eagon_reiner", has_linear_resolution(dual_ideal, k));
    GradedBettiTable table = hochster_betti(complex_from_ideal(dual_ideal), k);
    add_route(r, "hochster_linear", betti_table_is_linear(table, d));
    finish_agreement(r);
    return r;
}

CheckRecord check_cor36(const FinitePoset& p, const CoefficientSpec& k) {
    CheckRecord r = make_record("poset_interval_route", poset_digest(p), k);
    add_route(r, "intervals", poset_is_SCM_intervals(p, k).ok);
    add_route(r, "order_complex", poset_is_SCM(p, k).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_cor34(const FinitePoset& a, const FinitePoset& b,
                        const CoefficientSpec& k) {
    CheckRecord r = make_record(
        "ordinal_sum_scm", poset_digest(a) + "+" + poset_digest(b), k);
    FinitePoset sum = ordinal_sum(a, b);
    add_route(r, "sum", poset_is_SCM(sum, k).ok);
    add_route(r, "factors",
              poset_is_SCM(a, k).ok && poset_is_SCM(b, k).ok);
    finish_agreement(r);
    // the complex identity behind the corollary
    expect(r, "order_complex(sum) == join",
           order_complex(sum) == join(order_complex(a), order_complex(b)));
    return r;
}

CheckRecord check_cor39(const FinitePoset& a, const FinitePoset& b,
                        const CoefficientSpec& k) {
    CheckRecord r = make_record(
        "product_scm", poset_digest(a) + "x" + poset_digest(b), k);
    FinitePoset pa = adjoin_bounds(a, true, false).poset;
    FinitePoset pb = adjoin_bounds(b, true, false).poset;
    FinitePoset prod = product(pa, pb);
    add_route(r, "product", poset_is_SCM(prod, k).ok);
    add_route(r, "factors", poset_is_SCM(pa, k).ok && poset_is_SCM(pb, k).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_cor38(const FinitePoset& a, const FinitePoset& b,
                        const CoefficientSpec& k) {
    CheckRecord r = make_record(
        "product_minus_extremes", poset_digest(a) + "x" + poset_digest(b), k);
    // both inputs are sequentially acyclic by pool construction
    FinitePoset prod1 = product(adjoin_bounds(a, true, false).poset,
                                adjoin_bounds(b, true, false).poset);
    std::vector<int> keep1;
    int min1 = *prod1.minimum();
    for (int x : prod1.elements())
        if (x != min1) keep1.push_back(x);
    expect(r, "acute product minus bottom is sequentially acyclic",
           is_sequentially_acyclic(order_complex(prod1.induced(keep1)), k).ok);

    FinitePoset prod2 = product(adjoin_bounds(a, true, true).poset,
                                adjoin_bounds(b, true, true).poset);
    std::vector<int> keep2;
    int min2 = *prod2.minimum();
    int max2 = *prod2.maximum();
    for (int x : prod2.elements())
        if (x != min2 && x != max2) keep2.push_back(x);
    expect(r, "hat product minus extremes is sequentially acyclic",
           is_sequentially_acyclic(order_complex(prod2.induced(keep2)), k).ok);
    return r;
}

CheckRecord check_interval_poset(const FinitePoset& p,
                                 const CoefficientSpec& k) {
    CheckRecord r = make_record("interval_poset_scm", poset_digest(p), k);
    add_route(r, "poset", poset_is_SCM(p, k).ok);
    add_route(r, "interval_poset", poset_is_SCM(interval_poset(p).poset, k).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_thm51_cor53(const FinitePoset& p, const CoefficientSpec& k) {
    CheckRecord r = make_record("semipure_characterizations", poset_digest(p), k);
    add_route(r, "intervals", poset_is_SCM_intervals(p, k).ok);
    add_route(r, "layers_cm", semipure_is_SCM_rankgen(p, k).ok);
    add_route(r, "layers_all_subsets",
              rank_selection_profile(p, k, SelectionMode::AllSubsets,
                                     SelectionLevel::Layers).ok);
    add_route(r, "layers_rank_intervals",
              rank_selection_profile(p, k, SelectionMode::RankIntervals,
                                     SelectionLevel::Layers).ok);
    add_route(r, "ideals_all_subsets",
              rank_selection_profile(p, k, SelectionMode::AllSubsets,
                                     SelectionLevel::Ideals).ok);
    add_route(r, "ideals_rank_intervals",
              rank_selection_profile(p, k, SelectionMode::RankIntervals,
                                     SelectionLevel::Ideals).ok);
    finish_agreement(r);
    return r;
}

CheckRecord check_sec4_preservation(const FinitePoset& p,
                                    const CoefficientSpec& k) {
    // p is semipure and SCM over Z (hence over every coefficient choice)
    CheckRecord r = make_record("rank_selection_preservation", poset_digest(p), k);
    FinitePoset with_min =
        p.minimum() ? p : adjoin_bounds(p, true, false).poset;
    const int len = with_min.length();

    bool selections_ok = true;
    for (std::uint32_t mask = 1; mask < (1u << (len + 1)); ++mask) {
        std::set<int> s;
        for (int t = 0; t <= len; ++t)
            if (mask & (1u << t)) s.insert(t);
        if (!poset_is_SCM(rank_selected(with_min, s), k).ok) {
            selections_ok = false;
            break;
        }
    }
    expect(r, "rank selections stay SCM", selections_ok);

    bool deletions_ok = true;
    for (int t = 0; t <= len + 1; ++t)
        if (!poset_is_SCM(max_deleted(with_min, t), k).ok) {
            deletions_ok = false;
            break;
        }
    expect(r, "max deletions stay SCM", deletions_ok);

    // truncation needs a bounded poset; the bounded extension is SCM too
    FinitePoset hat = adjoin_bounds(p, true, true).poset;
    const int hat_len = hat.length();
    bool truncations_ok = true;
    for (int s = 0; s <= hat_len && truncations_ok; ++s)
        for (int t = 0; t <= hat_len; ++t) {
            std::set<int> ss, tt;
            for (int v = s; v <= hat_len; ++v) ss.insert(v);
            for (int v = t; v <= hat_len; ++v) tt.insert(v);
            if (!poset_is_SCM(birank_selected(hat, ss, tt), k).ok) {
                truncations_ok = false;
                break;
            }
        }
    expect(r, "truncations stay SCM", truncations_ok);
    return r;
}

CheckRecord check_type_selection(const FinitePoset& p,
                                 const CoefficientSpec& k) {
    // p is semipure and SCM over Z; its order complex with the height
    // coloring is the prototypical completely balanced complex
    CheckRecord r = make_record("type_selection_preservation", poset_digest(p), k);
    SimplicialComplex cx = order_complex(p);
    VertexColoring coloring;
    for (int x : p.elements()) coloring.color[x] = p.height(x);
    expect(r, "height coloring is completely balanced",
           is_completely_balanced(cx, coloring));
    if (!r.ok) return r;
    const int d = cx.dim();
    bool ok = true;
    for (std::uint32_t mask = 1; mask < (1u << (d + 1)) && ok; ++mask) {
        std::set<int> colors;
        for (int c = 0; c <= d; ++c)
            if (mask & (1u << c)) colors.insert(c);
        if (!is_SCM_links(type_selected(cx, coloring, colors), k).ok) ok = false;
    }
    expect(r, "type selections stay SCM", ok);
    return r;
}

CheckRecord check_skeleta(const SimplicialComplex& cx,
                          const CoefficientSpec& k) {
    // cx is SCM over Z by pool construction
    CheckRecord r = make_record("skeleton_coskeleton_scm", complex_digest(cx), k);
    bool skeleta_ok = true;
    for (int t = 0; t <= cx.dim() && skeleta_ok; ++t)
        if (!is_SCM_links(skeleton(cx, t), k).ok) skeleta_ok = false;
    expect(r, "skeleta stay SCM", skeleta_ok);
    bool cosk_ok = true;
    for (int t = 0; t <= cx.dim() + 1 && cosk_ok; ++t) {
        if (!is_SCM_links(max_deleted_complex(cx, t), k).ok) cosk_ok = false;
        if (cosk_ok && !is_SCM_links(coskeleton(cx, t), k).ok) cosk_ok = false;
    }
    expect(r, "coskeleta stay SCM", cosk_ok);
    return r;
}

CheckRecord check_shellable_scm(const ShellableInstance& inst,
                                const CoefficientSpec& k) {
    CheckRecord r =
        make_record("shellable_implies_scm", complex_digest(inst.complex), k);
    bool order_certified = true;
    for (std::size_t i = 1; i < inst.order.size(); ++i) {
        std::vector<Face> previous(inst.order.begin(),
                                   inst.order.begin() + static_cast<std::ptrdiff_t>(i));
        if (!shelling_step_ok(previous, inst.order[i])) order_certified = false;
    }
    expect(r, "emitted order satisfies the step condition", order_certified);
    expect(r, "is SCM", is_SCM_links(inst.complex, k).ok);
    return r;
}

CheckRecord check_join(const SimplicialComplex& a, const SimplicialComplex& b,
                       const CoefficientSpec& k) {
    CheckRecord r = make_record(
        "join_scm", complex_digest(a) + "*" + complex_digest(b), k);
    SimplicialComplex joined = join(a, b);
    add_route(r, "join", is_SCM_links(joined, k).ok);
    add_route(r, "factors", is_SCM_links(a, k).ok && is_SCM_links(b, k).ok);
    finish_agreement(r);
    expect(r, "facet count multiplies",
           joined.facet_count() == a.facet_count() * b.facet_count());
    return r;
}

CheckRecord check_join_acyclic(const SimplicialComplex& a,
                               const SimplicialComplex& b,
                               const CoefficientSpec& k) {
    CheckRecord r = make_record(
        "join_sequentially_acyclic", complex_digest(a) + "*" + complex_digest(b), k);
    // both factors are sequentially acyclic over Z by pool construction
    expect(r, "join of sequentially acyclic is sequentially acyclic",
           is_sequentially_acyclic(join(a, b), k).ok);
    return r;
}

// ---------------------------------------------------------------------------
// task runner

struct Task {
    std::function<CheckRecord()> run;
};

std::vector<CheckRecord> run_tasks(std::vector<Task>& tasks,
                                   const SuiteConfig& cfg) {
    std::vector<CheckRecord> records(tasks.size());
    const long long budget = cfg.budget_ms;
    auto run_one = [&](std::size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        reset_homology_work_counter();
        records[i] = tasks[i].run();
        records[i].work = homology_work_counter();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (budget > 0 && ms > budget) records[i].budget_exhausted = true;
    };
#ifdef _OPENMP
    if (cfg.jobs > 1) {
        omp_set_num_threads(cfg.jobs);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    }
#else
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
#endif
    std::sort(records.begin(), records.end(),
              [](const CheckRecord& a, const CheckRecord& b) {
                  if (a.instance != b.instance) return a.instance < b.instance;
                  if (a.check != b.check) return a.check < b.check;
                  return a.coeff < b.coeff;
              });
    return records;
}

} // namespace

Report run_equivalence_suite(const SuiteConfig& config) {
    Report report;
    report.config = config;
    InstancePool pool = build_pool(config);

    std::vector<Task> tasks;
    auto add = [&](std::function<CheckRecord()> fn) {
        tasks.push_back(Task{std::move(fn)});
    };

    const auto z = CoefficientSpec::integers();
    std::vector<CoefficientSpec> fields;
    for (const auto& k : config.coeffs)
        if (k.is_field()) fields.push_back(k);

    for (const auto& cx : pool.complexes) {
        for (const auto& k : config.coeffs) {
            add([cx, k] { return check_four_routes(cx, k); });
            add([cx, k] { return check_pure_collapse(cx, k); });
            add([cx, k] { return check_barycentric(cx, k); });
            add([cx, k] { return check_relative_void(cx, k); });
        }
        for (const auto& k : fields)
            add([cx, k] { return check_eagon_reiner_hochster(cx, k); });
        add([cx] { return check_prop21_freeness(cx); });
        add([cx] { return check_euler(cx); });
        for (std::int64_t p : {2, 3, 5})
            add([cx, p] { return check_uct(cx, p); });
    }

    for (const auto& [a, b] : pool.pairs)
        for (const auto& k : config.coeffs)
            add([a = a, b = b, k] { return check_join(a, b, k); });
    for (const auto& [a, b] : pool.acyclic_pairs)
        for (const auto& k : config.coeffs)
            add([a = a, b = b, k] { return check_join_acyclic(a, b, k); });
    for (const auto& inst : pool.shellables)
        for (const auto& k : config.coeffs)
            add([inst, k] { return check_shellable_scm(inst, k); });
    for (const auto& cx : pool.scm_complexes)
        for (const auto& k : config.coeffs)
            add([cx, k] { return check_skeleta(cx, k); });

    for (const auto& p : pool.posets) {
        for (const auto& k : config.coeffs) {
            add([p, k] { return check_cor36(p, k); });
            add([p, k] { return check_interval_poset(p, k); });
        }
    }
    for (const auto& [a, b] : pool.poset_pairs)
        for (const auto& k : config.coeffs) {
            add([a = a, b = b, k] { return check_cor34(a, b, k); });
            add([a = a, b = b, k] { return check_cor39(a, b, k); });
        }
    for (const auto& [a, b] : pool.acyclic_poset_pairs)
        for (const auto& k : config.coeffs)
            add([a = a, b = b, k] { return check_cor38(a, b, k); });

    for (const auto& p : pool.semipure)
        for (const auto& k : config.coeffs)
            add([p, k] { return check_thm51_cor53(p, k); });
    for (const auto& p : pool.semipure_scm)
        for (const auto& k : config.coeffs) {
            add([p, k] { return check_sec4_preservation(p, k); });
            add([p, k] { return check_type_selection(p, k); });
        }
    (void)z;

    report.records = run_tasks(tasks, config);
    return report;
}

std::string Report::to_json(int indent) const {
    ordered_json j;
    j["tool"] = "scmtool";
    j["version"] = version;
    ordered_json cfg;
    cfg["seed"] = config.seed;
    cfg["exhaustive_vertices"] = config.exhaustive_vertices;
    cfg["max_vertices"] = config.max_vertices;
    cfg["max_elements"] = config.max_elements;
    cfg["samples"] = config.samples;
    {
        std::string coeffs;
        for (const auto& k : config.coeffs) {
            if (!coeffs.empty()) coeffs += ',';
            coeffs += k.to_string();
        }
        cfg["coeffs"] = coeffs;
    }
    cfg["jobs"] = config.jobs;
    cfg["budget_ms"] = config.budget_ms;
    j["config"] = cfg;
    ordered_json recs = ordered_json::array();
    for (const auto& r : records) {
        ordered_json rec;
        rec["check"] = r.check;
        rec["instance"] = r.instance;
        rec["coeff"] = r.coeff;
        ordered_json verdicts;
        for (const auto& [name, verdict] : r.verdicts) verdicts[name] = verdict;
        rec["verdicts"] = verdicts;
        rec["agreement"] = r.ok;
        if (!r.witness.empty()) rec["witness"] = r.witness;
        rec["work"] = r.work;
        if (r.budget_exhausted) rec["budget_exhausted"] = true;
        recs.push_back(rec);
    }
    j["records"] = recs;
    ordered_json summary;
    summary["checks"] = records.size();
    summary["failures"] = failures();
    summary["budget_exhausted"] = budget_exhaustions();
    j["summary"] = summary;
    return j.dump(indent) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream out;
    out << "scmtool " << version << " equivalence suite\n";
    std::map<std::string, std::pair<long long, long long>> by_check;
    for (const auto& r : records) {
        auto& [total, failed] = by_check[r.check];
        ++total;
        if (!r.ok) ++failed;
    }
    for (const auto& [name, counts] : by_check)
        out << (counts.second == 0 ? "PASS " : "FAIL ") << name << " ("
            << counts.first - counts.second << "/" << counts.first << ")\n";
    out << "checks: " << records.size() << ", failures: " << failures()
        << ", budget exhausted: " << budget_exhaustions() << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// counterexample search

namespace {

// Layered enumeration of semipure posets: layer sizes form a composition,
// every element of a layer covers a nonempty subset of the layer below,
// and within a layer the cover masks are nondecreasing (a cheap canonical
// order that removes within-layer relabelings without losing any
// isomorphism class).
class LayeredEnumerator {
public:
    LayeredEnumerator(int elements, int max_length)
        : total_(elements), max_len_(max_length) {}

    template <typename Fn>
    bool for_each(Fn&& fn) {
        for (int layers = 2; layers <= max_len_ + 1 && layers <= total_; ++layers) {
            std::vector<int> sizes(static_cast<std::size_t>(layers), 1);
            if (!compositions(sizes, total_ - layers, 0, fn)) return false;
        }
        return true;
    }

private:
    int total_;
    int max_len_;

    template <typename Fn>
    bool compositions(std::vector<int>& sizes, int rest, std::size_t at, Fn&& fn) {
        if (at + 1 == sizes.size()) {
            sizes[at] += rest;
            bool keep_going = assign(sizes, fn);
            sizes[at] -= rest;
            return keep_going;
        }
        for (int extra = 0; extra <= rest; ++extra) {
            sizes[at] += extra;
            if (!compositions(sizes, rest - extra, at + 1, fn)) {
                sizes[at] -= extra;
                return false;
            }
            sizes[at] -= extra;
        }
        return true;
    }

    template <typename Fn>
    bool assign(const std::vector<int>& sizes, Fn&& fn) {
        std::vector<std::vector<std::uint32_t>> masks(sizes.size());
        return assign_layer(sizes, masks, 1, fn);
    }

    template <typename Fn>
    bool assign_layer(const std::vector<int>& sizes,
                      std::vector<std::vector<std::uint32_t>>& masks,
                      std::size_t layer, Fn&& fn) {
        if (layer == sizes.size()) return emit(sizes, masks, fn);
        const int below = sizes[layer - 1];
        const std::uint32_t top = (1u << below);
        std::vector<std::uint32_t>& layer_masks = masks[layer];
        layer_masks.assign(static_cast<std::size_t>(sizes[layer]), 1u);
        std::function<bool(std::size_t, std::uint32_t)> rec =
            [&](std::size_t at, std::uint32_t lo) -> bool {
            if (at == layer_masks.size())
                return assign_layer(sizes, masks, layer + 1, fn);
            for (std::uint32_t m = lo; m < top; ++m) {
                layer_masks[at] = m;
                if (!rec(at + 1, m)) return false;
            }
            return true;
        };
        return rec(0, 1u);
    }

    template <typename Fn>
    bool emit(const std::vector<int>& sizes,
              const std::vector<std::vector<std::uint32_t>>& masks, Fn&& fn) {
        std::vector<int> first_id(sizes.size() + 1, 0);
        for (std::size_t i = 0; i < sizes.size(); ++i)
            first_id[i + 1] = first_id[i] + sizes[i];
        std::vector<int> elems(static_cast<std::size_t>(first_id.back()));
        for (std::size_t i = 0; i < elems.size(); ++i)
            elems[i] = static_cast<int>(i);
        std::vector<std::pair<int, int>> covers;
        for (std::size_t layer = 1; layer < sizes.size(); ++layer)
            for (int e = 0; e < sizes[layer]; ++e) {
                std::uint32_t mask = masks[layer][static_cast<std::size_t>(e)];
                for (int b = 0; b < sizes[layer - 1]; ++b)
                    if (mask & (1u << b))
                        covers.emplace_back(first_id[layer - 1] + b,
                                            first_id[layer] + e);
            }
        FinitePoset p = FinitePoset::from_covers(elems, covers);
        return fn(p);
    }
};

bool confirmed_counterexample(const FinitePoset& p) {
    const auto q = CoefficientSpec::rationals();
    if (!is_semipure(p)) return false;
    if (!rank_selection_profile(p, q, SelectionMode::AllSubsets,
                                SelectionLevel::Direct)
             .ok)
        return false;
    // double verification through three independent routes
    if (poset_is_SCM(p, q).ok) return false;
    if (semipure_is_SCM_rankgen(p, q).ok) return false;
    if (poset_is_SCM_intervals(p, q).ok) return false;
    return true;
}

} // namespace

SearchResult search_counterexample(const SearchBounds& bounds) {
    SearchResult result;
    const auto q = CoefficientSpec::rationals();
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (bounds.budget_ms <= 0) return false;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        return ms > bounds.budget_ms;
    };

    // exhaustive phase over layered semipure posets
    for (int m = 2; m <= std::min(bounds.exhaustive_elements, bounds.max_elements);
         ++m) {
        LayeredEnumerator enumerator(m, bounds.max_length);
        bool completed = enumerator.for_each([&](const FinitePoset& p) {
            ++result.candidates_examined;
            if ((result.candidates_examined & 0x3f) == 0 && out_of_time())
                return false;
            if (!rank_selection_profile(p, q, SelectionMode::AllSubsets,
                                        SelectionLevel::Direct)
                     .ok)
                return true;
            ++result.hypothesis_holders;
            if (poset_is_SCM(p, q).ok) return true;
            if (confirmed_counterexample(p)) {
                result.counterexample = p;
                return false;
            }
            return true;
        });
        if (result.counterexample) {
            result.outcome = SearchOutcome::Found;
            result.note = "found in exhaustive phase at " + std::to_string(m) +
                          " elements";
            return result;
        }
        if (!completed && out_of_time()) {
            result.outcome = SearchOutcome::BudgetExhausted;
            result.note = "time budget hit during exhaustive phase at " +
                          std::to_string(m) + " elements";
            return result;
        }
    }

    // randomized phase up to the element bound
    for (long long i = 0; i < bounds.random_samples; ++i) {
        if ((i & 0x3f) == 0 && out_of_time()) {
            result.outcome = SearchOutcome::BudgetExhausted;
            result.note = "time budget hit during randomized phase";
            return result;
        }
        int m = std::max(2, bounds.exhaustive_elements) +
                static_cast<int>(i % std::max<long long>(
                                     1, bounds.max_elements -
                                            bounds.exhaustive_elements + 1));
        m = std::min(m, bounds.max_elements);
        FinitePoset p = generate_semipure_poset(
            m, bounds.seed + static_cast<std::uint64_t>(i) * 1248331ull + 7,
            bounds.max_length);
        ++result.candidates_examined;
        if (!rank_selection_profile(p, q, SelectionMode::AllSubsets,
                                    SelectionLevel::Direct)
                 .ok)
            continue;
        ++result.hypothesis_holders;
        if (poset_is_SCM(p, q).ok) continue;
        if (confirmed_counterexample(p)) {
            result.counterexample = p;
            result.outcome = SearchOutcome::Found;
            result.note = "found in randomized phase";
            return result;
        }
    }

    result.outcome = SearchOutcome::Exhausted;
    result.note =
        "exhausted bounds: layered enumeration to " +
        std::to_string(std::min(bounds.exhaustive_elements, bounds.max_elements)) +
        " elements plus " + std::to_string(bounds.random_samples) +
        " randomized samples to " + std::to_string(bounds.max_elements) +
        " elements, length <= " + std::to_string(bounds.max_length);
    return result;
}

std::string SearchResult::to_json(int indent) const {
    ordered_json j;
    j["tool"] = "scmtool";
    j["version"] = kToolVersion;
    switch (outcome) {
        case SearchOutcome::Found: j["outcome"] = "found"; break;
        case SearchOutcome::Exhausted: j["outcome"] = "exhausted bounds"; break;
        case SearchOutcome::BudgetExhausted:
            j["outcome"] = "budget exhausted";
            break;
    }
    j["candidates_examined"] = candidates_examined;
    j["hypothesis_holders"] = hypothesis_holders;
    j["note"] = note;
    if (counterexample) {
        ordered_json ce;
        std::ostringstream elems;
        for (int x : counterexample->elements()) {
            if (elems.tellp() > 0) elems << ' ';
            elems << x;
        }
        ce["elements"] = elems.str();
        ordered_json covers = ordered_json::array();
        for (auto [a, b] : counterexample->covers())
            covers.push_back(std::to_string(a) + " < " + std::to_string(b));
        ce["covers"] = covers;
        j["counterexample"] = ce;
    }
    return j.dump(indent) + "\n";
}

} // namespace scm
