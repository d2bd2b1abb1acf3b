// Acceptance suite: runs the release criteria and prints one PASS/FAIL
// line each.  Invoke with a criterion number (1-10) or no argument for
// the full run.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "scm/io.hpp"
#include "scm/suite.hpp"

using namespace scm;
using Clock = std::chrono::steady_clock;

namespace {

const CoefficientSpec Z = CoefficientSpec::integers();
const CoefficientSpec Q = CoefficientSpec::rationals();
const CoefficientSpec F2 = CoefficientSpec::prime_field(2);

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

SimplicialComplex shifted(const SimplicialComplex& cx, int offset) {
    std::vector<int> ground;
    std::vector<Face> facets;
    for (int v : cx.ground_set()) ground.push_back(v + offset);
    for (const Face& f : cx.facets()) {
        std::vector<int> verts;
        for (int v : f.vertices()) verts.push_back(v + offset);
        facets.push_back(Face(std::move(verts)));
    }
    return from_facets(facets, ground);
}

// ---- criterion 1: homology ground truth -----------------------------------

Criterion criterion1() {
    Criterion c;
    auto timed_profile = [&](const SimplicialComplex& cx,
                             const CoefficientSpec& k, const char* name) {
        auto t0 = Clock::now();
        HomologyProfile p = reduced_homology(cx, k);
        double secs = seconds_since(t0);
        c.require(secs < 1.0, std::string(name) + " exceeded 1 s");
        return p;
    };
    for (int d = 1; d <= 4; ++d) {
        HomologyProfile p = timed_profile(fixtures::sphere(d), Z, "sphere");
        for (int r = -1; r <= d; ++r) {
            c.require(p.betti_at(r) == (r == d ? 1 : 0),
                      "sphere S^" + std::to_string(d) + " betti");
            c.require(p.torsion_at(r).empty(), "sphere torsion");
        }
    }
    {
        HomologyProfile p = timed_profile(fixtures::torus7(), Z, "torus");
        c.require(p.betti_at(0) == 0 && p.betti_at(1) == 2 && p.betti_at(2) == 1,
                  "torus betti");
        for (int r = -1; r <= 2; ++r)
            c.require(p.torsion_at(r).empty(), "torus torsion");
    }
    {
        SimplicialComplex rp2 = fixtures::rp2_6();
        HomologyProfile pz = timed_profile(rp2, Z, "rp2/Z");
        c.require(pz.betti_at(0) == 0 && pz.betti_at(1) == 0 && pz.betti_at(2) == 0,
                  "rp2 Z betti");
        c.require(pz.torsion_at(1).size() == 1 && pz.torsion_at(1)[0] == 2,
                  "rp2 Z torsion");
        HomologyProfile p2 = timed_profile(rp2, F2, "rp2/F2");
        c.require(p2.betti_at(1) == 1 && p2.betti_at(2) == 1, "rp2 F2 betti");
        HomologyProfile pq = timed_profile(rp2, Q, "rp2/Q");
        for (int r = -1; r <= 2; ++r)
            c.require(pq.betti_at(r) == 0, "rp2 Q betti");
    }
    return c;
}

// ---- criterion 2: universal coefficients ----------------------------------

Criterion criterion2() {
    Criterion c;
    auto t0 = Clock::now();
    for (int i = 0; i < 200; ++i) {
        SimplicialComplex cx =
            generate_random_complex(3 + i % 6, 0.35 + 0.05 * (i % 5), 9000 + i);
        HomologyProfile over_z = reduced_homology(cx, Z);
        for (std::int64_t p : {2, 3, 5}) {
            HomologyProfile over_p =
                reduced_homology(cx, CoefficientSpec::prime_field(p));
            for (int d = -1; d <= cx.dim(); ++d) {
                long long torsion_count = 0;
                for (const BigInt& f : over_z.torsion_at(d))
                    if (f % p == 0) ++torsion_count;
                for (const BigInt& f : over_z.torsion_at(d - 1))
                    if (f % p == 0) ++torsion_count;
                if (over_p.betti_at(d) != over_z.betti_at(d) + torsion_count) {
                    c.require(false, "UCT identity failed at instance " +
                                         std::to_string(i) + ", degree " +
                                         std::to_string(d) + ", p=" +
                                         std::to_string(p));
                }
            }
        }
    }
    c.require(seconds_since(t0) < 60.0, "UCT suite exceeded 60 s");
    return c;
}

// ---- criterion 3: four-route agreement -------------------------------------

Criterion criterion3() {
    Criterion c;
    auto t0 = Clock::now();
    std::vector<SimplicialComplex> instances = enumerate_complexes(4, false);
    for (int i = 0; i < 500; ++i)
        instances.push_back(
            generate_random_complex(4 + i % 4, 0.35 + 0.05 * (i % 5), 37000 + i));

    long long disagreements = 0;
    for (const auto& cx : instances) {
        for (const auto& k : {Q, F2}) {
            bool links = is_SCM_links(cx, k).ok;
            bool duval = is_SCM_duval(cx, k).ok;
            bool filtration = is_SCM_filtration(cx, k).ok;
            Face ground(cx.ground_set());
            std::vector<Face> gens;
            for (const Face& f : cx.facets())
                gens.push_back(face_difference(ground, f));
            bool cwl = is_componentwise_linear(
                SquarefreeIdeal(static_cast<int>(cx.ground_set().size()),
                                std::move(gens)),
                k);
            if (!(links == duval && duval == filtration && filtration == cwl))
                ++disagreements;
        }
        bool links_z = is_SCM_links(cx, Z).ok;
        bool duval_z = is_SCM_duval(cx, Z).ok;
        bool filtration_z = is_SCM_filtration(cx, Z).ok;
        if (!(links_z == duval_z && duval_z == filtration_z)) ++disagreements;
    }
    c.require(disagreements == 0,
              std::to_string(disagreements) + " route disagreements");
    c.require(seconds_since(t0) < 600.0, "four-route suite exceeded 10 min");
    c.detail << "instances=" << instances.size();
    return c;
}

// ---- criterion 4: shellable implies SCM ------------------------------------

Criterion criterion4() {
    Criterion c;
    for (int i = 0; i < 100; ++i) {
        ShellableInstance inst =
            generate_shellable(4 + i % 4, 2 + i % 7, 41000 + i);
        for (const auto& k : {Z, F2, Q})
            if (!is_SCM_links(inst.complex, k).ok)
                c.require(false, "shellable instance " + std::to_string(i) +
                                     " not SCM over " + k.to_string());
    }
    return c;
}

// ---- criterion 5: joins -----------------------------------------------------

Criterion criterion5() {
    Criterion c;
    for (int i = 0; i < 100; ++i) {
        SimplicialComplex a =
            generate_random_complex(2 + i % 4, 0.4 + 0.05 * (i % 4), 43000 + i);
        SimplicialComplex b = shifted(
            generate_random_complex(2 + (i / 2) % 4, 0.5, 44000 + i), 50);
        bool lhs = is_SCM_links(join(a, b), Z).ok;
        bool rhs = is_SCM_links(a, Z).ok && is_SCM_links(b, Z).ok;
        if (lhs != rhs)
            c.require(false, "join SCM mismatch at pair " + std::to_string(i));
    }
    int found = 0, salt = 0;
    while (found < 100 && salt < 5000) {
        SimplicialComplex a =
            generate_random_complex(2 + salt % 4, 0.5, 45000 + salt);
        SimplicialComplex b = shifted(
            generate_random_complex(2 + (salt / 3) % 4, 0.5, 46000 + salt), 50);
        ++salt;
        if (!is_sequentially_acyclic(a, Z).ok ||
            !is_sequentially_acyclic(b, Z).ok)
            continue;
        ++found;
        if (!is_sequentially_acyclic(join(a, b), Z).ok)
            c.require(false, "join of sequentially acyclic pair " +
                                 std::to_string(found) + " not sequentially acyclic");
    }
    c.require(found == 100, "could not assemble 100 sequentially acyclic pairs");
    return c;
}

// ---- criterion 6: poset characterizations ----------------------------------

Criterion criterion6() {
    Criterion c;
    for (int i = 0; i < 200; ++i) {
        FinitePoset p =
            generate_random_poset(4 + i % 6, 0.25 + 0.05 * (i % 4), 47000 + i);
        if (poset_is_SCM_intervals(p, Z).ok != poset_is_SCM(p, Z).ok)
            c.require(false, "interval route mismatch at poset " + std::to_string(i));
    }
    for (const auto& cx : enumerate_complexes(4, false)) {
        if (cx.is_void() || cx.is_empty_complex()) continue;
        if (is_SCM_links(cx, Z).ok !=
            poset_is_SCM_intervals(face_poset(cx).poset, Z).ok)
            c.require(false, "barycentric mismatch at " + cx.to_string());
    }
    for (int i = 0; i < 100; ++i) {
        FinitePoset a = generate_random_poset(3 + i % 3, 0.4, 48000 + i);
        std::vector<int> elems;
        std::vector<std::pair<int, int>> covers;
        FinitePoset b_raw = generate_random_poset(3 + (i / 2) % 3, 0.4, 49000 + i);
        for (int x : b_raw.elements()) elems.push_back(x + 500);
        for (auto [u, v] : b_raw.covers()) covers.emplace_back(u + 500, v + 500);
        FinitePoset b = FinitePoset::from_covers(elems, covers);
        bool lhs = poset_is_SCM(ordinal_sum(a, b), Z).ok;
        bool rhs = poset_is_SCM(a, Z).ok && poset_is_SCM(b, Z).ok;
        if (lhs != rhs)
            c.require(false, "ordinal sum mismatch at pair " + std::to_string(i));
    }
    for (int i = 0; i < 50; ++i) {
        FinitePoset a =
            adjoin_bounds(generate_random_poset(4, 0.35, 51000 + i), true, false)
                .poset;
        FinitePoset b =
            adjoin_bounds(generate_random_poset(4, 0.35, 52000 + i), true, false)
                .poset;
        bool lhs = poset_is_SCM(product(a, b), Z).ok;
        bool rhs = poset_is_SCM(a, Z).ok && poset_is_SCM(b, Z).ok;
        if (lhs != rhs)
            c.require(false, "product mismatch at pair " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
        FinitePoset p = generate_random_poset(3 + i % 4, 0.35, 53000 + i);
        if (poset_is_SCM(p, Z).ok !=
            poset_is_SCM(interval_poset(p).poset, Z).ok)
            c.require(false, "interval poset mismatch at " + std::to_string(i));
    }
    return c;
}

// ---- criterion 7: section 4 preservation ------------------------------------

Criterion criterion7() {
    Criterion c;
    // 100 semipure SCM posets (over Z, hence over every field)
    std::vector<FinitePoset> instances;
    int salt = 0;
    while (static_cast<int>(instances.size()) < 100 && salt < 10000) {
        FinitePoset p = generate_semipure_poset(4 + salt % 7, 56000 + salt);
        ++salt;
        if (p.size() <= 10 && poset_is_SCM(p, Z).ok) instances.push_back(p);
    }
    c.require(instances.size() == 100, "could not assemble 100 semipure SCM posets");

    for (std::size_t i = 0; i < instances.size(); ++i) {
        const FinitePoset& p = instances[i];
        FinitePoset based = p.minimum() ? p : adjoin_bounds(p, true, false).poset;
        const int len = based.length();
        for (std::uint32_t mask = 1; mask < (1u << (len + 1)); ++mask) {
            std::set<int> s;
            for (int t = 0; t <= len; ++t)
                if (mask & (1u << t)) s.insert(t);
            if (!poset_is_SCM(rank_selected(based, s), Z).ok)
                c.require(false, "rank selection failed at instance " +
                                     std::to_string(i));
        }
        for (int t = 0; t <= len + 1; ++t)
            if (!poset_is_SCM(max_deleted(based, t), Z).ok)
                c.require(false,
                          "max deletion failed at instance " + std::to_string(i));
        // truncations of the bounded extension
        FinitePoset hat = adjoin_bounds(p, true, true).poset;
        const int hl = hat.length();
        for (int s = 0; s <= hl; ++s)
            for (int t = 0; t <= hl; ++t) {
                std::set<int> ss, tt;
                for (int v = s; v <= hl; ++v) ss.insert(v);
                for (int v = t; v <= hl; ++v) tt.insert(v);
                if (!poset_is_SCM(birank_selected(hat, ss, tt), Z).ok)
                    c.require(false, "truncation failed at instance " +
                                         std::to_string(i));
            }
        // type selections of the completely balanced order complex
        SimplicialComplex cx = order_complex(p);
        VertexColoring coloring;
        for (int x : p.elements()) coloring.color[x] = p.height(x);
        if (is_completely_balanced(cx, coloring)) {
            const int d = cx.dim();
            for (std::uint32_t mask = 1; mask < (1u << (d + 1)); ++mask) {
                std::set<int> colors;
                for (int t = 0; t <= d; ++t)
                    if (mask & (1u << t)) colors.insert(t);
                if (!is_SCM_links(type_selected(cx, coloring, colors), Z).ok)
                    c.require(false, "type selection failed at instance " +
                                         std::to_string(i));
            }
        } else {
            c.require(false, "height coloring unexpectedly unbalanced");
        }
    }

    // skeleta and coskeleta of 100 SCM complexes
    for (int i = 0; i < 100; ++i) {
        ShellableInstance inst =
            generate_shellable(4 + i % 4, 2 + i % 6, 57000 + i);
        const SimplicialComplex& cx = inst.complex;
        for (int t = 0; t <= cx.dim(); ++t)
            if (!is_SCM_links(skeleton(cx, t), Z).ok)
                c.require(false, "skeleton failed at complex " + std::to_string(i));
        for (int t = 0; t <= cx.dim() + 1; ++t)
            if (!is_SCM_links(coskeleton(cx, t), Z).ok ||
                !is_SCM_links(max_deleted_complex(cx, t), Z).ok)
                c.require(false, "coskeleton failed at complex " + std::to_string(i));
    }
    return c;
}

// ---- criterion 8: section 5 equivalences -----------------------------------

Criterion criterion8() {
    Criterion c;
    for (int i = 0; i < 200; ++i) {
        FinitePoset p = generate_semipure_poset(4 + i % 7, 61000 + i);
        for (const auto& k : {Q, F2}) {
            bool reference = poset_is_SCM_intervals(p, k).ok;
            bool layers = semipure_is_SCM_rankgen(p, k).ok;
            bool m2 = rank_selection_profile(p, k, SelectionMode::AllSubsets,
                                             SelectionLevel::Layers).ok;
            bool m3 = rank_selection_profile(p, k, SelectionMode::RankIntervals,
                                             SelectionLevel::Layers).ok;
            bool m4 = rank_selection_profile(p, k, SelectionMode::AllSubsets,
                                             SelectionLevel::Ideals).ok;
            bool m5 = rank_selection_profile(p, k, SelectionMode::RankIntervals,
                                             SelectionLevel::Ideals).ok;
            if (!(reference == layers && layers == m2 && m2 == m3 &&
                  m3 == m4 && m4 == m5))
                c.require(false, "section 5 mismatch at instance " +
                                     std::to_string(i) + " over " + k.to_string());
        }
    }
    return c;
}

// ---- criterion 9: freeness and vanishing ------------------------------------

Criterion criterion9() {
    Criterion c;
    std::vector<SimplicialComplex> instances = enumerate_complexes(4, false);
    for (int i = 0; i < 200; ++i)
        instances.push_back(
            generate_random_complex(4 + i % 4, 0.4 + 0.05 * (i % 4), 63000 + i));
    long long tested = 0;
    for (const auto& cx : instances) {
        if (!is_sequentially_acyclic(cx, Z).ok) continue;
        ++tested;
        HomologyProfile p = reduced_homology(cx, Z);
        std::set<int> facet_dims;
        for (const Face& f : cx.facets()) facet_dims.insert(f.dim());
        for (int d = p.min_degree; d <= p.max_degree(); ++d) {
            if (!p.torsion_at(d).empty())
                c.require(false, "torsion in a sequentially acyclic complex");
            if (p.betti_at(d) != 0 && !facet_dims.count(d))
                c.require(false, "nonzero betti outside facet dimensions");
        }
    }
    c.detail << "sequentially acyclic instances tested: " << tested;
    return c;
}

// ---- criterion 10: counterexample search (soft) ------------------------------

Criterion criterion10() {
    Criterion c;
    SearchBounds bounds;
    bounds.max_elements = 10;
    bounds.max_length = 3;
    bounds.exhaustive_elements = 6;
    bounds.random_samples = 1500;
    bounds.seed = 20260810;
    SearchResult result = search_counterexample(bounds);
    if (result.outcome == SearchOutcome::Found) {
        c.require(result.counterexample.has_value(),
                  "found outcome without a poset");
        if (result.counterexample) {
            const FinitePoset& p = *result.counterexample;
            c.require(is_semipure(p), "counterexample not semipure");
            c.require(rank_selection_profile(p, Q, SelectionMode::AllSubsets,
                                             SelectionLevel::Direct).ok,
                      "counterexample selections not all sequentially acyclic");
            c.require(!poset_is_SCM(p, Q).ok, "counterexample is SCM");
            c.require(!poset_is_SCM_intervals(p, Q).ok,
                      "interval route disagrees on the counterexample");
        }
        c.detail << "outcome: found; " << result.note;
    } else if (result.outcome == SearchOutcome::Exhausted) {
        c.require(!result.note.empty(), "exhausted without an explicit report");
        c.detail << "outcome: exhausted bounds; candidates="
                 << result.candidates_examined
                 << ", hypothesis holders=" << result.hypothesis_holders;
    } else {
        c.require(false, "search stopped on budget rather than completing");
    }
    return c;
}

struct Entry {
    int number;
    const char* name;
    Criterion (*run)();
};

constexpr Entry kCriteria[] = {
    {1, "homology ground truth (spheres, torus, projective plane)", criterion1},
    {2, "universal-coefficient consistency on 200 random complexes", criterion2},
    {3, "four-route SCM agreement (exhaustive <=4 plus 500 random)", criterion3},
    {4, "shellable implies SCM on 100 generated instances", criterion4},
    {5, "join preservation on 100 pairs (SCM and sequential acyclicity)", criterion5},
    {6, "poset characterizations (intervals, barycentric, sums, products)", criterion6},
    {7, "rank-selection/type/max-deletion/truncation/skeleta preservation", criterion7},
    {8, "semipure layer and rank-selection equivalences over Q and F2", criterion8},
    {9, "sequentially acyclic complexes have free, facet-supported homology", criterion9},
    {10, "counterexample search completes with an explicit outcome", criterion10},
};

} // namespace

int main(int argc, char** argv) {
    int which = 0;
    if (argc > 1) which = std::atoi(argv[1]);
    int failures = 0;
    for (const Entry& entry : kCriteria) {
        if (which != 0 && entry.number != which) continue;
        auto t0 = Clock::now();
        Criterion result = entry.run();
        double secs = seconds_since(t0);
        std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << entry.number
                  << ": " << entry.name;
        std::ostringstream extra;
        if (result.detail.tellp() > 0) extra << result.detail.str() << "; ";
        extra << secs << " s";
        std::cout << " [" << extra.str() << "]\n";
        if (!result.ok) ++failures;
    }
    return failures;
}
