#include "scm/generators.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "scm/io.hpp"

namespace scm {

namespace {

std::vector<int> range_ground(int n) {
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1;
    return g;
}

Face random_subset(Rng& rng, int n, double density) {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
        if (rng.next_bool(density)) verts.push_back(v);
    if (verts.empty()) verts.push_back(rng.next_int(1, n));
    return Face(std::move(verts));
}

} // namespace

SimplicialComplex generate_random_complex(int n, double density,
                                          std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_random_complex: n < 1");
    Rng rng(seed);
    const int count = 1 + rng.next_int(0, 2 * n - 1);
    std::vector<Face> facets;
    facets.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) facets.push_back(random_subset(rng, n, density));
    return from_facets(facets, range_ground(n));
}

ShellableInstance generate_shellable(int n, int facet_count,
                                     std::uint64_t seed) {
    if (n < 1 || facet_count < 1)
        throw std::invalid_argument("generate_shellable: bad parameters");
    Rng rng(seed);
    const int retry_budget = 400 * facet_count;
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<Face> order;
        order.push_back(random_subset(rng, n, 0.5));
        int retries = 0;
        while (static_cast<int>(order.size()) < facet_count &&
               retries < retry_budget) {
            Face cand;
            if (!order.empty() && rng.next_bool(0.7)) {
                // boundary move: ridge of an existing facet plus one vertex
                const Face& base =
                    order[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(order.size()) - 1))];
                if (base.card() >= 1) {
                    std::size_t drop = static_cast<std::size_t>(
                        rng.next_int(0, static_cast<int>(base.card()) - 1));
                    Face ridge = base.without_position(drop);
                    int v = rng.next_int(1, n);
                    if (!base.contains(v) || ridge.contains(v)) {
                        cand = face_union(ridge, Face{v});
                    }
                }
            }
            if (cand.empty()) cand = random_subset(rng, n, 0.5);
            ++retries;
            bool comparable = false;
            for (const Face& f : order)
                if (cand.subset_of(f) || f.subset_of(cand)) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            if (!shelling_step_ok(order, cand)) continue;
            order.push_back(cand);
        }
        if (static_cast<int>(order.size()) == facet_count) {
            ShellableInstance out;
            out.order = order;
            out.complex = from_facets(order, range_ground(n));
            return out;
        }
    }
    throw std::runtime_error("generate_shellable: retry budget exhausted");
}

FinitePoset generate_random_poset(int m, double density, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("generate_random_poset: m < 0");
    Rng rng(seed);
    std::vector<int> elems(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) elems[static_cast<std::size_t>(i)] = i;
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (rng.next_bool(density)) relations.emplace_back(i, j);
    return FinitePoset::from_relations(elems, relations);
}

FinitePoset generate_semipure_poset(int m, std::uint64_t seed, int max_length) {
    if (m < 1) throw std::invalid_argument("generate_semipure_poset: m < 1");
    Rng rng(seed);
    const int layers = std::min(m, 1 + rng.next_int(0, std::max(0, max_length)));
    // random composition of m into `layers` positive parts
    std::vector<int> sizes(static_cast<std::size_t>(layers), 1);
    for (int rest = m - layers; rest > 0; --rest)
        ++sizes[static_cast<std::size_t>(rng.next_int(0, layers - 1))];
    std::vector<std::vector<int>> layer_elems;
    int next_id = 0;
    for (int s : sizes) {
        std::vector<int> level;
        for (int i = 0; i < s; ++i) level.push_back(next_id++);
        layer_elems.push_back(std::move(level));
    }
    std::vector<int> elems(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) elems[static_cast<std::size_t>(i)] = i;
    std::vector<std::pair<int, int>> covers;
    for (std::size_t level = 1; level < layer_elems.size(); ++level) {
        for (int x : layer_elems[level]) {
            bool any = false;
            for (int below : layer_elems[level - 1])
                if (rng.next_bool(0.5)) {
                    covers.emplace_back(below, x);
                    any = true;
                }
            if (!any) {
                int below = layer_elems[level - 1][static_cast<std::size_t>(
                    rng.next_int(0, static_cast<int>(layer_elems[level - 1].size()) - 1))];
                covers.emplace_back(below, x);
            }
        }
    }
    FinitePoset p = FinitePoset::from_covers(elems, covers);
    if (!is_semipure(p))
        throw std::runtime_error("generate_semipure_poset: validation failed");
    return p;
}

std::vector<SimplicialComplex> enumerate_complexes(int n, bool up_to_iso) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("enumerate_complexes: supported for 1 <= n <= 5");
    // all nonempty subsets of {1..n}, then all nonempty antichains
    std::vector<Face> subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) verts.push_back(v);
        subsets.push_back(Face(std::move(verts)));
    }
    std::vector<SimplicialComplex> out;
    std::set<std::string> seen;
    std::vector<Face> chosen;
    std::vector<int> ground = range_ground(n);
    std::function<void(std::size_t)> recurse = [&](std::size_t next) {
        if (!chosen.empty()) {
            SimplicialComplex cx = from_facets(chosen, ground);
            if (up_to_iso) {
                std::string key = canonical_complex_key(cx);
                if (seen.insert(key).second) out.push_back(std::move(cx));
            } else {
                out.push_back(std::move(cx));
            }
        }
        for (std::size_t i = next; i < subsets.size(); ++i) {
            bool ok = true;
            for (const Face& c : chosen)
                if (c.subset_of(subsets[i]) || subsets[i].subset_of(c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(subsets[i]);
            recurse(i + 1);
            chosen.pop_back();
        }
    };
    recurse(0);
    return out;
}

std::string canonical_complex_key(const SimplicialComplex& cx) {
    std::vector<int> ground = cx.ground_set();
    std::vector<int> perm = ground;
    std::string best;
    std::sort(perm.begin(), perm.end());
    do {
        std::map<int, int> relabel;
        for (std::size_t i = 0; i < ground.size(); ++i)
            relabel[ground[i]] = perm[i];
        std::vector<Face> facets;
        for (const Face& f : cx.facets()) {
            std::vector<int> verts;
            for (int v : f.vertices()) verts.push_back(relabel.at(v));
            facets.push_back(Face(std::move(verts)));
        }
        std::sort(facets.begin(), facets.end());
        std::ostringstream key;
        for (const Face& f : facets) key << f.to_string() << ';';
        if (best.empty() || key.str() < best) best = key.str();
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string fnv_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace scm
