#include "scm/poset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace scm {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::size_t FinitePoset::index_of(int x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x)
        throw std::invalid_argument("poset: unknown element " + std::to_string(x));
    return static_cast<std::size_t>(it - elems_.begin());
}

bool FinitePoset::has_element(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool FinitePoset::less(int a, int b) const {
    return less_[index_of(a)][index_of(b)] != 0;
}

void FinitePoset::build_caches() {
    const std::size_t n = elems_.size();
    less_.assign(n, std::vector<char>(n, 0));
    for (auto [a, b] : covers_) less_[index_of(a)][index_of(b)] = 1;
    // Floyd-Warshall style closure; poset sizes stay small.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!less_[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (less_[k][j]) less_[i][j] = 1;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (less_[i][i])
            throw std::invalid_argument("poset: cover relation has a cycle");
    height_.assign(n, 0);
    // heights via repeated relaxation over covers (DAG, small)
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : covers_) {
            std::size_t ia = index_of(a), ib = index_of(b);
            if (height_[ib] < height_[ia] + 1) {
                height_[ib] = height_[ia] + 1;
                changed = true;
            }
        }
    }
}

FinitePoset FinitePoset::from_covers(std::vector<int> elements,
                                     std::vector<std::pair<int, int>> covers) {
    FinitePoset p;
    p.elems_ = sorted_unique(std::move(elements));
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    p.covers_ = std::move(covers);
    for (auto [a, b] : p.covers_) {
        if (!p.has_element(a) || !p.has_element(b))
            throw std::invalid_argument("poset: cover uses unknown element");
        if (a == b) throw std::invalid_argument("poset: reflexive cover");
    }
    p.build_caches();
    // irredundancy: no cover may be implied by a two-step path
    for (auto [a, b] : p.covers_)
        for (int z : p.elems_)
            if (z != a && z != b && p.less(a, z) && p.less(z, b))
                throw std::invalid_argument(
                    "poset: redundant cover " + std::to_string(a) + " < " +
                    std::to_string(b));
    return p;
}

FinitePoset FinitePoset::from_relations(
    std::vector<int> elements,
    const std::vector<std::pair<int, int>>& relations) {
    std::vector<int> elems = sorted_unique(std::move(elements));
    const std::size_t n = elems.size();
    auto idx = [&](int x) {
        return static_cast<std::size_t>(
            std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
    };
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (auto [a, b] : relations) {
        if (!std::binary_search(elems.begin(), elems.end(), a) ||
            !std::binary_search(elems.begin(), elems.end(), b))
            throw std::invalid_argument("poset: relation uses unknown element");
        lt[idx(a)][idx(b)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!lt[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (lt[k][j]) lt[i][j] = 1;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (lt[i][i]) throw std::invalid_argument("poset: relations have a cycle");
    // transitive reduction: a cover is a relation with no element between
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (lt[i][k] && lt[k][j]) direct = false;
            if (direct) covers.emplace_back(elems[i], elems[j]);
        }
    return from_covers(std::move(elems), std::move(covers));
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < elems_.size() && minimal; ++j)
            if (less_[j][i]) minimal = false;
        if (minimal) out.push_back(elems_[i]);
    }
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < elems_.size() && maximal; ++j)
            if (less_[i][j]) maximal = false;
        if (maximal) out.push_back(elems_[i]);
    }
    return out;
}

std::optional<int> FinitePoset::minimum() const {
    auto mins = minimal_elements();
    if (mins.size() == 1 && !elems_.empty()) return mins.front();
    return std::nullopt;
}

std::optional<int> FinitePoset::maximum() const {
    auto maxs = maximal_elements();
    if (maxs.size() == 1 && !elems_.empty()) return maxs.front();
    return std::nullopt;
}

int FinitePoset::height(int x) const { return height_[index_of(x)]; }

int FinitePoset::length() const {
    int len = -1;
    for (std::size_t i = 0; i < elems_.size(); ++i)
        len = std::max(len, height_[i]);
    return len;
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
    std::vector<int> sub = sorted_unique(subset);
    for (int x : sub) index_of(x); // validates membership
    std::vector<std::pair<int, int>> relations;
    for (int a : sub)
        for (int b : sub)
            if (a != b && less(a, b)) relations.emplace_back(a, b);
    return from_relations(sub, relations);
}

FinitePoset FinitePoset::dual() const {
    std::vector<std::pair<int, int>> covers;
    covers.reserve(covers_.size());
    for (auto [a, b] : covers_) covers.emplace_back(b, a);
    return from_covers(elems_, std::move(covers));
}

SimplicialComplex order_complex(const FinitePoset& p) {
    if (p.empty()) return from_facets({Face{}}, {});
    // maximal chains = saturated cover paths from minimal to maximal
    std::map<int, std::vector<int>> covers_up;
    for (auto [a, b] : p.covers()) covers_up[a].push_back(b);
    std::vector<Face> chains;
    std::vector<int> path;
    std::function<void(int)> extend = [&](int x) {
        path.push_back(x);
        auto it = covers_up.find(x);
        if (it == covers_up.end() || it->second.empty()) {
            chains.push_back(Face(path));
        } else {
            for (int y : it->second) extend(y);
        }
        path.pop_back();
    };
    for (int m : p.minimal_elements()) extend(m);
    return from_facets(chains, p.elements());
}

FacePoset face_poset(const SimplicialComplex& cx) {
    if (cx.is_void() || cx.is_empty_complex())
        throw std::invalid_argument("face_poset: degenerate complex");
    FacePoset out;
    for (const Face& f : cx.all_faces())
        if (!f.empty()) out.faces.push_back(f);
    std::vector<int> ids(out.faces.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> relations;
    for (std::size_t i = 0; i < out.faces.size(); ++i)
        for (std::size_t j = 0; j < out.faces.size(); ++j)
            if (i != j && out.faces[i].subset_of(out.faces[j]))
                relations.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.poset = FinitePoset::from_relations(ids, relations);
    return out;
}

BoundedPoset adjoin_bounds(const FinitePoset& p, bool bottom, bool top) {
    BoundedPoset out;
    int fresh = p.empty() ? 0 : p.elements().back() + 1;
    std::vector<int> elems = p.elements();
    std::vector<std::pair<int, int>> covers = p.covers();
    if (bottom) {
        out.bottom = fresh++;
        elems.push_back(out.bottom);
        for (int m : p.minimal_elements()) covers.emplace_back(out.bottom, m);
    }
    if (top) {
        out.top = fresh++;
        elems.push_back(out.top);
        for (int m : p.maximal_elements()) covers.emplace_back(m, out.top);
    }
    if (bottom && top && p.empty()) covers.emplace_back(out.bottom, out.top);
    out.poset = FinitePoset::from_covers(std::move(elems), std::move(covers));
    return out;
}

FinitePoset open_interval(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y))
        throw std::invalid_argument("open_interval: endpoints not comparable");
    std::vector<int> subset;
    for (int z : p.elements())
        if (p.less(x, z) && p.less(z, y)) subset.push_back(z);
    return p.induced(subset);
}

FinitePoset closed_interval(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y))
        throw std::invalid_argument("closed_interval: endpoints not comparable");
    std::vector<int> subset;
    for (int z : p.elements())
        if (p.leq(x, z) && p.leq(z, y)) subset.push_back(z);
    return p.induced(subset);
}

FinitePoset principal_filter(const FinitePoset& p, int x) {
    std::vector<int> subset;
    for (int z : p.elements())
        if (p.leq(x, z)) subset.push_back(z);
    return p.induced(subset);
}

FinitePoset principal_ideal(const FinitePoset& p, int x) {
    std::vector<int> subset;
    for (int z : p.elements())
        if (p.leq(z, x)) subset.push_back(z);
    return p.induced(subset);
}

FinitePoset strict_filter(const FinitePoset& p, int x) {
    std::vector<int> subset;
    for (int z : p.elements())
        if (p.less(x, z)) subset.push_back(z);
    return p.induced(subset);
}

FinitePoset strict_ideal(const FinitePoset& p, int x) {
    std::vector<int> subset;
    for (int z : p.elements())
        if (p.less(z, x)) subset.push_back(z);
    return p.induced(subset);
}

FinitePoset ordinal_sum(const FinitePoset& p, const FinitePoset& q) {
    for (int x : p.elements())
        if (q.has_element(x))
            throw std::invalid_argument("ordinal_sum: identifier collision at " +
                                        std::to_string(x));
    std::vector<int> elems = p.elements();
    elems.insert(elems.end(), q.elements().begin(), q.elements().end());
    std::vector<std::pair<int, int>> covers = p.covers();
    covers.insert(covers.end(), q.covers().begin(), q.covers().end());
    for (int a : p.maximal_elements())
        for (int b : q.minimal_elements()) covers.emplace_back(a, b);
    return FinitePoset::from_covers(std::move(elems), std::move(covers));
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
    const auto& pe = p.elements();
    const auto& qe = q.elements();
    const int nq = static_cast<int>(qe.size());
    std::vector<int> elems;
    elems.reserve(pe.size() * qe.size());
    for (std::size_t i = 0; i < pe.size(); ++i)
        for (std::size_t j = 0; j < qe.size(); ++j)
            elems.push_back(static_cast<int>(i) * nq + static_cast<int>(j));
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < pe.size(); ++i)
        for (std::size_t j = 0; j < qe.size(); ++j) {
            // covers of the product: move one coordinate along a cover
            for (auto [a, b] : p.covers())
                if (a == pe[i]) {
                    std::size_t i2 = static_cast<std::size_t>(
                        std::lower_bound(pe.begin(), pe.end(), b) - pe.begin());
                    covers.emplace_back(static_cast<int>(i) * nq + static_cast<int>(j),
                                        static_cast<int>(i2) * nq + static_cast<int>(j));
                }
            for (auto [a, b] : q.covers())
                if (a == qe[j]) {
                    std::size_t j2 = static_cast<std::size_t>(
                        std::lower_bound(qe.begin(), qe.end(), b) - qe.begin());
                    covers.emplace_back(static_cast<int>(i) * nq + static_cast<int>(j),
                                        static_cast<int>(i) * nq + static_cast<int>(j2));
                }
        }
    return FinitePoset::from_covers(std::move(elems), std::move(covers));
}

IntervalPoset interval_poset(const FinitePoset& p) {
    IntervalPoset out;
    for (int x : p.elements())
        for (int y : p.elements())
            if (p.leq(x, y)) out.intervals.emplace_back(x, y);
    std::sort(out.intervals.begin(), out.intervals.end());
    std::vector<int> ids(out.intervals.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> relations;
    for (std::size_t i = 0; i < out.intervals.size(); ++i)
        for (std::size_t j = 0; j < out.intervals.size(); ++j) {
            if (i == j) continue;
            auto [x1, y1] = out.intervals[i];
            auto [x2, y2] = out.intervals[j];
            if (p.leq(x2, x1) && p.leq(y1, y2))
                relations.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    out.poset = FinitePoset::from_relations(ids, relations);
    return out;
}

RankProfile rank_profile(const FinitePoset& p) {
    RankProfile out;
    out.has_minimum = p.minimum().has_value();
    out.length = p.length();
    const int shift = out.has_minimum ? 0 : 1;
    for (int x : p.elements()) out.rank[x] = p.height(x) + shift;
    if (p.is_bounded()) {
        FinitePoset d = p.dual();
        std::map<int, int> corank;
        for (int x : d.elements()) corank[x] = d.height(x);
        out.corank = std::move(corank);
    }
    return out;
}

bool is_semipure(const FinitePoset& p) {
    // Every [0̂, x] is pure exactly when every cover raises the height by
    // one; the virtual bottom never disturbs this.
    for (auto [a, b] : p.covers())
        if (p.height(b) != p.height(a) + 1) return false;
    return true;
}

bool is_pure_poset(const FinitePoset& p) {
    if (!is_semipure(p)) return false;
    const int len = p.length();
    for (int x : p.maximal_elements())
        if (p.height(x) != len) return false;
    return true;
}

namespace {

// Rank selection works in P, or in P with a virtual bottom adjoined when
// the minimum is missing (the adjoined element is kept when 0 is selected).
FinitePoset select_by_rank(const FinitePoset& p, const std::set<int>& s,
                           const std::set<int>* coranks) {
    const bool has_min = p.minimum().has_value();
    FinitePoset base = p;
    int virtual_bottom = -1;
    if (!has_min) {
        BoundedPoset b = adjoin_bounds(p, true, false);
        base = b.poset;
        virtual_bottom = b.bottom;
    }
    const int len = base.length();
    for (int r : s)
        if (r < 0 || r > len)
            throw std::invalid_argument("rank_selected: rank out of range");
    std::vector<int> keep;
    for (int x : base.elements()) {
        if (!s.count(base.height(x))) continue;
        keep.push_back(x);
    }
    (void)virtual_bottom;
    FinitePoset selected = base.induced(keep);
    if (coranks) {
        FinitePoset d = p.dual();
        std::vector<int> keep2;
        for (int x : selected.elements())
            if (coranks->count(d.height(x))) keep2.push_back(x);
        selected = selected.induced(keep2);
    }
    return selected;
}

} // namespace

FinitePoset rank_selected(const FinitePoset& p, const std::set<int>& s) {
    return select_by_rank(p, s, nullptr);
}

FinitePoset birank_selected(const FinitePoset& p, const std::set<int>& s,
                            const std::set<int>& t) {
    if (!p.is_bounded())
        throw std::invalid_argument("birank_selected: poset is not bounded");
    const int len = p.length();
    for (int r : t)
        if (r < 0 || r > len)
            throw std::invalid_argument("birank_selected: corank out of range");
    return select_by_rank(p, s, &t);
}

FinitePoset max_deleted(const FinitePoset& p, int t) {
    RankProfile rp = rank_profile(p);
    std::set<int> maximal(p.maximal_elements().begin(),
                          p.maximal_elements().end());
    std::vector<int> keep;
    for (int x : p.elements())
        if (!(maximal.count(x) && rp.rank.at(x) >= t)) keep.push_back(x);
    return p.induced(keep);
}

namespace {

FinitePoset down_closure(const FinitePoset& p, const std::vector<int>& gens) {
    std::vector<int> keep;
    for (int x : p.elements())
        for (int g : gens)
            if (p.leq(x, g)) {
                keep.push_back(x);
                break;
            }
    return p.induced(keep);
}

} // namespace

FinitePoset rank_generated_ideal(const FinitePoset& p, int j) {
    if (!is_semipure(p))
        throw std::invalid_argument("rank_generated_ideal: poset is not semipure");
    std::vector<int> gens;
    for (int x : p.elements())
        if (p.height(x) == j) gens.push_back(x);
    return down_closure(p, gens);
}

FinitePoset maxrank_ideal(const FinitePoset& p, int j) {
    if (!is_semipure(p))
        throw std::invalid_argument("maxrank_ideal: poset is not semipure");
    std::vector<int> gens;
    for (int x : p.maximal_elements())
        if (p.height(x) >= j) gens.push_back(x);
    return down_closure(p, gens);
}

namespace {

bool extend_isomorphism(const FinitePoset& a, const FinitePoset& b,
                        std::vector<int>& image, std::vector<char>& used,
                        std::size_t next) {
    const auto& ae = a.elements();
    const auto& be = b.elements();
    if (next == ae.size()) return true;
    for (std::size_t j = 0; j < be.size(); ++j) {
        if (used[j]) continue;
        if (a.height(ae[next]) != b.height(be[j])) continue;
        bool ok = true;
        for (std::size_t i = 0; i < next && ok; ++i) {
            bool lt_a = a.less(ae[i], ae[next]);
            bool gt_a = a.less(ae[next], ae[i]);
            bool lt_b = b.less(be[image[i]], be[j]);
            bool gt_b = b.less(be[j], be[image[i]]);
            if (lt_a != lt_b || gt_a != gt_b) ok = false;
        }
        if (!ok) continue;
        image[next] = static_cast<int>(j);
        used[j] = 1;
        if (extend_isomorphism(a, b, image, used, next + 1)) return true;
        used[j] = 0;
    }
    return false;
}

} // namespace

bool posets_isomorphic(const FinitePoset& a, const FinitePoset& b) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size())
        return false;
    std::vector<int> ha, hb;
    for (int x : a.elements()) ha.push_back(a.height(x));
    for (int x : b.elements()) hb.push_back(b.height(x));
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    std::vector<int> image(a.size(), -1);
    std::vector<char> used(b.size(), 0);
    return extend_isomorphism(a, b, image, used, 0);
}

} // namespace scm
