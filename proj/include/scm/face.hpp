#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace scm {

/// A face of a simplicial complex: a strictly ascending list of
/// non-negative vertex identifiers.  The empty face is a legal value and
/// has dimension -1.
class Face {
public:
    Face() = default;

    /// Builds a face from an arbitrary vertex list; sorts and rejects
    /// duplicates or negative identifiers.
    explicit Face(std::vector<int> vertices) : verts_(std::move(vertices)) {
        std::sort(verts_.begin(), verts_.end());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (verts_[i] < 0)
                throw std::invalid_argument("Face: negative vertex id");
            if (i > 0 && verts_[i] == verts_[i - 1])
                throw std::invalid_argument("Face: duplicate vertex id");
        }
    }

    Face(std::initializer_list<int> vertices)
        : Face(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return verts_; }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t card() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    bool contains(int v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool subset_of(const Face& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    bool disjoint_from(const Face& other) const {
        std::size_t i = 0, j = 0;
        while (i < verts_.size() && j < other.verts_.size()) {
            if (verts_[i] < other.verts_[j]) ++i;
            else if (verts_[i] > other.verts_[j]) ++j;
            else return false;
        }
        return true;
    }

    friend Face face_union(const Face& a, const Face& b) {
        std::vector<int> out;
        out.reserve(a.card() + b.card());
        std::set_union(a.verts_.begin(), a.verts_.end(), b.verts_.begin(),
                       b.verts_.end(), std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    friend Face face_intersection(const Face& a, const Face& b) {
        std::vector<int> out;
        std::set_intersection(a.verts_.begin(), a.verts_.end(),
                              b.verts_.begin(), b.verts_.end(),
                              std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    friend Face face_difference(const Face& a, const Face& b) {
        std::vector<int> out;
        std::set_difference(a.verts_.begin(), a.verts_.end(), b.verts_.begin(),
                            b.verts_.end(), std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    /// Face with one vertex removed, by position in ascending order.
    Face without_position(std::size_t pos) const {
        std::vector<int> out = verts_;
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    auto operator<=>(const Face&) const = default;

    std::string to_string() const {
        if (verts_.empty()) return "{}";
        std::string s = "{";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(verts_[i]);
        }
        s += '}';
        return s;
    }

private:
    std::vector<int> verts_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : f.vertices()) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace scm
