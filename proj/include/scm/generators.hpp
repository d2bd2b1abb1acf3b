#pragma once

#include <cstdint>
#include <random>

#include "scm/poset.hpp"
#include "scm/scm_checks.hpp"

namespace scm {

/// Deterministic RNG: raw mt19937_64 draws with hand-rolled bounding, so
/// seeded streams are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    int next_int(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("Rng: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    double next_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool(double prob) { return next_real() < prob; }

private:
    std::mt19937_64 engine_;
};

/// Random complex on ground {1..n}: a seeded batch of random facets whose
/// expected size is density * n.
SimplicialComplex generate_random_complex(int n, double density,
                                          std::uint64_t seed);

/// Random shellable complex built facet by facet; every emitted order is
/// certified by the step condition during construction.  Throws
/// std::runtime_error when the retry budget runs out.
struct ShellableInstance {
    SimplicialComplex complex;
    std::vector<Face> order;
};
ShellableInstance generate_shellable(int n, int facet_count,
                                     std::uint64_t seed);

/// Random poset on m elements from a seeded random relation digraph.
FinitePoset generate_random_poset(int m, double density, std::uint64_t seed);

/// Random semipure poset built from antichain layers with covers between
/// adjacent layers only; the result is validated with is_semipure.
FinitePoset generate_semipure_poset(int m, std::uint64_t seed,
                                    int max_length = 3);

/// All complexes over the fixed ground set {1..n} with at least one
/// nonempty facet, i.e. the nonempty antichains of nonempty subsets;
/// optionally deduplicated up to vertex relabeling.  Supported for
/// n <= 5.
std::vector<SimplicialComplex> enumerate_complexes(int n, bool up_to_iso);

/// Minimum lexicographic facet list over all permutations of the ground
/// set, as a parseable facet-list string.
std::string canonical_complex_key(const SimplicialComplex& cx);

/// FNV-1a digest of a string, rendered as fixed-width hex; used for
/// instance digests in reports.
std::string fnv_digest(const std::string& text);

} // namespace scm
