#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scm/generators.hpp"
#include "scm/sr_ideal.hpp"

namespace scm {

inline constexpr const char* kToolVersion = "0.1.0";

/// Poset SCM-ness by definition: the order complex passes the link route.
ScmVerdict poset_is_SCM(const FinitePoset& p, const CoefficientSpec& k);

/// One max-deletion pass on a complex: facets of dimension >= t are
/// replaced by their boundaries.  Mirrors max_deleted on the face poset
/// (face rank = cardinality = dimension + 1).
SimplicialComplex max_deleted_complex(const SimplicialComplex& cx, int t);

/// The t-coskeleton: max-deletion passes at dimension threshold t,
/// iterated to the fixed point.
SimplicialComplex coskeleton(const SimplicialComplex& cx, int t);

struct SuiteConfig {
    std::uint64_t seed = 1;
    int exhaustive_vertices = 3; // fixed-ground exhaustive enumeration size
    int max_vertices = 6;        // random complex size cap
    int max_elements = 7;        // random poset size cap
    int samples = 40;            // per property family
    std::vector<CoefficientSpec> coeffs = {CoefficientSpec::integers(),
                                           CoefficientSpec::rationals(),
                                           CoefficientSpec::prime_field(2)};
    int jobs = 1;
    long long budget_ms = 0; // per check; 0 = unlimited
};

struct CheckRecord {
    std::string check;
    std::string instance; // digest of the canonical serialization
    std::string coeff;
    // named route verdicts; disagreement or a failed expectation clears ok
    std::vector<std::pair<std::string, bool>> verdicts;
    bool ok = true;
    std::string witness;
    long long work = 0; // homology computations, deterministic
    bool budget_exhausted = false;
};

struct Report {
    std::string version = kToolVersion;
    SuiteConfig config;
    std::vector<CheckRecord> records;

    long long failures() const {
        long long n = 0;
        for (const auto& r : records)
            if (!r.ok) ++n;
        return n;
    }
    long long budget_exhaustions() const {
        long long n = 0;
        for (const auto& r : records)
            if (r.budget_exhausted) ++n;
        return n;
    }

    /// Canonical JSON (insertion-ordered, no timing data), byte-identical
    /// for identical config and seed.
    std::string to_json(int indent = 2) const;
    std::string to_text() const;
};

/// Runs every library equivalence and preservation property on exhaustive
/// small instances plus seeded random ones.
Report run_equivalence_suite(const SuiteConfig& config);

struct SearchBounds {
    int max_elements = 10;
    int max_length = 3;
    int exhaustive_elements = 7;    // full layered enumeration up to here
    long long random_samples = 20000;
    std::uint64_t seed = 1;
    long long budget_ms = 0; // 0 = unlimited
};

enum class SearchOutcome { Found, Exhausted, BudgetExhausted };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    std::optional<FinitePoset> counterexample;
    long long candidates_examined = 0;
    long long hypothesis_holders = 0; // posets passing every rank selection
    std::string note;
    std::string to_json(int indent = 2) const;
};

/// Looks for a semipure poset whose rank selections are all sequentially
/// acyclic even though the poset is not SCM.  Any hit is double-verified
/// through the layer route and the interval route before being reported.
SearchResult search_counterexample(const SearchBounds& bounds);

} // namespace scm
