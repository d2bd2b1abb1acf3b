#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace scm {

enum class CoeffKind { Integers, Rationals, PrimeField };

/// Coefficient choice for homology: the integers, the rationals, or a
/// prime field F_p.
struct CoefficientSpec {
    CoeffKind kind = CoeffKind::Integers;
    std::int64_t p = 0;

    static CoefficientSpec integers() { return {CoeffKind::Integers, 0}; }
    static CoefficientSpec rationals() { return {CoeffKind::Rationals, 0}; }
    static CoefficientSpec prime_field(std::int64_t p);

    bool is_field() const { return kind != CoeffKind::Integers; }

    bool operator==(const CoefficientSpec&) const = default;

    std::string to_string() const {
        switch (kind) {
            case CoeffKind::Integers: return "Z";
            case CoeffKind::Rationals: return "Q";
            case CoeffKind::PrimeField: return "F" + std::to_string(p);
        }
        return "?";
    }

    /// Parses "z", "q", or "f<p>" (case-insensitive).
    static CoefficientSpec parse(const std::string& text);
};

bool is_prime(std::int64_t n);

} // namespace scm
