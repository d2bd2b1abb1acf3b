#include "scm/coeff.hpp"

#include <algorithm>
#include <cctype>

namespace scm {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CoefficientSpec CoefficientSpec::prime_field(std::int64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("prime_field: " + std::to_string(p) +
                                    " is not prime");
    return {CoeffKind::PrimeField, p};
}

CoefficientSpec CoefficientSpec::parse(const std::string& text) {
    std::string s = text;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == "z") return integers();
    if (s == "q") return rationals();
    if (s.size() > 1 && s[0] == 'f') {
        std::int64_t p = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad coefficient spec: " + text);
            p = p * 10 + (s[i] - '0');
        }
        return prime_field(p);
    }
    throw std::invalid_argument("bad coefficient spec: " + text);
}

} // namespace scm
