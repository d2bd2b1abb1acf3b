#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace scm {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix in row-major order.  Entries of the boundary
/// matrices are -1/0/+1 but elimination intermediates can grow, so the
/// elimination routines run on int64 with overflow checks and restart on
/// arbitrary-precision integers when needed.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data; // rows * cols

    std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static IntMatrix zero(std::size_t r, std::size_t c) {
        return IntMatrix{r, c, std::vector<std::int64_t>(r * c, 0)};
    }
};

/// Invariant factors d_1 | d_2 | ... | d_k (all positive) of an integer
/// matrix; rank equals the count of nonzero factors, i.e. factors.size().
struct SnfResult {
    std::vector<BigInt> factors;
    std::size_t rank = 0;
};

/// Smith normal form by smallest-absolute-value pivoting with full
/// row/column elimination, exact over arbitrary-precision integers.
SnfResult smith_normal_form(const IntMatrix& m);

/// Rank over F_p.  The parallel kernel distributes row updates with
/// OpenMP; the serial kernel is the reference implementation used to
/// cross-check it.
std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);
std::size_t rank_mod_p_serial(const IntMatrix& m, std::int64_t p);

/// Rank over Q by fraction-free (Bareiss) elimination, exact.
std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_rational_serial(const IntMatrix& m);

} // namespace scm
