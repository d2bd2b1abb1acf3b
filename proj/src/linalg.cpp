#include "scm/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scm {

namespace {

struct Int64Overflow {};

// Checked int64 helpers: throw Int64Overflow so the caller can restart the
// whole elimination with arbitrary-precision entries.
inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}
inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

template <typename T> T t_mul(T a, T b);
template <> std::int64_t t_mul(std::int64_t a, std::int64_t b) { return mul_checked(a, b); }
template <> BigInt t_mul(BigInt a, BigInt b) { return a * b; }

template <typename T> T t_sub(T a, T b);
template <> std::int64_t t_sub(std::int64_t a, std::int64_t b) { return sub_checked(a, b); }
template <> BigInt t_sub(BigInt a, BigInt b) { return a - b; }

template <typename T> T t_add(T a, T b);
template <> std::int64_t t_add(std::int64_t a, std::int64_t b) { return add_checked(a, b); }
template <> BigInt t_add(BigInt a, BigInt b) { return a + b; }

template <typename T> T t_abs(const T& a) {
    using std::abs;
    using boost::multiprecision::abs;
    return abs(a);
}

template <typename T>
std::vector<std::vector<T>> to_grid(const IntMatrix& m) {
    std::vector<std::vector<T>> g(m.rows, std::vector<T>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            g[r][c] = T(m.at(r, c));
    return g;
}

// Smith normal form core.  Smallest-absolute-value pivot, full row and
// column elimination; before advancing, the pivot is made to divide every
// entry of the remaining submatrix so the diagonal comes out as the
// invariant-factor chain directly.
template <typename T>
std::vector<T> snf_diagonal(std::vector<std::vector<T>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<T> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate smallest nonzero entry in the trailing submatrix
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                if (pr == rows || t_abs(a[r][c]) < t_abs(a[pr][pc])) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break; // submatrix is zero
        std::swap(a[t], a[pr]);
        for (std::size_t r = t; r < rows; ++r) std::swap(a[r][t], a[r][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            // column elimination; a smaller remainder becomes the new pivot
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                T q = a[r][t] / a[t][t];
                if (q != 0)
                    for (std::size_t c = t; c < cols; ++c)
                        a[r][c] = t_sub(a[r][c], t_mul(q, a[t][c]));
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // row elimination
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                T q = a[t][c] / a[t][t];
                if (q != 0)
                    for (std::size_t r = t; r < rows; ++r)
                        a[r][c] = t_sub(a[r][c], t_mul(q, a[r][t]));
                if (a[t][c] != 0) {
                    for (std::size_t r = t; r < rows; ++r)
                        std::swap(a[r][t], a[r][c]);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            // force divisibility of the trailing submatrix by the pivot
            for (std::size_t r = t + 1; r < rows && clean; ++r)
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (a[r][c] % a[t][t] != 0) {
                        for (std::size_t cc = t; cc < cols; ++cc)
                            a[t][cc] = t_add(a[t][cc], a[r][cc]);
                        clean = false;
                        break;
                    }
                }
        }
        diag.push_back(t_abs(a[t][t]));
        ++t;
    }
    return diag;
}

// Modular Gaussian elimination.  Kept as two near-identical kernels: the
// reference triple loop, and the OpenMP version that fans the row updates
// out across threads.
std::size_t rank_mod_p_impl(const IntMatrix& m, std::int64_t p, bool parallel) {
    if (p <= 1 || p > (std::int64_t(1) << 31))
        throw std::invalid_argument("rank_mod_p: modulus out of range");
    const std::size_t rows = m.rows, cols = m.cols;
    std::vector<std::int64_t> a(m.data);
    for (auto& x : a) {
        x %= p;
        if (x < 0) x += p;
    }
    auto inv_mod = [&](std::int64_t x) {
        // extended Euclid
        std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = x;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            t0 = std::exchange(t1, t0 - q * t1);
            r0 = std::exchange(r1, r0 - q * r1);
        }
        return t0 < 0 ? t0 + p : t0;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r * cols + col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        for (std::size_t c = 0; c < cols; ++c)
            std::swap(a[rank * cols + c], a[piv * cols + c]);
        const std::int64_t inv = inv_mod(a[rank * cols + col]);
        const std::size_t pivot_row = rank;
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                std::int64_t f = a[r * cols + col];
                if (f == 0) continue;
                std::int64_t scale = (f * inv) % p;
                for (std::size_t c = col; c < cols; ++c) {
                    std::int64_t v = a[r * cols + c] -
                                     (scale * a[pivot_row * cols + c]) % p;
                    a[r * cols + c] = v < 0 ? v + p : v;
                }
            }
        } else {
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                std::int64_t f = a[r * cols + col];
                if (f == 0) continue;
                std::int64_t scale = (f * inv) % p;
                for (std::size_t c = col; c < cols; ++c) {
                    std::int64_t v = a[r * cols + c] -
                                     (scale * a[pivot_row * cols + c]) % p;
                    a[r * cols + c] = v < 0 ? v + p : v;
                }
            }
        }
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) elimination; the division by the previous pivot
// is exact, so the computation stays in integers.  Overflow inside the
// parallel region is recorded in a flag and rethrown outside it.
template <typename T>
std::size_t rank_bareiss(std::vector<std::vector<T>> a, bool parallel) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    T prev = T(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        const std::size_t pr = rank;
        bool overflow = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel) shared(overflow)
#endif
        for (std::size_t r = pr + 1; r < rows; ++r) {
            try {
                for (std::size_t c = col + 1; c < cols; ++c)
                    a[r][c] = t_sub(t_mul(a[pr][col], a[r][c]),
                                    t_mul(a[r][col], a[pr][c])) /
                              prev;
                a[r][col] = T(0);
            } catch (const Int64Overflow&) {
#ifdef _OPENMP
#pragma omp atomic write
#endif
                overflow = true;
            }
        }
        if (overflow) throw Int64Overflow{};
        prev = a[pr][col];
        ++rank;
    }
    (void)parallel;
    return rank;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    std::vector<BigInt> diag;
    try {
        auto d64 = snf_diagonal<std::int64_t>(to_grid<std::int64_t>(m));
        diag.assign(d64.begin(), d64.end());
    } catch (const Int64Overflow&) {
        diag = snf_diagonal<BigInt>(to_grid<BigInt>(m));
    }
    SnfResult out;
    for (const BigInt& d : diag)
        if (d != 0) out.factors.push_back(d);
    out.rank = out.factors.size();
    return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
    return rank_mod_p_impl(m, p, true);
}

std::size_t rank_mod_p_serial(const IntMatrix& m, std::int64_t p) {
    return rank_mod_p_impl(m, p, false);
}

std::size_t rank_rational(const IntMatrix& m) {
    try {
        return rank_bareiss<std::int64_t>(to_grid<std::int64_t>(m), true);
    } catch (const Int64Overflow&) {
        return rank_bareiss<BigInt>(to_grid<BigInt>(m), true);
    }
}

std::size_t rank_rational_serial(const IntMatrix& m) {
    try {
        return rank_bareiss<std::int64_t>(to_grid<std::int64_t>(m), false);
    } catch (const Int64Overflow&) {
        return rank_bareiss<BigInt>(to_grid<BigInt>(m), false);
    }
}

} // namespace scm
