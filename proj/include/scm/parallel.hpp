#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace scm {

/// Number of worker threads the OpenMP kernels may use (1 when built
/// without OpenMP).
int worker_threads();
void set_worker_threads(int n);

namespace detail {

/// Evaluates pred(0..n-1) and returns the smallest failing index, if any.
/// Serial execution short-circuits; the OpenMP path evaluates the whole
/// range and takes the minimum, so the result is identical regardless of
/// the parallelism degree.
std::optional<std::size_t> first_failure(
    std::size_t n, const std::function<bool(std::size_t)>& pred);

} // namespace detail

} // namespace scm
