#pragma once

#include <cstddef>
#include <exception>
#include <limits>

namespace abh {

/// How data-parallel loops run. `serial` is the reference path; `parallel`
/// distributes iterations over OpenMP threads. Loop bodies write only to
/// their own index, so both paths produce identical results.
enum class Execution { serial, parallel };

/// Calls fn(i) for i in [0, n). If any iteration throws, the exception of the
/// lowest failing index is rethrown after the loop, as in the serial path.
template <class Fn>
void parallel_for(std::size_t n, Execution exec, Fn&& fn) {
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::size_t error_index = std::numeric_limits<std::size_t>::max();
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(abh_parallel_for_error)
            {
                if (static_cast<std::size_t>(i) < error_index) {
                    error_index = static_cast<std::size_t>(i);
                    error = std::current_exception();
                }
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace abh
