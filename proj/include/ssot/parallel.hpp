// parallel.hpp -- deterministic fork-join helper for independent grid points.
#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ssot {

// Runs body(i) for i in [0, n) on up to `threads` workers with a static
// interleaved split.  Results must be written to pre-sized slots so the output
// order (and therefore any serialized artifact) is independent of the thread
// count.  The first exception (lowest index) is rethrown after all workers
// join.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_index(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    body(i);
                } catch (...) {
                    if (!errors[w]) {
                        errors[w] = std::current_exception();
                        error_index[w] = i;
                    }
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    std::size_t first = n;
    std::exception_ptr chosen;
    for (std::size_t w = 0; w < workers; ++w) {
        if (errors[w] && error_index[w] < first) {
            first = error_index[w];
            chosen = errors[w];
        }
    }
    if (chosen) std::rethrow_exception(chosen);
}

} // namespace ssot
