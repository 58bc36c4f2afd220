// parallel.hpp
//
// Minimal deterministic work partitioning. Workers fill disjoint slots of
// preallocated buffers; reductions happen afterwards in a fixed order, so
// results are identical for any thread count.

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace frext {

// Global worker cap (0 = hardware concurrency). Set once from the CLI.
void set_max_threads(int n);
int max_threads();

// Runs fn(i) for i in [0, n). Each index is processed exactly once by one
// thread; fn must only write to state owned by index i.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, int threads_override = 0) {
    int nthreads = threads_override > 0 ? threads_override : max_threads();
    if (nthreads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    nthreads = static_cast<int>(std::min<std::size_t>(nthreads, n));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&, tid]() {
            for (std::size_t i = tid; i < n; i += nthreads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace frext
