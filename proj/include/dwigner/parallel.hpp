#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace dwigner {

// Static partition of [0, count) over worker threads. Workers must write to
// disjoint slots; results are then reduced sequentially, so outputs do not
// depend on the worker count.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads < 1) threads = 1;
    std::size_t nthreads = std::min<std::size_t>(threads, count ? count : 1);
    if (nthreads <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(body, begin, end);
    }
    for (auto& th : pool) th.join();
}

}  // namespace dwigner
