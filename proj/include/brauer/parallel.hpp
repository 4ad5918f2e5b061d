#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace brauer {

/// Splits [0, count) into contiguous chunks and runs chunk_fn(worker, begin,
/// end) on each, one worker per thread. With jobs <= 1 runs inline. Callers
/// merge per-worker results in worker order, keeping results deterministic.
inline void parallel_chunks(std::size_t count, unsigned jobs,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& chunk_fn) {
    if (jobs <= 1 || count <= 1) {
        chunk_fn(0, 0, count);
        return;
    }
    if (jobs > count) jobs = static_cast<unsigned>(count);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        std::size_t begin = count * w / jobs;
        std::size_t end = count * (w + 1) / jobs;
        threads.emplace_back([&chunk_fn, w, begin, end] { chunk_fn(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

inline unsigned default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace brauer
