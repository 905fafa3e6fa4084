// parallel.hpp — deterministic chunked parallelism: results are merged in
// chunk order, so output never depends on thread scheduling.

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace nfa {

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Runs fn(begin, end) over disjoint chunks of [0, total); returns per-chunk
// results ordered by chunk index.
template <class T, class Fn>
std::vector<T> parallel_chunks(size_t total, int threads, Fn fn) {
    threads = effective_threads(threads);
    size_t nchunks = std::min<size_t>(size_t(threads), total);
    if (nchunks <= 1) {
        std::vector<T> out;
        if (total > 0) out.push_back(fn(size_t(0), total));
        return out;
    }
    std::vector<T> results(nchunks);
    std::vector<std::thread> pool;
    size_t per = total / nchunks, extra = total % nchunks;
    size_t begin = 0;
    for (size_t c = 0; c < nchunks; ++c) {
        size_t len = per + (c < extra ? 1 : 0);
        size_t end = begin + len;
        pool.emplace_back([&, c, begin, end] { results[c] = fn(begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace nfa
