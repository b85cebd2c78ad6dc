#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace logfront {

// Worker cap: LOGFRONT_THREADS when set, hardware concurrency otherwise.
inline unsigned parallel_thread_cap() {
    if (const char* env = std::getenv("LOGFRONT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Index-sharded loop. Results must be written into per-index slots so the
// merge is deterministic regardless of scheduling.
inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    unsigned workers = parallel_thread_cap();
    if (workers <= 1 || n < 2 * workers) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += workers) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace logfront
