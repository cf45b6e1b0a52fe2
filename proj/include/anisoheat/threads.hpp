#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace anisoheat {

// Thread budget: hardware concurrency capped by ANISOHEAT_THREADS.
inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ANISOHEAT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

// Static block partition; results are written to disjoint slots by the
// callers, so output is identical for any thread count.
inline void parallel_for(int n, const std::function<void(int)>& body) {
    int nt = max_threads();
    if (nt <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    if (nt > n) nt = n;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int w = 0; w < nt; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace anisoheat
