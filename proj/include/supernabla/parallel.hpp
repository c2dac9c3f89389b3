#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace supernabla {

// Apply fn to 0..count-1 over a small thread pool, collecting results by
// index so the output order never depends on scheduling. fn must be pure.
template <typename T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& fn) {
    std::vector<T> out(static_cast<std::size_t>(count));
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(hw == 0 ? 1 : hw);
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    if (workers > count) workers = count;
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                out[static_cast<std::size_t>(i)] = fn(i);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace supernabla
