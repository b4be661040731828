#pragma once

// Minimal worker pool for independent loop bodies.  Results are written to
// caller-owned slots, so output order never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ck {

inline unsigned default_workers() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

// body(i) for i in [0, n); the first exception thrown is rethrown after all workers join
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers = 0) {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f, unsigned workers = 0) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = f(i); }, workers);
    return out;
}

}  // namespace ck
