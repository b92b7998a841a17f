#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hopftrees {

/// Evaluates fn(0..count-1) on up to `workers` threads; results come back in index order.
/// The first exception thrown by any task is rethrown after all threads finish.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int workers, F fn) {
    std::vector<R> out(count);
    const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(workers, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = count;
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace hopftrees
