#pragma once

// Index-ordered parallel map: results land in input order, so output never
// depends on which worker finished first.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gpcert {

inline unsigned default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, Fn fn, unsigned workers = default_workers())
    -> std::vector<decltype(fn(items.front()))>
{
    using Out = decltype(fn(items.front()));
    std::vector<Out> out(items.size());
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            out[i] = fn(items[i]);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < items.size(); i = next++) {
                try {
                    out[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace gpcert
