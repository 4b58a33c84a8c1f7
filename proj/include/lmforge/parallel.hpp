#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lmforge {

// Runs body(0..count-1) on up to `jobs` threads. Each index writes its own
// slot, so results do not depend on scheduling. The first exception (by
// index) is rethrown.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    auto workers = static_cast<std::size_t>(jobs) < count ? static_cast<std::size_t>(jobs) : count;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    body(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace lmforge
