#include "magnonkin/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace magnonkin {

unsigned Execution::resolved_threads() const noexcept {
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const Execution& exec,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(exec.resolved_threads(), n);
    if (workers <= 1) {
        body(0, n);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace magnonkin
