#pragma once

#include <cstddef>
#include <functional>

namespace magnonkin {

// Thread budget for grid-parallel work. threads == 0 selects the hardware
// concurrency. Results never depend on the value chosen.
struct Execution {
    unsigned threads = 0;

    unsigned resolved_threads() const noexcept;
};

// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
// one chunk per worker. Exceptions from workers are rethrown (first by chunk
// index) after all workers finish.
void parallel_for(std::size_t n, const Execution& exec,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace magnonkin
