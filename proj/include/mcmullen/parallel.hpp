#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mcm {

/// Worker count: hardware concurrency, capped by MCM_THREADS when set.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("MCM_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return std::min(hw, cap);
        } catch (const std::exception&) {
        }
    }
    return hw;
}

/// Calls fn(begin, end) over contiguous chunks of [0, count). Results must be
/// written positionally by fn; the chunking never affects output.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, count);
    if (workers == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

}  // namespace mcm
