#include "qha/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace qha {

int thread_count() {
    if (const char* env = std::getenv("QHA_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end,
                  const std::function<void(std::ptrdiff_t)>& body) {
    const std::ptrdiff_t total = end - begin;
    if (total <= 0) return;
    const int workers = std::min<std::ptrdiff_t>(thread_count(), total);
    if (workers <= 1) {
        for (std::ptrdiff_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::ptrdiff_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::ptrdiff_t lo = begin + w * chunk;
        const std::ptrdiff_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::ptrdiff_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qha
