#include "qws/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qws {

int worker_count() {
    if (const char* env = std::getenv("QWS_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return std::min(k, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn) {
    const int workers = worker_count();
    if (workers <= 1 || count < 1024) {
        fn(0, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t begin = std::min(count, w * chunk);
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace qws
