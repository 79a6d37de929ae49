#include "fivestar/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fivestar {

int worker_count() {
    static const int count = [] {
        if (const char* env = std::getenv("FIVESTAR_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<int>(v);
            return 1;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return count;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, int)>& body,
                  std::size_t min_parallel) {
    if (n == 0) return;
    const int workers = worker_count();
    if (workers == 1 || n < min_parallel) {
        body(0, n, 0);
        return;
    }
    const int chunks = std::min<std::size_t>(workers, n);
    std::vector<std::thread> threads;
    threads.reserve(chunks - 1);
    for (int t = 1; t < chunks; ++t) {
        const std::size_t begin = n * t / chunks;
        const std::size_t end = n * (t + 1) / chunks;
        threads.emplace_back([&body, begin, end, t] { body(begin, end, t); });
    }
    body(0, n * 1 / chunks, 0);
    for (auto& th : threads) th.join();
}

} // namespace fivestar
