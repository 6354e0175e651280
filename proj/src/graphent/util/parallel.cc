#include "graphent/util/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace graphent {

int worker_count() {
    if (const char *env = std::getenv("GRAPHENT_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
    std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    // Small loops are not worth the thread start-up.
    if (threads <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; t++) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace graphent
