#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gaborfock {

// Runs task(i) for i in [0, count) on up to `jobs` threads.  Each index is
// claimed exactly once from a shared counter; the caller's task writes into
// its own slot, so results are ordered by index regardless of scheduling.
// The first exception thrown by any task is rethrown on the caller's thread.
template <typename Task>
void run_indexed(std::size_t count, int jobs, Task&& task) {
    if (count == 0) return;
    std::size_t workers = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
    if (workers > count) workers = count;
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace gaborfock
