#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace crush {

// Runs fn(workerIndex, begin, end) over [0, total) in contiguous chunks on up
// to `workers` threads. fn must confine writes to worker-local state. The
// first exception thrown by any worker is rethrown here after all join.
inline void parallel_chunks(std::uint64_t total, int workers,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    if (workers < 1) workers = 1;
    if (std::uint64_t(workers) > total) workers = int(total ? total : 1);
    if (workers == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr firstError;
    std::mutex errorMutex;
    const std::uint64_t chunk = total / workers, extra = total % workers;
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (std::uint64_t(w) < extra ? 1 : 0);
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(errorMutex);
                if (!firstError) firstError = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : threads) t.join();
    if (firstError) std::rethrow_exception(firstError);
}

}  // namespace crush
