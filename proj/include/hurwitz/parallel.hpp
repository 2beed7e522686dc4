#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hurwitz {

/// Worker count for `requested` (0 = hardware concurrency), never below 1.
inline unsigned resolve_jobs(unsigned requested)
{
    if (requested == 0)
        requested = std::thread::hardware_concurrency();
    return std::max(1u, requested);
}

/// Calls body(i) for i in [0, n) on up to `jobs` threads. Results must be
/// written by index so the output order does not depend on scheduling. The
/// first exception thrown by any call is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body)
{
    jobs = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace hurwitz
