#pragma once

#include <cstddef>
#include <functional>

namespace stabjgl {

/// Fixed-size fan-out helper. `parallel_for` runs fn(0..n-1) on up to
/// `size()` threads and rethrows the first exception (lowest index) after all
/// tasks finish. Callers write results into pre-indexed slots, so the outcome
/// never depends on the thread count.
class WorkerPool {
public:
    explicit WorkerPool(std::size_t threads = 1);

    std::size_t size() const noexcept { return threads_; }

    void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) const;

private:
    std::size_t threads_;
};

/// Runs on `pool` when given, inline otherwise.
void run_indexed(const WorkerPool* pool, std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace stabjgl
