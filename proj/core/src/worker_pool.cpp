#include "stabjgl/worker_pool.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace stabjgl {

WorkerPool::WorkerPool(std::size_t threads) : threads_(std::max<std::size_t>(threads, 1)) {}

void WorkerPool::parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) const {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t spawn = std::min(threads_, n);
    if (spawn <= 1) {
        work();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(spawn - 1);
        for (std::size_t t = 0; t + 1 < spawn; ++t) workers.emplace_back(work);
        work();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

void run_indexed(const WorkerPool* pool, std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (pool != nullptr) {
        pool->parallel_for(n, fn);
    } else {
        WorkerPool(1).parallel_for(n, fn);
    }
}

}  // namespace stabjgl
