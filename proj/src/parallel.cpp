#include "sdelab/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sdelab {

void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
    if (count <= 0) return;
    int workers = std::max(1, threads);
    workers = static_cast<int>(std::min<long>(workers, count));
    if (workers == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            long lo = count * w / workers;
            long hi = count * (w + 1) / workers;
            try {
                for (long i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace sdelab
