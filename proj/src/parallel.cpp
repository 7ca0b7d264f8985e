#include "isophase/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace isophase {

std::size_t default_workers()
{
    if (const char* env = std::getenv("ISO_PHASE_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_blocks(std::size_t count, std::size_t workers, std::size_t blocks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body)
{
    if (count == 0)
        return;
    blocks = std::clamp<std::size_t>(blocks, 1, count);
    workers = std::clamp<std::size_t>(workers, 1, blocks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
            const std::size_t begin = count * b / blocks;
            const std::size_t end = count * (b + 1) / blocks;
            try {
                body(begin, end, b);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace isophase
