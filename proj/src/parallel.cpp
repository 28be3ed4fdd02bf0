#include "slk/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace slk {

int default_jobs() {
    if (const char* env = std::getenv("SPATIAL_LINKING_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (...) {
        }
    }
    return 1;
}

void run_chunked(std::size_t count, int jobs,
                 const std::function<void(int, std::size_t, std::size_t)>& fn) {
    if (jobs < 1) jobs = 1;
    if (count == 0) return;
    std::size_t chunks = std::min<std::size_t>(jobs, count);
    if (chunks == 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::size_t base = count / chunks, extra = count % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        workers.emplace_back([&fn, c, begin, end] { fn(static_cast<int>(c), begin, end); });
        begin = end;
    }
    for (auto& w : workers) w.join();
}

} // namespace slk
