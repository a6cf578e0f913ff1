#include "parkpoly/parallel.hpp"

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace parkpoly {

int thread_count() {
    if (const char* env = std::getenv("PARKPOLY_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Integer parallel_sum(long begin, long end, const std::function<Integer(long)>& term) {
    const long count = end - begin;
    if (count <= 0) return 0;
    const int workers = std::min<long>(thread_count(), count);
    if (workers <= 1) {
        Integer total = 0;
        for (long i = begin; i < end; ++i) total += term(i);
        return total;
    }
    std::vector<std::future<Integer>> parts;
    parts.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const long lo = begin + count * w / workers;
        const long hi = begin + count * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, [lo, hi, &term] {
            Integer sub = 0;
            for (long i = lo; i < hi; ++i) sub += term(i);
            return sub;
        }));
    }
    Integer total = 0;
    for (auto& f : parts) total += f.get();
    return total;
}

}  // namespace parkpoly
