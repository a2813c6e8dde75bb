#ifndef DYNLAB_PARALLEL_HPP
#define DYNLAB_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dynlab {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Runs body(begin, end) over fixed-size index blocks.  The block layout is a
// function of n alone, never of the worker count, and callers combine the
// per-block results in block order, so results are identical for any number
// of workers.
template <class Body>
void parallel_blocks(uint64_t n, int workers, uint64_t block_size, Body&& body) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const uint64_t nblocks = (n + block_size - 1) / block_size;
    workers = resolve_workers(workers);
    if (workers <= 1 || nblocks <= 1) {
        for (uint64_t b = 0; b < nblocks; ++b)
            body(b, b * block_size, std::min(n, (b + 1) * block_size));
        return;
    }

    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const uint64_t b = next.fetch_add(1);
            if (b >= nblocks) return;
            try {
                body(b, b * block_size, std::min(n, (b + 1) * block_size));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const int spawn = int(std::min<uint64_t>(uint64_t(workers), nblocks));
    pool.reserve(size_t(spawn));
    for (int w = 0; w < spawn; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

// Parallel elementwise fill: out[i] = f(i).  Deterministic trivially (each
// slot is a pure function of its index).
template <class T, class F>
void parallel_fill(std::vector<T>& out, int workers, F&& f, uint64_t block_size = 1024) {
    parallel_blocks(out.size(), workers, block_size, [&](uint64_t, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) out[size_t(i)] = f(i);
    });
}

// Streaming mean/variance accumulator with fixed-order merge.
struct MeanVar {
    double sum = 0.0, sumsq = 0.0;
    uint64_t n = 0;

    void add(double x) {
        sum += x;
        sumsq += x * x;
        ++n;
    }
    void merge(const MeanVar& o) {
        sum += o.sum;
        sumsq += o.sumsq;
        n += o.n;
    }
    double mean() const { return n ? sum / double(n) : 0.0; }
    // unbiased sample variance
    double var() const {
        if (n < 2) return 0.0;
        const double m = mean();
        double v = (sumsq - double(n) * m * m) / double(n - 1);
        return v > 0.0 ? v : 0.0;
    }
    double stderr_of_mean() const { return n ? std::sqrt(var() / double(n)) : 0.0; }
};

// Blocked parallel reduction of per-index doubles into MeanVar, merged in
// block order.
template <class F>
MeanVar parallel_mean(uint64_t n, int workers, F&& value_of_index, uint64_t block_size = 4096) {
    const uint64_t nblocks = n ? (n + block_size - 1) / block_size : 0;
    std::vector<MeanVar> partial(size_t(nblocks));
    parallel_blocks(n, workers, block_size, [&](uint64_t b, uint64_t lo, uint64_t hi) {
        MeanVar acc;
        for (uint64_t i = lo; i < hi; ++i) acc.add(value_of_index(i));
        partial[size_t(b)] = acc;
    });
    MeanVar total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

}  // namespace dynlab

#endif
