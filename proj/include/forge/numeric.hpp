#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <thread>
#include <vector>

namespace forge {

using Complex = std::complex<double>;

// Number of worker threads used by the long reductions below. Results are
// independent of this setting (fixed-order block combination); it only
// controls wall time.
int thread_count();
void set_thread_count(int n);

inline Complex complex_ipow(Complex base, int exponent) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

inline double real_ipow(double base, int exponent) {
    double r = 1.0;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

namespace detail {

inline constexpr std::int64_t kBlockSize = 8192;

int effective_threads();

// Sums term(i) for i in [lo, hi] in a reproducible order: the range is cut
// into fixed-size blocks, each block is summed sequentially, and the block
// sums are combined in ascending block order. Threads only decide who
// computes which block, never the order of additions.
template <class T, class TermFn>
T block_sum(std::int64_t lo, std::int64_t hi, TermFn&& term) {
    if (hi < lo) return T{};
    const std::int64_t count = hi - lo + 1;
    const std::int64_t nblocks = (count + kBlockSize - 1) / kBlockSize;
    std::vector<T> partial(static_cast<std::size_t>(nblocks), T{});

    auto run_block = [&](std::int64_t b) {
        const std::int64_t first = lo + b * kBlockSize;
        const std::int64_t last = std::min(hi, first + kBlockSize - 1);
        T acc{};
        for (std::int64_t i = first; i <= last; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    };

    const int workers = effective_threads();
    if (workers <= 1 || nblocks == 1) {
        for (std::int64_t b = 0; b < nblocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::int64_t b = w; b < nblocks; b += workers) run_block(b);
            });
        }
        for (auto& t : pool) t.join();
    }

    T total{};
    for (std::int64_t b = 0; b < nblocks; ++b) total += partial[static_cast<std::size_t>(b)];
    return total;
}

}  // namespace detail

}  // namespace forge
