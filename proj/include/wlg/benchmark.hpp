#ifndef WLG_BENCHMARK_HPP
#define WLG_BENCHMARK_HPP

#include <chrono>

#include "laurent.hpp"

namespace wlg {

struct KernelTiming {
    double pruned_seconds = 0;
    double naive_seconds = 0;
    bool same_result = false;

    double speedup() const { return pruned_seconds > 0 ? naive_seconds / pruned_seconds : 0; }
};

/// Single-threaded wall time of period_sequence(f, N) under both kernels.
inline KernelTiming time_period_kernels(const LaurentPolynomial& f, unsigned N)
{
    using clock = std::chrono::steady_clock;
    KernelTiming t;
    auto start = clock::now();
    const auto pruned = period_sequence(f, N, {ConstantTermKernel::pruned, 1});
    t.pruned_seconds = std::chrono::duration<double>(clock::now() - start).count();
    start = clock::now();
    const auto naive = period_sequence(f, N, {ConstantTermKernel::naive, 1});
    t.naive_seconds = std::chrono::duration<double>(clock::now() - start).count();
    t.same_result = pruned == naive;
    return t;
}

} // namespace wlg

#endif // WLG_BENCHMARK_HPP
