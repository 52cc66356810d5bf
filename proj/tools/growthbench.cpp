// Benchmark comparing the serial reference enumerator against the packed
// OpenMP kernel, checking that both produce identical weight polynomials.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "growth/enumerate.hpp"

using namespace growth;

namespace {

double seconds(std::int64_t us) { return static_cast<double>(us) * 1e-6; }

template <typename F>
std::pair<WeightSum, std::int64_t> timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    WeightSum w = f();
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(w), std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumeration benchmark: serial reference vs. parallel kernel"};
    int d = 2, level = 8, max_workers = 0;
    bool skip_reference = false;
    app.add_option("--d", d, "dimension (2 or 3)")->check(CLI::Range(2, 3));
    app.add_option("--i", level, "dead-cell count")->check(CLI::PositiveNumber);
    app.add_option("--workers", max_workers, "max worker threads (0 = all)");
    app.add_flag("--skip-reference", skip_reference,
                 "only run the kernel (for levels the reference is too slow for)");
    CLI11_PARSE(app, argc, argv);

    if (max_workers <= 0) max_workers = omp_get_max_threads();
    std::printf("d=%d i=%d\n", d, level);
    std::printf("%-22s %12s %10s %9s\n", "variant", "extensions", "seconds", "speedup");

    double base = 0;
    WeightSum ref;
    if (!skip_reference) {
        auto [w, us] = timed([&] { return build_weight_sum_reference(d, level); });
        ref = std::move(w);
        base = seconds(us);
        std::printf("%-22s %12llu %10.3f %9s\n", "serial reference",
                    static_cast<unsigned long long>(ref.extensions), base, "1.00x");
    }

    for (int workers = 1; workers <= max_workers; workers *= 2) {
        auto [w, us] = timed([&] { return build_weight_sum(d, level, workers); });
        double t = seconds(us);
        char label[64];
        std::snprintf(label, sizeof label, "kernel, %d thread%s", workers,
                      workers == 1 ? "" : "s");
        if (base > 0)
            std::printf("%-22s %12llu %10.3f %8.2fx\n", label,
                        static_cast<unsigned long long>(w.extensions), t, base / t);
        else
            std::printf("%-22s %12llu %10.3f %9s\n", label,
                        static_cast<unsigned long long>(w.extensions), t, "-");
        if (!skip_reference && !(w.weights == ref.weights)) {
            std::printf("MISMATCH: kernel weights differ from the reference\n");
            return 1;
        }
        if (workers == max_workers) break;
        if (workers * 2 > max_workers) workers = max_workers / 2;
    }
    std::printf("count |C_i| = %s\n",
                (skip_reference ? build_weight_sum(d, level, max_workers).count : ref.count)
                    .get_str()
                    .c_str());
    return 0;
}
