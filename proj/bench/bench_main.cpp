// Timing comparison of the serial reference kernels against the OpenMP
// parallel ones, on synthetic workloads.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "barkit/bottleneck.hpp"
#include "barkit/persistence.hpp"
#include "barkit/shift_space.hpp"

namespace {

using namespace barkit;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

barcode synthetic_barcode(std::uint64_t seed, std::size_t bars) {
    barcode b;
    std::uint64_t state = seed;
    auto next = [&]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (std::size_t i = 0; i < bars; ++i) {
        const value_t birth = 0.125 * static_cast<value_t>(next() % 32);
        if (next() % 5 == 0)
            b.bars.push_back({birth, infinite_death});
        else
            b.bars.push_back({birth, birth + 0.125 * static_cast<value_t>(1 + next() % 16)});
    }
    return b;
}

struct row {
    const char* name;
    double serial_s;
    double parallel_s;
    bool equal;
};

void print_row(const row& r) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   results %s\n", r.name, r.serial_s,
                r.parallel_s, r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0.0,
                r.equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, serial build\n\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        std::vector<std::pair<barcode, barcode>> pairs;
        for (std::uint64_t s = 0; s < 8; ++s)
            pairs.emplace_back(synthetic_barcode(2 * s, 7), synthetic_barcode(2 * s + 1, 7));

        value_t serial_sum = 0, parallel_sum = 0;
        auto t0 = clock_type::now();
        for (auto& [a, b] : pairs) serial_sum += shift_distance_serial(a, b);
        const double serial_s = seconds_since(t0);
        t0 = clock_type::now();
        for (auto& [a, b] : pairs) parallel_sum += shift_distance(a, b);
        const double parallel_s = seconds_since(t0);
        print_row({"shift_distance", serial_s, parallel_s, serial_sum == parallel_sum});
    }

    {
        barcode a = synthetic_barcode(101, 5);
        barcode b = shift(a, 1.375);  // same class, long candidate interval
        auto t0 = clock_type::now();
        const value_t vs = grid_oracle_shift_distance_serial(a, b, 5e-4);
        const double serial_s = seconds_since(t0);
        t0 = clock_type::now();
        const value_t vp = grid_oracle_shift_distance(a, b, 5e-4);
        const double parallel_s = seconds_since(t0);
        print_row({"grid_oracle_shift_distance", serial_s, parallel_s, vs == vp});
    }

    {
        // batch bottleneck distances: pure functions, parallel across pairs
        std::vector<std::pair<barcode, barcode>> pairs;
        for (std::uint64_t s = 0; s < 4000; ++s)
            pairs.emplace_back(synthetic_barcode(3 * s, 10), synthetic_barcode(3 * s + 1, 10));
        std::vector<value_t> serial_out(pairs.size()), parallel_out(pairs.size());

        auto t0 = clock_type::now();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            serial_out[i] = bottleneck_distance(pairs[i].first, pairs[i].second);
        const double serial_s = seconds_since(t0);

        t0 = clock_type::now();
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i)
            parallel_out[i] = bottleneck_distance(pairs[i].first, pairs[i].second);
        const double parallel_s = seconds_since(t0);
        print_row({"bottleneck batch (4000)", serial_s, parallel_s, serial_out == parallel_out});
    }

    return 0;
}
