// Compares the serial reference sweep kernels against the OpenMP-parallel
// flavors: identical results required, wall times and speedups reported.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "smallcover/sweep.hpp"

namespace {

template <typename F>
double time_secs(F &&f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char **argv) {
    using namespace smallcover;
    int m = argc > 1 ? std::atoi(argv[1]) : 6;
    if (m < 3 || m > 10) {
        std::cerr << "usage: sweep_bench [m in 3..10]\n";
        return 1;
    }
    std::cout << "m=" << m << " threads=" << sweep_thread_count() << "\n";

    std::vector<LabelCount> hs, hp;
    double hs_t = time_secs([&] { hs = label_histogram_serial(m); });
    double hp_t = time_secs([&] { hp = label_histogram_parallel(m); });
    bool hok = hs == hp;
    std::cout << "label_histogram: serial " << hs_t << " s, parallel " << hp_t
              << " s, speedup " << hs_t / hp_t << ", match " << (hok ? "yes" : "NO")
              << "\n";

    std::uint64_t bs = 0, bp = 0;
    double bs_t = time_secs([&] { bs = betti_mismatch_serial(m); });
    double bp_t = time_secs([&] { bp = betti_mismatch_parallel(m); });
    bool bok = bs == bp && bs == 0;
    std::cout << "betti_sweep: serial " << bs_t << " s, parallel " << bp_t
              << " s, speedup " << bs_t / bp_t << ", mismatches " << bs << "/" << bp
              << "\n";

    if (!(hok && bok)) {
        std::cerr << "serial and parallel kernels disagree\n";
        return 2;
    }
    return 0;
}
