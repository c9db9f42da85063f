#include "smallcover/sweep.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "smallcover/classifier.hpp"
#include "smallcover/cohomology.hpp"

namespace smallcover {

int sweep_thread_count() {
    if (const char *env = std::getenv("SMALLCOVER_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

std::vector<LabelCount> histogram_from_labels(std::vector<std::string> labels) {
    std::map<std::string, std::uint64_t> hist;
    for (std::string &l : labels) ++hist[std::move(l)];
    std::vector<LabelCount> out;
    out.reserve(hist.size());
    for (const auto &kv : hist) out.push_back({kv.first, kv.second});
    return out;
}

bool betti_ok(const Coloring &c) {
    std::array<std::size_t, 4> want = {1, static_cast<std::size_t>(c.m - 1),
                                       static_cast<std::size_t>(c.m - 1), 1};
    return betti_dims(c) == want;
}

}  // namespace

std::vector<LabelCount> label_histogram_serial(int m) {
    std::vector<std::string> labels;
    for (const Coloring &c : dj_representatives(m)) labels.push_back(classify(c));
    return histogram_from_labels(std::move(labels));
}

std::vector<LabelCount> label_histogram_parallel(int m) {
    std::vector<Coloring> reps = dj_representatives(m);
    std::vector<std::string> labels(reps.size());
    const int nt = sweep_thread_count();
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(reps.size()); ++i)
        labels[static_cast<std::size_t>(i)] = classify(reps[static_cast<std::size_t>(i)]);
    return histogram_from_labels(std::move(labels));
}

std::uint64_t betti_mismatch_serial(int m) {
    std::uint64_t bad = 0;
    for (const Coloring &c : dj_representatives(m))
        if (!betti_ok(c)) ++bad;
    return bad;
}

std::uint64_t betti_mismatch_parallel(int m) {
    std::vector<Coloring> reps = dj_representatives(m);
    std::uint64_t bad = 0;
    const int nt = sweep_thread_count();
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt) reduction(+ : bad)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(reps.size()); ++i)
        if (!betti_ok(reps[static_cast<std::size_t>(i)])) ++bad;
    return bad;
}

}  // namespace smallcover
