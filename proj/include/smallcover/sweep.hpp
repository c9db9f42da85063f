// Whole-enumeration sweep kernels over DJ representatives, each in an
// OpenMP-parallel flavor and a serial reference flavor kept for testing;
// the bench target compares them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smallcover/coloring.hpp"

namespace smallcover {

// Worker count: SMALLCOVER_THREADS if set to a positive integer, otherwise
// the OpenMP default (1 when built without OpenMP).
int sweep_thread_count();

struct LabelCount {
    std::string label;
    std::uint64_t rep_count = 0;

    bool operator==(const LabelCount &o) const = default;
};

// Per-class representative counts over all DJ representatives, sorted by label.
std::vector<LabelCount> label_histogram_serial(int m);
std::vector<LabelCount> label_histogram_parallel(int m);

// Number of DJ representatives whose graded cohomology dimensions differ
// from (1, m-1, m-1, 1); always zero, kept as a checkable sweep kernel.
std::uint64_t betti_mismatch_serial(int m);
std::uint64_t betti_mismatch_parallel(int m);

}  // namespace smallcover
