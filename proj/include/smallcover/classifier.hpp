// Homeomorphism classification: the invariant tuple, stable class labels,
// the closed counting formulas, and enumeration-backed class tables.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallcover/coloring.hpp"

namespace smallcover {

// The invariants that separate homeomorphism classes: triviality, the
// square-zero dimension Delta, the rank-1/rank-2 functional counts B-bar,
// (n, mm) side statistics for nontrivial colorings, orientability (w1 = 0),
// and dim(K cap H^2).
struct InvariantTuple {
    bool trivial = false;
    std::size_t delta = 0;
    std::pair<std::uint64_t, std::uint64_t> b_bar{0, 0};
    std::optional<std::pair<int, int>> nm;  // nontrivial with m > 3 only
    bool orientable = false;
    std::size_t k_cap_h2 = 0;

    bool operator==(const InvariantTuple &o) const = default;
};

InvariantTuple invariant_tuple(const Coloring &c);

// Stable class label: "NT(2,2)", "T(C8)", "T(C3_prism)", "M3(RP3)",
// "M4(S1xK)", ... Throws std::logic_error when no known fingerprint matches.
std::string classify(const Coloring &c);

// Closed-form homeomorphism class count N(m), m >= 3 (2 at m=3, 4 at m=4).
std::size_t n_formula(int m);

// (trivial-class count, nontrivial-class count), defined for m > 4 only.
std::pair<std::size_t, std::size_t> nt_nnt_formulas(int m);

// All DJ-orbit representatives (lexicographically smallest orbit member),
// sorted by key.
std::vector<Coloring> dj_representatives(int m);

struct ClassRow {
    std::string label;
    Coloring representative;  // smallest DJ representative with this label
    InvariantTuple tuple;     // that representative's tuple
    std::uint64_t rep_count = 0;  // DJ representatives carrying this label
};

// One row per class, sorted by label.
std::vector<ClassRow> class_table(int m);

// Distinct labels over all DJ representatives; must equal n_formula(m).
std::size_t count_classes(int m);

}  // namespace smallcover
