// Combinatorics of the 3-dimensional prism P3(m): facets, intersection
// predicate, vertex triples, f-vector and h-vector.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace smallcover {

// Facet indexing convention used across the project:
//   0 = ceiling, 1 = floor, 2..m+1 = side faces s_1..s_m (cyclic).
struct Facet {
    enum class Tag { Ceiling, Floor, Side };
    Tag tag;
    int side_index;  // 1-based, only meaningful for Side

    static Facet ceiling() { return {Tag::Ceiling, 0}; }
    static Facet floor() { return {Tag::Floor, 0}; }
    static Facet side(int i) { return {Tag::Side, i}; }
};

// Centralized cyclic side-index helper: wraps any integer into 1..m.
inline int cyclic_side(int i, int m) {
    int r = (i - 1) % m;
    if (r < 0) r += m;
    return r + 1;
}

class PrismCombinatorics {
  public:
    explicit PrismCombinatorics(int m);

    int m() const { return m_; }
    int facet_count() const { return m_ + 2; }

    // Whether two facets (project indexing) share points.
    bool facets_intersect(int a, int b) const { return table_[a][b]; }

    // All vertices as sorted facet triples; exactly 2m of them.
    const std::vector<std::array<int, 3>> &vertices() const { return vertices_; }

    // Face numbers of the dual boundary complex: (m+2, 3m, 2m).
    std::array<int, 3> f_vector() const;
    // Expansion of (t-1)^3 + f0 (t-1)^2 + f1 (t-1) + f2 = sum h_i t^{3-i}.
    std::array<int, 4> h_vector() const;

  private:
    int m_;
    std::vector<std::vector<bool>> table_;
    std::vector<std::array<int, 3>> vertices_;
};

}  // namespace smallcover
