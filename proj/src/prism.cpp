#include "smallcover/prism.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallcover {

PrismCombinatorics::PrismCombinatorics(int m) : m_(m) {
    if (m < 3) throw std::domain_error("prism: m must be >= 3");
    int nf = m + 2;
    table_.assign(nf, std::vector<bool>(nf, false));

    // Ceiling and floor are opposite; each meets every side face.
    for (int i = 0; i < nf; ++i) table_[i][i] = true;
    for (int s = 2; s < nf; ++s) {
        table_[0][s] = table_[s][0] = true;
        table_[1][s] = table_[s][1] = true;
    }
    // Side faces meet iff cyclically adjacent. Generated from adjacency rather
    // than an |i-j| formula so the m=3 case (all pairs adjacent) is automatic.
    for (int i = 1; i <= m; ++i) {
        int j = cyclic_side(i + 1, m);
        table_[1 + i][1 + j] = table_[1 + j][1 + i] = true;
    }

    // Vertices: {ceiling|floor, s_i, s_{i+1}} for each cyclic i.
    for (int top = 0; top <= 1; ++top)
        for (int i = 1; i <= m; ++i) {
            std::array<int, 3> v = {top, 1 + i, 1 + cyclic_side(i + 1, m)};
            std::sort(v.begin(), v.end());
            vertices_.push_back(v);
        }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

std::array<int, 3> PrismCombinatorics::f_vector() const {
    int nf = facet_count();
    int f0 = nf;
    // Edges of the dual complex = intersecting facet pairs.
    int f1 = 0;
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b)
            if (table_[a][b]) ++f1;
    int f2 = static_cast<int>(vertices_.size());
    return {f0, f1, f2};
}

std::array<int, 4> PrismCombinatorics::h_vector() const {
    auto [f0, f1, f2] = f_vector();
    // (t-1)^3 + f0 (t-1)^2 + f1 (t-1) + f2, coefficients of t^3..t^0.
    std::array<int, 4> h = {0, 0, 0, 0};
    // (t-1)^3 = t^3 - 3t^2 + 3t - 1
    h[0] += 1;
    h[1] += -3 + f0;
    h[2] += 3 - 2 * f0 + f1;
    h[3] += -1 + f0 - f1 + f2;
    return h;
}

}  // namespace smallcover
