// Mod-2 cohomology of the small cover M(lambda) as a graded quotient ring in
// degrees 0..3, with products, the squaring map, and the derived invariants
// Delta, B-bar, dim(K cap H^2).
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "smallcover/coloring.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/prism.hpp"

namespace smallcover {

class CohomologyRing {
  public:
    // max_degree 2 suffices for invariant computations; 3 adds the top class
    // and degree-3 products (needed for Betti checks and associativity tests).
    CohomologyRing(const Coloring &c, int max_degree = 3);

    const Coloring &coloring() const { return coloring_; }
    int m() const { return coloring_.m; }
    int facet_count() const { return coloring_.m + 2; }
    int max_degree() const { return max_degree_; }

    const gf2::QuotientSpace &q1() const { return q1_; }
    const gf2::QuotientSpace &q2() const { return q2_; }
    const gf2::QuotientSpace &q3() const;

    // Graded dimensions (1, dim q1, dim q2, dim q3).
    std::array<std::size_t, 4> betti() const;

    // Product of two degree-1 classes given in quotient coordinates.
    gf2::Gf2Vec mul11(const gf2::Gf2Vec &x, const gf2::Gf2Vec &y) const;
    // Product of a degree-1 class and a degree-2 class (quotient coordinates).
    gf2::Gf2Vec mul12(const gf2::Gf2Vec &x, const gf2::Gf2Vec &y2) const;

    // Degree-2 monomial index helpers (ambient coordinates).
    int mon2_index(int a, int b) const { return idx2_[a][b]; }
    int mon3_index(int a, int b, int c) const;

  private:
    Coloring coloring_;
    int max_degree_;
    int nf_;
    std::vector<std::vector<int>> idx2_;
    std::vector<std::pair<int, int>> mon2_pairs_;
    std::vector<int> idx3_;  // flattened nf^3 lookup, sorted triples only
    std::vector<std::array<int, 3>> mon3_triples_;
    gf2::QuotientSpace q1_, q2_, q3_;
    bool has_q3_ = false;
    // Projections of facet monomials to quotient coordinates; built on first
    // product so Betti-only callers never pay for them.
    mutable std::vector<gf2::Gf2Vec> mon2_proj_;
    mutable std::vector<gf2::Gf2Vec> mon3_proj_;
    void ensure_proj2() const;
    void ensure_proj3() const;
};

CohomologyRing build_ring(const Coloring &c, int max_degree = 3);

// Matrix of x -> x^2 from q1 to q2 (q2.dim() rows, q1.dim() cols).
gf2::Gf2Matrix squaring_map(const CohomologyRing &r);

struct InvariantReport {
    std::size_t delta = 0;
    std::vector<gf2::Gf2Vec> h1_basis;  // q1 coordinates
    std::size_t h2_dim = 0;
    std::size_t k_dim = 0;
    std::size_t k_cap_h2_dim = 0;
    std::size_t k_mod_h2_dim = 0;
    std::vector<std::uint64_t> b_histogram;  // ranks 0..delta over all functionals
    std::pair<std::uint64_t, std::uint64_t> b_bar;
};

InvariantReport invariant_report(const CohomologyRing &r);

std::size_t k_cap_h2_dim(const CohomologyRing &r);

// Degree-d piece of the face ring (quotient by the Stanley-Reisner ideal only).
std::size_t face_ring_hilbert(const PrismCombinatorics &p, int d);

// Graded dimensions without building multiplication tables.
std::array<std::size_t, 4> betti_dims(const Coloring &c);

}  // namespace smallcover
