#include "smallcover/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace smallcover {

namespace {

std::vector<Color> facet_colors(const Coloring &c) {
    std::vector<Color> col(static_cast<std::size_t>(c.m) + 2);
    col[0] = c.ceiling;
    col[1] = c.floor;
    for (int i = 0; i < c.m; ++i) col[2 + static_cast<std::size_t>(i)] = c.sides[i];
    return col;
}

// Non-intersecting facet pairs (a < b): the square-free generators of the
// Stanley-Reisner ideal.
std::vector<std::pair<int, int>> sr_pairs(const PrismCombinatorics &p) {
    std::vector<std::pair<int, int>> out;
    int nf = p.facet_count();
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b)
            if (!p.facets_intersect(a, b)) out.emplace_back(a, b);
    return out;
}

// Minimal non-face triples: pairwise-intersecting facets with no common
// vertex. Only the three sides of the m = 3 prism qualify, but we derive the
// list from the combinatorics rather than special-casing.
std::vector<std::array<int, 3>> sr_triples(const PrismCombinatorics &p) {
    std::vector<std::array<int, 3>> out;
    int nf = p.facet_count();
    const auto &vs = p.vertices();
    for (int a = 0; a < nf; ++a)
        for (int b = a + 1; b < nf; ++b) {
            if (!p.facets_intersect(a, b)) continue;
            for (int c = b + 1; c < nf; ++c) {
                if (!p.facets_intersect(a, c) || !p.facets_intersect(b, c)) continue;
                std::array<int, 3> t = {a, b, c};
                if (std::find(vs.begin(), vs.end(), t) == vs.end()) out.push_back(t);
            }
        }
    return out;
}

}  // namespace

CohomologyRing::CohomologyRing(const Coloring &c, int max_degree)
    : coloring_(c), max_degree_(max_degree), nf_(c.m + 2) {
    if (!is_valid(c)) throw std::invalid_argument("cohomology: invalid coloring");
    if (max_degree < 2 || max_degree > 3)
        throw std::invalid_argument("cohomology: max_degree must be 2 or 3");

    PrismCombinatorics prism(c.m);
    std::vector<Color> col = facet_colors(c);

    // Degree 1: one generator per facet, three linear relations (the rows of
    // the characteristic matrix, read coordinate by coordinate).
    std::vector<gf2::Gf2Vec> rel1;
    for (int t = 0; t < 3; ++t) {
        gf2::Gf2Vec r(static_cast<std::size_t>(nf_));
        for (int j = 0; j < nf_; ++j)
            if ((col[static_cast<std::size_t>(j)] >> t) & 1) r.set(static_cast<std::size_t>(j));
        rel1.push_back(std::move(r));
    }
    q1_ = gf2::QuotientSpace(static_cast<std::size_t>(nf_), rel1);

    // Degree 2: monomials x_a x_b with a <= b.
    idx2_.assign(static_cast<std::size_t>(nf_), std::vector<int>(static_cast<std::size_t>(nf_), -1));
    for (int a = 0; a < nf_; ++a)
        for (int b = a; b < nf_; ++b) {
            idx2_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                idx2_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
                    static_cast<int>(mon2_pairs_.size());
            mon2_pairs_.emplace_back(a, b);
        }
    std::size_t n2 = mon2_pairs_.size();

    std::vector<gf2::Gf2Vec> rel2;
    auto srp = sr_pairs(prism);
    for (auto [a, b] : srp) {
        gf2::Gf2Vec r(n2);
        r.set(static_cast<std::size_t>(mon2_index(a, b)));
        rel2.push_back(std::move(r));
    }
    for (int t = 0; t < 3; ++t)
        for (int j = 0; j < nf_; ++j) {
            gf2::Gf2Vec r(n2);
            for (int k = 0; k < nf_; ++k)
                if ((col[static_cast<std::size_t>(k)] >> t) & 1)
                    r.flip(static_cast<std::size_t>(mon2_index(j, k)));
            rel2.push_back(std::move(r));
        }
    q2_ = gf2::QuotientSpace(n2, rel2);

    if (max_degree_ < 3) return;

    // Degree 3: monomials x_a x_b x_c with a <= b <= c.
    idx3_.assign(static_cast<std::size_t>(nf_) * nf_ * nf_, -1);
    for (int a = 0; a < nf_; ++a)
        for (int b = a; b < nf_; ++b)
            for (int cc = b; cc < nf_; ++cc) {
                idx3_[(static_cast<std::size_t>(a) * nf_ + static_cast<std::size_t>(b)) * nf_ +
                      static_cast<std::size_t>(cc)] = static_cast<int>(mon3_triples_.size());
                mon3_triples_.push_back({a, b, cc});
            }
    std::size_t n3 = mon3_triples_.size();

    std::vector<gf2::Gf2Vec> rel3;
    for (auto [a, b] : srp)
        for (int j = 0; j < nf_; ++j) {
            gf2::Gf2Vec r(n3);
            r.set(static_cast<std::size_t>(mon3_index(a, b, j)));
            rel3.push_back(std::move(r));
        }
    for (const auto &t : sr_triples(prism)) {
        gf2::Gf2Vec r(n3);
        r.set(static_cast<std::size_t>(mon3_index(t[0], t[1], t[2])));
        rel3.push_back(std::move(r));
    }
    for (int t = 0; t < 3; ++t)
        for (std::size_t i = 0; i < n2; ++i) {
            auto [a, b] = mon2_pairs_[i];
            gf2::Gf2Vec r(n3);
            for (int k = 0; k < nf_; ++k)
                if ((col[static_cast<std::size_t>(k)] >> t) & 1)
                    r.flip(static_cast<std::size_t>(mon3_index(a, b, k)));
            rel3.push_back(std::move(r));
        }
    q3_ = gf2::QuotientSpace(n3, rel3);
    has_q3_ = true;
}

const gf2::QuotientSpace &CohomologyRing::q3() const {
    if (!has_q3_) throw std::logic_error("cohomology: ring built without degree 3");
    return q3_;
}

int CohomologyRing::mon3_index(int a, int b, int c) const {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return idx3_[(static_cast<std::size_t>(t[0]) * nf_ + static_cast<std::size_t>(t[1])) * nf_ +
                 static_cast<std::size_t>(t[2])];
}

std::array<std::size_t, 4> CohomologyRing::betti() const {
    return {1, q1_.dim(), q2_.dim(), q3().dim()};
}

void CohomologyRing::ensure_proj2() const {
    if (!mon2_proj_.empty()) return;
    mon2_proj_.reserve(mon2_pairs_.size());
    for (std::size_t i = 0; i < mon2_pairs_.size(); ++i) {
        gf2::Gf2Vec unit(mon2_pairs_.size());
        unit.set(i);
        mon2_proj_.push_back(q2_.project(unit));
    }
}

void CohomologyRing::ensure_proj3() const {
    if (!mon3_proj_.empty()) return;
    if (!has_q3_) throw std::logic_error("cohomology: degree-3 product needs a degree-3 ring");
    mon3_proj_.reserve(mon3_triples_.size());
    for (std::size_t i = 0; i < mon3_triples_.size(); ++i) {
        gf2::Gf2Vec unit(mon3_triples_.size());
        unit.set(i);
        mon3_proj_.push_back(q3_.project(unit));
    }
}

gf2::Gf2Vec CohomologyRing::mul11(const gf2::Gf2Vec &x, const gf2::Gf2Vec &y) const {
    ensure_proj2();
    gf2::Gf2Vec lx = q1_.lift(x), ly = q1_.lift(y);
    gf2::Gf2Vec out(q2_.dim());
    for (int j = 0; j < nf_; ++j) {
        if (!lx.test(static_cast<std::size_t>(j))) continue;
        for (int k = 0; k < nf_; ++k)
            if (ly.test(static_cast<std::size_t>(k)))
                out ^= mon2_proj_[static_cast<std::size_t>(mon2_index(j, k))];
    }
    return out;
}

gf2::Gf2Vec CohomologyRing::mul12(const gf2::Gf2Vec &x, const gf2::Gf2Vec &y2) const {
    ensure_proj3();
    gf2::Gf2Vec lx = q1_.lift(x), ly = q2_.lift(y2);
    gf2::Gf2Vec out(q3_.dim());
    for (int j = 0; j < nf_; ++j) {
        if (!lx.test(static_cast<std::size_t>(j))) continue;
        for (std::size_t i = 0; i < mon2_pairs_.size(); ++i)
            if (ly.test(i)) {
                auto [a, b] = mon2_pairs_[i];
                out ^= mon3_proj_[static_cast<std::size_t>(mon3_index(a, b, j))];
            }
    }
    return out;
}

CohomologyRing build_ring(const Coloring &c, int max_degree) {
    return CohomologyRing(c, max_degree);
}

gf2::Gf2Matrix squaring_map(const CohomologyRing &r) {
    std::size_t d1 = r.q1().dim(), d2 = r.q2().dim();
    gf2::Gf2Matrix s(d2, d1);
    for (std::size_t i = 0; i < d1; ++i) {
        gf2::Gf2Vec e(d1);
        e.set(i);
        gf2::Gf2Vec sq = r.mul11(e, e);
        for (std::size_t rr = 0; rr < d2; ++rr)
            if (sq.test(rr)) s.set(rr, i);
    }
    return s;
}

namespace {

int rank_u32(std::vector<std::uint32_t> rows) {
    int rk = 0;
    for (int bit = 0; bit < 32; ++bit) {
        std::uint32_t mask = std::uint32_t{1} << bit;
        std::size_t pr = rows.size();
        for (std::size_t i = static_cast<std::size_t>(rk); i < rows.size(); ++i)
            if (rows[i] & mask) {
                pr = i;
                break;
            }
        if (pr == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rk)], rows[pr]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(rk) && (rows[i] & mask))
                rows[i] ^= rows[static_cast<std::size_t>(rk)];
        ++rk;
    }
    return rk;
}

}  // namespace

InvariantReport invariant_report(const CohomologyRing &r) {
    InvariantReport rep;
    gf2::Gf2Matrix s = squaring_map(r);
    std::size_t d1 = r.q1().dim();

    rep.h1_basis = gf2::kernel_basis(s);
    rep.delta = rep.h1_basis.size();

    // H^2_lambda = image of the squaring map.
    std::vector<gf2::Gf2Vec> h2;
    h2.reserve(d1);
    for (std::size_t i = 0; i < d1; ++i) {
        gf2::Gf2Vec e(d1);
        e.set(i);
        h2.push_back(s.apply(e));
    }
    rep.h2_dim = gf2::span_rank(h2);

    // K = span of all products (degree-1 basis class) * (H^1 class).
    std::vector<std::vector<gf2::Gf2Vec>> prod(d1, std::vector<gf2::Gf2Vec>(rep.delta));
    std::vector<gf2::Gf2Vec> flat;
    flat.reserve(d1 * rep.delta);
    for (std::size_t i = 0; i < d1; ++i) {
        gf2::Gf2Vec e(d1);
        e.set(i);
        for (std::size_t j = 0; j < rep.delta; ++j) {
            prod[i][j] = r.mul11(e, rep.h1_basis[j]);
            flat.push_back(prod[i][j]);
        }
    }
    rep.k_dim = gf2::span_rank(flat);

    std::vector<gf2::Gf2Vec> cap = gf2::intersection_basis(flat, h2);
    rep.k_cap_h2_dim = cap.size();
    rep.k_mod_h2_dim = rep.k_dim - rep.k_cap_h2_dim;

    std::size_t d = rep.k_mod_h2_dim;
    if (d > 24) throw std::runtime_error("invariant_report: functional space dimension > 24");

    // Coordinates on K/(K cap H^2): project modulo the intersection, take the
    // reduced-echelon basis of the image, read off pivot coordinates.
    gf2::QuotientSpace qcap(r.q2().dim(), cap);
    std::vector<gf2::Gf2Vec> wrows;
    wrows.reserve(flat.size());
    for (const auto &p : flat) wrows.push_back(qcap.project(p));
    std::vector<std::size_t> piv = gf2::rref(wrows);
    if (piv.size() != d) throw std::logic_error("invariant_report: quotient dimension mismatch");

    std::vector<std::vector<std::uint32_t>> coord(d1, std::vector<std::uint32_t>(rep.delta, 0));
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < rep.delta; ++j) {
            gf2::Gf2Vec t = qcap.project(prod[i][j]);
            std::uint32_t bits = 0;
            for (std::size_t q = 0; q < d; ++q)
                if (t.test(piv[q])) bits |= std::uint32_t{1} << q;
            coord[i][j] = bits;
        }

    rep.b_histogram.assign(rep.delta + 1, 0);
    for (std::uint32_t theta = 0; theta < (std::uint32_t{1} << d); ++theta) {
        std::vector<std::uint32_t> rows(d1, 0);
        for (std::size_t i = 0; i < d1; ++i) {
            std::uint32_t rr = 0;
            for (std::size_t j = 0; j < rep.delta; ++j)
                if (__builtin_popcount(theta & coord[i][j]) & 1) rr |= std::uint32_t{1} << j;
            rows[i] = rr;
        }
        ++rep.b_histogram[static_cast<std::size_t>(rank_u32(std::move(rows)))];
    }

    rep.b_bar.first = rep.delta >= 1 ? rep.b_histogram[1] : 0;
    rep.b_bar.second = rep.delta >= 2 ? rep.b_histogram[2] : 0;
    return rep;
}

std::size_t k_cap_h2_dim(const CohomologyRing &r) {
    gf2::Gf2Matrix s = squaring_map(r);
    std::size_t d1 = r.q1().dim();
    std::vector<gf2::Gf2Vec> h1 = gf2::kernel_basis(s);
    std::vector<gf2::Gf2Vec> h2, flat;
    for (std::size_t i = 0; i < d1; ++i) {
        gf2::Gf2Vec e(d1);
        e.set(i);
        h2.push_back(s.apply(e));
        for (const auto &v : h1) flat.push_back(r.mul11(e, v));
    }
    return gf2::intersection_dim(flat, h2);
}

std::size_t face_ring_hilbert(const PrismCombinatorics &p, int d) {
    int nf = p.facet_count();
    if (d < 0) return 0;
    if (d == 0) return 1;
    if (d == 1) return static_cast<std::size_t>(nf);
    auto srp = sr_pairs(p);
    if (d == 2) {
        std::size_t ambient = static_cast<std::size_t>(nf) * (nf + 1) / 2;
        return ambient - srp.size();
    }
    if (d == 3) {
        std::size_t ambient = static_cast<std::size_t>(nf) * (nf + 1) * (nf + 2) / 6;
        // Multiples of the generators are distinct monomials, so the rank of
        // the degree-3 ideal piece is the number of distinct sorted triples.
        std::set<std::array<int, 3>> mons;
        for (auto [a, b] : srp)
            for (int j = 0; j < nf; ++j) {
                std::array<int, 3> t = {a, b, j};
                std::sort(t.begin(), t.end());
                mons.insert(t);
            }
        for (const auto &t : sr_triples(p)) mons.insert(t);
        return ambient - mons.size();
    }
    throw std::domain_error("face_ring_hilbert: degree must be 0..3");
}

std::array<std::size_t, 4> betti_dims(const Coloring &c) { return build_ring(c, 3).betti(); }

}  // namespace smallcover
