#include "smallcover/gf2.hpp"

#include <algorithm>

namespace smallcover::gf2 {

std::size_t Gf2Vec::leading_bit() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * kWordBits + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
    return n_;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (rows_[r].test(c)) t.set(c, r);
    return t;
}

Gf2Vec Gf2Matrix::apply(const Gf2Vec &v) const {
    if (v.size() != cols_) throw std::invalid_argument("gf2: apply length mismatch");
    Gf2Vec out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto &rw = rows_[r].words();
        const auto &vw = v.words();
        Word acc = 0;
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
        if (__builtin_popcountll(acc) & 1) out.set(r);
    }
    return out;
}

std::vector<std::size_t> rref(std::vector<Gf2Vec> &rows) {
    std::vector<std::size_t> pivots;
    std::size_t done = 0;  // rows above `done` are finished pivot rows
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    for (std::size_t col = 0; col < cols && done < rows.size(); ++col) {
        std::size_t pr = rows.size();
        for (std::size_t r = done; r < rows.size(); ++r)
            if (rows[r].test(col)) {
                pr = r;
                break;
            }
        if (pr == rows.size()) continue;
        std::swap(rows[done], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != done && rows[r].test(col)) rows[r] ^= rows[done];
        pivots.push_back(col);
        ++done;
    }
    rows.resize(done);
    return pivots;
}

std::size_t rank(const Gf2Matrix &m) {
    std::vector<Gf2Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rref(rows).size();
}

std::vector<Gf2Vec> kernel_basis(const Gf2Matrix &m) {
    std::vector<Gf2Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::vector<std::size_t> pivots = rref(rows);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Gf2Vec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Gf2Vec v(m.cols());
        v.set(c);
        // pivot row i has its pivot at pivots[i]; back-substitute column c
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].test(c)) v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

QuotientSpace::QuotientSpace(std::size_t ambient_dim, const std::vector<Gf2Vec> &relations)
    : ambient_dim_(ambient_dim) {
    for (const auto &r : relations)
        if (r.size() != ambient_dim)
            throw std::invalid_argument("gf2: relation length != ambient dimension");
    rel_rref_ = relations;
    pivot_cols_ = rref(rel_rref_);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : pivot_cols_) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
}

Gf2Vec QuotientSpace::project(const Gf2Vec &v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("gf2: project length mismatch");
    Gf2Vec red = v;
    for (std::size_t i = 0; i < rel_rref_.size(); ++i)
        if (red.test(pivot_cols_[i])) red ^= rel_rref_[i];
    Gf2Vec out(free_cols_.size());
    for (std::size_t i = 0; i < free_cols_.size(); ++i)
        if (red.test(free_cols_[i])) out.set(i);
    return out;
}

Gf2Vec QuotientSpace::lift(const Gf2Vec &q) const {
    if (q.size() != free_cols_.size()) throw std::invalid_argument("gf2: lift length mismatch");
    Gf2Vec out(ambient_dim_);
    for (std::size_t i = 0; i < free_cols_.size(); ++i)
        if (q.test(i)) out.set(free_cols_[i]);
    return out;
}

std::size_t span_rank(const std::vector<Gf2Vec> &vecs) {
    std::vector<Gf2Vec> rows = vecs;
    return rref(rows).size();
}

std::vector<Gf2Vec> intersection_basis(const std::vector<Gf2Vec> &a, const std::vector<Gf2Vec> &b) {
    // Solve sum_i x_i a_i + sum_j y_j b_j = 0; the a-part of each kernel vector
    // spans the intersection.
    if (a.empty() || b.empty()) return {};
    std::size_t n = a[0].size();
    Gf2Matrix stacked(n, a.size() + b.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (a[c].test(r)) stacked.set(r, c);
    for (std::size_t c = 0; c < b.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (b[c].test(r)) stacked.set(r, a.size() + c);
    std::vector<Gf2Vec> result;
    for (const Gf2Vec &k : kernel_basis(stacked)) {
        Gf2Vec v(n);
        for (std::size_t c = 0; c < a.size(); ++c)
            if (k.test(c)) v ^= a[c];
        if (!v.is_zero()) result.push_back(std::move(v));
    }
    std::vector<Gf2Vec> rows = result;
    rref(rows);
    return rows;
}

std::size_t intersection_dim(const std::vector<Gf2Vec> &a, const std::vector<Gf2Vec> &b) {
    std::size_t ra = span_rank(a), rb = span_rank(b);
    std::vector<Gf2Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return ra + rb - span_rank(all);
}

}  // namespace smallcover::gf2
