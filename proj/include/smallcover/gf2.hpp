// Bit-packed linear algebra over GF(2): rank, reduced echelon form, kernels,
// and quotient-space coordinates. Everything downstream (coloring validity,
// cohomology rings, invariant computations) reduces to these kernels.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace smallcover::gf2 {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

// Fixed-length vector over GF(2). Addition is XOR; immutable length.
class Gf2Vec {
  public:
    Gf2Vec() = default;
    explicit Gf2Vec(std::size_t n) : n_(n), w_((n + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool v = true) {
        Word mask = Word{1} << (i % kWordBits);
        if (v)
            w_[i / kWordBits] |= mask;
        else
            w_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { w_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    Gf2Vec &operator^=(const Gf2Vec &o) {
        if (o.n_ != n_) throw std::invalid_argument("gf2: vector length mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec &b) { return a ^= b; }

    bool is_zero() const {
        for (Word x : w_)
            if (x) return false;
        return true;
    }
    bool operator==(const Gf2Vec &o) const { return n_ == o.n_ && w_ == o.w_; }

    // Index of the lowest set bit, or size() when zero.
    std::size_t leading_bit() const;

    const std::vector<Word> &words() const { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<Word> w_;
};

// Dense row-major matrix over GF(2); rows share a fixed column count.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vec(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Gf2Vec &row(std::size_t r) { return rows_[r]; }
    const Gf2Vec &row(std::size_t r) const { return rows_[r]; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    void append_row(Gf2Vec v) {
        if (v.size() != cols_) throw std::invalid_argument("gf2: row length mismatch");
        rows_.push_back(std::move(v));
    }

    Gf2Matrix transpose() const;

    // Matrix * vector (vector length = cols).
    Gf2Vec apply(const Gf2Vec &v) const;

  private:
    std::size_t cols_ = 0;
    std::vector<Gf2Vec> rows_;
};

// In-place reduced row echelon form with deterministic pivoting
// (leftmost pivot column, first usable row). Returns the pivot columns
// in increasing order; zero rows are removed.
std::vector<std::size_t> rref(std::vector<Gf2Vec> &rows);

std::size_t rank(const Gf2Matrix &m);

// Independent vectors spanning {v : m v = 0}; count = cols - rank.
std::vector<Gf2Vec> kernel_basis(const Gf2Matrix &m);

// Quotient of an ambient GF(2)^n by the span of relation vectors.
// Quotient coordinates are the ambient coordinates at non-pivot columns of the
// relations' reduced echelon form, after reduction by those relations.
class QuotientSpace {
  public:
    QuotientSpace() = default;
    QuotientSpace(std::size_t ambient_dim, const std::vector<Gf2Vec> &relations);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return free_cols_.size(); }
    const std::vector<std::size_t> &free_cols() const { return free_cols_; }

    // Reduce an ambient vector by the relations and read off free coordinates.
    Gf2Vec project(const Gf2Vec &v) const;

    // Ambient representative of quotient coordinates; project(lift(q)) == q.
    Gf2Vec lift(const Gf2Vec &q) const;

  private:
    std::size_t ambient_dim_ = 0;
    std::vector<Gf2Vec> rel_rref_;       // reduced echelon rows of the relations
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::size_t> free_cols_;
};

// Dimension of the intersection of two subspaces given by spanning sets.
std::size_t intersection_dim(const std::vector<Gf2Vec> &a, const std::vector<Gf2Vec> &b);

// Basis of the intersection of two subspaces (Zassenhaus-free: solved via
// kernel of the stacked coefficient matrix).
std::vector<Gf2Vec> intersection_basis(const std::vector<Gf2Vec> &a, const std::vector<Gf2Vec> &b);

std::size_t span_rank(const std::vector<Gf2Vec> &vecs);

}  // namespace smallcover::gf2
