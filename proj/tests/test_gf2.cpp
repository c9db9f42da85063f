#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "smallcover/gf2.hpp"

using namespace smallcover::gf2;

namespace {

Gf2Matrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

// All vectors in the span of the given set (brute force; small sets only).
std::vector<Gf2Vec> span_elements(const std::vector<Gf2Vec> &gen, std::size_t n) {
    std::vector<Gf2Vec> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << gen.size()); ++mask) {
        Gf2Vec v(n);
        for (std::size_t i = 0; i < gen.size(); ++i)
            if ((mask >> i) & 1) v ^= gen[i];
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("vector bit operations") {
    Gf2Vec v(130);
    CHECK(v.is_zero());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.test(64));
    CHECK(!v.test(63));
    CHECK(v.leading_bit() == 0);
    v.flip(0);
    CHECK(v.leading_bit() == 64);
    Gf2Vec w(130);
    w.set(64);
    v ^= w;
    CHECK(v.leading_bit() == 129);
    CHECK_THROWS_AS(v ^= Gf2Vec(7), std::invalid_argument);
}

TEST_CASE("rref produces reduced echelon form") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        Gf2Matrix m = random_matrix(rng, 8, 11);
        std::vector<Gf2Vec> rows;
        for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
        std::vector<std::size_t> pivots = rref(rows);
        CHECK(rows.size() == pivots.size());
        CHECK(rank(m) == pivots.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].leading_bit() == pivots[i]);
            // pivot columns are cleared in every other row
            for (std::size_t j = 0; j < rows.size(); ++j)
                if (j != i) CHECK(!rows[j].test(pivots[i]));
        }
        CHECK(std::is_sorted(pivots.begin(), pivots.end()));
    }
}

TEST_CASE("kernel basis solves m v = 0 and has full count") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        Gf2Matrix m = random_matrix(rng, 6, 9);
        std::vector<Gf2Vec> ker = kernel_basis(m);
        CHECK(ker.size() == m.cols() - rank(m));
        for (const Gf2Vec &v : ker) CHECK(m.apply(v).is_zero());
        CHECK(span_rank(ker) == ker.size());
    }
}

TEST_CASE("transpose and apply agree with direct indexing") {
    std::mt19937 rng(31);
    Gf2Matrix m = random_matrix(rng, 5, 7);
    Gf2Matrix t = m.transpose();
    REQUIRE(t.rows() == 7);
    REQUIRE(t.cols() == 5);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 7; ++c) CHECK(m.get(r, c) == t.get(c, r));
    Gf2Vec v(7);
    v.set(1);
    v.set(6);
    Gf2Vec got = m.apply(v);
    for (std::size_t r = 0; r < 5; ++r)
        CHECK(got.test(r) == (m.get(r, 1) ^ m.get(r, 6)));
}

TEST_CASE("quotient space projection and lift") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 10;
        Gf2Matrix m = random_matrix(rng, 4, n);
        std::vector<Gf2Vec> rel;
        for (std::size_t r = 0; r < m.rows(); ++r) rel.push_back(m.row(r));
        QuotientSpace q(n, rel);
        CHECK(q.dim() == n - span_rank(rel));
        for (const Gf2Vec &v : rel) CHECK(q.project(v).is_zero());
        // project(lift(x)) == x for every coordinate vector
        for (std::size_t i = 0; i < q.dim(); ++i) {
            Gf2Vec e(q.dim());
            e.set(i);
            CHECK(q.project(q.lift(e)) == e);
        }
        // projection is linear
        Gf2Vec a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a.set(i, (rng() & 1) != 0);
            b.set(i, (rng() & 1) != 0);
        }
        CHECK(q.project(a ^ b) == (q.project(a) ^ q.project(b)));
    }
}

TEST_CASE("intersection dimension matches brute force") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 8;
        std::vector<Gf2Vec> a, b;
        for (int i = 0; i < 4; ++i) {
            Gf2Vec v(n), w(n);
            for (std::size_t j = 0; j < n; ++j) {
                v.set(j, (rng() & 1) != 0);
                w.set(j, (rng() & 1) != 0);
            }
            a.push_back(v);
            b.push_back(w);
        }
        std::vector<Gf2Vec> ea = span_elements(a, n), eb = span_elements(b, n);
        std::size_t common = 0;
        for (const Gf2Vec &v : ea)
            if (std::find(eb.begin(), eb.end(), v) != eb.end()) ++common;
        std::size_t dim = 0;
        while ((std::size_t{1} << dim) < common) ++dim;
        CHECK((std::size_t{1} << dim) == common);  // intersection is a subspace
        CHECK(intersection_dim(a, b) == dim);
        std::vector<Gf2Vec> basis = intersection_basis(a, b);
        CHECK(basis.size() == dim);
        for (const Gf2Vec &v : basis) {
            CHECK(std::find(ea.begin(), ea.end(), v) != ea.end());
            CHECK(std::find(eb.begin(), eb.end(), v) != eb.end());
        }
        CHECK(span_rank(basis) == dim);
    }
}
