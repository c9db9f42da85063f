#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "doctest.h"
#include "smallcover/coloring.hpp"

using namespace smallcover;

namespace {

// Filter-all-tuples oracle: every (ceiling, floor, sides) tuple over 1..7,
// kept iff every prism vertex has independent facet colors.
std::vector<Coloring> brute_force_colorings(int m) {
    std::vector<Coloring> out;
    std::uint64_t total = 1;
    for (int i = 0; i < m + 2; ++i) total *= 7;
    for (std::uint64_t t = 0; t < total; ++t) {
        // ceiling is the most significant base-7 digit, so ascending t is
        // lexicographic key order
        std::uint64_t v = t;
        std::vector<Color> digits(m + 2);
        for (int i = m + 1; i >= 0; --i) {
            digits[i] = static_cast<Color>(v % 7 + 1);
            v /= 7;
        }
        Coloring c;
        c.m = m;
        c.ceiling = digits[0];
        c.floor = digits[1];
        c.sides.assign(digits.begin() + 2, digits.end());
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i) {
            Color a = c.side(i), b = c.side(i + 1);
            ok = independent3(c.ceiling, a, b) && independent3(c.floor, a, b);
        }
        if (ok) out.push_back(std::move(c));
    }
    return out;
}

Coloring make(int m, Color c, Color f, std::vector<Color> sides) {
    Coloring col;
    col.m = m;
    col.ceiling = c;
    col.floor = f;
    col.sides = std::move(sides);
    return col;
}

}  // namespace

TEST_CASE("enumeration equals the 7^(m+2) brute-force oracle") {
    for (int m : {3, 4}) {
        std::vector<Coloring> brute = brute_force_colorings(m);
        for (const Coloring &c : brute) CHECK(is_valid(c));
        std::vector<Coloring> got;
        enumerate_colorings(m, [&](const Coloring &c) { got.push_back(c); });
        REQUIRE(got.size() == brute.size());
        CHECK(got == brute);  // same key order
        CHECK(count_colorings(m) == brute.size());
    }
}

TEST_CASE("trivial colorings with fixed equal ceiling and floor count 4^m + 2(-2)^m") {
    for (int m = 3; m <= 8; ++m) {
        std::int64_t expected = (std::int64_t{1} << (2 * m)) +
                                (m % 2 == 0 ? 2 : -2) * (std::int64_t{1} << m);
        std::int64_t got = 0;
        enumerate_colorings(
            m, [&](const Coloring &c) { got += c.floor == 1 ? 1 : 0; },
            /*ceiling_filter=*/1);
        CHECK(got == expected);
    }
}

TEST_CASE("format and parse round-trip") {
    Coloring c = make(4, 1, 3, {2, 4, 2, 5});
    std::string text = format_coloring(c);
    CHECK(text == "m=4;c=1;f=3;s=2,4,2,5");
    auto back = parse_coloring(text);
    REQUIRE(back.has_value());
    CHECK(*back == c);
    std::string err;
    CHECK(!parse_coloring("m=4;c=9;f=3;s=2,4,2,5", &err).has_value());
    CHECK(!err.empty());
    CHECK(!parse_coloring("garbage", &err).has_value());
}

TEST_CASE("validity diagnostic names the violated triple") {
    Coloring bad = make(3, 1, 1, {2, 3, 4});  // {c, s1, s2} = {1, 2, 3} dependent
    CHECK(!is_valid(bad));
    CHECK(!validity_diagnostic(bad).empty());
    Coloring good = make(3, 1, 1, {2, 6, 4});
    CHECK(is_valid(good));
    CHECK(validity_diagnostic(good).empty());
}

TEST_CASE("GL(3,Z2) group and free orbits") {
    const auto &all = gl3_all();
    REQUIRE(all.size() == 168);
    std::set<std::array<Color, 3>> images;
    for (const Gl3 &g : all) {
        images.insert(g.basis_images());
        // linearity on all of Z2^3
        for (Color a = 0; a < 8; ++a)
            for (Color b = 0; b < 8; ++b)
                CHECK(g(static_cast<Color>(a ^ b)) == (g(a) ^ g(b)));
    }
    CHECK(images.size() == 168);

    Coloring c = make(4, 1, 1, {2, 4, 2, 4});
    std::set<std::string> orbit;
    for (const Gl3 &g : all) orbit.insert(apply_gl(c, g).key());
    CHECK(orbit.size() == 168);  // the action on valid colorings is free
    CHECK(dj_orbit_representative(c).key() == *orbit.begin());
    // representative is orbit-invariant
    std::mt19937 rng(4);
    for (int i = 0; i < 10; ++i) {
        const Gl3 &g = all[rng() % all.size()];
        CHECK(dj_orbit_representative(apply_gl(c, g)) == dj_orbit_representative(c));
    }
}

TEST_CASE("gl3_from_images hits the requested basis images") {
    Gl3 g = gl3_from_images(3, 5, 7);
    CHECK(g(1) == 3);
    CHECK(g(2) == 5);
    CHECK(g(4) == 7);
    CHECK(g(7) == (3 ^ 5 ^ 7));
    CHECK_THROWS(gl3_from_images(1, 2, 3));  // dependent images
}

TEST_CASE("predicates and statistics") {
    Coloring alt = make(6, 1, 1, {2, 4, 2, 4, 2, 4});
    CHECK(is_trivial(alt));
    CHECK(is_2_independent(alt));
    CHECK(!has_property_star(alt));

    Coloring star = make(6, 1, 1, {2, 4, 6, 2, 4, 6});
    CHECK(has_property_star(star));

    Coloring nt = make(3, 1, 2, {4, 7, 3});
    REQUIRE(is_valid(nt));
    CHECK(!is_trivial(nt));
    CHECK_THROWS_AS(has_property_star(nt), std::invalid_argument);
    NontrivialStats st = nontrivial_stats(nt);
    CHECK(st.lambda0 == 3);
    CHECK(st.n == 1);  // only s3 carries lambda0 = 3
    CHECK(st.N_indices == std::vector<int>{3});
    CHECK_THROWS_AS(nontrivial_stats(alt), std::invalid_argument);
}

TEST_CASE("orientability criterion matches the GL search") {
    for (int m : {3, 4}) {
        enumerate_colorings(
            m,
            [&](const Coloring &c) {
                CHECK(is_orientable(c) == is_orientable_gl_search(c));
            },
            /*ceiling_filter=*/1);
    }
}

TEST_CASE("side accessor is cyclic") {
    Coloring c = make(4, 1, 1, {2, 4, 2, 5});
    CHECK(c.side(1) == 2);
    CHECK(c.side(4) == 5);
    CHECK(c.side(5) == 2);
    CHECK(c.side(0) == 5);
    CHECK(c.side(-3) == 2);
}
