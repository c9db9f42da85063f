// Z2^3-colorings of the prism P3(m): validity, enumeration, DJ orbits,
// triviality/independence predicates, (n_lambda, m_lambda), orientability.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace smallcover {

// Nonzero element of Z2^3 encoded as a 3-bit integer in 1..7
// (e1 -> 1, e2 -> 2, e3 -> 4; addition is XOR).
using Color = std::uint8_t;

// {a, b, c} linearly independent in Z2^3.
inline bool independent3(Color a, Color b, Color c) {
    return a != 0 && b != 0 && a != b && c != 0 && c != a && c != b && c != (a ^ b);
}

struct Coloring {
    int m = 0;
    Color ceiling = 0;
    Color floor = 0;
    std::vector<Color> sides;  // sides[i] colors s_{i+1}; cyclic

    Color side(int i) const;  // 1-based cyclic accessor

    // Digit-string key "c f s1 ... sm"; lexicographic order of keys is the
    // enumeration order.
    std::string key() const;

    bool operator==(const Coloring &o) const {
        return m == o.m && ceiling == o.ceiling && floor == o.floor && sides == o.sides;
    }
};

bool is_valid(const Coloring &c);

// Reason for the first violated vertex triple, empty if valid.
std::string validity_diagnostic(const Coloring &c);

// Text format: "m=<int>;c=<digit>;f=<digit>;s=<digit>,<digit>,..."
std::string format_coloring(const Coloring &c);
std::optional<Coloring> parse_coloring(const std::string &text, std::string *error = nullptr);

// --- GL(3, Z2) action -------------------------------------------------------

// A group element stored as its lookup table on all 8 field elements.
struct Gl3 {
    std::array<Color, 8> map;  // map[0] == 0
    Color operator()(Color v) const { return map[v]; }
    std::array<Color, 3> basis_images() const { return {map[1], map[2], map[4]}; }
};

// All 168 elements, fixed deterministic order.
const std::vector<Gl3> &gl3_all();

// Element mapping basis (1,2,4) to the given independent images.
Gl3 gl3_from_images(Color img_e1, Color img_e2, Color img_e3);

Coloring apply_gl(const Coloring &c, const Gl3 &g);

// Lexicographically smallest image over all 168 group elements.
Coloring dj_orbit_representative(const Coloring &c);

// --- Enumeration ------------------------------------------------------------

// Yields every valid coloring in lexicographic key order. If ceiling_filter
// is nonzero, restricts to colorings with that ceiling color (used by the
// orbit sweep; every DJ orbit meets ceiling == e1).
void enumerate_colorings(int m, const std::function<void(const Coloring &)> &sink,
                         Color ceiling_filter = 0);

std::uint64_t count_colorings(int m, Color ceiling_filter = 0);

// --- Predicates and statistics ----------------------------------------------

bool is_trivial(const Coloring &c);

// Side colors span a 2-dimensional subspace.
bool is_2_independent(const Coloring &c);

// Trivial colorings only: all three cosets of <lambda(c)> occur among sides.
bool has_property_star(const Coloring &c);

struct NontrivialStats {
    Color lambda0 = 0;           // ceiling + floor
    int n = 0;                   // |N_lambda|
    int mm = 0;                  // |M_lambda|
    std::vector<int> N_indices;  // 1-based side indices with color lambda0
    std::vector<int> M_indices;  // 1-based: color spans Z2^3 with both neighbors
};

NontrivialStats nontrivial_stats(const Coloring &c);

// Nonzero functional u with u(color)=1 for every facet color exists.
bool is_orientable(const Coloring &c);

// Literal check: some GL image has every color with odd first coordinate...
// more precisely, exists g in GL(3,Z2) such that every facet color of g(c)
// has coordinate-sum 1 mod 2. Used to validate is_orientable.
bool is_orientable_gl_search(const Coloring &c);

}  // namespace smallcover
