#include "smallcover/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace smallcover {

Color Coloring::side(int i) const {
    int r = (i - 1) % m;
    if (r < 0) r += m;
    return sides[static_cast<std::size_t>(r)];
}

std::string Coloring::key() const {
    std::string k;
    k.reserve(sides.size() + 2);
    k.push_back(static_cast<char>('0' + ceiling));
    k.push_back(static_cast<char>('0' + floor));
    for (Color s : sides) k.push_back(static_cast<char>('0' + s));
    return k;
}

bool is_valid(const Coloring &c) {
    if (c.m < 3 || static_cast<int>(c.sides.size()) != c.m) return false;
    if (c.ceiling == 0 || c.ceiling > 7 || c.floor == 0 || c.floor > 7) return false;
    for (Color s : c.sides)
        if (s == 0 || s > 7) return false;
    for (int i = 0; i < c.m; ++i) {
        Color a = c.sides[i];
        Color b = c.sides[(i + 1) % c.m];
        if (!independent3(c.ceiling, a, b)) return false;
        if (!independent3(c.floor, a, b)) return false;
    }
    return true;
}

std::string validity_diagnostic(const Coloring &c) {
    if (c.m < 3 || static_cast<int>(c.sides.size()) != c.m)
        return "side count does not match m";
    for (int i = 0; i < c.m; ++i) {
        Color a = c.sides[i];
        Color b = c.sides[(i + 1) % c.m];
        int j = (i + 1) % c.m + 1;
        std::ostringstream os;
        if (!independent3(c.ceiling, a, b)) {
            os << "dependent vertex triple {ceiling, s" << (i + 1) << ", s" << j << "}";
            return os.str();
        }
        if (!independent3(c.floor, a, b)) {
            os << "dependent vertex triple {floor, s" << (i + 1) << ", s" << j << "}";
            return os.str();
        }
    }
    return {};
}

std::string format_coloring(const Coloring &c) {
    std::ostringstream os;
    os << "m=" << c.m << ";c=" << int(c.ceiling) << ";f=" << int(c.floor) << ";s=";
    for (int i = 0; i < c.m; ++i) {
        if (i) os << ',';
        os << int(c.sides[i]);
    }
    return os.str();
}

std::optional<Coloring> parse_coloring(const std::string &text, std::string *error) {
    auto fail = [&](const std::string &msg) -> std::optional<Coloring> {
        if (error) *error = msg;
        return std::nullopt;
    };
    Coloring c;
    std::istringstream is(text);
    std::string part;
    bool have_m = false, have_c = false, have_f = false, have_s = false;
    while (std::getline(is, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) return fail("expected key=value in '" + part + "'");
        std::string k = part.substr(0, eq), v = part.substr(eq + 1);
        try {
            if (k == "m") {
                c.m = std::stoi(v);
                have_m = true;
            } else if (k == "c") {
                c.ceiling = static_cast<Color>(std::stoi(v));
                have_c = true;
            } else if (k == "f") {
                c.floor = static_cast<Color>(std::stoi(v));
                have_f = true;
            } else if (k == "s") {
                std::istringstream sv(v);
                std::string d;
                while (std::getline(sv, d, ',')) c.sides.push_back(static_cast<Color>(std::stoi(d)));
                have_s = true;
            } else {
                return fail("unknown key '" + k + "'");
            }
        } catch (const std::exception &) {
            return fail("bad integer in '" + part + "'");
        }
    }
    if (!(have_m && have_c && have_f && have_s)) return fail("missing one of m/c/f/s");
    if (static_cast<int>(c.sides.size()) != c.m) return fail("side count does not match m");
    for (Color d : c.sides)
        if (d == 0 || d > 7) return fail("side digit out of range 1..7");
    if (c.ceiling == 0 || c.ceiling > 7 || c.floor == 0 || c.floor > 7)
        return fail("ceiling/floor digit out of range 1..7");
    return c;
}

// --- GL(3, Z2) --------------------------------------------------------------

Gl3 gl3_from_images(Color i1, Color i2, Color i3) {
    if (!independent3(i1, i2, i3)) throw std::invalid_argument("gl3: images not independent");
    Gl3 g{};
    for (int v = 0; v < 8; ++v) {
        Color out = 0;
        if (v & 1) out ^= i1;
        if (v & 2) out ^= i2;
        if (v & 4) out ^= i3;
        g.map[v] = out;
    }
    return g;
}

const std::vector<Gl3> &gl3_all() {
    static const std::vector<Gl3> all = [] {
        std::vector<Gl3> v;
        v.reserve(168);
        for (Color a = 1; a <= 7; ++a)
            for (Color b = 1; b <= 7; ++b)
                for (Color c = 1; c <= 7; ++c)
                    if (independent3(a, b, c)) v.push_back(gl3_from_images(a, b, c));
        return v;
    }();
    return all;
}

Coloring apply_gl(const Coloring &c, const Gl3 &g) {
    Coloring out = c;
    out.ceiling = g(c.ceiling);
    out.floor = g(c.floor);
    for (auto &s : out.sides) s = g(s);
    return out;
}

Coloring dj_orbit_representative(const Coloring &c) {
    Coloring best = c;
    std::string best_key = c.key();
    for (const Gl3 &g : gl3_all()) {
        Coloring img = apply_gl(c, g);
        std::string k = img.key();
        if (k < best_key) {
            best_key = std::move(k);
            best = std::move(img);
        }
    }
    return best;
}

// --- Enumeration ------------------------------------------------------------

namespace {

// ok[cf][x][y]: {cf_c, x, y} and {cf_f, x, y} both independent, with the two
// top colors packed into one index. Built per (ceiling, floor) pair instead to
// stay simple: a 8x8 table of admissible consecutive side pairs.
struct PairTable {
    bool ok[8][8];
    void build(Color ceiling, Color floor) {
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y)
                ok[x][y] = x && y &&
                           independent3(ceiling, static_cast<Color>(x), static_cast<Color>(y)) &&
                           independent3(floor, static_cast<Color>(x), static_cast<Color>(y));
    }
};

void extend(Coloring &c, const PairTable &t, int depth,
            const std::function<void(const Coloring &)> &sink) {
    if (depth == c.m) {
        if (t.ok[c.sides[c.m - 1]][c.sides[0]]) sink(c);
        return;
    }
    for (Color s = 1; s <= 7; ++s) {
        if (s == c.ceiling || s == c.floor) continue;
        if (depth > 0 && !t.ok[c.sides[depth - 1]][s]) continue;
        c.sides[depth] = s;
        extend(c, t, depth + 1, sink);
    }
    c.sides[depth] = 0;
}

}  // namespace

void enumerate_colorings(int m, const std::function<void(const Coloring &)> &sink,
                         Color ceiling_filter) {
    if (m < 3) throw std::domain_error("enumerate: m must be >= 3");
    Coloring c;
    c.m = m;
    c.sides.assign(static_cast<std::size_t>(m), 0);
    PairTable t;
    for (Color ceil = 1; ceil <= 7; ++ceil) {
        if (ceiling_filter && ceil != ceiling_filter) continue;
        for (Color fl = 1; fl <= 7; ++fl) {
            c.ceiling = ceil;
            c.floor = fl;
            t.build(ceil, fl);
            extend(c, t, 0, sink);
        }
    }
}

std::uint64_t count_colorings(int m, Color ceiling_filter) {
    std::uint64_t n = 0;
    enumerate_colorings(
        m, [&](const Coloring &) { ++n; }, ceiling_filter);
    return n;
}

// --- Predicates -------------------------------------------------------------

bool is_trivial(const Coloring &c) { return c.ceiling == c.floor; }

bool is_2_independent(const Coloring &c) {
    // The side colors always span at least dimension 2 (adjacent sides differ).
    // They span dimension 2 iff all sides lie in {a, b, a^b} for the first two
    // distinct side colors a, b.
    Color a = c.sides[0];
    Color b = 0;
    for (Color s : c.sides)
        if (s != a) {
            b = s;
            break;
        }
    Color g = a ^ b;
    for (Color s : c.sides)
        if (s != a && s != b && s != g) return false;
    return true;
}

bool has_property_star(const Coloring &c) {
    if (!is_trivial(c)) throw std::invalid_argument("has_property_star: nontrivial coloring");
    // Cosets of <lambda(c)> among nonzero classes: {x, x + lambda(c)}.
    Color e = c.ceiling;
    bool seen[8] = {false};
    for (Color s : c.sides) {
        Color rep = std::min<Color>(s, s ^ e);
        seen[rep] = true;
    }
    int cosets = 0;
    for (int v = 1; v < 8; ++v)
        if (seen[v]) ++cosets;
    return cosets == 3;
}

NontrivialStats nontrivial_stats(const Coloring &c) {
    if (is_trivial(c)) throw std::invalid_argument("nontrivial_stats: trivial coloring");
    NontrivialStats st;
    st.lambda0 = c.ceiling ^ c.floor;
    for (int i = 1; i <= c.m; ++i) {
        if (c.side(i) == st.lambda0) {
            st.N_indices.push_back(i);
            ++st.n;
        }
        Color prev = c.side(i - 1), cur = c.side(i), next = c.side(i + 1);
        if (independent3(prev, cur, next)) {
            st.M_indices.push_back(i);
            ++st.mm;
        }
    }
    return st;
}

namespace {
inline bool odd_pairing(Color u, Color v) { return __builtin_popcount(u & v) & 1; }
}  // namespace

bool is_orientable(const Coloring &c) {
    for (Color u = 1; u <= 7; ++u) {
        bool ok = odd_pairing(u, c.ceiling) && odd_pairing(u, c.floor);
        for (Color s : c.sides) {
            if (!ok) break;
            ok = odd_pairing(u, s);
        }
        if (ok) return true;
    }
    return false;
}

bool is_orientable_gl_search(const Coloring &c) {
    for (const Gl3 &g : gl3_all()) {
        Coloring img = apply_gl(c, g);
        auto odd_sum = [](Color v) { return __builtin_popcount(v) & 1; };
        bool ok = odd_sum(img.ceiling) && odd_sum(img.floor);
        for (Color s : img.sides) {
            if (!ok) break;
            ok = odd_sum(s);
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace smallcover
