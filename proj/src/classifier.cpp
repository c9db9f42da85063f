#include "smallcover/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "smallcover/cohomology.hpp"
#include "smallcover/sector_ops.hpp"

namespace smallcover {

InvariantTuple invariant_tuple(const Coloring &c) {
    if (!is_valid(c)) throw std::invalid_argument("invariant tuple: invalid coloring");
    CohomologyRing r(c, 2);
    InvariantReport rep = invariant_report(r);
    InvariantTuple t;
    t.trivial = is_trivial(c);
    t.delta = rep.delta;
    t.b_bar = rep.b_bar;
    t.orientable = is_orientable(c);
    t.k_cap_h2 = rep.k_cap_h2_dim;
    if (!t.trivial && c.m > 3) {
        NontrivialStats st = nontrivial_stats(c);
        t.nm = std::make_pair(st.n, st.mm);
    }
    return t;
}

namespace {

// Marking-independent part of the tuple: `trivial` and (n, mm) depend on
// which facet pair is declared ceiling/floor, which is not a homeomorphism
// invariant for the cube and the m=3 prism.
using Masked = std::tuple<std::size_t, std::uint64_t, std::uint64_t, bool, std::size_t>;

Masked masked_tuple(const Coloring &c) {
    InvariantTuple t = invariant_tuple(c);
    return {t.delta, t.b_bar.first, t.b_bar.second, t.orientable, t.k_cap_h2};
}

// Fingerprint table mapping masked tuples of anchor representatives to
// stable labels, per m. For m <= 4 the anchors are the full known manifold
// inventories; for m >= 5 only the classes a cheap structural split cannot
// separate need fingerprints. Built lazily; guarded for parallel classify.
const std::map<Masked, std::string> &fingerprints(int m) {
    static std::mutex mu;
    static std::map<int, std::map<Masked, std::string>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::map<Masked, std::string> fp;
    auto add = [&](const CanonicalClass &cls, const std::string &label) {
        Masked key = masked_tuple(canonical_sequence(cls, m));
        auto [pos, fresh] = fp.emplace(key, label);
        if (!fresh && pos->second != label)
            throw std::logic_error("fingerprint collision between " + pos->second +
                                   " and " + label + " at m=" + std::to_string(m));
    };
    using K = CanonicalClass::Kind;
    if (m == 3) {
        add({K::C3Prism, 0, 0}, "M3(RP3)");
        add({K::C3, 0, 0}, "M3(S1xRP2)");
    } else if (m == 4) {
        add({K::C1, 0, 0}, "M4(T3)");
        add({K::C2, 0, 0}, "M4(S1xK)");
        add({K::CStar, 0, 0}, "M4(T2twist)");
        add({K::CStar, 1, 0}, "M4(Ktwist)");
    } else if (m % 2 == 1) {
        add({K::C5, 0, 0}, "T(C5)");
        add({K::C6, 0, 0}, "T(C6)");
        add({K::C7, 0, 0}, "T(C7)");
    } else {
        add({K::C8, 0, 0}, "T(C8)");
        add({K::C9, 0, 0}, "T(C9)");
        add({K::C10, 0, 0}, "T(C10)");
    }
    return cache.emplace(m, std::move(fp)).first->second;
}

std::string fingerprint_lookup(const Coloring &c) {
    const auto &fp = fingerprints(c.m);
    auto it = fp.find(masked_tuple(c));
    if (it == fp.end())
        throw std::logic_error("no class fingerprint matches coloring " + c.key());
    return it->second;
}

}  // namespace

std::string classify(const Coloring &c) {
    if (!is_valid(c)) throw std::invalid_argument("classify: invalid coloring");
    if (c.m <= 4) return fingerprint_lookup(c);
    if (!is_trivial(c)) {
        NontrivialStats st = nontrivial_stats(c);
        return "NT(" + std::to_string(st.n) + "," + std::to_string(st.mm) + ")";
    }
    // Trivial, m >= 5: the structural split mirrors the Delta case ladder;
    // only the fully independent starred family needs cohomology.
    bool two = is_2_independent(c);
    bool star = has_property_star(c);
    if (two && !star) {
        if (c.m % 2 != 0) throw std::logic_error("2-letter alternation needs even m");
        return "T(C1)";
    }
    if (two && star) return c.m % 2 == 1 ? "T(C3)" : "T(C2)";
    if (!two && !star) {
        if (c.m % 2 != 0) throw std::logic_error("2-coset alternation needs even m");
        return "T(C4)";
    }
    return fingerprint_lookup(c);
}

std::size_t n_formula(int m) {
    if (m < 3) throw std::invalid_argument("n_formula requires m >= 3");
    if (m == 3) return 2;
    if (m == 4) return 4;
    std::size_t s = 0;
    if (m % 2 == 0) {
        for (int k = 0; k <= m / 2; ++k) s += static_cast<std::size_t>(k / 2 + 1);
        s += 6;
    } else {
        for (int k = 1; k <= m / 2; ++k) s += static_cast<std::size_t>(k / 2 + 1);
        s += 4;
    }
    return s;
}

std::pair<std::size_t, std::size_t> nt_nnt_formulas(int m) {
    if (m <= 4) throw std::invalid_argument("trivial/nontrivial split requires m > 4");
    std::size_t nt = m % 2 == 1 ? 4 : 6;
    std::size_t nnt = 0;
    for (int k = m % 2 == 0 ? 0 : 1; k <= m / 2; ++k)
        nnt += static_cast<std::size_t>(k / 2 + 1);
    return {nt, nnt};
}

namespace {

// Group elements fixing e1: exactly the basis changes mapping the ceiling=e1
// slice of an orbit to itself.
const std::vector<Gl3> &ceiling_stabilizer() {
    static const std::vector<Gl3> stab = [] {
        std::vector<Gl3> out;
        for (const Gl3 &g : gl3_all())
            if (g(1) == 1) out.push_back(g);
        return out;
    }();
    return stab;
}

// Whether a ceiling=e1 coloring is the lexicographic minimum of its orbit.
// Every orbit meets the ceiling=e1 slice, the slice is closed under the
// stabilizer, and the global key minimum has ceiling e1, so filtering the
// slice by stabilizer-minimality yields exactly dj_orbit_representative's
// output without materializing 168 images per coloring.
bool is_orbit_min(const Coloring &c) {
    for (const Gl3 &g : ceiling_stabilizer()) {
        Color f = g(c.floor);
        if (f < c.floor) return false;
        if (f > c.floor) continue;
        for (Color s : c.sides) {
            Color t = g(s);
            if (t < s) return false;
            if (t > s) break;
        }
    }
    return true;
}

}  // namespace

std::vector<Coloring> dj_representatives(int m) {
    std::vector<Coloring> out;
    enumerate_colorings(
        m,
        [&](const Coloring &c) {
            if (is_orbit_min(c)) out.push_back(c);
        },
        /*ceiling_filter=*/1);
    return out;  // enumeration order is key order, hence already sorted
}

std::vector<ClassRow> class_table(int m) {
    std::map<std::string, ClassRow> rows;
    for (const Coloring &c : dj_representatives(m)) {
        std::string label = classify(c);
        auto it = rows.find(label);
        if (it == rows.end())
            rows.emplace(label, ClassRow{label, c, invariant_tuple(c), 1});
        else
            ++it->second.rep_count;
    }
    std::vector<ClassRow> out;
    out.reserve(rows.size());
    for (auto &kv : rows) out.push_back(std::move(kv.second));
    return out;
}

std::size_t count_classes(int m) { return class_table(m).size(); }

}  // namespace smallcover
