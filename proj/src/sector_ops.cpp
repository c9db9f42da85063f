#include "smallcover/sector_ops.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "smallcover/cohomology.hpp"

namespace smallcover {

namespace {

constexpr int kOpKindCount = 8;

const char *const kOpNames[kOpKindCount] = {"O1",   "O21", "O22", "O32",
                                            "NO21", "O31", "O4",  "O5"};

const GoodTwistInfo kTwistInfo[kOpKindCount] = {
    {"S(1)", "diag(1,-1)", "124", "1", true},     // O1
    {"S(2_1)", "diag(1,1)", "126", "0", false},   // O21
    {"S(2_2)", "diag(1,-1)", "324", "1", true},   // O22
    {"S(3_2)", "diag(1,-1)", "421", "1", true},   // O32
    {"S(2_1)", "diag(1,1)", "126", "0", false},   // NO21
    {"S(3_1)", "diag(-1,1)", "124", "2", true},   // O31
    {"S(4)", "diag(1,-1)", "125", "4", true},     // O4
    {"S(5)", "diag(-1,1)", "214", "1", true},     // O5
};

inline bool in_span2(Color v, Color a, Color b) {
    return v == 0 || v == a || v == b || v == (a ^ b);
}

// Smallest nonzero color outside span{a, b}.
Color smallest_outside_span(Color a, Color b) {
    for (Color v = 1; v <= 7; ++v)
        if (!in_span2(v, a, b)) return v;
    throw std::logic_error("span is all of Z2^3");
}

Gl3 gl3_inverse(const Gl3 &g) {
    Gl3 inv{};
    for (int v = 0; v < 8; ++v) inv.map[g.map[v]] = static_cast<Color>(v);
    return inv;
}

// Linear map v -> v (on span{a, b}), v -> v + shift (off it).
Gl3 shear_map(Color a, Color b, Color shift) {
    Gl3 t{};
    for (int v = 0; v < 8; ++v) {
        Color c = static_cast<Color>(v);
        t.map[v] = in_span2(c, a, b) ? c : static_cast<Color>(c ^ shift);
    }
    return t;
}

// Linear map fixing `fix` and swapping x <-> y ({fix, x, y} independent).
Gl3 swap_map(Color fix, Color x, Color y) {
    Gl3 h = gl3_from_images(fix, x, y);
    Gl3 hi = gl3_inverse(h);
    Gl3 g = gl3_from_images(fix, y, x);
    Gl3 t{};
    for (int v = 0; v < 8; ++v) t.map[v] = g.map[hi.map[v]];
    return t;
}

// The interior substitution of a legal op (identity for O1/O31).
Gl3 op_substitution(const Coloring &c, const SequenceOp &op) {
    Color ce = c.ceiling, fl = c.floor;
    Color sk = c.side(op.k), sl = c.side(op.l);
    switch (op.kind) {
        case OpKind::O1:
        case OpKind::O31: {
            Gl3 id{};
            for (int v = 0; v < 8; ++v) id.map[v] = static_cast<Color>(v);
            return id;
        }
        case OpKind::O21:
            return shear_map(ce, sk, ce);
        case OpKind::O22:
            return shear_map(ce, smallest_outside_span(ce, sk), ce);
        case OpKind::O32:
            return swap_map(ce, sk, sl);
        case OpKind::NO21:
            return shear_map(ce, fl, static_cast<Color>(ce ^ fl));
        case OpKind::O4:
            return swap_map(static_cast<Color>(ce ^ fl), sk, sl);
        case OpKind::O5:
            return swap_map(ce, sk, sl);
    }
    throw std::logic_error("unreachable op kind");
}

}  // namespace

const char *op_kind_name(OpKind k) { return kOpNames[static_cast<int>(k)]; }

std::optional<OpKind> op_kind_from_name(const std::string &name) {
    for (int i = 0; i < kOpKindCount; ++i)
        if (name == kOpNames[i]) return static_cast<OpKind>(i);
    return std::nullopt;
}

const GoodTwistInfo &good_twist_info(OpKind k) { return kTwistInfo[static_cast<int>(k)]; }

std::string op_legality_error(const Coloring &c, const SequenceOp &op) {
    if (op.k < 1 || op.l <= op.k || op.l > c.m) return "span indices must satisfy 1 <= k < l <= m";
    bool trivial = is_trivial(c);
    Color sk = c.side(op.k), sl = c.side(op.l);
    Color lam0 = static_cast<Color>(c.ceiling ^ c.floor);
    switch (op.kind) {
        case OpKind::O1:
            if (!trivial) return "O1 requires a trivial coloring";
            if (sk != sl) return "O1 requires equal colors at s_k and s_l";
            return {};
        case OpKind::O21:
        case OpKind::O22:
            if (!trivial) return std::string(op_kind_name(op.kind)) + " requires a trivial coloring";
            if (sl != (sk ^ c.ceiling))
                return std::string(op_kind_name(op.kind)) +
                       " requires s_l colored lambda(s_k) + lambda(c)";
            return {};
        case OpKind::O32:
            if (!trivial) return "O32 requires a trivial coloring";
            if (sl == sk || sl == (sk ^ c.ceiling))
                return "O32 requires s_l outside the lambda(c)-coset of s_k";
            return {};
        case OpKind::NO21:
            if (trivial) return "NO21 requires a nontrivial coloring";
            if (sk != lam0 || sl != lam0)
                return "NO21 requires both s_k and s_l colored lambda_0";
            return {};
        case OpKind::O31:
            if (trivial) return "O31 requires a nontrivial coloring";
            if (sk != sl) return "O31 requires equal colors at s_k and s_l";
            if (sk == lam0) return "O31 requires a color distinct from lambda_0";
            return {};
        case OpKind::O4:
            if (trivial) return "O4 requires a nontrivial coloring";
            if ((sk ^ sl) != c.ceiling && (sk ^ sl) != c.floor)
                return "O4 requires lambda(s_k) + lambda(s_l) in {lambda(c), lambda(f)}";
            return {};
        case OpKind::O5:
            if (trivial) return "O5 requires a nontrivial coloring";
            if ((sk ^ sl) != lam0) return "O5 requires lambda(s_k) + lambda(s_l) = lambda_0";
            return {};
    }
    return "unknown op kind";
}

bool is_legal(const Coloring &c, const SequenceOp &op) {
    return op_legality_error(c, op).empty();
}

Coloring apply(const Coloring &c, const SequenceOp &op) {
    std::string err = op_legality_error(c, op);
    if (!err.empty())
        throw std::invalid_argument(std::string(op_kind_name(op.kind)) + " on span (" +
                                    std::to_string(op.k) + "," + std::to_string(op.l) +
                                    "): " + err);
    Gl3 t = op_substitution(c, op);
    Coloring out = c;
    for (int i = op.k; i <= op.l; ++i)
        out.sides[static_cast<std::size_t>(i - 1)] = t(c.side(i));
    if (good_twist_info(op.kind).reflects)
        std::reverse(out.sides.begin() + (op.k - 1), out.sides.begin() + op.l);
    // Endpoint colors are preserved and the substitution fixes the top and
    // bottom colors, so validity is structural; assert it anyway.
    assert(out.side(op.k) == c.side(op.k) && out.side(op.l) == c.side(op.l));
    assert(is_valid(out));
    return out;
}

std::vector<SequenceOp> legal_ops(const Coloring &c) {
    std::vector<SequenceOp> ops;
    for (int kind = 0; kind < kOpKindCount; ++kind)
        for (int k = 1; k < c.m; ++k)
            for (int l = k + 1; l <= c.m; ++l) {
                SequenceOp op{static_cast<OpKind>(kind), k, l};
                if (is_legal(c, op)) ops.push_back(op);
            }
    return ops;
}

// --- Free moves and traces ---------------------------------------------------

Move Move::from_op(SequenceOp o) {
    Move mv;
    mv.type = Type::Op;
    mv.op = o;
    return mv;
}

Move Move::rotation(int r) {
    Move mv;
    mv.type = Type::Rot;
    mv.rot = r;
    return mv;
}

Move Move::dj_move(Color i1, Color i2, Color i3) {
    Move mv;
    mv.type = Type::Dj;
    mv.dj = {i1, i2, i3};
    return mv;
}

Coloring apply_move(const Coloring &c, const Move &mv) {
    switch (mv.type) {
        case Move::Type::Op:
            return apply(c, mv.op);
        case Move::Type::Rot: {
            Coloring out = c;
            for (int i = 1; i <= c.m; ++i)
                out.sides[static_cast<std::size_t>(i - 1)] = c.side(i + mv.rot);
            return out;
        }
        case Move::Type::Dj:
            return apply_gl(c, gl3_from_images(mv.dj[0], mv.dj[1], mv.dj[2]));
    }
    throw std::logic_error("unreachable move type");
}

Coloring replay(const Coloring &c, const std::vector<Move> &trace) {
    Coloring cur = c;
    for (const Move &mv : trace) cur = apply_move(cur, mv);
    return cur;
}

std::string format_trace(const std::vector<Move> &trace) {
    std::ostringstream os;
    for (const Move &mv : trace) {
        switch (mv.type) {
            case Move::Type::Op:
                os << op_kind_name(mv.op.kind) << " k=" << mv.op.k << " l=" << mv.op.l;
                break;
            case Move::Type::Rot:
                os << "rot " << mv.rot;
                break;
            case Move::Type::Dj:
                os << "dj " << int(mv.dj[0]) << int(mv.dj[1]) << int(mv.dj[2]);
                break;
        }
        os << '\n';
    }
    return os.str();
}

std::optional<std::vector<Move>> parse_trace(const std::string &text, std::string *error) {
    auto fail = [&](const std::string &msg) -> std::optional<std::vector<Move>> {
        if (error) *error = msg;
        return std::nullopt;
    };
    std::vector<Move> trace;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        std::string where = "line " + std::to_string(lineno) + ": ";
        if (head == "rot") {
            int r;
            if (!(ls >> r)) return fail(where + "expected an integer after 'rot'");
            trace.push_back(Move::rotation(r));
        } else if (head == "dj") {
            std::string digits;
            if (!(ls >> digits) || digits.size() != 3 ||
                digits.find_first_not_of("1234567") != std::string::npos)
                return fail(where + "expected three digits 1..7 after 'dj'");
            Color i1 = static_cast<Color>(digits[0] - '0');
            Color i2 = static_cast<Color>(digits[1] - '0');
            Color i3 = static_cast<Color>(digits[2] - '0');
            if (!independent3(i1, i2, i3)) return fail(where + "dj images are not independent");
            trace.push_back(Move::dj_move(i1, i2, i3));
        } else if (auto kind = op_kind_from_name(head)) {
            std::string ka, la;
            if (!(ls >> ka >> la) || ka.rfind("k=", 0) != 0 || la.rfind("l=", 0) != 0)
                return fail(where + "expected 'k=<int> l=<int>' after op name");
            try {
                SequenceOp op{*kind, std::stoi(ka.substr(2)), std::stoi(la.substr(2))};
                trace.push_back(Move::from_op(op));
            } catch (const std::exception &) {
                return fail(where + "bad integer in op span");
            }
        } else {
            return fail(where + "unknown move '" + head + "'");
        }
        std::string rest;
        if (ls >> rest) return fail(where + "trailing text '" + rest + "'");
    }
    return trace;
}

// --- Canonical classes -------------------------------------------------------

std::string CanonicalClass::label() const {
    switch (kind) {
        case Kind::C1: return "C1";
        case Kind::C2: return "C2";
        case Kind::C3: return "C3";
        case Kind::C4: return "C4";
        case Kind::C5: return "C5";
        case Kind::C6: return "C6";
        case Kind::C7: return "C7";
        case Kind::C8: return "C8";
        case Kind::C9: return "C9";
        case Kind::C10: return "C10";
        case Kind::C3Prism: return "C3_prism";
        case Kind::C4_1: return "C4_1";
        case Kind::C4_2: return "C4_2";
        case Kind::CStar:
            return "CStar(" + std::to_string(n) + "," + std::to_string(mm) + ")";
    }
    return "?";
}

namespace {

Coloring make_trivial_sequence(int m, std::vector<Color> prefix) {
    Coloring c;
    c.m = m;
    c.ceiling = c.floor = 1;
    c.sides = std::move(prefix);
    while (static_cast<int>(c.sides.size()) < m) {
        c.sides.push_back(2);
        c.sides.push_back(4);
    }
    if (static_cast<int>(c.sides.size()) != m)
        throw std::invalid_argument("canonical sequence: m has the wrong parity for the class");
    if (!is_valid(c)) throw std::logic_error("canonical sequence is not a valid coloring");
    return c;
}

}  // namespace

Coloring canonical_sequence(const CanonicalClass &cls, int m) {
    using K = CanonicalClass::Kind;
    auto need = [&](bool ok, const char *msg) {
        if (!ok) throw std::invalid_argument(std::string("canonical sequence: ") + msg);
    };
    switch (cls.kind) {
        case K::C1:
            need(m >= 4 && m % 2 == 0, "C1 requires even m >= 4");
            return make_trivial_sequence(m, {});
        case K::C2:
            need(m >= 4 && m % 2 == 0, "C2 requires even m >= 4");
            return make_trivial_sequence(m, {2, 6});
        case K::C3:
            need(m >= 3 && m % 2 == 1, "C3 requires odd m >= 3");
            return make_trivial_sequence(m, {2, 6, 4});
        case K::C4:
            need(m >= 4 && m % 2 == 0, "C4 requires even m >= 4");
            return make_trivial_sequence(m, {3, 4});
        case K::C5:
            need(m >= 5 && m % 2 == 1, "C5 requires odd m >= 5");
            return make_trivial_sequence(m, {7});
        case K::C6:
            need(m >= 5 && m % 2 == 1, "C6 requires odd m >= 5");
            return make_trivial_sequence(m, {7, 3, 4});
        case K::C7:
            need(m >= 5 && m % 2 == 1, "C7 requires odd m >= 5");
            return make_trivial_sequence(m, {6, 3, 4});
        case K::C8:
            need(m >= 6 && m % 2 == 0, "C8 requires even m >= 6");
            return make_trivial_sequence(m, {3, 6, 3, 4});
        case K::C9:
            need(m >= 6 && m % 2 == 0, "C9 requires even m >= 6");
            return make_trivial_sequence(m, {2, 6, 3, 4});
        case K::C10:
            need(m >= 6 && m % 2 == 0, "C10 requires even m >= 6");
            return make_trivial_sequence(m, {2, 7});
        case K::C3Prism:
            need(m == 3, "C3_prism requires m = 3");
            return make_trivial_sequence(3, {7, 2, 4});
        case K::C4_1:
            need(m == 4, "C4_1 requires m = 4");
            return make_trivial_sequence(4, {2, 6, 3, 4});
        case K::C4_2:
            need(m == 4, "C4_2 requires m = 4");
            return make_trivial_sequence(4, {2, 7, 2, 4});
        case K::CStar: {
            need(m > 3, "CStar requires m > 3");
            need(cls.mm % 2 == 0 && cls.mm >= 0, "CStar requires even m_lambda");
            need(cls.mm <= cls.n && 2 * cls.n <= m, "CStar requires m_lambda <= n_lambda <= m/2");
            need(m % 2 == 0 || cls.n > 0, "CStar requires n_lambda > 0 for odd m");
            Coloring c;
            c.m = m;
            c.ceiling = 1;
            c.floor = 3;
            for (int i = 1; i <= cls.n; ++i) {
                c.sides.push_back(2);
                c.sides.push_back(i <= cls.mm && i % 2 == 1 ? 5 : 4);
            }
            for (int j = 1; j <= m - 2 * cls.n; ++j) c.sides.push_back(j % 2 == 1 ? 6 : 4);
            if (!is_valid(c)) throw std::logic_error("canonical sequence is not a valid coloring");
            return c;
        }
    }
    throw std::logic_error("unreachable class kind");
}

std::vector<std::pair<int, int>> realizable_nm_pairs(int m) {
    std::vector<std::pair<int, int>> out;
    if (m <= 3) return out;
    for (int n = (m % 2 == 1) ? 1 : 0; 2 * n <= m; ++n)
        for (int mm = 0; mm <= n; mm += 2) out.emplace_back(n, mm);
    return out;
}

std::vector<CanonicalClass> canonical_classes_for_m(int m) {
    using K = CanonicalClass::Kind;
    if (m < 3) throw std::domain_error("canonical classes: m must be >= 3");
    std::vector<CanonicalClass> out;
    auto add = [&](K k) { out.push_back(CanonicalClass{k, 0, 0}); };
    if (m == 3) {
        add(K::C3);
        add(K::C3Prism);
    } else if (m == 4) {
        add(K::C1);
        add(K::C2);
        add(K::C4);
        add(K::C4_1);
        add(K::C4_2);
    } else if (m % 2 == 1) {
        add(K::C3);
        add(K::C5);
        add(K::C6);
        add(K::C7);
    } else {
        add(K::C1);
        add(K::C2);
        add(K::C4);
        add(K::C8);
        add(K::C9);
        add(K::C10);
    }
    for (auto [n, mm] : realizable_nm_pairs(m))
        out.push_back(CanonicalClass{K::CStar, n, mm});
    return out;
}

// --- Constructive reduction --------------------------------------------------

namespace {

// Mutable coloring plus the trace of moves that produced it.
struct Ctx {
    Coloring cur;
    std::vector<Move> trace;

    int m() const { return cur.m; }
    Color side(int i) const { return cur.side(i); }

    void op(OpKind k, int kk, int ll) {
        SequenceOp o{k, kk, ll};
        cur = apply(cur, o);
        trace.push_back(Move::from_op(o));
    }
    void rot(int r) {
        r %= m();
        if (r < 0) r += m();
        if (r == 0) return;
        Move mv = Move::rotation(r);
        cur = apply_move(cur, mv);
        trace.push_back(mv);
    }
    void dj(Color i1, Color i2, Color i3) {
        if (i1 == 1 && i2 == 2 && i3 == 4) return;
        Move mv = Move::dj_move(i1, i2, i3);
        cur = apply_move(cur, mv);
        trace.push_back(mv);
    }
    void dj_gl(const Gl3 &g) {
        auto b = g.basis_images();
        dj(b[0], b[1], b[2]);
    }
};

inline int coset_of(Color x) { return x >> 1; }  // relative to lambda(c) = e1
inline int bar_of(Color x) { return x & 1; }

// Basis change sending the common top/bottom color to e1.
void dj_fix_ceiling(Ctx &t) {
    Color c = t.cur.ceiling;
    if (c == 1) return;
    for (Color a = 1; a <= 7; ++a)
        for (Color b = 1; b <= 7; ++b)
            if (independent3(c, a, b)) {
                t.dj_gl(gl3_inverse(gl3_from_images(c, a, b)));
                return;
            }
    throw std::logic_error("no basis through ceiling color");
}

// Basis change fixing e1 sending coset ca to {2,3} and coset cb to {4,5}
// (cosets of <e1> indexed 1..3; bars are preserved relative to the unbarred
// representative 2*coset).
void dj_relabel_cosets(Ctx &t, int ca, int cb) {
    if (ca == 1 && cb == 2) return;
    t.dj_gl(gl3_inverse(gl3_from_images(1, static_cast<Color>(2 * ca),
                                        static_cast<Color>(2 * cb))));
}

std::vector<int> coset_positions(const Ctx &t, int coset) {
    std::vector<int> out;
    for (int i = 1; i <= t.m(); ++i)
        if (coset_of(t.side(i)) == coset) out.push_back(i);
    return out;
}

// Reduces the number of sides in the gamma coset {6,7} to one. Requires
// ceiling = floor = e1 and an initial gamma count of at most m/3, which the
// rarest-coset relabeling guarantees.
void reduce_gamma(Ctx &t) {
    while (true) {
        std::vector<int> g = coset_positions(t, 3);
        int cnt = static_cast<int>(g.size());
        if (cnt <= 1) return;
        // Candidate pairs of cyclically consecutive gammas, nearest first.
        struct Cand {
            int gap, p;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < cnt; ++i) {
            int p = g[static_cast<std::size_t>(i)];
            int q = g[static_cast<std::size_t>((i + 1) % cnt)];
            cands.push_back({((q - p) % t.m() + t.m()) % t.m(), p});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand &a, const Cand &b) { return a.gap != b.gap ? a.gap < b.gap : a.p < b.p; });
        bool merged = false;
        for (const Cand &cand : cands) {
            Ctx s = t;
            s.rot(cand.p - 1);  // first gamma of the pair at position 1
            if (cand.gap >= 3) {
                // Bring the second gamma next to the first: reflect the span
                // from position 2 to one past it, choosing the op by the
                // relation between the two span endpoint colors.
                int r = cand.gap - 1;
                Color x1 = s.side(2), y = s.side(r + 3);
                if (x1 == y)
                    s.op(OpKind::O1, 2, r + 3);
                else if (x1 == (y ^ 1))
                    s.op(OpKind::O22, 2, r + 3);
                else
                    s.op(OpKind::O32, 2, r + 3);
            }
            // Gammas at positions 1 and 3: merge them, sending the interior
            // gamma into another coset.
            if (coset_of(s.side(4)) != 3 && coset_of(s.side(4)) != coset_of(s.side(2)))
                s.op(OpKind::O32, 1, 4);
            else if (s.m() >= 5 && coset_of(s.side(5)) != 3)
                s.op(OpKind::O32, 1, 5);
            else
                continue;
            t = s;
            merged = true;
            break;
        }
        if (!merged) throw std::logic_error("gamma reduction found no reducible pair");
    }
}

// View of the bar bits over alternating A/B side positions. apos/bpos list
// the 1-based side positions of the A-slots and B-slots; the layouts used
// always satisfy bpos[i] = apos[i] + 1.
struct WordView {
    Ctx *t;
    std::vector<int> apos, bpos;

    int la() const { return static_cast<int>(apos.size()); }
    int lb() const { return static_cast<int>(bpos.size()); }
    int u(int i) const { return bar_of(t->side(apos[static_cast<std::size_t>(i - 1)])); }
    int w(int i) const { return bar_of(t->side(bpos[static_cast<std::size_t>(i - 1)])); }
    void opA(OpKind k, int i, int j) {
        t->op(k, apos[static_cast<std::size_t>(i - 1)], apos[static_cast<std::size_t>(j - 1)]);
    }
    void opB(OpKind k, int i, int j) {
        t->op(k, bpos[static_cast<std::size_t>(i - 1)], bpos[static_cast<std::size_t>(j - 1)]);
    }
    bool u_constant() const {
        for (int i = 2; i <= la(); ++i)
            if (u(i) != u(1)) return false;
        return true;
    }
};

// Makes the u word non-constant by flipping one interior u bit across a w
// boundary. Returns false if w is constant too.
bool ensure_u_nonconstant(WordView &v) {
    if (!v.u_constant()) return true;
    for (int i = 1; i < v.lb(); ++i)
        if (v.w(i) != v.w(i + 1)) {
            v.opB(OpKind::O21, i, i + 1);
            return true;
        }
    return false;
}

// Flips w_t alone (t + 1 <= la required) using one or two O21 ops with
// A-slot endpoints. Requires u non-constant; leaves u untouched.
void flip_w_single(WordView &v, int t) {
    if (v.u(t) != v.u(t + 1)) {
        v.opA(OpKind::O21, t, t + 1);
        return;
    }
    int s = 0;
    for (int i = 1; i <= v.la(); ++i)
        if (v.u(i) != v.u(t)) {
            s = i;
            break;
        }
    if (s == 0) throw std::logic_error("flip_w_single requires non-constant u");
    if (s < t) {
        v.opA(OpKind::O21, s, t + 1);
        v.opA(OpKind::O21, s, t);
    } else {
        v.opA(OpKind::O21, t, s);
        v.opA(OpKind::O21, t + 1, s);
    }
}

// With w == 0 everywhere, clears u to (u_1, 0, ..., 0) -- or, when the last
// slot is frozen, to (u_1, 0, ..., 0, u_la) -- using only moves that keep w
// at zero. Returns false when stuck (the caller treats that as "wrong
// normalization variant").
bool phase_u_clear(WordView &v, bool last_frozen) {
    int hi = last_frozen ? v.la() - 1 : v.la();
    for (int guard = 0; guard < 4 * v.la() + 8; ++guard) {
        int first_one = 0;
        for (int i = 2; i <= hi; ++i)
            if (v.u(i) == 1) {
                first_one = i;
                break;
            }
        if (first_one == 0) return true;
        if (v.u(1) == 1) {
            if (v.u(2) == 1) {
                int p = 2;
                while (p < v.la() && v.u(p + 1) == 1) ++p;
                if (p == v.la()) return false;  // all ones
                v.opA(OpKind::O22, 1, p + 1);   // (1^p, 0) -> (1, 0^p)
            } else {
                if (first_one > v.lb()) return false;
                v.opB(OpKind::O1, 1, first_one);  // reverse u[2..b]: 1 to slot 2
            }
        } else {
            int a = first_one, p = a;
            while (p < v.la() && v.u(p + 1) == 1) ++p;
            if (p > a) {
                v.opA(OpKind::O22, a - 1, p);  // (0, 1^t) -> (0^t, 1)
            } else {
                int b = 0;
                for (int i = p + 1; i <= v.la(); ++i)
                    if (v.u(i) == 1) {
                        b = i;
                        break;
                    }
                if (b == 0) return false;  // single stray one
                if (b > v.lb()) return false;
                v.opB(OpKind::O1, a, b);  // bring the next one adjacent
            }
        }
    }
    throw std::logic_error("u clearing did not terminate");
}

// --- Trivial branches --------------------------------------------------------

struct Fingerprint {
    std::size_t delta;
    std::pair<std::uint64_t, std::uint64_t> b_bar;
    bool orientable;
    std::size_t k_cap_h2;

    bool operator==(const Fingerprint &o) const = default;
};

Fingerprint fingerprint(const Coloring &c) {
    CohomologyRing r(c, 3);
    InvariantReport rep = invariant_report(r);
    return {rep.delta, rep.b_bar, is_orientable(c), rep.k_cap_h2_dim};
}

CanonicalClass trivial_target(const Coloring &c) {
    using K = CanonicalClass::Kind;
    auto cls = [](K k) { return CanonicalClass{k, 0, 0}; };
    bool two = is_2_independent(c);
    bool star = has_property_star(c);
    int m = c.m;
    if (m == 3) return cls(two ? K::C3 : K::C3Prism);
    if (two) return cls(!star ? K::C1 : (m % 2 == 1 ? K::C3 : K::C2));
    if (!star) return cls(K::C4);
    std::vector<K> cands;
    if (m == 4)
        cands = {K::C4_1, K::C4_2};
    else if (m % 2 == 1)
        cands = {K::C5, K::C6, K::C7};
    else
        cands = {K::C8, K::C9, K::C10};
    Fingerprint fp = fingerprint(c);
    std::vector<K> hits;
    for (K k : cands)
        if (fingerprint(canonical_sequence(cls(k), m)) == fp) hits.push_back(k);
    if (hits.size() != 1)
        throw std::logic_error("invariants match " + std::to_string(hits.size()) +
                               " canonical classes instead of one");
    return cls(hits[0]);
}

// m = 3: both classes are reached by a single basis change.
void finish_m3(Ctx &t, bool two) {
    if (two)  // s2 = s1 + s3, so (s1, s3) -> (2, 4) gives (2, 6, 4)
        t.dj_gl(gl3_inverse(gl3_from_images(1, t.side(1), t.side(3))));
    else  // s1 = e1 + s2 + s3, so (s2, s3) -> (2, 4) gives (7, 2, 4)
        t.dj_gl(gl3_inverse(gl3_from_images(1, t.side(2), t.side(3))));
}

// 2-independent, after gamma reduction when the coloring has all three
// cosets: a pure relabeling finishes.
void finish_two_indep(Ctx &t, bool star) {
    if (!star) {
        t.dj_gl(gl3_inverse(gl3_from_images(1, t.side(1), t.side(2))));
        return;
    }
    std::vector<int> g = coset_positions(t, 3);
    t.rot(g.at(0) - 2);  // lone third letter to position 2
    Color x = t.side(1);
    t.dj_gl(gl3_inverse(gl3_from_images(1, x, static_cast<Color>(x ^ t.side(2)))));
}

// 3-independent without the third coset: zero the B bars, then collapse the
// A bars to a single one at the front.
void finish_c4(Ctx &t) {
    int m = t.m(), L = m / 2;
    dj_relabel_cosets(t, coset_of(t.side(1)), coset_of(t.side(2)));
    WordView v{&t, {}, {}};
    for (int i = 1; i <= L; ++i) {
        v.apos.push_back(2 * i - 1);
        v.bpos.push_back(2 * i);
    }
    if (!ensure_u_nonconstant(v))
        throw std::logic_error("constant bars contradict 3-independence");
    for (int i = 1; i < L; ++i)
        if (v.w(i)) flip_w_single(v, i);
    if (v.w(L)) {  // the wrap slot: shift it into reach, then flip
        t.rot(2);
        flip_w_single(v, L - 1);
    }
    int start = 0;
    for (int i = 1; i <= L; ++i)
        if (v.u(i) == 1 && v.u(i == 1 ? L : i - 1) == 0) {
            start = i;
            break;
        }
    if (start == 0) throw std::logic_error("no bar boundary in a non-constant word");
    t.rot(2 * (start - 1));
    if (!phase_u_clear(v, false)) throw std::logic_error("A-bar collapse got stuck");
}

// --- 3-independent with all three cosets -------------------------------------

struct StarLayout {
    WordView v;
    bool modd;
};

StarLayout star_layout(Ctx &t) {
    StarLayout s{{&t, {}, {}}, t.m() % 2 == 1};
    int m = t.m();
    for (int p = 2; p <= (s.modd ? m - 1 : m); p += 2) s.v.apos.push_back(p);
    for (int p = 3; p <= (s.modd ? m : m - 1); p += 2) s.v.bpos.push_back(p);
    return s;
}

// Rotate the lone gamma to position 1 and send the coset of side 2 to {2,3}
// and the coset of side 3 to {4,5}.
void star_normalize(Ctx &t) {
    std::vector<int> g = coset_positions(t, 3);
    if (g.size() != 1) throw std::logic_error("expected exactly one gamma side");
    t.rot(g[0] - 1);
    dj_relabel_cosets(t, coset_of(t.side(2)), coset_of(t.side(3)));
}

// Move the gamma one step clockwise past its right neighbor, renormalizing.
void star_hop(Ctx &t) {
    t.rot(t.m() - 1);  // gamma to position 2
    Color a = t.side(1), b = t.side(4);
    if (coset_of(a) != coset_of(b))
        t.op(OpKind::O32, 1, 4);
    else if (a == b)
        t.op(OpKind::O1, 1, 4);
    else
        t.op(OpKind::O22, 1, 4);
    t.rot(2);  // gamma from position 3 back to 1
    dj_relabel_cosets(t, coset_of(t.side(2)), coset_of(t.side(3)));
}

// Reverse the whole word (positions 2..m), renormalizing cosets.
void star_mirror(Ctx &t) {
    Color a = t.side(2), b = t.side(t.m());
    if (coset_of(a) != coset_of(b))
        t.op(OpKind::O32, 2, t.m());
    else if (a == b)
        t.op(OpKind::O1, 2, t.m());
    else
        t.op(OpKind::O22, 2, t.m());
    dj_relabel_cosets(t, coset_of(t.side(2)), coset_of(t.side(3)));
}

// Deterministic finish for one normalization variant: fix the frozen bar
// slots by global basis changes, zero the free w slots, clear the free u
// slots, then adjust the gamma flavor if a flavor move is available.
bool star_attempt(Ctx &t, const std::vector<int> &ustar, int gstar) {
    StarLayout lay = star_layout(t);
    WordView &v = lay.v;
    int la = v.la(), lb = v.lb();
    if (lay.modd) {
        if (v.w(lb) == 1) t.dj(1, 2, 5);
        if (v.u(1) != ustar.front()) t.dj(1, 3, 4);
    } else {
        bool first_ok = v.u(1) == ustar.front(), last_ok = v.u(la) == ustar.back();
        if (!first_ok && !last_ok)
            t.dj(1, 3, 4);
        else if (first_ok != last_ok)
            return false;
        bool all_w1 = true;
        for (int i = 1; i <= lb; ++i) all_w1 = all_w1 && v.w(i) == 1;
        if (all_w1 && v.u_constant() && lb > 0) t.dj(1, 2, 5);
    }
    int whi = lay.modd ? lb - 1 : lb;
    for (int i = 1; i <= whi; ++i)
        if (v.w(i)) {
            if (!ensure_u_nonconstant(v)) return false;
            flip_w_single(v, i);
        }
    if (!phase_u_clear(v, !lay.modd)) return false;
    int g = bar_of(t.side(1));
    if (g != gstar) {
        if (lay.modd || v.u(1) == v.u(la)) return false;
        t.rot(t.m() - 1);
        t.op(OpKind::O22, 1, 3);  // flips only the gamma flavor
        t.rot(1);
    }
    return true;
}

void finish_star3(Ctx &t, const CanonicalClass &target) {
    using K = CanonicalClass::Kind;
    int m = t.m();
    bool modd = m % 2 == 1;
    star_normalize(t);
    int la = static_cast<int>(star_layout(t).v.apos.size());
    std::vector<int> ustar(static_cast<std::size_t>(la), 0);
    int gstar = 0;
    switch (target.kind) {
        case K::C5: gstar = 1; break;
        case K::C6: ustar[0] = 1; gstar = 1; break;
        case K::C7: ustar[0] = 1; gstar = 0; break;
        case K::C8: ustar[0] = 1; ustar.back() = 1; gstar = 0; break;
        case K::C9:
        case K::C4_1: ustar[0] = 1; gstar = 0; break;
        case K::C10:
        case K::C4_2: gstar = 1; break;
        default: throw std::logic_error("unexpected target for the starred branch");
    }
    Coloring want = canonical_sequence(target, m);
    for (int hops = 0; hops <= m - 2; ++hops) {
        for (int mir = 0; mir < 2; ++mir) {
            Ctx s = t;
            for (int i = 0; i < hops; ++i) star_hop(s);
            if (mir) star_mirror(s);
            if (!star_attempt(s, ustar, gstar)) continue;
            if (!modd) s.rot(m - 1);  // gamma to position 2, the printed rooting
            if (s.cur == want) {
                t = s;
                return;
            }
        }
    }
    throw std::logic_error("starred 3-independent reduction missed its target");
}

}  // namespace

CanonicalResult canonical_form_trivial(const Coloring &c) {
    if (!is_valid(c)) throw std::invalid_argument("canonical form: invalid coloring");
    if (!is_trivial(c)) throw std::invalid_argument("canonical form: coloring is not trivial");
    CanonicalClass target = trivial_target(c);
    bool two = is_2_independent(c);
    bool star = has_property_star(c);
    Ctx t{c, {}};
    dj_fix_ceiling(t);
    if (c.m == 3) {
        finish_m3(t, two);
    } else if (!star) {
        if (two)
            finish_two_indep(t, false);
        else
            finish_c4(t);
    } else {
        // All three cosets appear: send the rarest to {6,7} and thin it out.
        int count[4] = {0, 0, 0, 0};
        for (int i = 1; i <= c.m; ++i) ++count[coset_of(t.side(i))];
        int rare = 1;
        for (int k = 2; k <= 3; ++k)
            if (count[k] < count[rare]) rare = k;
        int o1 = rare == 1 ? 2 : 1;
        int o2 = rare == 3 ? 2 : 3;
        dj_relabel_cosets(t, o1, o2);
        reduce_gamma(t);
        if (two)
            finish_two_indep(t, true);
        else
            finish_star3(t, target);
    }
    if (!(t.cur == canonical_sequence(target, c.m)))
        throw std::logic_error("trivial reduction did not reach " + target.label());
    return {target, std::move(t.trace)};
}

// --- Nontrivial reduction ----------------------------------------------------

namespace {

// Works on a nontrivial coloring normalized to ceiling = e1, floor = e1+e2
// (so the span class is 2 and the marker sides carry exactly the color 2),
// rotated so that a marker sits at position 1. Gathers the markers to the odd
// positions 1, 3, ..., 2n-1, then shapes the even-position word to match the
// target. Returns false when this rooting has the wrong wrap parity.
bool nontrivial_finish(Ctx &t, int n, int mm, const Coloring &want) {
    int m = t.m();
    for (int k = 2; k <= n; ++k) {
        int prev = 2 * k - 3;
        int l = 0;
        for (int i = prev + 1; i <= m; ++i)
            if (t.side(i) == 2) {
                l = i;
                break;
            }
        if (l == 0) throw std::logic_error("marker side went missing during gathering");
        if (l == 2 * k - 1) continue;
        // Reflect the span between the two markers; the op kind is dictated
        // by the relation of the two span endpoint colors.
        Color d = static_cast<Color>(t.side(prev + 1) ^ t.side(l + 1));
        if (d == 0)
            t.op(OpKind::O31, prev + 1, l + 1);
        else if (d == 2)
            t.op(OpKind::O5, prev + 1, l + 1);
        else
            t.op(OpKind::O4, prev + 1, l + 1);
    }
    auto aval = [&](int j) { return t.side(2 * j); };
    // The low bit of the even-position letters forms a word whose change
    // positions the window ops reflect within any interval; the change count
    // between positions 1 and n is this rooting's invariant.
    auto changes = [&]() {
        std::vector<int> cs;
        for (int j = 1; j < n; ++j)
            if (((aval(j) ^ aval(j + 1)) & 1) != 0) cs.push_back(j);
        return cs;
    };
    int want_changes = mm > 0 ? mm - 1 : 0;
    if (static_cast<int>(changes().size()) != want_changes) return false;
    int u1_target = mm > 0 ? 1 : 0;
    if ((aval(1) & 1) != u1_target) t.dj(1, 2, 5);  // flip every low bit
    for (int k = 1; k <= want_changes; ++k) {
        int ck = changes()[static_cast<std::size_t>(k - 1)];
        if (ck == k) continue;
        int i = 2 * k, j = 2 * (ck + 1);
        Color d = static_cast<Color>(t.side(i) ^ t.side(j));
        if (d == 0)
            t.op(OpKind::O31, i, j);
        else if (d == 2)
            t.op(OpKind::O5, i, j);
        else
            t.op(OpKind::O4, i, j);
    }
    // High bit: clear the last slot globally, the rest one at a time with
    // marker-endpoint windows.
    if ((aval(n) >> 1) & 1) t.dj(1, 2, 6);
    for (int j = 1; j < n; ++j)
        if ((aval(j) >> 1) & 1) t.op(OpKind::NO21, 2 * j - 1, 2 * j + 1);
    // The tail past position 2n is forced by validity and needs no work.
    return t.cur == want;
}

}  // namespace

CanonicalResult canonical_form_nontrivial(const Coloring &c) {
    if (!is_valid(c)) throw std::invalid_argument("canonical form: invalid coloring");
    if (is_trivial(c)) throw std::invalid_argument("canonical form: coloring is trivial");
    if (c.m <= 3)
        throw std::invalid_argument("nontrivial canonical form requires m > 3");
    NontrivialStats st = nontrivial_stats(c);
    CanonicalClass target{CanonicalClass::Kind::CStar, st.n, st.mm};
    Coloring want = canonical_sequence(target, c.m);
    Ctx base{c, {}};
    Color lc = c.ceiling;
    Color l0 = static_cast<Color>(lc ^ c.floor);
    base.dj_gl(gl3_inverse(gl3_from_images(lc, l0, smallest_outside_span(lc, l0))));
    if (st.n == 0) {
        // Sides alternate within one pair {4,6} or {5,7}.
        Ctx t = base;
        if (t.side(1) == 5 || t.side(1) == 7) t.dj(1, 2, 7);  // 5 -> 6, 7 -> 4
        t.rot(t.side(1) == 6 ? 0 : 1);
        if (!(t.cur == want))
            throw std::logic_error("markerless reduction did not reach " + target.label());
        return {target, std::move(t.trace)};
    }
    std::vector<int> npos;
    for (int i = 1; i <= c.m; ++i)
        if (base.side(i) == 2) npos.push_back(i);
    for (int s : npos) {
        Ctx t = base;
        t.rot(s - 1);
        if (nontrivial_finish(t, st.n, st.mm, want)) return {target, std::move(t.trace)};
    }
    throw std::logic_error("nontrivial reduction failed from every rooting");
}

CanonicalResult canonical_form(const Coloring &c) {
    if (!is_valid(c)) throw std::invalid_argument("canonical form: invalid coloring");
    if (is_trivial(c)) return canonical_form_trivial(c);
    if (c.m == 3)
        throw std::invalid_argument("m = 3 admits no nontrivial canonical form");
    return canonical_form_nontrivial(c);
}

// --- Search oracle ----------------------------------------------------------

std::string labeling_canonical_key(const Coloring &c) {
    std::string best;
    for (const Gl3 &g : gl3_all()) {
        Coloring gc = apply_gl(c, g);
        for (int r = 0; r < c.m; ++r) {
            std::string k = apply_move(gc, Move::rotation(r)).key();
            if (best.empty() || k < best) best = std::move(k);
        }
    }
    return best;
}

std::vector<std::string> sector_class_keys(const Coloring &seed, std::size_t budget) {
    if (!is_valid(seed)) throw std::invalid_argument("class sweep requires a valid coloring");
    std::unordered_set<std::string> seen{labeling_canonical_key(seed)};
    std::deque<Coloring> frontier{seed};
    std::size_t expanded = 0;
    while (!frontier.empty()) {
        if (expanded >= budget)
            throw std::runtime_error("class sweep exhausted its state budget");
        Coloring cur = frontier.front();
        frontier.pop_front();
        ++expanded;
        for (int r = 0; r < cur.m; ++r) {
            Coloring rc = apply_move(cur, Move::rotation(r));
            for (const SequenceOp &op : legal_ops(rc)) {
                Coloring nxt = apply(rc, op);
                std::string k = labeling_canonical_key(nxt);
                if (seen.insert(std::move(k)).second) frontier.push_back(std::move(nxt));
            }
        }
    }
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

OracleResult bfs_equivalence_oracle(const Coloring &a, const Coloring &b,
                                    std::size_t budget) {
    if (!is_valid(a) || !is_valid(b))
        throw std::invalid_argument("oracle requires valid colorings");
    if (a.m != b.m) return OracleResult::NotReached;
    std::string goal = labeling_canonical_key(b);
    std::string start = labeling_canonical_key(a);
    if (start == goal) return OracleResult::Reached;
    std::unordered_set<std::string> seen{start};
    std::deque<Coloring> frontier{a};
    std::size_t expanded = 0;
    while (!frontier.empty()) {
        if (expanded >= budget) return OracleResult::BudgetExhausted;
        Coloring cur = frontier.front();
        frontier.pop_front();
        ++expanded;
        // Ops act on non-wrapping windows only, so expand every rotation.
        for (int r = 0; r < cur.m; ++r) {
            Coloring rc = apply_move(cur, Move::rotation(r));
            for (const SequenceOp &op : legal_ops(rc)) {
                Coloring nxt = apply(rc, op);
                std::string k = labeling_canonical_key(nxt);
                if (k == goal) return OracleResult::Reached;
                if (seen.insert(std::move(k)).second) frontier.push_back(std::move(nxt));
            }
        }
    }
    return OracleResult::NotReached;
}

}  // namespace smallcover
