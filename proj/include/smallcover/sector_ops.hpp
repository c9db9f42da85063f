// The eight sequence-rewriting operations on colored prisms, the free moves
// (cyclic rotation, basis change), canonical coloring sequences, constructive
// reduction to canonical form, and an exhaustive-search equivalence oracle.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/coloring.hpp"

namespace smallcover {

enum class OpKind { O1, O21, O22, O32, NO21, O31, O4, O5 };

const char *op_kind_name(OpKind k);
std::optional<OpKind> op_kind_from_name(const std::string &name);

// Static documentation metadata: which rectangular sector realizes the op and
// the (psi, rho, v0) columns of its twist. v0 has no combinatorial effect and
// is carried for audit only.
struct GoodTwistInfo {
    const char *sector;  // e.g. "S(2_1)"
    const char *psi;     // reflection matrix, e.g. "diag(1,-1)"
    const char *rho;     // images of e1,e2,e3 as digit triple, e.g. "126"
    const char *v0;      // as a digit, "0" for zero
    bool reflects;       // whether the op reverses the acted segment
};
const GoodTwistInfo &good_twist_info(OpKind k);

// One rewriting operation acting on the span s_k..s_l (1 <= k < l <= m,
// no cyclic wrap; wrapping windows are reached via the free rotation move).
struct SequenceOp {
    OpKind kind;
    int k = 0;
    int l = 0;
    bool operator==(const SequenceOp &o) const = default;
};

// Empty string when legal, otherwise the violated condition.
std::string op_legality_error(const Coloring &c, const SequenceOp &op);
bool is_legal(const Coloring &c, const SequenceOp &op);

// Applies a legal op; throws std::invalid_argument naming the violated
// condition otherwise. The result is always a valid coloring.
Coloring apply(const Coloring &c, const SequenceOp &op);

// All legal (kind, k, l) triples on c, in deterministic order.
std::vector<SequenceOp> legal_ops(const Coloring &c);

// --- Free moves and op traces ----------------------------------------------

// A trace step: either a sequence op, a cyclic rotation (`rot r` relabels so
// that new s_i = old s_{i+r}), or a basis change (`dj abc` = images of
// e1,e2,e3 as digits). Rotation and basis change do not change the small
// cover; they only change the labeling.
struct Move {
    enum class Type { Op, Rot, Dj };
    Type type = Type::Op;
    SequenceOp op{};
    int rot = 0;
    std::array<Color, 3> dj{};  // images of e1, e2, e4

    static Move from_op(SequenceOp o);
    static Move rotation(int r);
    static Move dj_move(Color i1, Color i2, Color i3);
};

Coloring apply_move(const Coloring &c, const Move &mv);
Coloring replay(const Coloring &c, const std::vector<Move> &trace);

// One move per line: "<kind> k=<int> l=<int>", "rot <int>", "dj <3 digits>".
std::string format_trace(const std::vector<Move> &trace);
std::optional<std::vector<Move>> parse_trace(const std::string &text,
                                             std::string *error = nullptr);

// --- Canonical classes ------------------------------------------------------

struct CanonicalClass {
    enum class Kind {
        C1, C2, C3, C4, C5, C6, C7, C8, C9, C10,
        C3Prism,  // m = 3, 3-independent
        C4_1, C4_2,  // m = 4, 3-independent with all three letters
        CStar,  // nontrivial, parameters (n, mm)
    };
    Kind kind = Kind::C1;
    int n = 0;   // CStar only
    int mm = 0;  // CStar only

    std::string label() const;  // "C1", ..., "C3_prism", "C4_1", "CStar(2,0)"
    bool operator==(const CanonicalClass &o) const = default;
};

// The class's representative coloring sequence at the given m. Trivial
// classes use ceiling = floor = e1 with alpha=2, beta=4, gamma=6 and bars
// adding e1; CStar uses ceiling = e1, floor = e1+e2. Throws on parity or
// realizability violations.
Coloring canonical_sequence(const CanonicalClass &cls, int m);

// Every class realizable at this m (trivial classes respecting parity plus
// all realizable CStar(n, mm) pairs; m=3 has no CStar).
std::vector<CanonicalClass> canonical_classes_for_m(int m);

// Realizable (n, mm) pairs for nontrivial colorings: mm even,
// mm <= n <= m/2, and n > 0 when m is odd.
std::vector<std::pair<int, int>> realizable_nm_pairs(int m);

struct CanonicalResult {
    CanonicalClass cls;
    std::vector<Move> trace;  // replay(c, trace) == canonical_sequence(cls, m)
};

// Constructive reduction of a trivial coloring to its canonical class. The
// target class is determined up-front from cohomology invariants; the trace
// replays to the class's exact representative sequence (verified internally).
CanonicalResult canonical_form_trivial(const Coloring &c);

// Constructive reduction of a nontrivial coloring (m > 3) to CStar(n, mm).
CanonicalResult canonical_form_nontrivial(const Coloring &c);

// Dispatch on triviality; m = 3 nontrivial input is a precondition error.
CanonicalResult canonical_form(const Coloring &c);

// --- Search oracle ----------------------------------------------------------

enum class OracleResult { Reached, NotReached, BudgetExhausted };

// Breadth-first search from a over {legal ops} on labeling-canonicalized
// states (minimum over all rotations and basis changes), looking for b.
// budget bounds the number of expanded states.
OracleResult bfs_equivalence_oracle(const Coloring &a, const Coloring &b,
                                    std::size_t budget);

// Minimum coloring key over all labelings (168 basis changes x m rotations).
std::string labeling_canonical_key(const Coloring &c);

// Every labeling-canonical key reachable from seed via sequence ops, sorted.
// Exhausts the class; throws std::runtime_error if budget states were
// expanded first. Lets tests batch-verify reachability for a whole class.
std::vector<std::string> sector_class_keys(const Coloring &seed, std::size_t budget);

}  // namespace smallcover
