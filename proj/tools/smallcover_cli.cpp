// Command-line surface: enumerate, invariants, canonical, classify, count,
// verify. Standard output is machine-parseable; progress goes to stderr.
// Exit codes: 0 success, 1 usage error, 2 integrity failure.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_format.hpp"
#include "smallcover/classifier.hpp"
#include "smallcover/cohomology.hpp"
#include "smallcover/coloring.hpp"
#include "smallcover/sector_ops.hpp"
#include "smallcover/sweep.hpp"

namespace {

using namespace smallcover;

std::string class_label_string(const CanonicalClass &cls) {
    if (cls.kind == CanonicalClass::Kind::CStar)
        return "NT(" + std::to_string(cls.n) + "," + std::to_string(cls.mm) + ")";
    return "T(" + cls.label() + ")";
}

Coloring parse_or_exit(const std::string &spec, int &exit_code) {
    std::string err;
    auto parsed = parse_coloring(spec, &err);
    if (!parsed) {
        std::cerr << "error: cannot parse coloring spec: " << err << "\n";
        exit_code = 1;
        return {};
    }
    if (!is_valid(*parsed)) {
        std::cerr << "error: invalid coloring: " << validity_diagnostic(*parsed) << "\n";
        exit_code = 1;
        return {};
    }
    return *parsed;
}

int cmd_enumerate(int m, const std::string &up_to, bool count_only) {
    if (up_to == "dj") {
        std::vector<Coloring> reps = dj_representatives(m);
        if (count_only) {
            std::cout << reps.size() << "\n";
        } else {
            for (const Coloring &c : reps) std::cout << format_coloring(c) << "\n";
        }
        return 0;
    }
    if (count_only) {
        std::cout << count_colorings(m) << "\n";
        return 0;
    }
    enumerate_colorings(m, [](const Coloring &c) { std::cout << format_coloring(c) << "\n"; });
    return 0;
}

int cmd_invariants(const std::string &spec) {
    int ec = 0;
    Coloring c = parse_or_exit(spec, ec);
    if (ec) return ec;
    std::cout << cli::invariants_json(c).dump(2) << "\n";
    return 0;
}

int cmd_canonical(const std::string &spec) {
    int ec = 0;
    Coloring c = parse_or_exit(spec, ec);
    if (ec) return ec;
    CanonicalResult res = canonical_form(c);
    Coloring target = canonical_sequence(res.cls, c.m);
    if (!(replay(c, res.trace) == target)) {
        std::cerr << "error: trace replay does not reproduce the canonical sequence\n";
        return 2;
    }
    std::cout << "label: " << class_label_string(res.cls) << "\n";
    std::cout << "canonical: " << format_coloring(target) << "\n";
    std::cout << "trace:\n" << format_trace(res.trace);
    return 0;
}

int cmd_classify(int m, const std::string &format) {
    std::vector<ClassRow> rows = class_table(m);
    if (format == "csv")
        std::cout << cli::class_table_csv(m, rows);
    else
        std::cout << cli::class_table_json(m, rows).dump(2) << "\n";
    if (rows.size() != n_formula(m)) {
        std::cerr << "error: class count " << rows.size() << " does not match formula "
                  << n_formula(m) << "\n";
        return 2;
    }
    return 0;
}

int cmd_count(int m_min, int m_max) {
    int bad = 0;
    std::cout << "m,formula,classes,n_t,n_nt\n";
    for (int m = m_min; m <= m_max; ++m) {
        std::vector<LabelCount> hist = label_histogram_parallel(m);
        std::size_t nt = 0, nnt = 0;
        for (const LabelCount &lc : hist) {
            if (lc.label.rfind("T(", 0) == 0) ++nt;
            if (lc.label.rfind("NT(", 0) == 0) ++nnt;
        }
        std::cout << m << ',' << n_formula(m) << ',' << hist.size() << ',';
        if (m > 4)
            std::cout << nt << ',' << nnt;
        else
            std::cout << ',';
        std::cout << "\n";
        if (hist.size() != n_formula(m)) {
            std::cerr << "error: m=" << m << " enumerated " << hist.size()
                      << " classes but the formula gives " << n_formula(m) << "\n";
            bad = 2;
        }
        if (m > 4 && std::make_pair(nt, nnt) != nt_nnt_formulas(m)) {
            std::cerr << "error: m=" << m << " trivial/nontrivial split mismatch\n";
            bad = 2;
        }
    }
    return bad;
}

// --- verify suites ----------------------------------------------------------

struct Suite {
    std::string name;
    std::function<bool()> run;
};

bool suite_counts(int m_max) {
    for (int m = 3; m <= m_max; ++m)
        if (count_classes(m) != n_formula(m)) return false;
    return true;
}

bool suite_betti(int m_max) {
    for (int m = 3; m <= m_max; ++m)
        if (betti_mismatch_parallel(m) != 0) return false;
    return true;
}

bool suite_enumeration_oracle(int m_max) {
    for (int m = 3; m <= std::min(m_max, 4); ++m) {
        std::uint64_t brute = 0, total = 1;
        for (int i = 0; i < m + 2; ++i) total *= 7;
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t v = t;
            Coloring c;
            c.m = m;
            c.ceiling = static_cast<Color>(v % 7 + 1);
            v /= 7;
            c.floor = static_cast<Color>(v % 7 + 1);
            v /= 7;
            for (int i = 0; i < m; ++i) {
                c.sides.push_back(static_cast<Color>(v % 7 + 1));
                v /= 7;
            }
            if (is_valid(c)) ++brute;
        }
        if (brute != count_colorings(m)) return false;
        if (count_colorings(m) % 168 != 0) return false;
        if (count_colorings(m) / 168 != dj_representatives(m).size()) return false;
    }
    return true;
}

bool suite_orientability(int m_max) {
    for (int m = 3; m <= std::min(m_max, 5); ++m)
        for (const Coloring &c : dj_representatives(m))
            if (is_orientable(c) != is_orientable_gl_search(c)) return false;
    for (int m = 4; m <= m_max; ++m)
        for (const Coloring &c : dj_representatives(m))
            if (!is_trivial(c) && is_orientable(c) != (nontrivial_stats(c).n == 0))
                return false;
    return true;
}

bool suite_reduction(int m_max) {
    for (int m = 3; m <= std::min(m_max, 6); ++m)
        for (const Coloring &c : dj_representatives(m)) {
            if (m == 3 && !is_trivial(c)) continue;
            CanonicalResult res = canonical_form(c);
            if (!(replay(c, res.trace) == canonical_sequence(res.cls, m))) return false;
            if (m >= 5 && classify(c) != class_label_string(res.cls)) return false;
        }
    return true;
}

bool suite_serial_parallel(int m_max) {
    for (int m = 3; m <= std::min(m_max, 6); ++m) {
        if (!(label_histogram_serial(m) == label_histogram_parallel(m))) return false;
        if (betti_mismatch_serial(m) != betti_mismatch_parallel(m)) return false;
    }
    return true;
}

int cmd_verify(int m_max) {
    std::vector<Suite> suites = {
        {"counting-formulas", [&] { return suite_counts(m_max); }},
        {"betti-dimensions", [&] { return suite_betti(m_max); }},
        {"enumeration-oracle", [&] { return suite_enumeration_oracle(m_max); }},
        {"orientability", [&] { return suite_orientability(m_max); }},
        {"canonical-reduction", [&] { return suite_reduction(m_max); }},
        {"serial-vs-parallel", [&] { return suite_serial_parallel(m_max); }},
    };
    bool all_ok = true;
    for (const Suite &s : suites) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = s.run();
        } catch (const std::exception &e) {
            std::cerr << "suite " << s.name << " raised: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "suite " << s.name << ": " << (ok ? "pass" : "FAIL") << " ("
                  << secs << " s)\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"small covers over 3-dimensional prisms: enumeration, invariants, "
                 "canonical forms, classification"};
    app.require_subcommand(1);

    int m = 3, m_min = 3, m_max = 6;
    std::string up_to = "raw", spec, format = "json";
    bool count_only = false;

    auto *c_enum = app.add_subcommand("enumerate", "List valid colorings");
    c_enum->add_option("--m", m, "Number of side facets")->required()->check(CLI::Range(3, 12));
    c_enum->add_option("--up-to", up_to, "raw colorings or dj orbit representatives")
        ->check(CLI::IsMember({"raw", "dj"}));
    c_enum->add_flag("--count-only", count_only, "Print only the total");

    auto *c_inv = app.add_subcommand("invariants", "Invariant record for one coloring");
    c_inv->add_option("--coloring", spec, "Coloring spec, e.g. m=6;c=1;f=1;s=2,4,2,4,2,4")
        ->required();

    auto *c_canon = app.add_subcommand("canonical", "Canonical class and op trace");
    c_canon->add_option("--coloring", spec, "Coloring spec")->required();

    auto *c_cls = app.add_subcommand("classify", "Class table for one m");
    c_cls->add_option("--m", m, "Number of side facets")->required()->check(CLI::Range(3, 12));
    c_cls->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto *c_count = app.add_subcommand("count", "Class counts vs formulas over a range");
    c_count->add_option("--m-min", m_min, "Range start")->check(CLI::Range(3, 12));
    c_count->add_option("--m-max", m_max, "Range end")->required()->check(CLI::Range(3, 12));

    auto *c_verify = app.add_subcommand("verify", "Run the property suites");
    c_verify->add_option("--m-max", m_max, "Largest m to verify")->check(CLI::Range(3, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_enum->parsed()) return cmd_enumerate(m, up_to, count_only);
        if (c_inv->parsed()) return cmd_invariants(spec);
        if (c_canon->parsed()) return cmd_canonical(spec);
        if (c_cls->parsed()) return cmd_classify(m, format);
        if (c_count->parsed()) return cmd_count(m_min, m_max);
        if (c_verify->parsed()) return cmd_verify(m_max);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
