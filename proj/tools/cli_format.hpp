// Machine-readable output assembly shared by the CLI and its format tests.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "smallcover/classifier.hpp"
#include "smallcover/cohomology.hpp"
#include "smallcover/coloring.hpp"

namespace smallcover::cli {

inline nlohmann::json tuple_fields(const InvariantTuple &t) {
    nlohmann::json j;
    j["trivial"] = t.trivial;
    j["delta"] = t.delta;
    j["b_bar"] = {t.b_bar.first, t.b_bar.second};
    if (t.nm)
        j["nm"] = {t.nm->first, t.nm->second};
    else
        j["nm"] = nullptr;
    j["orientable"] = t.orientable;
    j["k_cap_h2"] = t.k_cap_h2;
    return j;
}

inline nlohmann::json invariants_json(const Coloring &c) {
    CohomologyRing r(c, 3);
    InvariantReport rep = invariant_report(r);
    nlohmann::json j = tuple_fields(invariant_tuple(c));
    j["m"] = c.m;
    j["b_histogram"] = rep.b_histogram;
    j["betti"] = r.betti();
    return j;
}

inline nlohmann::json class_table_json(int m, const std::vector<ClassRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ClassRow &row : rows) {
        nlohmann::json j = tuple_fields(row.tuple);
        j["label"] = row.label;
        j["representative"] = format_coloring(row.representative);
        j["rep_count"] = row.rep_count;
        arr.push_back(std::move(j));
    }
    nlohmann::json out;
    out["m"] = m;
    out["classes"] = std::move(arr);
    out["total"] = rows.size();
    out["formula"] = n_formula(m);
    return out;
}

inline std::string class_table_csv(int m, const std::vector<ClassRow> &rows) {
    std::ostringstream os;
    os << "label,representative,trivial,delta,b_bar_1,b_bar_2,n,mm,orientable,"
          "k_cap_h2,rep_count\n";
    for (const ClassRow &row : rows) {
        const InvariantTuple &t = row.tuple;
        os << row.label << ",\"" << format_coloring(row.representative) << "\","
           << (t.trivial ? 1 : 0) << ',' << t.delta << ',' << t.b_bar.first << ','
           << t.b_bar.second << ',';
        if (t.nm)
            os << t.nm->first << ',' << t.nm->second;
        else
            os << ',';
        os << ',' << (t.orientable ? 1 : 0) << ',' << t.k_cap_h2 << ','
           << row.rep_count << '\n';
    }
    os << "total," << rows.size() << ",formula," << n_formula(m) << '\n';
    return os.str();
}

}  // namespace smallcover::cli
