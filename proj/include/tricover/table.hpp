#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace tricover {

enum class GenusLevel { full, borel, both };

/// One batch-table row per (q, p, ideal) triple. Genus cells stay blank
/// (not zero) when the corresponding hypotheses are unmet; the note column
/// says why.
struct TableRow {
    int q;
    std::int64_t p;
    int ideal_index;
    int e;
    int f;
    bigint residue_order;
    std::string galois_label;
    bigint index_mu_bar;
    std::optional<bigint> genus_full;
    std::optional<bigint> genus_borel;
    bool degenerate = false;
    bool oracle_checked = false;
    std::string note;
};

inline std::vector<TableRow> build_table(std::vector<int> qs, std::vector<std::int64_t> ps,
                                         GenusLevel level, std::size_t closure_cap = 2'000'000) {
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    std::vector<TableRow> rows;
    std::map<int, TriangleParams> cache;
    for (int q : qs) {
        if (q < 3 || q % 2 == 0) throw precondition_error("table: q values must be odd and >= 3");
        cache.emplace(q, TriangleParams::make(q));
    }
    for (std::int64_t p : ps)
        if (!is_prime(p)) throw precondition_error("table: p values must be prime");

    for (int q : qs) {
        const TriangleParams& P = cache.at(q);
        for (std::int64_t p : ps) {
            int idx = 0;
            for (const auto& I : primes_above(q, p)) {
                CoverReport rep = classify_cover(P, I, false, closure_cap);
                rep.ideal_index = idx;
                TableRow row{q,
                             p,
                             idx,
                             I.e,
                             I.f,
                             rep.residue->order(),
                             rep.galois.label(),
                             rep.index_mu_bar,
                             std::nullopt,
                             std::nullopt,
                             rep.degenerate,
                             rep.oracle_checked,
                             ""};
                std::vector<std::string> notes;
                auto blame = [&](const std::string& why) {
                    if (std::find(notes.begin(), notes.end(), why) == notes.end())
                        notes.push_back(why);
                };
                if (level == GenusLevel::full || level == GenusLevel::both) {
                    if (!is_prime(q)) blame("q composite: genus formulas need prime q");
                    else if (p == q) blame("p = q excluded by the genus formula");
                    else if (I.e > 1) blame("ramified ideal (e > 1)");
                    else if (rep.degenerate) blame("degenerate reduction (mu in the ideal)");
                    else {
                        compute_genus_full(rep);
                        row.genus_full = rep.genus_full;
                        if (rep.p2_extrapolated) blame("p = 2 genus is extrapolated");
                    }
                }
                if (level == GenusLevel::borel || level == GenusLevel::both) {
                    if (!is_prime(q) || q < 5) blame("borel genus needs a prime q >= 5");
                    else if (p == 2 || p == q) blame("borel genus needs odd p != q");
                    else if (rep.degenerate) blame("degenerate reduction (mu in the ideal)");
                    else if (rep.galois.kind != GroupId::Kind::psl2)
                        blame("classification is not PSL2: borel genus unavailable");
                    else {
                        compute_genus_borel(rep, P, false);
                        row.genus_borel = rep.genus_borel;
                    }
                }
                std::ostringstream note;
                for (std::size_t i = 0; i < notes.size(); ++i) {
                    if (i) note << "; ";
                    note << notes[i];
                }
                row.note = note.str();
                rows.push_back(std::move(row));
                ++idx;
            }
        }
    }
    return rows;
}

inline const std::vector<std::string>& table_columns() {
    static const std::vector<std::string> cols = {
        "q",          "p",           "ideal_index",  "e",
        "f",          "residue_order", "galois",     "index_mu_bar",
        "genus_full", "genus_borel", "degenerate",   "oracle_checked",
        "note"};
    return cols;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    const auto& cols = table_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ",";
        os << cols[i];
    }
    os << "\n";
    for (const auto& r : rows) {
        os << r.q << "," << r.p << "," << r.ideal_index << "," << r.e << "," << r.f << ","
           << r.residue_order.str() << "," << csv_escape(r.galois_label) << ","
           << r.index_mu_bar.str() << ","
           << (r.genus_full ? r.genus_full->str() : std::string{}) << ","
           << (r.genus_borel ? r.genus_borel->str() : std::string{}) << ","
           << (r.degenerate ? "true" : "false") << "," << (r.oracle_checked ? "true" : "false")
           << "," << csv_escape(r.note) << "\n";
    }
    return os.str();
}

inline json table_to_json(const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["q"] = r.q;
        j["p"] = r.p;
        j["ideal_index"] = r.ideal_index;
        j["e"] = r.e;
        j["f"] = r.f;
        j["residue_order"] = big_to_json(r.residue_order);
        j["galois"] = r.galois_label;
        j["index_mu_bar"] = big_to_json(r.index_mu_bar);
        j["genus_full"] = r.genus_full ? big_to_json(*r.genus_full) : json(nullptr);
        j["genus_borel"] = r.genus_borel ? big_to_json(*r.genus_borel) : json(nullptr);
        j["degenerate"] = r.degenerate;
        j["oracle_checked"] = r.oracle_checked;
        j["note"] = r.note;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace tricover
