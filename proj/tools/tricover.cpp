// Command-line front end: single-instance queries, batch tables, and the
// verification suite.
//
// Exit codes: 0 success, 1 failed verification, 2 precondition violation,
// 3 theorem/oracle mismatch, 4 cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tricover/checks.hpp"
#include "tricover/serialize.hpp"
#include "tricover/table.hpp"

using namespace tricover;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output path: " + out_path);
    os << text;
}

std::vector<CoverReport> classified(int q, std::int64_t p, int only_ideal, bool verify,
                                    std::size_t cap) {
    const TriangleParams P = TriangleParams::make(q);
    const auto ideals = primes_above(q, p);
    if (only_ideal >= 0 && static_cast<std::size_t>(only_ideal) >= ideals.size())
        throw precondition_error("no such ideal index for this (q, p)");
    std::vector<CoverReport> reps;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (only_ideal >= 0 && static_cast<std::size_t>(only_ideal) != i) continue;
        CoverReport rep = classify_cover(P, ideals[i], verify, cap);
        rep.ideal_index = static_cast<int>(i);
        reps.push_back(std::move(rep));
    }
    return reps;
}

int run(int argc, char** argv) {
    CLI::App app{"congruence covers of the triangle groups Gamma_{q,oo,oo}: "
                 "Galois groups, genera, and brute-force verification"};
    app.require_subcommand(1);

    // minpoly
    int q = 5;
    auto* cmd_minpoly = app.add_subcommand("minpoly", "minimal polynomial of 2*cos(pi/q)");
    cmd_minpoly->add_option("-q", q, "odd q >= 3")->required();

    // ideals
    std::int64_t p = 3;
    auto* cmd_ideals = app.add_subcommand("ideals", "prime ideals of Z[lambda_q] above p");
    cmd_ideals->add_option("-q", q, "odd q >= 3")->required();
    cmd_ideals->add_option("-p", p, "rational prime")->required();

    // classify
    int ideal_index = -1;
    bool verify = false;
    std::size_t cap = 2'000'000;
    auto* cmd_classify = app.add_subcommand("classify", "Galois group of the cover X(p) -> X(1)");
    cmd_classify->add_option("-q", q, "odd q >= 3")->required();
    cmd_classify->add_option("-p", p, "rational prime")->required();
    cmd_classify->add_option("--ideal", ideal_index, "restrict to one ideal index");
    cmd_classify->add_flag("--verify", verify, "confirm against the closure oracle");
    cmd_classify->add_option("--cap", cap, "closure size cap");

    // genus
    std::string level = "both";
    auto* cmd_genus = app.add_subcommand("genus", "genus of X(p) and/or X^(0)(p)");
    cmd_genus->add_option("-q", q, "odd q >= 3")->required();
    cmd_genus->add_option("-p", p, "rational prime")->required();
    cmd_genus->add_option("--ideal", ideal_index, "restrict to one ideal index");
    cmd_genus->add_option("--level", level, "full | borel | both")
        ->check(CLI::IsMember({"full", "borel", "both"}));
    cmd_genus->add_option("--cap", cap, "closure size cap");

    // table
    std::vector<int> q_list;
    std::vector<std::int64_t> p_list;
    std::string format = "csv", out_path;
    auto* cmd_table = app.add_subcommand("table", "batch table over q and p lists");
    cmd_table->add_option("--q", q_list, "comma-separated odd q values")->delimiter(',');
    cmd_table->add_option("--p", p_list, "comma-separated primes")->delimiter(',');
    cmd_table->add_option("--level", level, "full | borel | both")
        ->check(CLI::IsMember({"full", "borel", "both"}));
    cmd_table->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_table->add_option("--out", out_path, "output path (default stdout)");
    cmd_table->add_option("--cap", cap, "closure size cap");

    // verify
    int max_q = 15;
    std::int64_t max_p = 13;
    auto* cmd_verify = app.add_subcommand("verify", "run every cross-check family");
    cmd_verify->add_option("--max-q", max_q, "largest q (default 15)");
    cmd_verify->add_option("--max-p", max_p, "largest p (default 13)");
    cmd_verify->add_option("--cap", cap, "closure size cap (default 2000000)");

    CLI11_PARSE(app, argc, argv);

    if (cmd_minpoly->parsed()) {
        if (q < 3 || q % 2 == 0) throw precondition_error("minpoly: q must be odd and >= 3");
        const IntPoly T = lambda_minpoly(q);
        std::cout << "T_" << q << "(x) = " << T.str() << "\n";
        std::cout << minpoly_json(T).dump() << "\n";
        return 0;
    }

    if (cmd_ideals->parsed()) {
        json arr = json::array();
        int idx = 0;
        for (const auto& I : primes_above(q, p)) arr.push_back(to_json(I, idx++));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }

    if (cmd_classify->parsed()) {
        json arr = json::array();
        for (const auto& rep : classified(q, p, ideal_index, verify, cap))
            arr.push_back(to_json(rep));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }

    if (cmd_genus->parsed()) {
        const TriangleParams P = TriangleParams::make(q);
        auto reps = classified(q, p, ideal_index, false, cap);
        std::vector<std::string> blocked;
        json arr = json::array();
        for (auto& rep : reps) {
            if (level == "full" || level == "both") {
                try {
                    compute_genus_full(rep);
                } catch (const precondition_error& e) {
                    blocked.push_back(e.what());
                }
            }
            if (level == "borel" || level == "both") {
                try {
                    compute_genus_borel(rep, P, true);
                } catch (const precondition_error& e) {
                    blocked.push_back(e.what());
                } catch (const cap_exceeded_error&) {
                    // formula value stands; monodromy cross-check skipped
                    compute_genus_borel(rep, P, false);
                }
            }
            arr.push_back(to_json(rep));
        }
        std::cout << arr.dump(2) << "\n";
        for (const auto& b : blocked) std::cerr << "unavailable: " << b << "\n";
        return blocked.empty() ? 0 : 2;
    }

    if (cmd_table->parsed()) {
        const GenusLevel lv = level == "full"    ? GenusLevel::full
                              : level == "borel" ? GenusLevel::borel
                                                 : GenusLevel::both;
        const auto rows = build_table(q_list, p_list, lv, cap);
        if (format == "csv") {
            emit(table_to_csv(rows), out_path);
        } else {
            emit(table_to_json(rows).dump(2) + "\n", out_path);
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        const auto results = run_verification(max_q, max_p, cap);
        bool all_ok = true;
        for (const auto& r : results) {
            std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.family << ": " << r.checked
                      << " checked, " << r.skipped << " skipped";
            if (!r.ok()) {
                std::cout << ", " << r.failures.size() << " failed; first: " << r.failures.front();
                all_ok = false;
            }
            std::cout << "\n";
        }
        return all_ok ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const oracle_mismatch_error& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 3;
    } catch (const cap_exceeded_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
