// End-to-end acceptance checks for the ranking pipeline. Each check prints
// one [PASS]/[FAIL] line; the exit status is the number of failures.
//
// Usage: acceptance <path-to-cli> <path-to-fixtures-dir>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "codegen.hpp"
#include "json.hpp"
#include "vulnrank/analysis.hpp"
#include "vulnrank/complexity.hpp"
#include "vulnrank/evaluation.hpp"
#include "vulnrank/parser.hpp"
#include "vulnrank/ranking.hpp"

namespace fs = std::filesystem;
using namespace vulnrank;

namespace {

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& name, bool ok, double elapsed_ms, const std::string& detail) {
    if (ok) {
        std::printf("[PASS] %s (%.0f ms)\n", name.c_str(), elapsed_ms);
    } else {
        std::printf("[FAIL] %s: %s\n", name.c_str(), detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CmdResult r;
    if (!pipe) return r;
    char buf[8192];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("vulnrank_acc_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

ScoredFunction make_sf(int index, int cscore, int vscore, int sloc = 10) {
    ScoredFunction sf;
    sf.id.file_path = "t.c";
    sf.id.function_name = "f" + std::to_string(1000 + index);
    sf.complexity.c1_cyclomatic = cscore;
    sf.complexity.score = cscore;
    sf.vulnerability.v3_pointer_arith = vscore;
    sf.vulnerability.score = vscore;
    sf.sloc = sloc;
    return sf;
}

// ---------------------------------------------------------------------------
// 1. Golden worked example: the Fibonacci listing end to end through the CLI.

void check_worked_example() {
    auto start = Clock::now();
    std::string detail;
    bool ok = false;
    CmdResult r = run_cli("analyze --dir '" + g_fixtures + "/fib'");
    if (r.status != 0) {
        detail = "cli exited with " + std::to_string(r.status);
    } else {
        try {
            nlohmann::json j = nlohmann::json::parse(r.out);
            const auto& f = j.at("functions").at(0);
            const auto& c = f.at("complexity");
            const auto& v = f.at("vulnerability");
            std::vector<int> cgot = {c.at("c1_cyclomatic"), c.at("c2_loops"),
                                     c.at("c3_nested_loop_pairs"), c.at("c4_max_loop_nesting")};
            std::vector<int> vgot = {
                v.at("v1_params"),
                v.at("v2_callee_arg_vars"),
                v.at("v3_pointer_arith"),
                v.at("v4_pointer_arith_vars"),
                v.at("v5_max_pointer_arith_per_var"),
                v.at("v6_nested_control_pairs"),
                v.at("v7_max_control_nesting"),
                v.at("v8_max_control_dependent"),
                v.at("v9_max_data_dependent"),
                v.at("v10_if_without_else"),
                v.at("v11_predicate_vars"),
            };
            ok = f.at("function_name") == "fibonacci" && f.at("sloc") == 16 &&
                 cgot == std::vector<int>{5, 1, 0, 1} && c.at("score") == 7 &&
                 vgot == std::vector<int>{2, 0, 6, 1, 6, 2, 2, 3, 4, 3, 2} &&
                 v.at("score") == 31 && f.at("max_data_dependent_variable") == "n";
            if (!ok) {
                std::ostringstream oss;
                oss << "metric mismatch; got complexity [";
                for (int x : cgot) oss << x << ' ';
                oss << "] vulnerability [";
                for (int x : vgot) oss << x << ' ';
                oss << "]";
                detail = oss.str();
            }
        } catch (const std::exception& e) {
            detail = std::string("bad json: ") + e.what();
        }
    }
    double elapsed = ms_since(start);
    if (ok && elapsed >= 1000.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + " ms (budget 1000)";
    }
    report("worked-example-metrics", ok, elapsed, detail);
}

// ---------------------------------------------------------------------------
// 2. Priority-score formula: exact 80 when rank-1 holds 20%, and the
//    two-tier 80/50 fixture.

void check_priority_formula() {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;

    // Two bins of five; each bin top is unique, so rank 1 holds 2 of 10.
    {
        std::vector<ScoredFunction> fns;
        for (int i = 0; i < 5; i++) fns.push_back(make_sf(i, 2, 9 - i));
        for (int i = 5; i < 10; i++) fns.push_back(make_sf(i, 7, 14 - i));
        PriorityScoreMap psm = priority_scores(build_bins(fns));
        for (int idx : {0, 5}) {
            double got = psm.scores.at(fns[idx].id);
            if (got != 80.0) {
                ok = false;
                detail = "rank-1 at 20% gave " + std::to_string(got) + ", want exactly 80";
            }
        }
    }

    // One bin of ten: two functions at rank 1, three more at rank 2.
    {
        std::vector<ScoredFunction> fns;
        int vscores[] = {9, 9, 5, 5, 5, 4, 3, 2, 1, 0};
        for (int i = 0; i < 10; i++) fns.push_back(make_sf(i, 3, vscores[i]));
        PriorityScoreMap psm = priority_scores(build_bins(fns));
        if (psm.scores.at(fns[0].id) != 80.0 || psm.scores.at(fns[1].id) != 80.0) {
            ok = false;
            detail = "two-of-ten rank 1 score is not exactly 80";
        }
        if (psm.scores.at(fns[2].id) != 50.0 || psm.scores.at(fns[4].id) != 50.0) {
            ok = false;
            detail = "three-of-ten rank 2 score is not exactly 50";
        }
    }
    report("priority-score-formula", ok, ms_since(start), detail);
}

// ---------------------------------------------------------------------------
// 3. Cyclomatic oracle: generated functions vs an independent CFG.

void check_cyclomatic_oracle() {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    std::mt19937 rng(20260823u);
    int checked = 0;
    for (int i = 0; i < 120 && ok; i++) {
        testgen::GenFunction gf = testgen::generate_function(rng, i);
        std::string source = testgen::render_function(gf);
        ParseResult pr = parse_translation_unit(source, "gen.c");
        if (pr.functions.size() != 1) {
            ok = false;
            detail = "generated function " + gf.name + " failed to parse";
            break;
        }
        int got = cyclomatic_complexity(pr.functions.front());
        int want = testgen::cfg_cyclomatic(gf);
        if (got != want) {
            ok = false;
            detail = gf.name + ": parser c1 " + std::to_string(got) + " vs cfg " +
                     std::to_string(want) + "\n" + source;
            break;
        }
        ++checked;
    }
    if (ok && checked < 50) {
        ok = false;
        detail = "only " + std::to_string(checked) + " functions checked";
    }
    double elapsed = ms_since(start);
    if (ok && elapsed >= 10000.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + " ms (budget 10000)";
    }
    report("cyclomatic-cfg-oracle", ok, elapsed, detail);
}

// ---------------------------------------------------------------------------
// 4. Selection invariants over randomized score tables.

std::set<FunctionId> id_set(const CandidateList& cl) {
    std::set<FunctionId> s;
    for (const auto& e : cl.entries) s.insert(e.function.id);
    return s;
}

void check_selection_invariants() {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    std::mt19937 rng(97531u);
    std::uniform_int_distribution<int> size_dist(1, 40);
    std::uniform_int_distribution<int> cdist(1, 6);
    std::uniform_int_distribution<int> vdist(0, 9);
    std::uniform_real_distribution<double> pdist(0.05, 1.0);

    int cases = 0;
    for (int t = 0; t < 1100 && ok; t++, cases++) {
        int n = size_dist(rng);
        std::vector<ScoredFunction> fns;
        for (int i = 0; i < n; i++) fns.push_back(make_sf(i, cdist(rng), vdist(rng)));
        BinTable bt = build_bins(fns);

        double p1 = pdist(rng), p2 = pdist(rng);
        if (p1 > p2) std::swap(p1, p2);
        CandidateList small = select_candidates(bt, p1);
        CandidateList large = select_candidates(bt, p2);

        // (a) Monotone prefix: a smaller fraction selects a subset.
        std::set<FunctionId> small_ids = id_set(small), large_ids = id_set(large);
        if (!std::includes(large_ids.begin(), large_ids.end(), small_ids.begin(),
                           small_ids.end())) {
            ok = false;
            detail = "monotone prefix violated at case " + std::to_string(t);
            break;
        }

        // (b) Every bin's top tie group is fully selected before any rank-2 pick.
        for (const auto& [key, bin] : bt.bins) {
            int top = bin.front().vulnerability.score;
            for (const auto& f : bin) {
                if (f.vulnerability.score == top && !small_ids.count(f.id)) {
                    ok = false;
                    detail = "bin " + std::to_string(key) + " top group not selected";
                }
            }
        }
        if (!ok) break;

        // (c) Ties are atomic: a selected score pulls in its whole tie group.
        for (const auto& e : small.entries) {
            for (const auto& f : bt.bins.at(e.function.complexity.score)) {
                if (f.vulnerability.score == e.function.vulnerability.score &&
                    !small_ids.count(f.id)) {
                    ok = false;
                    detail = "tie group split at case " + std::to_string(t);
                }
            }
        }
        if (!ok) break;

        // (d) Positive rescaling of vulnerability scores changes nothing.
        std::vector<ScoredFunction> scaled = fns;
        for (auto& f : scaled) {
            f.vulnerability.v3_pointer_arith *= 3;
            f.vulnerability.score *= 3;
        }
        CandidateList rescaled = select_candidates(build_bins(scaled), p1);
        bool same = rescaled.entries.size() == small.entries.size();
        for (size_t i = 0; same && i < rescaled.entries.size(); i++) {
            same = rescaled.entries[i].function.id == small.entries[i].function.id &&
                   rescaled.entries[i].selection_rank == small.entries[i].selection_rank;
        }
        if (!same) {
            ok = false;
            detail = "rescaling changed the selection at case " + std::to_string(t);
            break;
        }

        // The stop rule: fraction reached, and not before the last iteration.
        if (static_cast<double>(small.entries.size()) + 1e-9 < p1 * n) {
            ok = false;
            detail = "selected fraction below requested at case " + std::to_string(t);
            break;
        }
        int last_rank = 0;
        for (const auto& e : small.entries) last_rank = std::max(last_rank, e.selection_rank);
        std::size_t without_last = 0;
        for (const auto& e : small.entries)
            if (e.selection_rank < last_rank) ++without_last;
        if (last_rank > 1 && static_cast<double>(without_last) + 1e-9 >= p1 * n) {
            ok = false;
            detail = "selection not minimal at case " + std::to_string(t);
            break;
        }
    }
    if (ok && cases < 1000) {
        ok = false;
        detail = "only " + std::to_string(cases) + " cases run";
    }
    double elapsed = ms_since(start);
    if (ok && elapsed >= 30000.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + " ms (budget 30000)";
    }
    report("selection-invariants", ok, elapsed, detail);
}

// ---------------------------------------------------------------------------
// 5. Evaluation sanity: full-fraction coverage and ablation self-delta.

void check_evaluation_sanity() {
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    std::mt19937 rng(11224u);
    std::uniform_int_distribution<int> cdist(1, 5);
    std::uniform_int_distribution<int> vdist(0, 9);

    for (int t = 0; t < 25 && ok; t++) {
        int n = 5 + t;
        std::vector<ScoredFunction> fns;
        for (int i = 0; i < n; i++) fns.push_back(make_sf(i, cdist(rng), vdist(rng), 5 + i));
        GroundTruth gt;
        gt.vulnerable.push_back({"t.c", fns[t % n].id.function_name, std::nullopt});
        gt.vulnerable.push_back({"t.c", fns[(t + 3) % n].id.function_name, std::nullopt});

        EvaluationReport er = coverage_curve(fns, gt, {1.0});
        if (er.tool[0].coverage != 1.0 || er.manual_down[0].coverage != 1.0 ||
            er.manual_up[0].coverage != 1.0) {
            ok = false;
            detail = "coverage at p=1.0 is not exactly 1.0";
            break;
        }

        // make_sf leaves V1/V2 zero, so the VD1 ablation is the identity;
        // its delta must be identically zero at every fraction.
        SensitivityReport sr = sensitivity_analysis(fns, gt, {0.2, 0.5, 1.0});
        for (const DeltaPoint& dp : sr.deltas.at("VD1")) {
            if (dp.recall_delta != 0.0) {
                ok = false;
                detail = "identity ablation produced a nonzero delta";
            }
        }
    }
    report("evaluation-sanity", ok, ms_since(start), detail);
}

// ---------------------------------------------------------------------------
// 6. Determinism: two analyze runs over a 100-file corpus, byte for byte.

void check_determinism() {
    auto start = Clock::now();
    std::string detail;
    bool ok = false;
    TempDir tmp("det");
    testgen::write_corpus(tmp.path.string(), 100, 3, 424242u);
    std::string args = "analyze --dir '" + tmp.path.string() + "'";
    CmdResult first = run_cli(args);
    CmdResult second = run_cli(args);
    if (first.status != 0 || second.status != 0) {
        detail = "cli exited with " + std::to_string(first.status) + "/" +
                 std::to_string(second.status);
    } else if (first.out != second.out) {
        detail = "outputs differ between runs";
    } else if (first.out.empty()) {
        detail = "no output produced";
    } else {
        ok = true;
    }
    report("deterministic-output", ok, ms_since(start), detail);
}

// ---------------------------------------------------------------------------
// 7. Scalability smoke: >= 5000 functions analyzed inside 60 s.

void check_scalability() {
    std::string detail;
    bool ok = false;
    TempDir tmp("scale");
    testgen::write_corpus(tmp.path.string(), 250, 24, 777u);

    auto start = Clock::now();
    CmdResult r = run_cli("analyze --dir '" + tmp.path.string() + "' --format csv");
    double elapsed = ms_since(start);

    if (r.status != 0) {
        detail = "cli exited with " + std::to_string(r.status);
    } else {
        std::size_t rows = std::count(r.out.begin(), r.out.end(), '\n');
        if (rows < 5001) {  // header + one row per function
            detail = "corpus too small: " + std::to_string(rows) + " csv rows";
        } else if (elapsed >= 60000.0) {
            detail = "took " + std::to_string(elapsed) + " ms (budget 60000)";
        } else {
            ok = true;
        }
    }
    report("scalability-5000-functions", ok, elapsed, detail);
}

// ---------------------------------------------------------------------------
// 8. Mini-corpus ranking quality: tool vs the SLOC baselines at p = 0.2.

void check_minicorpus_quality() {
    auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        AnalysisResult ar = analyze_directory(g_fixtures + "/minicorpus/src");
        std::vector<Diagnostic> warnings;
        GroundTruth gt =
            load_ground_truth(g_fixtures + "/minicorpus/ground_truth.csv", warnings);
        EvaluationReport er = coverage_curve(to_scored(ar.functions), gt, {0.2});
        double tool = er.tool[0].coverage;
        double down = er.manual_down[0].coverage;
        double up = er.manual_up[0].coverage;
        if (ar.functions.size() < 25) {
            detail = "mini corpus has only " + std::to_string(ar.functions.size()) +
                     " functions";
        } else if (er.matched < static_cast<int>(gt.vulnerable.size())) {
            detail = "ground truth not fully matched: " + std::to_string(er.matched) + "/" +
                     std::to_string(gt.vulnerable.size());
        } else if (!(tool > up)) {
            detail = "tool coverage " + std::to_string(tool) + " not above manual-up " +
                     std::to_string(up);
        } else if (!(tool >= down)) {
            detail = "tool coverage " + std::to_string(tool) + " below manual-down " +
                     std::to_string(down);
        } else {
            ok = true;
        }
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report("minicorpus-vs-baselines", ok, ms_since(start), detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <cli-path> <fixtures-dir>\n";
        return 64;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];

    check_worked_example();
    check_priority_formula();
    check_cyclomatic_oracle();
    check_selection_invariants();
    check_evaluation_sanity();
    check_determinism();
    check_scalability();
    check_minicorpus_quality();

    if (g_failures == 0)
        std::printf("all acceptance checks passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", g_failures);
    return g_failures;
}
