#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "vulnrank/analysis.hpp"
#include "vulnrank/parser.hpp"
#include "vulnrank/ranking.hpp"
#include "vulnrank/report.hpp"

using namespace vulnrank;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kFibPath = std::string(VULNRANK_FIXTURE_DIR) + "/fib/fib.c";

AnalysisResult fib_result() {
    AnalysisResult ar;
    ParseResult pr = parse_translation_unit(slurp(kFibPath), "fib.c");
    for (const auto& fm : pr.functions) {
        AnalyzedFunction af;
        af.model = fm;
        af.complexity = complexity_vector(fm);
        af.vulnerability = vulnerability_vector(fm);
        ar.functions.push_back(std::move(af));
    }
    ar.files_scanned = 1;
    return ar;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("analysis json carries the full per-function detail") {
    AnalysisResult ar = fib_result();
    CandidateList cl = select_candidates(build_bins(to_scored(ar.functions)), 0.2);
    std::string text = render_analysis_json(ar, cl, 0.2);

    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["schema"] == "vulnrank-analysis-v1");
    CHECK(j["summary"]["files_scanned"] == 1);
    CHECK(j["summary"]["functions"] == 1);
    CHECK(j["summary"]["requested_fraction"] == 0.2);
    CHECK(j["summary"]["selected"] == 1);

    REQUIRE(j["functions"].size() == 1);
    const auto& f = j["functions"][0];
    CHECK(f["file_path"] == "fib.c");
    CHECK(f["function_name"] == "fibonacci");
    CHECK(f["start_line"] == 1);
    CHECK(f["sloc"] == 16);
    CHECK(f["complexity"]["c1_cyclomatic"] == 5);
    CHECK(f["complexity"]["score"] == 7);
    CHECK(f["vulnerability"]["v3_pointer_arith"] == 6);
    CHECK(f["vulnerability"]["score"] == 31);
    CHECK(f["max_data_dependent_variable"] == "n");
    CHECK(f["predicate_variables"] == nlohmann::json::array({"i", "n"}));
    CHECK(f["selected"] == true);
    CHECK(f["selection_rank"] == 1);

    REQUIRE(j["candidates"].size() == 1);
    CHECK(j["candidates"][0]["in_bin_position"] == 1);
}

TEST_CASE("analysis csv emits one golden row per function") {
    AnalysisResult ar = fib_result();
    CandidateList cl = select_candidates(build_bins(to_scored(ar.functions)), 1.0);
    std::string text = render_analysis_csv(ar, cl);

    std::istringstream lines(text);
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK(header ==
          "file_path,function_name,start_line,sloc,"
          "c1,c2,c3,c4,complexity_score,"
          "v1,v2,v3,v4,v5,v6,v7,v8,v9,v10,v11,vulnerability_score,"
          "selected,selection_rank,in_bin_position");
    CHECK(row == "fib.c,fibonacci,1,16,5,1,0,1,7,2,0,6,1,6,2,2,3,4,3,2,31,1,1,1");
}

TEST_CASE("rendering twice is byte-identical") {
    AnalysisResult ar = fib_result();
    CandidateList cl = select_candidates(build_bins(to_scored(ar.functions)), 0.5);
    CHECK(render_analysis_json(ar, cl, 0.5) == render_analysis_json(ar, cl, 0.5));
    CHECK(render_analysis_csv(ar, cl) == render_analysis_csv(ar, cl));
}

TEST_CASE("priority csv uses two decimals and id order") {
    std::vector<ScoredFunction> fns;
    int vscores[] = {9, 9, 5, 5, 5, 4, 3, 2, 1, 0};
    for (int i = 0; i < 10; i++) {
        ScoredFunction sf;
        sf.id = {"t.c", "f" + std::to_string(i), 1};
        sf.complexity.score = 3;
        sf.vulnerability.score = vscores[i];
        fns.push_back(sf);
    }
    PriorityScoreMap psm = priority_scores(build_bins(fns));
    std::string text = render_priority_csv(fns, psm);

    std::istringstream lines(text);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "file_path,function_name,priority_score");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "t.c,f0,80.00");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "t.c,f1,80.00");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "t.c,f2,50.00");
    CHECK(contains(text, "t.c,f9,0.00\n"));
}

TEST_CASE("evaluation csv projects curves and optional extras") {
    EvaluationReport er;
    er.matched = 2;
    er.tool = {{0.2, 1.0}, {0.4, 1.0}};
    er.manual_down = {{0.2, 0.0}, {0.4, 0.5}};
    er.manual_up = {{0.2, 1.0}, {0.4, 1.0}};

    std::string plain = render_evaluation_csv(er, nullptr, false);
    CHECK(contains(plain, "method,fraction,value\n"));
    CHECK(contains(plain, "tool,0.2000,1.0000\n"));
    CHECK_FALSE(contains(plain, "manual_down"));

    std::string with_baselines = render_evaluation_csv(er, nullptr, true);
    CHECK(contains(with_baselines, "manual_down,0.4000,0.5000\n"));
    CHECK(contains(with_baselines, "manual_up,0.2000,1.0000\n"));

    SensitivityReport sr;
    sr.deltas["CD1"] = {{0.2, -0.5}};
    std::string with_deltas = render_evaluation_csv(er, &sr, false);
    CHECK(contains(with_deltas, "delta_CD1,0.2000,-0.5000\n"));
}

TEST_CASE("evaluation json gates baselines and sensitivity") {
    EvaluationReport er;
    er.matched = 1;
    er.unmatched = {{"gone.c", "ghost", 7}};
    er.tool = {{0.25, 1.0}};
    er.manual_down = {{0.25, 0.0}};
    er.manual_up = {{0.25, 0.0}};

    nlohmann::json plain = nlohmann::json::parse(render_evaluation_json(er, nullptr, false));
    CHECK(plain["schema"] == "vulnrank-evaluation-v1");
    CHECK(plain["matched"] == 1);
    REQUIRE(plain["unmatched"].size() == 1);
    CHECK(plain["unmatched"][0]["function_name"] == "ghost");
    CHECK(plain["unmatched"][0]["start_line"] == 7);
    CHECK(plain["curves"]["tool"][0]["fraction"] == 0.25);
    CHECK(plain["curves"]["tool"][0]["coverage"] == 1.0);
    CHECK_FALSE(plain["curves"].contains("manual_down"));
    CHECK_FALSE(plain.contains("sensitivity"));

    SensitivityReport sr;
    sr.deltas["VD2"] = {{0.25, 0.0}};
    nlohmann::json full = nlohmann::json::parse(render_evaluation_json(er, &sr, true));
    CHECK(full["curves"].contains("manual_up"));
    CHECK(full["sensitivity"]["VD2"][0]["delta"] == 0.0);
}

} // TEST_SUITE
