#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vulnrank/analysis.hpp"
#include "vulnrank/errors.hpp"
#include "vulnrank/evaluation.hpp"
#include "vulnrank/ranking.hpp"
#include "vulnrank/report.hpp"

namespace {

// Exit codes: 0 ok, 1 configuration or I/O error, 2 no functions found,
// 3 no ground-truth entry matched.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoFunctions = 2;
constexpr int kExitNoMatch = 3;

struct Options {
    std::string dir;
    std::vector<std::string> include;
    std::vector<std::string> exclude;
    double p = 0.20;
    std::vector<double> fractions;
    std::string ground_truth;
    std::string format = "json";
    std::string out_path;
    bool baselines = false;
    bool sensitivity = false;
};

void check_fraction(double p) {
    if (!(p > 0.0) || p > 1.0) throw vulnrank::InvalidFraction(p);
}

void print_diagnostics(const std::vector<vulnrank::Diagnostic>& diags) {
    for (const auto& d : diags)
        std::cerr << "warning: " << d.file << ':' << d.line << ": " << d.message << '\n';
}

// Empty path means stdout.
bool write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

int run_analyze(const Options& opt) {
    check_fraction(opt.p);
    vulnrank::AnalysisResult ar =
        vulnrank::analyze_directory(opt.dir, opt.include, opt.exclude);
    print_diagnostics(ar.diagnostics);
    if (ar.functions.empty()) {
        std::cerr << "error: no functions found under " << opt.dir << '\n';
        return kExitNoFunctions;
    }

    std::vector<vulnrank::ScoredFunction> scored = vulnrank::to_scored(ar.functions);
    vulnrank::CandidateList cl =
        vulnrank::select_candidates(vulnrank::build_bins(scored), opt.p);
    std::string rendered = opt.format == "csv" ? vulnrank::render_analysis_csv(ar, cl)
                                               : vulnrank::render_analysis_json(ar, cl, opt.p);
    if (!write_output(opt.out_path, rendered)) {
        std::cerr << "error: cannot write output\n";
        return kExitError;
    }
    return kExitOk;
}

int run_evaluate(const Options& opt) {
    for (double f : opt.fractions) check_fraction(f);

    std::vector<vulnrank::Diagnostic> warnings;
    vulnrank::GroundTruth gt = vulnrank::load_ground_truth(opt.ground_truth, warnings);
    print_diagnostics(warnings);

    vulnrank::AnalysisResult ar =
        vulnrank::analyze_directory(opt.dir, opt.include, opt.exclude);
    print_diagnostics(ar.diagnostics);

    std::vector<vulnrank::ScoredFunction> scored = vulnrank::to_scored(ar.functions);
    vulnrank::EvaluationReport er = vulnrank::coverage_curve(scored, gt, opt.fractions);
    vulnrank::SensitivityReport sr;
    if (opt.sensitivity) sr = vulnrank::sensitivity_analysis(scored, gt, opt.fractions);

    const vulnrank::SensitivityReport* srp = opt.sensitivity ? &sr : nullptr;
    std::string rendered = opt.format == "csv"
                               ? vulnrank::render_evaluation_csv(er, srp, opt.baselines)
                               : vulnrank::render_evaluation_json(er, srp, opt.baselines);
    if (!write_output(opt.out_path, rendered)) {
        std::cerr << "error: cannot write output\n";
        return kExitError;
    }
    return kExitOk;
}

int run_export_scores(const Options& opt) {
    vulnrank::AnalysisResult ar =
        vulnrank::analyze_directory(opt.dir, opt.include, opt.exclude);
    print_diagnostics(ar.diagnostics);
    if (ar.functions.empty()) {
        std::cerr << "error: no functions found under " << opt.dir << '\n';
        return kExitNoFunctions;
    }

    std::vector<vulnrank::ScoredFunction> scored = vulnrank::to_scored(ar.functions);
    vulnrank::PriorityScoreMap psm = vulnrank::priority_scores(vulnrank::build_bins(scored));
    if (!write_output(opt.out_path, vulnrank::render_priority_csv(scored, psm))) {
        std::cerr << "error: cannot write output\n";
        return kExitError;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vulnrank: rank C functions by vulnerability-proneness metrics"};
    app.require_subcommand(1);
    Options opt;

    auto add_source_opts = [&](CLI::App* cmd) {
        cmd->add_option("--dir", opt.dir, "Directory to analyze")->required();
        cmd->add_option("--include", opt.include, "Glob a relative path must match");
        cmd->add_option("--exclude", opt.exclude, "Glob that drops matching paths");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Per-function metrics and candidate list");
    add_source_opts(analyze);
    analyze->add_option("--p", opt.p, "Selection fraction in (0,1]")->capture_default_str();
    analyze->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    analyze->add_option("--out", opt.out_path, "Output file (default stdout)");

    CLI::App* evaluate = app.add_subcommand("evaluate", "Coverage against a ground-truth list");
    add_source_opts(evaluate);
    evaluate->add_option("--ground-truth", opt.ground_truth, "CSV of known-vulnerable functions")
        ->required();
    evaluate->add_option("--fractions", opt.fractions, "Fractions to evaluate at")
        ->delimiter(',');
    evaluate->add_flag("--baselines", opt.baselines, "Include SLOC baseline curves");
    evaluate->add_flag("--sensitivity", opt.sensitivity, "Include metric-dimension ablations");
    evaluate->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    evaluate->add_option("--out", opt.out_path, "Output file (default stdout)");

    CLI::App* export_scores = app.add_subcommand("export-scores", "Per-function priority scores");
    add_source_opts(export_scores);
    export_scores->add_option("--out", opt.out_path, "Output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    if (opt.fractions.empty()) opt.fractions = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30};

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (evaluate->parsed()) return run_evaluate(opt);
        if (export_scores->parsed()) return run_export_scores(opt);
    } catch (const vulnrank::NoMatchedGroundTruth& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoMatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}
