#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "vulnrank/complexity.hpp"
#include "vulnrank/parser.hpp"
#include "vulnrank/ranking.hpp"
#include "vulnrank/vulnerability.hpp"

namespace {

// Deterministic mid-size function with loops, branches and pointer use.
std::string sample_function(int index, int blocks) {
    std::ostringstream out;
    out << "int work_" << index << "(int *buf, int len, int step) {\n"
        << "    int acc = 0;\n"
        << "    int i;\n";
    for (int b = 0; b < blocks; b++) {
        out << "    for (i = " << b << "; i < len; i++) {\n"
            << "        if (buf[i] > step && i % " << (b + 2) << ") {\n"
            << "            acc = acc + buf[i];\n"
            << "        } else {\n"
            << "            buf[i] = acc - " << b << ";\n"
            << "        }\n"
            << "    }\n";
    }
    out << "    while (acc > len) {\n"
        << "        acc = acc - step;\n"
        << "    }\n"
        << "    return acc;\n"
        << "}\n";
    return out.str();
}

std::string sample_file(int functions) {
    std::ostringstream out;
    for (int i = 0; i < functions; i++) out << sample_function(i, 1 + i % 4) << "\n";
    return out.str();
}

std::vector<vulnrank::ScoredFunction> random_table(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> cdist(1, 30);
    std::uniform_int_distribution<int> vdist(0, 40);
    std::vector<vulnrank::ScoredFunction> fns(n);
    for (int i = 0; i < n; i++) {
        fns[i].id.file_path = "f" + std::to_string(i % 97) + ".c";
        fns[i].id.function_name = "fn" + std::to_string(i);
        fns[i].complexity.score = cdist(rng);
        fns[i].vulnerability.score = vdist(rng);
        fns[i].sloc = 5 + i % 60;
    }
    return fns;
}

void BM_ParseFile(benchmark::State& state) {
    std::string source = sample_file(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        vulnrank::ParseResult pr = vulnrank::parse_translation_unit(source, "bench.c");
        benchmark::DoNotOptimize(pr.functions.data());
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(source.size()));
}
BENCHMARK(BM_ParseFile)->Arg(8)->Arg(64);

void BM_ScoreFunctions(benchmark::State& state) {
    std::string source = sample_file(static_cast<int>(state.range(0)));
    vulnrank::ParseResult pr = vulnrank::parse_translation_unit(source, "bench.c");
    for (auto _ : state) {
        int total = 0;
        for (const auto& fm : pr.functions) {
            total += vulnrank::complexity_vector(fm).score;
            total += vulnrank::vulnerability_vector(fm).score;
        }
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(pr.functions.size()));
}
BENCHMARK(BM_ScoreFunctions)->Arg(8)->Arg(64);

void BM_SelectCandidates(benchmark::State& state) {
    auto fns = random_table(static_cast<int>(state.range(0)), 1337u);
    for (auto _ : state) {
        vulnrank::BinTable bt = vulnrank::build_bins(fns);
        vulnrank::CandidateList cl = vulnrank::select_candidates(bt, 0.2);
        benchmark::DoNotOptimize(cl.entries.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SelectCandidates)->Range(1 << 10, 1 << 16);

void BM_PriorityScores(benchmark::State& state) {
    auto fns = random_table(static_cast<int>(state.range(0)), 2025u);
    vulnrank::BinTable bt = vulnrank::build_bins(fns);
    for (auto _ : state) {
        vulnrank::PriorityScoreMap psm = vulnrank::priority_scores(bt);
        benchmark::DoNotOptimize(psm.scores.size());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_PriorityScores)->Range(1 << 10, 1 << 14);

} // namespace

BENCHMARK_MAIN();
