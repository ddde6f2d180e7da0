#include "vulnrank/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "vulnrank/discovery.hpp"
#include "vulnrank/errors.hpp"
#include "vulnrank/parser.hpp"

namespace vulnrank {

ScoredFunction to_scored(const AnalyzedFunction& af) {
    return {af.model.id, af.complexity, af.vulnerability, af.model.sloc};
}

std::vector<ScoredFunction> to_scored(const std::vector<AnalyzedFunction>& afs) {
    std::vector<ScoredFunction> out;
    out.reserve(afs.size());
    for (const auto& af : afs) out.push_back(to_scored(af));
    return out;
}

AnalysisResult analyze_directory(const std::filesystem::path& root,
                                 const std::vector<std::string>& include,
                                 const std::vector<std::string>& exclude) {
    std::vector<std::string> files = discover_sources(root, include, exclude);

    struct FileOutput {
        std::vector<AnalyzedFunction> functions;
        std::vector<Diagnostic> diagnostics;
    };
    std::vector<FileOutput> per_file(files.size());
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            FileOutput& out = per_file[i];
            std::ifstream in(root / files[i], std::ios::binary);
            if (!in) {
                out.diagnostics.push_back(
                    {DiagnosticKind::FileSkipped, files[i], 0, "cannot read file"});
                continue;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            try {
                ParseResult pr = parse_translation_unit(buf.str(), files[i]);
                out.diagnostics = std::move(pr.diagnostics);
                out.functions.reserve(pr.functions.size());
                for (auto& fm : pr.functions) {
                    AnalyzedFunction af;
                    af.model = std::move(fm);
                    af.complexity = complexity_vector(af.model);
                    af.vulnerability = vulnerability_vector(af.model);
                    out.functions.push_back(std::move(af));
                }
            } catch (const ParseError& e) {
                out.diagnostics.push_back(
                    {DiagnosticKind::FileSkipped, files[i], e.line(), e.what()});
            } catch (const std::exception& e) {
                out.diagnostics.push_back(
                    {DiagnosticKind::FileSkipped, files[i], 0, e.what()});
            }
        }
    };

    std::size_t n_threads =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), files.size());
    if (n_threads > 1) {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    } else {
        work();
    }

    AnalysisResult result;
    result.files_scanned = files.size();
    for (auto& out : per_file) {
        std::move(out.functions.begin(), out.functions.end(),
                  std::back_inserter(result.functions));
        std::move(out.diagnostics.begin(), out.diagnostics.end(),
                  std::back_inserter(result.diagnostics));
    }
    std::sort(result.functions.begin(), result.functions.end(),
              [](const AnalyzedFunction& a, const AnalyzedFunction& b) {
                  return a.model.id < b.model.id;
              });
    return result;
}

} // namespace vulnrank
