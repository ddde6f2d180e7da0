#pragma once

#include <filesystem>
#include <vector>

#include "vulnrank/complexity.hpp"
#include "vulnrank/model.hpp"
#include "vulnrank/ranking.hpp"
#include "vulnrank/vulnerability.hpp"

namespace vulnrank {

struct AnalyzedFunction {
    FunctionModel model;
    ComplexityVector complexity;
    VulnerabilityVector vulnerability;
};

struct AnalysisResult {
    std::vector<AnalyzedFunction> functions;  // sorted by (file, name, line)
    std::vector<Diagnostic> diagnostics;
    std::size_t files_scanned = 0;
};

ScoredFunction to_scored(const AnalyzedFunction& af);
std::vector<ScoredFunction> to_scored(const std::vector<AnalyzedFunction>& afs);

// Discovers, parses and scores every source file under root. Files are
// processed by a small worker pool; the merged result is deterministic.
// Unreadable files become FileSkipped diagnostics rather than errors.
AnalysisResult analyze_directory(const std::filesystem::path& root,
                                 const std::vector<std::string>& include = {},
                                 const std::vector<std::string>& exclude = {});

} // namespace vulnrank
