#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vulnrank/model.hpp"
#include "vulnrank/ranking.hpp"

namespace vulnrank {

struct GroundTruthEntry {
    std::string file_path;  // normalized relative path
    std::string function_name;
    std::optional<int> start_line;

    bool operator==(const GroundTruthEntry&) const = default;
};

struct GroundTruth {
    std::vector<GroundTruthEntry> vulnerable;  // deduplicated, file order
};

struct CoveragePoint {
    double iden_fraction = 0.0;  // requested fraction of functions
    double coverage = 0.0;       // matched truth entries covered
};

struct DeltaPoint {
    double iden_fraction = 0.0;
    double recall_delta = 0.0;  // ablated coverage minus full coverage
};

struct EvaluationReport {
    std::vector<CoveragePoint> tool;
    std::vector<CoveragePoint> manual_down;
    std::vector<CoveragePoint> manual_up;
    int matched = 0;
    std::vector<GroundTruthEntry> unmatched;
};

// Keyed by dropped dimension: CD1 (C1), CD2 (C2-C4), VD1 (V1-V2),
// VD2 (V3-V5), VD3 (V6-V11).
struct SensitivityReport {
    std::map<std::string, std::vector<DeltaPoint>> deltas;
};

inline constexpr const char* kDimensions[] = {"CD1", "CD2", "VD1", "VD2", "VD3"};

// Lower-cases nothing; just trims, converts backslashes to '/', and strips a
// leading "./".
std::string normalize_rel_path(std::string_view path);

// CSV rows `file_path,function_name[,start_line]`; blank lines and `#`
// comments skipped. Duplicate rows are dropped with a DuplicateEntry
// diagnostic. Throws FormatError with the offending line number.
GroundTruth parse_ground_truth(std::string_view text, const std::string& origin,
                               std::vector<Diagnostic>& warnings);

// Reads and parses a ground-truth file; throws FormatError if unreadable.
GroundTruth load_ground_truth(const std::string& path, std::vector<Diagnostic>& warnings);

// Coverage of tool selection and both SLOC baselines at each requested
// fraction. Throws NoMatchedGroundTruth when no entry matches the codebase.
EvaluationReport coverage_curve(const std::vector<ScoredFunction>& functions,
                                const GroundTruth& gt,
                                const std::vector<double>& fractions);

// Copy of `functions` with one metric dimension zeroed out and both scores
// re-summed from the remaining fields.
std::vector<ScoredFunction> drop_dimension(const std::vector<ScoredFunction>& functions,
                                           const std::string& dimension);

// Coverage delta of each single-dimension ablation against the full-metric
// run, per fraction.
SensitivityReport sensitivity_analysis(const std::vector<ScoredFunction>& functions,
                                       const GroundTruth& gt,
                                       const std::vector<double>& fractions);

} // namespace vulnrank
