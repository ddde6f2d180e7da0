#pragma once

#include <functional>
#include <map>
#include <vector>

#include "vulnrank/complexity.hpp"
#include "vulnrank/model.hpp"
#include "vulnrank/vulnerability.hpp"

namespace vulnrank {

struct ScoredFunction {
    FunctionId id;
    ComplexityVector complexity;
    VulnerabilityVector vulnerability;
    int sloc = 0;

    bool operator==(const ScoredFunction&) const = default;
};

// Functions grouped by exact complexity score. Iteration order is descending
// score; each bin is sorted by vulnerability score descending, ties by id.
struct BinTable {
    std::map<int, std::vector<ScoredFunction>, std::greater<int>> bins;
    std::size_t total_functions = 0;
};

struct CandidateEntry {
    ScoredFunction function;
    int selection_rank = 0;   // top-k iteration at which it was taken
    int in_bin_position = 0;  // 1-based position within its ordered bin
};

struct CandidateList {
    std::vector<CandidateEntry> entries;
    double selected_fraction = 0.0;
};

struct PriorityScoreMap {
    std::map<FunctionId, double> scores;
};

// Groups functions by exact complexity score. Throws EmptyInput when the
// sequence is empty.
BinTable build_bins(const std::vector<ScoredFunction>& functions);

// Iterative top-k selection: iteration k takes from every bin the functions
// whose in-bin dense rank by vulnerability score equals k; score ties are
// taken together. Stops after the first full iteration reaching fraction p.
// Throws InvalidFraction unless 0 < p <= 1.
CandidateList select_candidates(const BinTable& bt, double p);

// SLOC-only baselines: prefix of ceil(p*N) functions sorted by SLOC
// descending (down) or ascending (up), ties at the cut all included.
CandidateList manual_down(const std::vector<ScoredFunction>& functions, double p);
CandidateList manual_up(const std::vector<ScoredFunction>& functions, double p);

// Priority score for a function selected at iteration k out of N total:
//   100 - 100 * (count selected at iterations 1..k) / N
PriorityScoreMap priority_scores(const BinTable& bt);

} // namespace vulnrank
