#include "vulnrank/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "vulnrank/errors.hpp"

namespace vulnrank {
namespace {

// `count/total >= p` with a guard against binary-fraction noise
// (0.2 * 10 evaluating just above 2).
bool fraction_reached(std::size_t count, std::size_t total, double p) {
    return static_cast<double>(count) + 1e-9 >= p * static_cast<double>(total);
}

void check_fraction(double p) {
    if (!(p > 0.0) || p > 1.0) throw InvalidFraction(p);
}

// Smallest prefix length m with m/n >= p.
std::size_t prefix_size(double p, std::size_t n) {
    auto m = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(n) - 1e-9));
    return std::clamp<std::size_t>(m, 1, n);
}

CandidateList sloc_baseline(std::vector<ScoredFunction> sorted, double p, bool descending) {
    check_fraction(p);
    if (sorted.empty()) throw EmptyInput();
    std::sort(sorted.begin(), sorted.end(),
              [descending](const ScoredFunction& a, const ScoredFunction& b) {
                  if (a.sloc != b.sloc) return descending ? a.sloc > b.sloc : a.sloc < b.sloc;
                  return a.id < b.id;
              });

    std::size_t cut = prefix_size(p, sorted.size());
    while (cut < sorted.size() && sorted[cut].sloc == sorted[cut - 1].sloc) ++cut;

    CandidateList cl;
    cl.entries.reserve(cut);
    int rank = 0;
    for (std::size_t i = 0; i < cut; ++i) {
        if (i == 0 || sorted[i].sloc != sorted[i - 1].sloc) ++rank;  // dense SLOC rank
        cl.entries.push_back({sorted[i], rank, static_cast<int>(i + 1)});
    }
    cl.selected_fraction =
        static_cast<double>(cut) / static_cast<double>(sorted.size());
    return cl;
}

} // namespace

BinTable build_bins(const std::vector<ScoredFunction>& functions) {
    if (functions.empty()) throw EmptyInput();
    BinTable bt;
    bt.total_functions = functions.size();
    for (const auto& f : functions) bt.bins[f.complexity.score].push_back(f);
    for (auto& [_, bin] : bt.bins) {
        std::sort(bin.begin(), bin.end(), [](const ScoredFunction& a, const ScoredFunction& b) {
            if (a.vulnerability.score != b.vulnerability.score)
                return a.vulnerability.score > b.vulnerability.score;
            return a.id < b.id;
        });
    }
    return bt;
}

CandidateList select_candidates(const BinTable& bt, double p) {
    check_fraction(p);
    if (bt.total_functions == 0) throw EmptyInput();

    // Dense in-bin rank per function, parallel to each bin's order.
    std::vector<std::vector<int>> ranks;
    int max_rank = 0;
    for (const auto& [_, bin] : bt.bins) {
        std::vector<int> r(bin.size());
        for (std::size_t i = 0; i < bin.size(); ++i) {
            if (i == 0)
                r[i] = 1;
            else if (bin[i].vulnerability.score == bin[i - 1].vulnerability.score)
                r[i] = r[i - 1];
            else
                r[i] = r[i - 1] + 1;
        }
        max_rank = std::max(max_rank, r.empty() ? 0 : r.back());
        ranks.push_back(std::move(r));
    }

    CandidateList cl;
    std::size_t selected = 0;
    for (int k = 1; k <= max_rank; ++k) {
        std::size_t bin_idx = 0;
        for (const auto& [_, bin] : bt.bins) {
            const auto& r = ranks[bin_idx++];
            for (std::size_t i = 0; i < bin.size(); ++i) {
                if (r[i] != k) continue;
                cl.entries.push_back({bin[i], k, static_cast<int>(i + 1)});
                ++selected;
            }
        }
        if (fraction_reached(selected, bt.total_functions, p)) break;
    }
    cl.selected_fraction =
        static_cast<double>(selected) / static_cast<double>(bt.total_functions);
    return cl;
}

CandidateList manual_down(const std::vector<ScoredFunction>& functions, double p) {
    return sloc_baseline(functions, p, /*descending=*/true);
}

CandidateList manual_up(const std::vector<ScoredFunction>& functions, double p) {
    return sloc_baseline(functions, p, /*descending=*/false);
}

PriorityScoreMap priority_scores(const BinTable& bt) {
    CandidateList all = select_candidates(bt, 1.0);

    std::map<int, std::size_t> per_rank;  // k -> functions taken at iteration k
    for (const auto& e : all.entries) ++per_rank[e.selection_rank];

    std::map<int, double> score_for_rank;
    std::size_t cumulative = 0;
    auto total = static_cast<double>(bt.total_functions);
    for (const auto& [k, n] : per_rank) {
        cumulative += n;
        score_for_rank[k] = 100.0 - (100.0 * static_cast<double>(cumulative)) / total;
    }

    PriorityScoreMap psm;
    for (const auto& e : all.entries)
        psm.scores[e.function.id] = score_for_rank[e.selection_rank];
    return psm;
}

} // namespace vulnrank
