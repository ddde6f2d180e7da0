#pragma once

#include "vulnrank/model.hpp"

namespace vulnrank {

// C1..C4 for one function; score is the binning key.
struct ComplexityVector {
    int c1_cyclomatic = 0;        // decision points + 1
    int c2_loops = 0;             // loop structures
    int c3_nested_loop_pairs = 0; // ancestor/descendant loop pairs, any depth
    int c4_max_loop_nesting = 0;  // most loops on one nesting path
    int score = 0;

    bool operator==(const ComplexityVector&) const = default;
};

struct LoopMetrics {
    int loops = 0;
    int nested_pairs = 0;
    int max_nesting = 0;
};

// Decision points + 1. Decision points count if / while / for / do-while,
// each case label, each ?: and each short-circuit && / ||.
int cyclomatic_complexity(const FunctionModel& fm);

LoopMetrics loop_metrics(const FunctionModel& fm);

ComplexityVector complexity_vector(const FunctionModel& fm);

} // namespace vulnrank
