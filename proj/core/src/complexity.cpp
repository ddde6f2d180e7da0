#include "vulnrank/complexity.hpp"

#include <algorithm>

namespace vulnrank {
namespace {

// loop_ancestors = number of loops strictly above cs in the forest.
void walk(const ControlStructure& cs, int loop_ancestors, LoopMetrics& lm) {
    int here = loop_ancestors;
    if (cs.is_loop()) {
        ++lm.loops;
        lm.nested_pairs += loop_ancestors;  // one pair per enclosing loop
        here += 1;
        lm.max_nesting = std::max(lm.max_nesting, here);
    }
    for (const auto& child : cs.children) walk(child, here, lm);
}

} // namespace

int cyclomatic_complexity(const FunctionModel& fm) {
    return fm.decision_points + 1;
}

LoopMetrics loop_metrics(const FunctionModel& fm) {
    LoopMetrics lm;
    for (const auto& root : fm.control_roots) walk(root, 0, lm);
    return lm;
}

ComplexityVector complexity_vector(const FunctionModel& fm) {
    ComplexityVector cv;
    cv.c1_cyclomatic = cyclomatic_complexity(fm);
    LoopMetrics lm = loop_metrics(fm);
    cv.c2_loops = lm.loops;
    cv.c3_nested_loop_pairs = lm.nested_pairs;
    cv.c4_max_loop_nesting = lm.max_nesting;
    cv.score = cv.c1_cyclomatic + cv.c2_loops + cv.c3_nested_loop_pairs + cv.c4_max_loop_nesting;
    return cv;
}

} // namespace vulnrank
