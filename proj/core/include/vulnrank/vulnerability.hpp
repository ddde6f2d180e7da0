#pragma once

#include <map>
#include <set>
#include <string>

#include "vulnrank/model.hpp"

namespace vulnrank {

// V1..V11 for one function; score is the in-bin ranking key.
struct VulnerabilityVector {
    int v1_params = 0;                 // parameter variables
    int v2_callee_arg_vars = 0;        // distinct variables passed to callees
    int v3_pointer_arith = 0;          // pointer operations
    int v4_pointer_arith_vars = 0;     // distinct variables in pointer ops
    int v5_max_pointer_arith_per_var = 0;
    int v6_nested_control_pairs = 0;   // immediate parent/child structure pairs
    int v7_max_control_nesting = 0;    // forest depth, roots at 1
    int v8_max_control_dependent = 0;  // largest structure subtree, root included
    int v9_max_data_dependent = 0;     // most structures sharing one predicate variable
    int v10_if_without_else = 0;
    int v11_predicate_vars = 0;        // distinct variables across all predicates
    int score = 0;

    bool operator==(const VulnerabilityVector&) const = default;
};

struct DependencyMetrics {
    int params = 0;
    int callee_arg_vars = 0;
};

struct PointerMetrics {
    int ops = 0;
    int vars = 0;
    int max_per_var = 0;
};

struct ControlMetrics {
    int nested_pairs = 0;
    int max_nesting = 0;
    int max_control_dependent = 0;
    int max_data_dependent = 0;
    int if_without_else = 0;
    int predicate_vars = 0;
};

DependencyMetrics dependency_metrics(const FunctionModel& fm);
PointerMetrics pointer_metrics(const FunctionModel& fm);
ControlMetrics control_structure_metrics(const FunctionModel& fm);
VulnerabilityVector vulnerability_vector(const FunctionModel& fm);

// Report detail: every variable appearing in some control predicate (V11 is
// its size).
std::set<std::string> predicate_variable_union(const FunctionModel& fm);

// Report detail: per-variable count of control structures whose predicate
// uses the variable (V9 is the largest count).
std::map<std::string, int> predicate_variable_counts(const FunctionModel& fm);

} // namespace vulnrank
