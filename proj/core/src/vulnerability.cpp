#include "vulnrank/vulnerability.hpp"

#include <algorithm>

namespace vulnrank {
namespace {

struct ControlWalk {
    int total = 0;
    int max_depth = 0;
    int max_subtree = 0;
    int if_without_else = 0;
    std::map<std::string, int> var_counts;

    // Returns the subtree size rooted at cs (cs included).
    int visit(const ControlStructure& cs, int depth) {
        ++total;
        max_depth = std::max(max_depth, depth);
        if (cs.kind == ControlKind::If && !cs.has_else) ++if_without_else;
        for (const auto& v : cs.predicate_variables) ++var_counts[v];
        int size = 1;
        for (const auto& child : cs.children) size += visit(child, depth + 1);
        max_subtree = std::max(max_subtree, size);
        return size;
    }
};

} // namespace

DependencyMetrics dependency_metrics(const FunctionModel& fm) {
    DependencyMetrics dm;
    dm.params = static_cast<int>(fm.parameters.size());
    std::set<std::string> args;
    for (const auto& cs : fm.call_sites)
        args.insert(cs.argument_variables.begin(), cs.argument_variables.end());
    dm.callee_arg_vars = static_cast<int>(args.size());
    return dm;
}

PointerMetrics pointer_metrics(const FunctionModel& fm) {
    PointerMetrics pm;
    pm.ops = static_cast<int>(fm.pointer_ops.size());
    std::map<std::string, int> per_var;
    for (const auto& op : fm.pointer_ops) ++per_var[op.variable];
    pm.vars = static_cast<int>(per_var.size());
    for (const auto& [_, n] : per_var) pm.max_per_var = std::max(pm.max_per_var, n);
    return pm;
}

ControlMetrics control_structure_metrics(const FunctionModel& fm) {
    ControlWalk walk;
    for (const auto& root : fm.control_roots) walk.visit(root, 1);

    ControlMetrics cm;
    // Every non-root structure has exactly one immediate parent.
    cm.nested_pairs = walk.total - static_cast<int>(fm.control_roots.size());
    cm.max_nesting = walk.max_depth;
    cm.max_control_dependent = walk.max_subtree;
    for (const auto& [_, n] : walk.var_counts)
        cm.max_data_dependent = std::max(cm.max_data_dependent, n);
    cm.if_without_else = walk.if_without_else;
    cm.predicate_vars = static_cast<int>(walk.var_counts.size());
    return cm;
}

VulnerabilityVector vulnerability_vector(const FunctionModel& fm) {
    VulnerabilityVector vv;
    DependencyMetrics dm = dependency_metrics(fm);
    PointerMetrics pm = pointer_metrics(fm);
    ControlMetrics cm = control_structure_metrics(fm);
    vv.v1_params = dm.params;
    vv.v2_callee_arg_vars = dm.callee_arg_vars;
    vv.v3_pointer_arith = pm.ops;
    vv.v4_pointer_arith_vars = pm.vars;
    vv.v5_max_pointer_arith_per_var = pm.max_per_var;
    vv.v6_nested_control_pairs = cm.nested_pairs;
    vv.v7_max_control_nesting = cm.max_nesting;
    vv.v8_max_control_dependent = cm.max_control_dependent;
    vv.v9_max_data_dependent = cm.max_data_dependent;
    vv.v10_if_without_else = cm.if_without_else;
    vv.v11_predicate_vars = cm.predicate_vars;
    vv.score = vv.v1_params + vv.v2_callee_arg_vars + vv.v3_pointer_arith +
               vv.v4_pointer_arith_vars + vv.v5_max_pointer_arith_per_var +
               vv.v6_nested_control_pairs + vv.v7_max_control_nesting +
               vv.v8_max_control_dependent + vv.v9_max_data_dependent +
               vv.v10_if_without_else + vv.v11_predicate_vars;
    return vv;
}

std::set<std::string> predicate_variable_union(const FunctionModel& fm) {
    std::set<std::string> out;
    for (const auto& [var, _] : predicate_variable_counts(fm)) out.insert(var);
    return out;
}

std::map<std::string, int> predicate_variable_counts(const FunctionModel& fm) {
    ControlWalk walk;
    for (const auto& root : fm.control_roots) walk.visit(root, 1);
    return std::move(walk.var_counts);
}

} // namespace vulnrank
