#include "vulnrank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace vulnrank {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

// The variable behind V9: predicate variable hitting the most structures,
// lexicographically smallest on ties. Empty when there are no predicates.
std::string max_data_dependent_variable(const FunctionModel& fm) {
    std::string best;
    int best_count = 0;
    for (const auto& [var, count] : predicate_variable_counts(fm)) {
        if (count > best_count) {  // map order makes ties pick the smallest
            best = var;
            best_count = count;
        }
    }
    return best;
}

struct SelectionInfo {
    int rank = 0;
    int in_bin_position = 0;
};

std::map<FunctionId, SelectionInfo> selection_index(const CandidateList& cl) {
    std::map<FunctionId, SelectionInfo> index;
    for (const auto& e : cl.entries)
        index[e.function.id] = {e.selection_rank, e.in_bin_position};
    return index;
}

ordered_json id_json(const FunctionId& id) {
    ordered_json j;
    j["file_path"] = id.file_path;
    j["function_name"] = id.function_name;
    j["start_line"] = id.start_line;
    return j;
}

ordered_json complexity_json(const ComplexityVector& c) {
    ordered_json j;
    j["c1_cyclomatic"] = c.c1_cyclomatic;
    j["c2_loops"] = c.c2_loops;
    j["c3_nested_loop_pairs"] = c.c3_nested_loop_pairs;
    j["c4_max_loop_nesting"] = c.c4_max_loop_nesting;
    j["score"] = c.score;
    return j;
}

ordered_json vulnerability_json(const VulnerabilityVector& v) {
    ordered_json j;
    j["v1_params"] = v.v1_params;
    j["v2_callee_arg_vars"] = v.v2_callee_arg_vars;
    j["v3_pointer_arith"] = v.v3_pointer_arith;
    j["v4_pointer_arith_vars"] = v.v4_pointer_arith_vars;
    j["v5_max_pointer_arith_per_var"] = v.v5_max_pointer_arith_per_var;
    j["v6_nested_control_pairs"] = v.v6_nested_control_pairs;
    j["v7_max_control_nesting"] = v.v7_max_control_nesting;
    j["v8_max_control_dependent"] = v.v8_max_control_dependent;
    j["v9_max_data_dependent"] = v.v9_max_data_dependent;
    j["v10_if_without_else"] = v.v10_if_without_else;
    j["v11_predicate_vars"] = v.v11_predicate_vars;
    j["score"] = v.score;
    return j;
}

ordered_json curve_json(const std::vector<CoveragePoint>& points) {
    ordered_json arr = ordered_json::array();
    for (const auto& pt : points) {
        ordered_json j;
        j["fraction"] = pt.iden_fraction;
        j["coverage"] = pt.coverage;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace

std::string render_analysis_json(const AnalysisResult& ar, const CandidateList& cl, double p) {
    auto selected = selection_index(cl);

    ordered_json root;
    root["schema"] = "vulnrank-analysis-v1";
    ordered_json summary;
    summary["files_scanned"] = ar.files_scanned;
    summary["functions"] = ar.functions.size();
    summary["requested_fraction"] = p;
    summary["selected"] = cl.entries.size();
    summary["selected_fraction"] = cl.selected_fraction;
    root["summary"] = std::move(summary);

    ordered_json functions = ordered_json::array();
    for (const auto& af : ar.functions) {
        ordered_json j = id_json(af.model.id);
        j["end_line"] = af.model.end_line;
        j["sloc"] = af.model.sloc;
        j["complexity"] = complexity_json(af.complexity);
        j["vulnerability"] = vulnerability_json(af.vulnerability);
        j["max_data_dependent_variable"] = max_data_dependent_variable(af.model);
        ordered_json vars = ordered_json::array();
        for (const auto& v : predicate_variable_union(af.model)) vars.push_back(v);
        j["predicate_variables"] = std::move(vars);
        auto it = selected.find(af.model.id);
        j["selected"] = it != selected.end();
        j["selection_rank"] = it != selected.end() ? it->second.rank : 0;
        functions.push_back(std::move(j));
    }
    root["functions"] = std::move(functions);

    ordered_json candidates = ordered_json::array();
    for (const auto& e : cl.entries) {
        ordered_json j = id_json(e.function.id);
        j["selection_rank"] = e.selection_rank;
        j["in_bin_position"] = e.in_bin_position;
        j["complexity_score"] = e.function.complexity.score;
        j["vulnerability_score"] = e.function.vulnerability.score;
        candidates.push_back(std::move(j));
    }
    root["candidates"] = std::move(candidates);

    return root.dump(2) + "\n";
}

std::string render_analysis_csv(const AnalysisResult& ar, const CandidateList& cl) {
    auto selected = selection_index(cl);
    std::ostringstream out;
    out << "file_path,function_name,start_line,sloc,"
           "c1,c2,c3,c4,complexity_score,"
           "v1,v2,v3,v4,v5,v6,v7,v8,v9,v10,v11,vulnerability_score,"
           "selected,selection_rank,in_bin_position\n";
    for (const auto& af : ar.functions) {
        const auto& c = af.complexity;
        const auto& v = af.vulnerability;
        auto it = selected.find(af.model.id);
        out << af.model.id.file_path << ',' << af.model.id.function_name << ','
            << af.model.id.start_line << ',' << af.model.sloc << ','
            << c.c1_cyclomatic << ',' << c.c2_loops << ',' << c.c3_nested_loop_pairs << ','
            << c.c4_max_loop_nesting << ',' << c.score << ','
            << v.v1_params << ',' << v.v2_callee_arg_vars << ',' << v.v3_pointer_arith << ','
            << v.v4_pointer_arith_vars << ',' << v.v5_max_pointer_arith_per_var << ','
            << v.v6_nested_control_pairs << ',' << v.v7_max_control_nesting << ','
            << v.v8_max_control_dependent << ',' << v.v9_max_data_dependent << ','
            << v.v10_if_without_else << ',' << v.v11_predicate_vars << ',' << v.score << ','
            << (it != selected.end() ? 1 : 0) << ','
            << (it != selected.end() ? it->second.rank : 0) << ','
            << (it != selected.end() ? it->second.in_bin_position : 0) << '\n';
    }
    return out.str();
}

std::string render_evaluation_json(const EvaluationReport& er, const SensitivityReport* sr,
                                   bool include_baselines) {
    ordered_json root;
    root["schema"] = "vulnrank-evaluation-v1";
    root["matched"] = er.matched;
    ordered_json unmatched = ordered_json::array();
    for (const auto& e : er.unmatched) {
        ordered_json j;
        j["file_path"] = e.file_path;
        j["function_name"] = e.function_name;
        if (e.start_line) j["start_line"] = *e.start_line;
        unmatched.push_back(std::move(j));
    }
    root["unmatched"] = std::move(unmatched);

    ordered_json curves;
    curves["tool"] = curve_json(er.tool);
    if (include_baselines) {
        curves["manual_down"] = curve_json(er.manual_down);
        curves["manual_up"] = curve_json(er.manual_up);
    }
    root["curves"] = std::move(curves);

    if (sr) {
        ordered_json sensitivity;
        for (const auto& [dim, deltas] : sr->deltas) {
            ordered_json arr = ordered_json::array();
            for (const auto& d : deltas) {
                ordered_json j;
                j["fraction"] = d.iden_fraction;
                j["delta"] = d.recall_delta;
                arr.push_back(std::move(j));
            }
            sensitivity[dim] = std::move(arr);
        }
        root["sensitivity"] = std::move(sensitivity);
    }
    return root.dump(2) + "\n";
}

std::string render_evaluation_csv(const EvaluationReport& er, const SensitivityReport* sr,
                                  bool include_baselines) {
    std::ostringstream out;
    out << "method,fraction,value\n";
    auto emit_curve = [&](const char* name, const std::vector<CoveragePoint>& points) {
        for (const auto& pt : points)
            out << name << ',' << fixed(pt.iden_fraction, 4) << ',' << fixed(pt.coverage, 4)
                << '\n';
    };
    emit_curve("tool", er.tool);
    if (include_baselines) {
        emit_curve("manual_down", er.manual_down);
        emit_curve("manual_up", er.manual_up);
    }
    if (sr) {
        for (const auto& [dim, deltas] : sr->deltas)
            for (const auto& d : deltas)
                out << "delta_" << dim << ',' << fixed(d.iden_fraction, 4) << ','
                    << fixed(d.recall_delta, 4) << '\n';
    }
    return out.str();
}

std::string render_priority_csv(const std::vector<ScoredFunction>& functions,
                                const PriorityScoreMap& psm) {
    std::vector<const ScoredFunction*> sorted;
    sorted.reserve(functions.size());
    for (const auto& f : functions) sorted.push_back(&f);
    std::sort(sorted.begin(), sorted.end(),
              [](const ScoredFunction* a, const ScoredFunction* b) { return a->id < b->id; });

    std::ostringstream out;
    out << "file_path,function_name,priority_score\n";
    for (const ScoredFunction* f : sorted) {
        auto it = psm.scores.find(f->id);
        double score = it != psm.scores.end() ? it->second : 0.0;
        out << f->id.file_path << ',' << f->id.function_name << ',' << fixed(score, 2) << '\n';
    }
    return out.str();
}

} // namespace vulnrank
