#include "vulnrank/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vulnrank/errors.hpp"

namespace vulnrank {
namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool entry_matches(const GroundTruthEntry& e, const FunctionId& id) {
    if (e.function_name != id.function_name) return false;
    if (e.file_path != normalize_rel_path(id.file_path)) return false;
    return !e.start_line || *e.start_line == id.start_line;
}

// Coverage of one selection: fraction of matched truth entries hit.
double coverage_of(const CandidateList& cl,
                   const std::vector<const GroundTruthEntry*>& matched_entries) {
    std::set<FunctionId> selected;
    for (const auto& e : cl.entries) selected.insert(e.function.id);
    int covered = 0;
    for (const auto* entry : matched_entries) {
        for (const auto& id : selected) {
            if (entry_matches(*entry, id)) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(matched_entries.size());
}

} // namespace

std::string normalize_rel_path(std::string_view path) {
    std::string s = trim(path);
    std::replace(s.begin(), s.end(), '\\', '/');
    while (s.rfind("./", 0) == 0) s.erase(0, 2);
    return s;
}

GroundTruth parse_ground_truth(std::string_view text, const std::string& origin,
                               std::vector<Diagnostic>& warnings) {
    GroundTruth gt;
    std::set<std::pair<std::string, std::string>> seen_keys;  // path,name (line ignored)
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t comma = line.find(',', start);
            fields.push_back(trim(line.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() < 2 || fields.size() > 3)
            throw FormatError(origin, line_no, "expected file_path,function_name[,start_line]");
        if (fields[0].empty() || fields[1].empty())
            throw FormatError(origin, line_no, "empty file_path or function_name");

        GroundTruthEntry entry;
        entry.file_path = normalize_rel_path(fields[0]);
        entry.function_name = fields[1];
        if (fields.size() == 3 && !fields[2].empty()) {
            try {
                size_t used = 0;
                int v = std::stoi(fields[2], &used);
                if (used != fields[2].size() || v < 1) throw std::invalid_argument("");
                entry.start_line = v;
            } catch (const std::exception&) {
                throw FormatError(origin, line_no, "start_line must be a positive integer");
            }
        }

        if (!seen_keys.insert({entry.file_path, entry.function_name}).second) {
            warnings.push_back({DiagnosticKind::DuplicateEntry, origin, line_no,
                                "duplicate entry " + entry.file_path + "," +
                                    entry.function_name});
            continue;
        }
        gt.vulnerable.push_back(std::move(entry));
    }
    return gt;
}

GroundTruth load_ground_truth(const std::string& path, std::vector<Diagnostic>& warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path, 0, "cannot open ground-truth file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ground_truth(buf.str(), path, warnings);
}

EvaluationReport coverage_curve(const std::vector<ScoredFunction>& functions,
                                const GroundTruth& gt,
                                const std::vector<double>& fractions) {
    EvaluationReport report;
    std::vector<const GroundTruthEntry*> matched;
    for (const auto& entry : gt.vulnerable) {
        bool hit = std::any_of(functions.begin(), functions.end(),
                               [&](const ScoredFunction& f) {
                                   return entry_matches(entry, f.id);
                               });
        if (hit)
            matched.push_back(&entry);
        else
            report.unmatched.push_back(entry);
    }
    report.matched = static_cast<int>(matched.size());
    if (matched.empty()) throw NoMatchedGroundTruth();

    BinTable bt = build_bins(functions);
    for (double f : fractions) {
        report.tool.push_back({f, coverage_of(select_candidates(bt, f), matched)});
        report.manual_down.push_back({f, coverage_of(manual_down(functions, f), matched)});
        report.manual_up.push_back({f, coverage_of(manual_up(functions, f), matched)});
    }
    return report;
}

std::vector<ScoredFunction> drop_dimension(const std::vector<ScoredFunction>& functions,
                                           const std::string& dimension) {
    std::vector<ScoredFunction> out = functions;
    for (auto& f : out) {
        auto& c = f.complexity;
        auto& v = f.vulnerability;
        if (dimension == "CD1") {
            c.c1_cyclomatic = 0;
        } else if (dimension == "CD2") {
            c.c2_loops = c.c3_nested_loop_pairs = c.c4_max_loop_nesting = 0;
        } else if (dimension == "VD1") {
            v.v1_params = v.v2_callee_arg_vars = 0;
        } else if (dimension == "VD2") {
            v.v3_pointer_arith = v.v4_pointer_arith_vars = v.v5_max_pointer_arith_per_var = 0;
        } else if (dimension == "VD3") {
            v.v6_nested_control_pairs = v.v7_max_control_nesting = v.v8_max_control_dependent =
                v.v9_max_data_dependent = v.v10_if_without_else = v.v11_predicate_vars = 0;
        } else {
            throw std::invalid_argument("unknown metric dimension: " + dimension);
        }
        c.score = c.c1_cyclomatic + c.c2_loops + c.c3_nested_loop_pairs + c.c4_max_loop_nesting;
        v.score = v.v1_params + v.v2_callee_arg_vars + v.v3_pointer_arith +
                  v.v4_pointer_arith_vars + v.v5_max_pointer_arith_per_var +
                  v.v6_nested_control_pairs + v.v7_max_control_nesting +
                  v.v8_max_control_dependent + v.v9_max_data_dependent +
                  v.v10_if_without_else + v.v11_predicate_vars;
    }
    return out;
}

SensitivityReport sensitivity_analysis(const std::vector<ScoredFunction>& functions,
                                       const GroundTruth& gt,
                                       const std::vector<double>& fractions) {
    EvaluationReport full = coverage_curve(functions, gt, fractions);
    SensitivityReport report;
    for (const char* dim : kDimensions) {
        EvaluationReport ablated = coverage_curve(drop_dimension(functions, dim), gt, fractions);
        std::vector<DeltaPoint> deltas;
        deltas.reserve(fractions.size());
        for (size_t i = 0; i < fractions.size(); ++i)
            deltas.push_back({fractions[i], ablated.tool[i].coverage - full.tool[i].coverage});
        report.deltas[dim] = std::move(deltas);
    }
    return report;
}

} // namespace vulnrank
