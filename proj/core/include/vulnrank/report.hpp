#pragma once

#include <string>

#include "vulnrank/analysis.hpp"
#include "vulnrank/evaluation.hpp"
#include "vulnrank/ranking.hpp"

namespace vulnrank {

// All renderers produce byte-stable output for identical inputs: fixed key
// order, fixed number formatting, functions sorted by (file, name, line).

std::string render_analysis_json(const AnalysisResult& ar, const CandidateList& cl, double p);
std::string render_analysis_csv(const AnalysisResult& ar, const CandidateList& cl);

std::string render_evaluation_json(const EvaluationReport& er, const SensitivityReport* sr,
                                   bool include_baselines);
std::string render_evaluation_csv(const EvaluationReport& er, const SensitivityReport* sr,
                                  bool include_baselines);

// `file_path,function_name,priority_score` rows, two-decimal scores.
std::string render_priority_csv(const std::vector<ScoredFunction>& functions,
                                const PriorityScoreMap& psm);

} // namespace vulnrank
