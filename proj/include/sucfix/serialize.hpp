#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sucfix/bijection.hpp"
#include "sucfix/permutation.hpp"
#include "sucfix/verify.hpp"

namespace sucfix {

// JSON builders. ordered_json keeps field order stable across runs.
nlohmann::ordered_json permutation_to_json(const Permutation& p);
nlohmann::ordered_json trace_to_json(const PipelineTrace& trace);
nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json table_to_json(const DistributionTable& table);

// Text renderers for the human-facing CLI output.
std::string set_to_text(const std::vector<int>& set);
std::string cycles_to_text(const std::vector<std::vector<int>>& cycles);
std::string trace_to_text(const PipelineTrace& trace);
std::string report_to_text(const VerificationReport& report);

// CSV with header "subset,count"; subset cells are semicolon-joined sorted
// integers (empty for the empty set) and rows are sorted lexicographically
// by subset.
std::string table_to_csv(const DistributionTable& table);

} // namespace sucfix
