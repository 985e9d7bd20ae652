#include "sucfix/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace sucfix {

namespace {

using ordered_json = nlohmann::ordered_json;

// Table rows ordered lexicographically by decoded subset, empty set first.
std::vector<std::pair<std::vector<int>, std::uint64_t>> sorted_rows(const DistributionTable& table) {
  std::vector<std::pair<std::vector<int>, std::uint64_t>> rows;
  rows.reserve(table.counts.size());
  for (const auto& [mask, count] : table.counts)
    rows.emplace_back(mask_to_set(mask), count);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::string format_seconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  return buf;
}

} // namespace

ordered_json permutation_to_json(const Permutation& p) {
  return ordered_json(p.values());
}

ordered_json trace_to_json(const PipelineTrace& trace) {
  ordered_json out;
  out["sigma"] = trace.sigma.values();
  out["sigma_bar"] = trace.sigma_bar.values();
  out["sigma_hat"] = trace.sigma_hat.values();
  out["cycle_form"] = trace.cycle_form.cycles;
  out["tau_bar"] = trace.tau_bar.values();
  out["tau_bar_inv"] = trace.tau_bar_inv.values();
  out["tau"] = trace.tau.values();
  return out;
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json out;
  out["verifier"] = report.verifier;
  out["n"] = report.n;
  out["checks_run"] = report.checks_run;
  ordered_json passed;
  for (const std::string& check : report.checks_run)
    passed[check] = report.passed.at(check);
  out["passed"] = std::move(passed);
  if (report.counterexample) {
    ordered_json witness;
    witness["check"] = report.counterexample->check;
    if (report.counterexample->sigma)
      witness["sigma"] = report.counterexample->sigma->values();
    else
      witness["sigma"] = nullptr;
    witness["expected"] = report.counterexample->expected;
    witness["actual"] = report.counterexample->actual;
    out["counterexample"] = std::move(witness);
  } else {
    out["counterexample"] = nullptr;
  }
  out["permutations_examined"] = report.permutations_examined;
  out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

ordered_json table_to_json(const DistributionTable& table) {
  ordered_json out;
  out["n"] = table.n;
  out["statistic"] = statistic_name(table.statistic);
  ordered_json counts = ordered_json::array();
  for (const auto& [subset, count] : sorted_rows(table)) {
    ordered_json row;
    row["subset"] = subset;
    row["count"] = count;
    counts.push_back(std::move(row));
  }
  out["counts"] = std::move(counts);
  return out;
}

std::string set_to_text(const std::vector<int>& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0)
      out.push_back(',');
    out += std::to_string(set[i]);
  }
  out.push_back('}');
  return out;
}

std::string cycles_to_text(const std::vector<std::vector<int>>& cycles) {
  std::string out;
  for (const std::vector<int>& cycle : cycles) {
    out.push_back('(');
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out.push_back(' ');
      out += std::to_string(cycle[i]);
    }
    out.push_back(')');
  }
  return out;
}

std::string trace_to_text(const PipelineTrace& trace) {
  const auto line = [](const char* label, const std::string& value) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%-12s", label);
    return std::string(buf) + value + "\n";
  };
  std::string out;
  out += line("sigma", format_permutation(trace.sigma));
  out += line("sigma_bar", format_permutation(trace.sigma_bar));
  out += line("sigma_hat", format_permutation(trace.sigma_hat));
  out += line("cycle_form", cycles_to_text(trace.cycle_form.cycles));
  out += line("tau_bar", format_permutation(trace.tau_bar));
  out += line("tau_bar_inv", format_permutation(trace.tau_bar_inv));
  out += line("tau", format_permutation(trace.tau));
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out = "[" + report.verifier + "] n=" + std::to_string(report.n) + "\n";
  for (const std::string& check : report.checks_run)
    out += "  " + check + ": " + (report.passed.at(check) ? "pass" : "FAIL") + "\n";
  if (report.counterexample) {
    out += "  counterexample (" + report.counterexample->check + ")";
    if (report.counterexample->sigma)
      out += " sigma = " + format_permutation(*report.counterexample->sigma);
    out += "\n";
    out += "    expected: " + report.counterexample->expected + "\n";
    out += "    actual:   " + report.counterexample->actual + "\n";
  }
  out += "  examined " + std::to_string(report.permutations_examined) + " permutations in " +
         format_seconds(report.elapsed_seconds) + "s\n";
  return out;
}

std::string table_to_csv(const DistributionTable& table) {
  std::string out = "subset,count\n";
  for (const auto& [subset, count] : sorted_rows(table)) {
    std::string cell;
    for (size_t i = 0; i < subset.size(); ++i) {
      if (i > 0)
        cell.push_back(';');
      cell += std::to_string(subset[i]);
    }
    out += cell + "," + std::to_string(count) + "\n";
  }
  return out;
}

} // namespace sucfix
