#include <CLI11.hpp>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "sucfix/bijection.hpp"
#include "sucfix/permutation.hpp"
#include "sucfix/serialize.hpp"
#include "sucfix/stats.hpp"
#include "sucfix/verify.hpp"

namespace {

using nlohmann::ordered_json;

void print_json(const ordered_json& value) {
  std::fputs(value.dump(2).c_str(), stdout);
  std::fputc('\n', stdout);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation bijection and statistics toolkit"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string format = "text";
  std::string check = "all";
  std::string stat_name;
  bool trace = false;
  int n = 0;
  int jobs = 1;
  int exit_code = 0;

  const auto text_or_json = CLI::IsMember({"text", "json"});

  CLI::App* apply_cmd = app.add_subcommand("apply", "map a permutation through the bijection");
  apply_cmd->add_option("--perm", perm_text, "permutation in one-line notation")->required();
  apply_cmd->add_flag("--trace", trace, "show every pipeline stage");
  apply_cmd->add_option("--format", format, "output format")->check(text_or_json)->capture_default_str();
  apply_cmd->callback([&] {
    const sucfix::Permutation sigma = sucfix::parse_permutation(perm_text);
    if (trace) {
      const sucfix::PipelineTrace pipeline = sucfix::phi_with_trace(sigma);
      if (format == "json") {
        ordered_json out;
        out["input"] = sigma.values();
        out["output"] = pipeline.tau.values();
        out["trace"] = sucfix::trace_to_json(pipeline);
        print_json(out);
      } else {
        std::fputs(sucfix::trace_to_text(pipeline).c_str(), stdout);
      }
      return;
    }
    const sucfix::Permutation tau = sucfix::phi(sigma);
    if (format == "json") {
      ordered_json out;
      out["input"] = sigma.values();
      out["output"] = tau.values();
      print_json(out);
    } else {
      std::printf("%s\n", sucfix::format_permutation(tau).c_str());
    }
  });

  CLI::App* invert_cmd = app.add_subcommand("invert", "map a permutation through the inverse bijection");
  invert_cmd->add_option("--perm", perm_text, "permutation in one-line notation")->required();
  invert_cmd->add_option("--format", format, "output format")->check(text_or_json)->capture_default_str();
  invert_cmd->callback([&] {
    const sucfix::Permutation tau = sucfix::parse_permutation(perm_text);
    const sucfix::Permutation sigma = sucfix::phi_inverse(tau);
    if (format == "json") {
      ordered_json out;
      out["input"] = tau.values();
      out["output"] = sigma.values();
      print_json(out);
    } else {
      std::printf("%s\n", sucfix::format_permutation(sigma).c_str());
    }
  });

  CLI::App* stats_cmd = app.add_subcommand("stats", "compute all six set-valued statistics");
  stats_cmd->add_option("--perm", perm_text, "permutation in one-line notation")->required();
  stats_cmd->add_option("--format", format, "output format")->check(text_or_json)->capture_default_str();
  stats_cmd->callback([&] {
    const sucfix::Permutation p = sucfix::parse_permutation(perm_text);
    if (format == "json") {
      ordered_json out;
      out["input"] = p.values();
      for (sucfix::Statistic statistic : sucfix::kAllStatistics)
        out[sucfix::statistic_name(statistic)] = sucfix::compute_statistic(statistic, p);
      print_json(out);
    } else {
      for (sucfix::Statistic statistic : sucfix::kAllStatistics) {
        std::printf("%-8s = %s\n", sucfix::statistic_name(statistic),
                    sucfix::set_to_text(sucfix::compute_statistic(statistic, p)).c_str());
      }
    }
  });

  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustively check the bijection over S_n");
  verify_cmd->add_option("--n", n, "symmetric group size")->required();
  verify_cmd->add_option("--check", check, "relations, pfee, counting, triple or all")
      ->check(CLI::IsMember({"relations", "pfee", "counting", "triple", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "worker threads for the sharded scan")->capture_default_str();
  verify_cmd->add_option("--format", format, "output format")->check(text_or_json)->capture_default_str();
  verify_cmd->callback([&] {
    const std::vector<sucfix::VerificationReport> reports = sucfix::run_verifiers(n, check, jobs);
    bool all_passed = true;
    for (const sucfix::VerificationReport& report : reports)
      all_passed = all_passed && report.all_passed();
    if (format == "json") {
      ordered_json out;
      out["n"] = n;
      out["check"] = check;
      out["jobs"] = jobs;
      out["all_passed"] = all_passed;
      ordered_json list = ordered_json::array();
      for (const sucfix::VerificationReport& report : reports)
        list.push_back(sucfix::report_to_json(report));
      out["reports"] = std::move(list);
      print_json(out);
    } else {
      for (const sucfix::VerificationReport& report : reports)
        std::fputs(sucfix::report_to_text(report).c_str(), stdout);
      std::printf("result: %s\n", all_passed ? "PASS" : "FAIL");
    }
    exit_code = all_passed ? 0 : 1;
  });

  std::string table_format = "csv";
  CLI::App* table_cmd = app.add_subcommand("table", "distribution table of a statistic over S_n");
  table_cmd->add_option("--n", n, "symmetric group size")->required();
  table_cmd->add_option("--stat", stat_name, "suc, fix_bar, naj_suc, pred, drop_bar or exc_bar")
      ->required();
  table_cmd->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table_cmd->callback([&] {
    const sucfix::Statistic statistic = sucfix::statistic_from_name(stat_name);
    const sucfix::DistributionTable table = sucfix::distribution_table(n, statistic);
    if (table_format == "json")
      print_json(sucfix::table_to_json(table));
    else
      std::fputs(sucfix::table_to_csv(table).c_str(), stdout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return exit_code;
}
