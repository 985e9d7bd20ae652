// Acceptance suite: one line per criterion, overall exit 0 only if every
// criterion holds. argv[1] is the CLI binary, used by the end-to-end
// performance criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <json.hpp>
#include <random>
#include <string>
#include <sys/wait.h>
#include <unordered_set>
#include <vector>

#include "sucfix/bijection.hpp"
#include "sucfix/enumeration.hpp"
#include "sucfix/permutation.hpp"
#include "sucfix/stats.hpp"
#include "sucfix/verify.hpp"

using sucfix::Permutation;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok)
    ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t encode_word(const std::vector<int>& word) {
  std::uint64_t key = 0;
  for (int v : word)
    key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

// Independent brute-force oracle for the empty-subset counts: recursive
// generation (not the library's scan) plus direct definition checks.
struct OracleCounts {
  std::uint64_t no_succession = 0;
  std::uint64_t no_small_fixed_point = 0;
};

void oracle_scan(std::vector<int>& word, std::vector<bool>& used, int n, OracleCounts& counts) {
  if (static_cast<int>(word.size()) == n) {
    bool no_succession = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (word[static_cast<size_t>(i)] + 1 == word[static_cast<size_t>(i) + 1])
        no_succession = false;
    }
    bool no_small_fixed_point = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (word[static_cast<size_t>(i)] == i + 1)
        no_small_fixed_point = false;
    }
    counts.no_succession += no_succession ? 1 : 0;
    counts.no_small_fixed_point += no_small_fixed_point ? 1 : 0;
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<size_t>(v) - 1])
      continue;
    used[static_cast<size_t>(v) - 1] = true;
    word.push_back(v);
    oracle_scan(word, used, n, counts);
    word.pop_back();
    used[static_cast<size_t>(v) - 1] = false;
  }
}

OracleCounts run_oracle(int n) {
  OracleCounts counts;
  std::vector<int> word;
  std::vector<bool> used(static_cast<size_t>(n), false);
  oracle_scan(word, used, n, counts);
  return counts;
}

std::uint64_t count_at(const sucfix::DistributionTable& table, std::uint64_t mask) {
  const auto it = table.counts.find(mask);
  return it == table.counts.end() ? 0 : it->second;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end())
      return false;
  }
  return true;
}

// The shared property bundle for criterion 8. Returns a failure note or "".
std::string property_violation(const Permutation& p) {
  const int n = p.size();

  if (p.reverse_complement().reverse_complement() != p)
    return "reverse_complement is not an involution";
  if (p.inverse().reverse_complement() != p.reverse_complement().inverse())
    return "inverse does not commute with reverse_complement";
  if (sucfix::flatten(sucfix::unflatten(p)) != p)
    return "flatten(unflatten(word)) != word";
  const sucfix::CanonicalCycleForm form = sucfix::canonical_cycle_form(p);
  if (sucfix::unflatten(sucfix::flatten(form)) != form)
    return "unflatten(flatten(form)) != form";

  const auto suc = sucfix::successions(p);
  const auto naj = sucfix::non_adjacent_successions(p);
  const auto pred = sucfix::predecessors(p);
  if (!disjoint(suc, naj) || !disjoint(suc, pred) || !disjoint(naj, pred))
    return "index statistics overlap";
  if (suc.size() + naj.size() + pred.size() != static_cast<size_t>(n - 1))
    return "index statistics miss the n-1 cardinality";
  std::vector<int> index_union;
  index_union.insert(index_union.end(), suc.begin(), suc.end());
  index_union.insert(index_union.end(), naj.begin(), naj.end());
  index_union.insert(index_union.end(), pred.begin(), pred.end());
  std::sort(index_union.begin(), index_union.end());
  int pos_of_n = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) == n)
      pos_of_n = i;
  }
  std::vector<int> expected_indices;
  for (int i = 1; i <= n; ++i) {
    if (i != pos_of_n)
      expected_indices.push_back(i);
  }
  if (index_union != expected_indices)
    return "index statistics do not partition 1..n minus the position of n";

  std::vector<int> fix_values;
  for (int i : sucfix::fixed_points_bar(p))
    fix_values.push_back(p(i));
  const auto drop = sucfix::drop_values_bar(p);
  const auto exc = sucfix::excedance_values_bar(p);
  if (!disjoint(fix_values, drop) || !disjoint(fix_values, exc) || !disjoint(drop, exc))
    return "value statistics overlap";
  if (fix_values.size() + drop.size() + exc.size() != static_cast<size_t>(n - 1))
    return "value statistics miss the n-1 cardinality";
  std::vector<int> value_union;
  value_union.insert(value_union.end(), fix_values.begin(), fix_values.end());
  value_union.insert(value_union.end(), drop.begin(), drop.end());
  value_union.insert(value_union.end(), exc.begin(), exc.end());
  std::sort(value_union.begin(), value_union.end());
  std::vector<int> expected_values;
  for (int v = 1; v <= n; ++v) {
    if (v != p(n))
      expected_values.push_back(v);
  }
  if (value_union != expected_values)
    return "value statistics do not partition 1..n minus the last entry";

  if (sucfix::phi_inverse(sucfix::phi(p)) != p)
    return "phi round trip failed";

  return "";
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  CliRun result;
  const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return result;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void criterion_1_golden_pipeline() {
  const Permutation sigma({7, 2, 6, 4, 1, 3, 5});
  const sucfix::PipelineTrace trace = sucfix::phi_with_trace(sigma);
  const bool ok = trace.sigma == sigma &&
                  trace.sigma_bar.values() == std::vector<int>{3, 5, 7, 4, 2, 6, 1} &&
                  trace.sigma_hat.values() == std::vector<int>{5, 7, 4, 2, 6, 1, 3} &&
                  trace.cycle_form.cycles ==
                      std::vector<std::vector<int>>{{3, 4, 2, 7}, {1, 5, 6}} &&
                  trace.tau_bar.values() == std::vector<int>{3, 4, 2, 7, 1, 5, 6} &&
                  trace.tau_bar_inv.values() == std::vector<int>{5, 3, 1, 2, 6, 7, 4} &&
                  trace.tau.values() == std::vector<int>{4, 1, 2, 6, 7, 5, 3};
  report(1, ok, "worked example maps through all pipeline stages exactly");
}

void criterion_2_golden_statistics() {
  const Permutation sigma({7, 2, 6, 4, 1, 3, 5});
  const Permutation tau({4, 1, 2, 6, 7, 5, 3});
  const bool ok = sucfix::successions(tau) == std::vector<int>{2, 4} &&
                  sucfix::non_adjacent_successions(tau) == std::vector<int>{1, 3} &&
                  sucfix::predecessors(tau) == std::vector<int>{6, 7} &&
                  sucfix::fixed_points_bar(sigma) == std::vector<int>{2, 4} &&
                  sucfix::drop_values_bar(sigma) == std::vector<int>{1, 3} &&
                  sucfix::excedance_values_bar(sigma) == std::vector<int>{6, 7};
  report(2, ok, "worked example statistics match on both sides of the bijection");
}

void criterion_3_relations() {
  std::uint64_t examined = 0;
  bool ok = true;
  double elapsed_at_8 = 0.0;
  for (int n = 1; n <= 8 && ok; ++n) {
    const sucfix::VerificationReport r = sucfix::verify_relations(n, 1);
    ok = r.all_passed();
    examined += r.permutations_examined;
    if (n == 8)
      elapsed_at_8 = r.elapsed_seconds;
  }
  ok = ok && examined == 46233 && elapsed_at_8 < 10.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "set relations hold on all %llu permutations, n=1..8 (n=8 in %.2fs, budget 10s)",
                static_cast<unsigned long long>(examined), elapsed_at_8);
  report(3, ok, detail);
}

void criterion_4_round_trip_injectivity() {
  bool ok = true;
  std::uint64_t examined = 0;
  for (int n = 1; n <= 8 && ok; ++n) {
    std::unordered_set<std::uint64_t> images;
    std::uint64_t count = 0;
    sucfix::for_each_permutation_word(n, [&](const std::vector<int>& word) {
      const Permutation sigma = Permutation::unchecked(word);
      const Permutation tau = sucfix::phi(sigma);
      if (sucfix::phi_inverse(tau) != sigma)
        ok = false;
      images.insert(encode_word(tau.values()));
      ++count;
      return ok;
    });
    ok = ok && images.size() == count;
    examined += count;
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "round trip and injectivity on %llu permutations, n=1..8",
                static_cast<unsigned long long>(examined));
  report(4, ok, detail);
}

void criterion_5_counting_tables() {
  bool ok = true;
  std::string note = "suc and fix_bar tables identical for n=1..9, empty-subset column "
                     "cross-checked against the direct-scan oracle";
  for (int n = 1; n <= 9 && ok; ++n) {
    const sucfix::DistributionTable suc_table = sucfix::distribution_table(n, sucfix::Statistic::suc);
    const sucfix::DistributionTable fix_table =
        sucfix::distribution_table(n, sucfix::Statistic::fix_bar);
    const OracleCounts oracle = run_oracle(n);
    if (count_at(suc_table, 0) != oracle.no_succession) {
      ok = false;
      note = "suc empty-subset count disagrees with the oracle at n=" + std::to_string(n);
    } else if (count_at(fix_table, 0) != oracle.no_small_fixed_point) {
      ok = false;
      note = "fix_bar empty-subset count disagrees with the oracle at n=" + std::to_string(n);
    } else if (suc_table.counts != fix_table.counts) {
      ok = false;
      note = "suc and fix_bar tables differ at n=" + std::to_string(n);
    }
  }
  report(5, ok, note);
}

void criterion_6_triple_distribution() {
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n)
    ok = sucfix::verify_triple_distribution(n).all_passed();
  report(6, ok, "joint triple distributions agree for n=1..8");
}

void criterion_7_pointwise_identities() {
  bool ok = true;
  for (int n = 1; n <= 7 && ok; ++n)
    ok = sucfix::verify_pfee(n).all_passed();
  report(7, ok, "pointwise rotation identities hold for n=1..7");
}

void criterion_8_property_suite() {
  std::string note;
  std::uint64_t cases = 0;
  sucfix::for_each_permutation_word(6, [&](const std::vector<int>& word) {
    if (note.empty()) {
      note = property_violation(Permutation::unchecked(word));
      ++cases;
    }
    return note.empty();
  });

  std::mt19937 rng(12345);
  std::vector<int> word(50);
  for (int i = 0; i < 50; ++i)
    word[static_cast<size_t>(i)] = i + 1;
  for (int sample = 0; sample < 10000 && note.empty(); ++sample) {
    std::shuffle(word.begin(), word.end(), rng);
    note = property_violation(Permutation::unchecked(word));
    ++cases;
  }

  char detail[160];
  if (note.empty()) {
    std::snprintf(detail, sizeof(detail),
                  "partition, involution, commutation and round-trip properties on %llu cases "
                  "(all of S_6 plus 10000 samples at n=50)",
                  static_cast<unsigned long long>(cases));
    report(8, true, detail);
  } else {
    report(8, false, note);
  }
}

void criterion_9_cli_performance(const std::string& cli) {
  if (cli.empty()) {
    report(9, false, "no CLI binary supplied");
    return;
  }
  const auto start = std::chrono::steady_clock::now();
  const CliRun r = run_cli(cli, "verify --n 10 --check relations --jobs 8 --format json");
  const double elapsed = seconds_since(start);

  bool ok = r.code == 0 && elapsed < 120.0;
  std::uint64_t examined = 0;
  if (ok && nlohmann::json::accept(r.out)) {
    const nlohmann::json j = nlohmann::json::parse(r.out);
    examined = j["reports"][0]["permutations_examined"].get<std::uint64_t>();
    ok = j["all_passed"] == true && examined == 3628800;
  } else {
    ok = false;
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "cli verified %llu permutations at n=10 in %.1fs (budget 120s)",
                static_cast<unsigned long long>(examined), elapsed);
  report(9, ok, detail);
}

} // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion_1_golden_pipeline();
  criterion_2_golden_statistics();
  criterion_3_relations();
  criterion_4_round_trip_injectivity();
  criterion_5_counting_tables();
  criterion_6_triple_distribution();
  criterion_7_pointwise_identities();
  criterion_8_property_suite();
  criterion_9_cli_performance(cli);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
