#include "sucfix/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "sucfix/bijection.hpp"
#include "sucfix/enumeration.hpp"

namespace sucfix {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string render_set(const std::vector<int>& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0)
      out.push_back(',');
    out += std::to_string(set[i]);
  }
  out.push_back('}');
  return out;
}

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs per_word over S_n partitioned by first entry. Shard results are kept
// separate and merged by the caller, so parallel runs stay deterministic.
template <typename State, typename PerWord>
std::vector<State> scan_sharded(int n, int jobs, const PerWord& per_word) {
  std::vector<State> states(static_cast<size_t>(n));
  std::atomic<int> next_shard{0};
  auto work = [&] {
    for (;;) {
      const int shard = next_shard.fetch_add(1);
      if (shard >= n)
        break;
      for_each_permutation_word_with_first(
          n, shard + 1,
          [&](const std::vector<int>& word) { return per_word(states[static_cast<size_t>(shard)], word); });
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, n);
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(work);
    for (std::thread& th : pool)
      th.join();
  }
  return states;
}

struct ScanState {
  std::uint64_t examined = 0;
  std::optional<Counterexample> failure;
};

VerificationReport make_report(std::string verifier, int n, std::vector<std::string> checks) {
  VerificationReport report;
  report.verifier = std::move(verifier);
  report.n = n;
  report.checks_run = std::move(checks);
  for (const std::string& check : report.checks_run)
    report.passed[check] = true;
  return report;
}

// Folds shard scan states into the report: examined counts add up and the
// lowest-numbered failing shard supplies the counterexample.
void merge_scan_states(VerificationReport& report, const std::vector<ScanState>& states) {
  for (const ScanState& state : states) {
    report.permutations_examined += state.examined;
    if (state.failure && !report.counterexample) {
      report.counterexample = state.failure;
      report.passed[state.failure->check] = false;
    }
  }
}

using MaskCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

DistributionTable build_table(int n, Statistic statistic, int jobs) {
  if (n < 1 || n > kMaxTableSize)
    throw std::invalid_argument("table size must be in 1.." + std::to_string(kMaxTableSize) +
                                ", got " + std::to_string(n));
  auto states = scan_sharded<MaskCounts>(n, jobs, [&](MaskCounts& counts, const std::vector<int>& word) {
    counts[set_to_mask(compute_statistic(statistic, Permutation::unchecked(word)))] += 1;
  });
  DistributionTable table{n, statistic, {}};
  for (const MaskCounts& shard : states) {
    for (const auto& [mask, count] : shard)
      table.counts[mask] += count;
  }
  return table;
}

void check_table_size(int n, const char* verifier) {
  if (n < 1 || n > kMaxTableSize)
    throw std::invalid_argument(std::string(verifier) + " verifier requires n in 1.." +
                                std::to_string(kMaxTableSize) + ", got " + std::to_string(n));
}

// First key (in sorted decoded order) whose counts differ, if any.
std::optional<std::uint64_t> first_mismatch(const MaskCounts& lhs, const MaskCounts& rhs) {
  std::vector<std::pair<std::vector<int>, std::uint64_t>> keys;
  for (const auto& [mask, count] : lhs)
    keys.emplace_back(mask_to_set(mask), mask);
  for (const auto& [mask, count] : rhs) {
    if (lhs.find(mask) == lhs.end())
      keys.emplace_back(mask_to_set(mask), mask);
  }
  std::sort(keys.begin(), keys.end());
  for (const auto& [set, mask] : keys) {
    const auto l = lhs.find(mask);
    const auto r = rhs.find(mask);
    const std::uint64_t lc = l == lhs.end() ? 0 : l->second;
    const std::uint64_t rc = r == rhs.end() ? 0 : r->second;
    if (lc != rc)
      return mask;
  }
  return std::nullopt;
}

std::uint64_t pack_triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  // 21 bits per component; enumeration never exceeds 12
  return (a << 42) | (b << 21) | c;
}

std::string render_triple(std::uint64_t key, const char* n1, const char* n2, const char* n3) {
  const std::uint64_t mask21 = (std::uint64_t{1} << 21) - 1;
  return std::string(n1) + "=" + render_set(mask_to_set(key >> 42)) + " " + n2 + "=" +
         render_set(mask_to_set((key >> 21) & mask21)) + " " + n3 + "=" +
         render_set(mask_to_set(key & mask21));
}

} // namespace

std::uint64_t set_to_mask(const std::vector<int>& set) {
  std::uint64_t mask = 0;
  for (int v : set)
    mask |= std::uint64_t{1} << (v - 1);
  return mask;
}

std::vector<int> mask_to_set(std::uint64_t mask) {
  std::vector<int> set;
  for (int v = 1; mask != 0; ++v, mask >>= 1) {
    if (mask & 1)
      set.push_back(v);
  }
  return set;
}

DistributionTable distribution_table(int n, Statistic statistic) {
  return build_table(n, statistic, 1);
}

bool VerificationReport::all_passed() const {
  for (const auto& [check, ok] : passed) {
    if (!ok)
      return false;
  }
  return !counterexample.has_value();
}

VerificationReport verify_relations(int n, int jobs) {
  detail::check_enumeration_size(n);
  VerificationReport report = make_report(
      "relations", n, {"fix_bar_eq_suc", "drop_bar_eq_naj_suc", "exc_bar_eq_pred", "round_trip"});
  Timer timer;
  std::atomic<bool> stop{false};

  auto states = scan_sharded<ScanState>(n, jobs, [&](ScanState& state, const std::vector<int>& word) {
    if (stop.load(std::memory_order_relaxed))
      return false;
    ++state.examined;
    const Permutation sigma = Permutation::unchecked(word);
    const Permutation tau = phi(sigma);

    const auto fail = [&](const char* check, std::string expected, std::string actual) {
      state.failure = Counterexample{check, sigma, std::move(expected), std::move(actual)};
      stop.store(true);
      return false;
    };

    {
      const IndexSet lhs = fixed_points_bar(sigma);
      const IndexSet rhs = successions(tau);
      if (lhs != rhs)
        return fail("fix_bar_eq_suc", render_set(lhs), render_set(rhs));
    }
    {
      const ValueSet lhs = drop_values_bar(sigma);
      const IndexSet rhs = non_adjacent_successions(tau);
      if (lhs != rhs)
        return fail("drop_bar_eq_naj_suc", render_set(lhs), render_set(rhs));
    }
    {
      const ValueSet lhs = excedance_values_bar(sigma);
      const IndexSet rhs = predecessors(tau);
      if (lhs != rhs)
        return fail("exc_bar_eq_pred", render_set(lhs), render_set(rhs));
    }
    const Permutation back = phi_inverse(tau);
    if (back != sigma)
      return fail("round_trip", format_permutation(sigma), format_permutation(back));
    return true;
  });

  merge_scan_states(report, states);
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_pfee(int n, int jobs) {
  detail::check_enumeration_size(n);
  VerificationReport report = make_report("pfee", n, {"pfee_fix", "pfee_drop", "pfee_exc"});
  Timer timer;
  std::atomic<bool> stop{false};

  auto states = scan_sharded<ScanState>(n, jobs, [&](ScanState& state, const std::vector<int>& word) {
    if (stop.load(std::memory_order_relaxed))
      return false;
    ++state.examined;
    const Permutation sigma = Permutation::unchecked(word);
    const PipelineTrace trace = phi_with_trace(sigma);
    if (const auto violation = pfee_violation(trace)) {
      state.failure = Counterexample{violation->family, sigma, "pointwise rotation identity",
                                     violation->detail};
      stop.store(true);
      return false;
    }
    return true;
  });

  merge_scan_states(report, states);
  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_counting(int n, int jobs) {
  check_table_size(n, "counting");
  VerificationReport report = make_report("counting", n, {"suc_table_eq_fix_bar_table"});
  Timer timer;

  const DistributionTable suc_table = build_table(n, Statistic::suc, jobs);
  const DistributionTable fix_table = build_table(n, Statistic::fix_bar, jobs);
  report.permutations_examined = 2 * factorial(n);

  if (suc_table.counts != fix_table.counts) {
    const auto mask = first_mismatch(suc_table.counts, fix_table.counts);
    const auto count_of = [](const MaskCounts& counts, std::uint64_t key) {
      const auto it = counts.find(key);
      return it == counts.end() ? std::uint64_t{0} : it->second;
    };
    report.passed["suc_table_eq_fix_bar_table"] = false;
    report.counterexample = Counterexample{
        "suc_table_eq_fix_bar_table", std::nullopt,
        "suc" + render_set(mask_to_set(*mask)) + " = " + std::to_string(count_of(suc_table.counts, *mask)),
        "fix_bar" + render_set(mask_to_set(*mask)) + " = " +
            std::to_string(count_of(fix_table.counts, *mask))};
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

VerificationReport verify_triple_distribution(int n, int jobs) {
  check_table_size(n, "triple");
  VerificationReport report = make_report("triple", n, {"triple_distribution_eq"});
  Timer timer;

  struct TripleState {
    MaskCounts source; // (fix_bar, drop_bar, exc_bar)
    MaskCounts target; // (suc, naj_suc, pred)
  };
  auto states = scan_sharded<TripleState>(n, jobs, [&](TripleState& state, const std::vector<int>& word) {
    const Permutation p = Permutation::unchecked(word);
    state.source[pack_triple(set_to_mask(fixed_points_bar(p)), set_to_mask(drop_values_bar(p)),
                             set_to_mask(excedance_values_bar(p)))] += 1;
    state.target[pack_triple(set_to_mask(successions(p)), set_to_mask(non_adjacent_successions(p)),
                             set_to_mask(predecessors(p)))] += 1;
  });

  MaskCounts source;
  MaskCounts target;
  for (const TripleState& state : states) {
    for (const auto& [key, count] : state.source)
      source[key] += count;
    for (const auto& [key, count] : state.target)
      target[key] += count;
  }
  report.permutations_examined = factorial(n);

  if (source != target) {
    std::vector<std::uint64_t> keys;
    for (const auto& [key, count] : source)
      keys.push_back(key);
    for (const auto& [key, count] : target) {
      if (source.find(key) == source.end())
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t key : keys) {
      const auto s = source.find(key);
      const auto t = target.find(key);
      const std::uint64_t sc = s == source.end() ? 0 : s->second;
      const std::uint64_t tc = t == target.end() ? 0 : t->second;
      if (sc != tc) {
        report.passed["triple_distribution_eq"] = false;
        report.counterexample = Counterexample{
            "triple_distribution_eq", std::nullopt,
            render_triple(key, "fix_bar", "drop_bar", "exc_bar") + " -> " + std::to_string(sc),
            render_triple(key, "suc", "naj_suc", "pred") + " -> " + std::to_string(tc)};
        break;
      }
    }
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

std::vector<VerificationReport> run_verifiers(int n, const std::string& check, int jobs) {
  std::vector<VerificationReport> reports;
  if (check == "relations") {
    reports.push_back(verify_relations(n, jobs));
  } else if (check == "pfee") {
    reports.push_back(verify_pfee(n, jobs));
  } else if (check == "counting") {
    reports.push_back(verify_counting(n, jobs));
  } else if (check == "triple") {
    reports.push_back(verify_triple_distribution(n, jobs));
  } else if (check == "all") {
    check_table_size(n, "all"); // reject before the cheaper verifiers run
    reports.push_back(verify_relations(n, jobs));
    reports.push_back(verify_pfee(n, jobs));
    reports.push_back(verify_counting(n, jobs));
    reports.push_back(verify_triple_distribution(n, jobs));
  } else {
    throw std::invalid_argument("unknown check '" + check +
                                "' (expected relations, pfee, counting, triple or all)");
  }
  return reports;
}

} // namespace sucfix
