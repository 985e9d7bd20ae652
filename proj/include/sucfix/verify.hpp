#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sucfix/permutation.hpp"
#include "sucfix/stats.hpp"

namespace sucfix {

/// Ceiling for distribution tables and the table-backed verifiers
/// (counting, triple); bounded by key-space memory rather than time.
inline constexpr int kMaxTableSize = 10;

/// Subsets of {1..n} as bitmasks: value v occupies bit v-1.
std::uint64_t set_to_mask(const std::vector<int>& set);
std::vector<int> mask_to_set(std::uint64_t mask);

/// counts[mask_of(I)] = number of sigma in S_n with statistic(sigma) = I.
/// Subsets that occur zero times are absent. Counts sum to n!.
struct DistributionTable {
  int n = 0;
  Statistic statistic = Statistic::suc;
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
};

DistributionTable distribution_table(int n, Statistic statistic);

struct Counterexample {
  std::string check;
  std::optional<Permutation> sigma; // absent for table-level mismatches
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string verifier;
  int n = 0;
  std::vector<std::string> checks_run;
  std::map<std::string, bool> passed; // keyed by check name
  std::optional<Counterexample> counterexample;
  std::uint64_t permutations_examined = 0;
  double elapsed_seconds = 0.0;

  bool all_passed() const;
};

/// For every sigma in S_n, checks the three set equalities against
/// tau = phi(sigma) plus the round trip phi_inverse(tau) == sigma.
/// Scans stop at the first counterexample. jobs > 1 partitions S_n by
/// first entry and scans shards in parallel.
VerificationReport verify_relations(int n, int jobs = 1);

/// Runs phi_with_trace for every sigma in S_n and checks the pointwise
/// rotation identities (see pfee_violation).
VerificationReport verify_pfee(int n, int jobs = 1);

/// Asserts distribution_table(n, suc) == distribution_table(n, fix_bar)
/// as maps. n is capped at kMaxTableSize.
VerificationReport verify_counting(int n, int jobs = 1);

/// Builds the joint (fix_bar, drop_bar, exc_bar) and (suc, naj_suc, pred)
/// count maps over S_n and asserts they are equal. n capped at kMaxTableSize.
VerificationReport verify_triple_distribution(int n, int jobs = 1);

/// Dispatches by name: relations, pfee, counting, triple, or all.
/// Throws std::invalid_argument for anything else.
std::vector<VerificationReport> run_verifiers(int n, const std::string& check, int jobs = 1);

} // namespace sucfix
