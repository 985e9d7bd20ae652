#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sucfix/permutation.hpp"

namespace sucfix {

/// Ordered cycle list in the canonical arrangement:
///   - the first cycle contains n, with n as its last element;
///   - every later cycle starts with its smallest element;
///   - later cycles appear in strictly decreasing order of smallest element;
///   - the cycles partition {1..n}.
struct CanonicalCycleForm {
  std::vector<std::vector<int>> cycles;

  bool operator==(const CanonicalCycleForm&) const = default;
};

/// Thrown when a word fails the canonical-cycle-form reconstruction rules.
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The unique canonical arrangement of p's cycles.
CanonicalCycleForm canonical_cycle_form(const Permutation& p);

/// Concatenates the cycles into one word (erases the parentheses).
Permutation flatten(const CanonicalCycleForm& form);

/// Reconstructs the canonical cycle form from a flattened word: the first
/// cycle is the prefix up to and including n, and a new cycle starts at each
/// left-to-right minimum of the suffix after n. The result is validated
/// against the CanonicalCycleForm invariants; a StructuralError reports any
/// violation. flatten(unflatten(w)) == w.
CanonicalCycleForm unflatten(const Permutation& word);

/// The bijection: tau = phi(sigma) with
///   fixed_points_bar(sigma)     == successions(tau)
///   drop_values_bar(sigma)      == non_adjacent_successions(tau)
///   excedance_values_bar(sigma) == predecessors(tau)
/// Computed as the composition
///   reverse_complement . inverse . flatten . canonical_cycle_form
///   . rotate_left . reverse_complement.
Permutation phi(const Permutation& sigma);

/// Exact inverse of phi: phi_inverse(phi(sigma)) == sigma.
Permutation phi_inverse(const Permutation& tau);

/// Every intermediate of the phi pipeline, in order.
struct PipelineTrace {
  Permutation sigma;
  Permutation sigma_bar;     // reverse_complement(sigma)
  Permutation sigma_hat;     // rotate_left(sigma_bar)
  CanonicalCycleForm cycle_form;
  Permutation tau_bar;       // flatten(cycle_form)
  Permutation tau_bar_inv;   // inverse(tau_bar)
  Permutation tau;           // reverse_complement(tau_bar_inv)
};

PipelineTrace phi_with_trace(const Permutation& sigma);

struct PfeeViolation {
  std::string family; // one of pfee_fix, pfee_drop, pfee_exc
  std::string detail;
};

/// Checks the pointwise rotation identities on a trace: with C = n+1-i,
///   sigma_i = i  implies  sigma_hat_{C-1} = sigma_bar_C = C,
///   sigma_i < i  implies  sigma_hat_{C-1} = sigma_bar_C > C,
///   sigma_i > i  implies  sigma_hat_{C-1} = sigma_bar_C < C,
/// for every index i <= n-1. Returns the first violation, if any.
std::optional<PfeeViolation> pfee_violation(const PipelineTrace& trace);

} // namespace sucfix
