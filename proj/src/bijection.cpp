// The bijection runs in three steps: reverse-complement, then a left
// rotation whose cycle structure is written in a canonical order and
// flattened, then inversion followed by another reverse-complement.
// phi and phi_inverse are kept strictly as compositions of the
// perm_core primitives; nothing here takes a fused shortcut.

#include "sucfix/bijection.hpp"

#include <algorithm>
#include <cassert>

namespace sucfix {

namespace {

std::string join_cycle(const std::vector<int>& cycle) {
  std::string out = "(";
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0)
      out.push_back(' ');
    out += std::to_string(cycle[i]);
  }
  out.push_back(')');
  return out;
}

// Throws StructuralError unless `form` satisfies all four canonical
// invariants for size n.
void validate_canonical(const CanonicalCycleForm& form, int n) {
  if (form.cycles.empty())
    throw StructuralError("canonical cycle form has no cycles");
  for (const auto& cycle : form.cycles) {
    if (cycle.empty())
      throw StructuralError("canonical cycle form contains an empty cycle");
  }
  if (form.cycles.front().back() != n)
    throw StructuralError("first cycle does not end with " + std::to_string(n));
  int prev_min = n + 1;
  for (size_t c = 1; c < form.cycles.size(); ++c) {
    const auto& cycle = form.cycles[c];
    const int head = cycle.front();
    if (*std::min_element(cycle.begin(), cycle.end()) != head)
      throw StructuralError("cycle " + join_cycle(cycle) + " does not start with its minimum");
    if (head >= prev_min)
      throw StructuralError("cycle minima do not decrease at " + join_cycle(cycle));
    prev_min = head;
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  size_t total = 0;
  for (const auto& cycle : form.cycles) {
    for (int v : cycle) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
        throw StructuralError("cycles do not partition 1.." + std::to_string(n));
      seen[static_cast<size_t>(v) - 1] = true;
      ++total;
    }
  }
  if (total != static_cast<size_t>(n))
    throw StructuralError("cycles do not partition 1.." + std::to_string(n));
}

// One-line permutation whose cycles are exactly `form`.
Permutation apply_cycles(const CanonicalCycleForm& form, int n) {
  std::vector<int> values(static_cast<size_t>(n));
  for (const auto& cycle : form.cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      values[static_cast<size_t>(from) - 1] = to;
    }
  }
  return Permutation::unchecked(std::move(values));
}

} // namespace

CanonicalCycleForm canonical_cycle_form(const Permutation& p) {
  const int n = p.size();
  // cycle_decomposition yields minimum-first cycles in ascending order of
  // minima, so the cycle containing n is somewhere in the list.
  std::vector<std::vector<int>> cycles = p.cycle_decomposition();
  size_t with_n = 0;
  for (size_t c = 0; c < cycles.size(); ++c) {
    if (std::find(cycles[c].begin(), cycles[c].end(), n) != cycles[c].end()) {
      with_n = c;
      break;
    }
  }

  std::vector<int>& first = cycles[with_n];
  const auto n_pos = std::find(first.begin(), first.end(), n);
  std::rotate(first.begin(), n_pos + 1, first.end()); // n becomes the last element

  CanonicalCycleForm form;
  form.cycles.reserve(cycles.size());
  form.cycles.push_back(std::move(first));
  // remaining cycles flip from ascending to decreasing order of minima
  for (size_t c = cycles.size(); c-- > 0;) {
    if (c != with_n)
      form.cycles.push_back(std::move(cycles[c]));
  }
  return form;
}

Permutation flatten(const CanonicalCycleForm& form) {
  size_t total = 0;
  for (const auto& cycle : form.cycles)
    total += cycle.size();
  validate_canonical(form, static_cast<int>(total));
  std::vector<int> word;
  word.reserve(total);
  for (const auto& cycle : form.cycles)
    word.insert(word.end(), cycle.begin(), cycle.end());
  return Permutation::unchecked(std::move(word));
}

CanonicalCycleForm unflatten(const Permutation& word) {
  const int n = word.size();
  int n_pos = 0;
  for (int i = 1; i <= n; ++i) {
    if (word(i) == n) {
      n_pos = i;
      break;
    }
  }

  CanonicalCycleForm form;
  std::vector<int> cycle;
  for (int i = 1; i <= n_pos; ++i)
    cycle.push_back(word(i));
  form.cycles.push_back(std::move(cycle));

  // each left-to-right minimum of the suffix starts a new cycle
  int running_min = n + 1;
  cycle.clear();
  for (int i = n_pos + 1; i <= n; ++i) {
    const int v = word(i);
    if (v < running_min) {
      if (!cycle.empty())
        form.cycles.push_back(std::move(cycle));
      cycle = {v};
      running_min = v;
    } else {
      cycle.push_back(v);
    }
  }
  if (!cycle.empty())
    form.cycles.push_back(std::move(cycle));

  validate_canonical(form, n);
  return form;
}

Permutation phi(const Permutation& sigma) {
  return flatten(canonical_cycle_form(sigma.reverse_complement().rotate_left()))
      .inverse()
      .reverse_complement();
}

Permutation phi_inverse(const Permutation& tau) {
  const Permutation tau_bar = tau.reverse_complement().inverse();
  const Permutation sigma_hat = apply_cycles(unflatten(tau_bar), tau.size());
  return sigma_hat.rotate_right().reverse_complement();
}

PipelineTrace phi_with_trace(const Permutation& sigma) {
  Permutation sigma_bar = sigma.reverse_complement();
  Permutation sigma_hat = sigma_bar.rotate_left();
  CanonicalCycleForm form = canonical_cycle_form(sigma_hat);
  Permutation tau_bar = flatten(form);
  Permutation tau_bar_inv = tau_bar.inverse();
  Permutation tau = tau_bar_inv.reverse_complement();
  PipelineTrace trace{sigma,
                      std::move(sigma_bar),
                      std::move(sigma_hat),
                      std::move(form),
                      std::move(tau_bar),
                      std::move(tau_bar_inv),
                      std::move(tau)};
  assert(!pfee_violation(trace));
  return trace;
}

std::optional<PfeeViolation> pfee_violation(const PipelineTrace& trace) {
  const Permutation& sigma = trace.sigma;
  const int n = sigma.size();
  for (int i = 1; i <= n - 1; ++i) {
    const int complement = n + 1 - i; // >= 2, so complement-1 is a valid index
    const int bar_value = trace.sigma_bar(complement);
    const int hat_value = trace.sigma_hat(complement - 1);

    const char* family = nullptr;
    const char* relation = nullptr;
    bool ok = hat_value == bar_value;
    if (sigma(i) == i) {
      family = "pfee_fix";
      relation = "=";
      ok = ok && bar_value == complement;
    } else if (sigma(i) < i) {
      family = "pfee_drop";
      relation = ">";
      ok = ok && bar_value > complement;
    } else {
      family = "pfee_exc";
      relation = "<";
      ok = ok && bar_value < complement;
    }
    if (!ok) {
      std::string detail = "i=" + std::to_string(i) + ": sigma_hat_" +
                           std::to_string(complement - 1) + "=" + std::to_string(hat_value) +
                           ", sigma_bar_" + std::to_string(complement) + "=" +
                           std::to_string(bar_value) + ", expected " + relation + " " +
                           std::to_string(complement);
      return PfeeViolation{family, std::move(detail)};
    }
  }
  return std::nullopt;
}

} // namespace sucfix
