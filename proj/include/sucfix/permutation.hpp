#pragma once

#include <string>
#include <vector>

namespace sucfix {

/// A permutation of {1..n} in one-line notation. values()[i-1] = sigma_i,
/// so all public indices and values are 1-based.
class Permutation {
public:
  /// Validating constructor. Throws std::invalid_argument unless `values`
  /// is a rearrangement of {1..n} with n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  /// Wraps a vector that is already known to be a permutation of {1..n}.
  /// Only checked with an assert; callers are trusted.
  static Permutation unchecked(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }

  /// sigma_i for 1 <= i <= n.
  int operator()(int i) const { return values_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& values() const { return values_; }

  /// q with q_{sigma_i} = i.
  Permutation inverse() const;

  /// q with q_i = n+1 - sigma_{n-i+1} (conjugation-and-reflection by the
  /// longest element). An involution.
  Permutation reverse_complement() const;

  /// q_i = sigma_{i+1} for i < n, q_n = sigma_1.
  Permutation rotate_left() const;

  /// Exact inverse of rotate_left.
  Permutation rotate_right() const;

  /// Cycles of the permutation viewed as a function i -> sigma_i. Each cycle
  /// starts at its smallest element; cycles are ordered by smallest element
  /// ascending. Together they partition {1..n}.
  std::vector<std::vector<int>> cycle_decomposition() const;

  bool operator==(const Permutation&) const = default;

private:
  struct unchecked_tag {};
  Permutation(unchecked_tag, std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

/// Parses whitespace- or comma-separated one-line notation. Reports empty
/// input, non-integer tokens, out-of-range values and duplicates distinctly.
Permutation parse_permutation(const std::string& text);

/// Space-separated one-line notation; parse_permutation round-trips it.
std::string format_permutation(const Permutation& p);

} // namespace sucfix
