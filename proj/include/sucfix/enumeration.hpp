#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <type_traits>
#include <vector>

#include "sucfix/permutation.hpp"

namespace sucfix {

/// Ceiling for exhaustive S_n scans (12! = 479,001,600 permutations).
inline constexpr int kMaxEnumerationSize = 12;

namespace detail {

void check_enumeration_size(int n);
void check_shard_value(int n, int first_value);

template <typename Fn>
bool invoke_word(Fn& fn, const std::vector<int>& word) {
  if constexpr (std::is_void_v<std::invoke_result_t<Fn&, const std::vector<int>&>>) {
    fn(word);
    return true;
  } else {
    return fn(word);
  }
}

} // namespace detail

/// Yields every element of S_n exactly once, in lexicographic order starting
/// from the identity (the successor scheme of std::next_permutation).
class PermutationStream {
public:
  explicit PermutationStream(int n);

  int size() const { return static_cast<int>(word_.size()); }

  /// The next permutation, or nullopt once S_n is exhausted.
  std::optional<Permutation> next();

private:
  std::vector<int> word_;
  bool exhausted_ = false;
  bool started_ = false;
};

/// Calls fn for every element of S_n in lexicographic order. fn receives the
/// 1-based one-line word in a reused buffer; it may return void, or bool where
/// false stops the scan early.
template <typename Fn>
void for_each_permutation_word(int n, Fn&& fn) {
  detail::check_enumeration_size(n);
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    if (!detail::invoke_word(fn, word))
      return;
  } while (std::next_permutation(word.begin(), word.end()));
}

/// Scans the shard of S_n whose first entry is first_value, in lexicographic
/// order. The shards over first_value = 1..n partition S_n and concatenate to
/// the for_each_permutation_word order.
template <typename Fn>
void for_each_permutation_word_with_first(int n, int first_value, Fn&& fn) {
  detail::check_enumeration_size(n);
  detail::check_shard_value(n, first_value);
  std::vector<int> word(static_cast<size_t>(n));
  word[0] = first_value;
  int k = 1;
  for (int v = 1; v <= n; ++v) {
    if (v != first_value)
      word[static_cast<size_t>(k++)] = v;
  }
  do {
    if (!detail::invoke_word(fn, word))
      return;
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

} // namespace sucfix
