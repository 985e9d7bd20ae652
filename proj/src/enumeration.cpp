#include "sucfix/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sucfix {

namespace detail {

void check_enumeration_size(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw std::invalid_argument("enumeration size must be in 1.." +
                                std::to_string(kMaxEnumerationSize) + ", got " +
                                std::to_string(n));
}

void check_shard_value(int n, int first_value) {
  if (first_value < 1 || first_value > n)
    throw std::invalid_argument("shard value must be in 1.." + std::to_string(n) + ", got " +
                                std::to_string(first_value));
}

} // namespace detail

PermutationStream::PermutationStream(int n) {
  detail::check_enumeration_size(n);
  word_.resize(static_cast<size_t>(n));
  std::iota(word_.begin(), word_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
  if (exhausted_)
    return std::nullopt;
  if (started_ && !std::next_permutation(word_.begin(), word_.end())) {
    exhausted_ = true;
    return std::nullopt;
  }
  started_ = true;
  return Permutation::unchecked(word_);
}

} // namespace sucfix
