#include "sucfix/permutation.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sucfix {

namespace {

[[maybe_unused]] bool is_permutation_vector(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n == 0)
    return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : values) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      return false;
    seen[static_cast<size_t>(v) - 1] = true;
  }
  return true;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n == 0)
    throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[static_cast<size_t>(v) - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> values(static_cast<size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(unchecked_tag{}, std::move(values));
}

Permutation Permutation::unchecked(std::vector<int> values) {
  assert(is_permutation_vector(values));
  return Permutation(unchecked_tag{}, std::move(values));
}

Permutation Permutation::inverse() const {
  const int n = size();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(unchecked_tag{}, std::move(inv));
}

Permutation Permutation::reverse_complement() const {
  const int n = size();
  std::vector<int> out(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    out[static_cast<size_t>(i) - 1] = n + 1 - (*this)(n - i + 1);
  return Permutation(unchecked_tag{}, std::move(out));
}

Permutation Permutation::rotate_left() const {
  std::vector<int> out(values_.begin() + 1, values_.end());
  out.push_back(values_.front());
  return Permutation(unchecked_tag{}, std::move(out));
}

Permutation Permutation::rotate_right() const {
  std::vector<int> out;
  out.reserve(values_.size());
  out.push_back(values_.back());
  out.insert(out.end(), values_.begin(), values_.end() - 1);
  return Permutation(unchecked_tag{}, std::move(out));
}

std::vector<std::vector<int>> Permutation::cycle_decomposition() const {
  const int n = size();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> visited(static_cast<size_t>(n), false);
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start) - 1])
      continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      visited[static_cast<size_t>(cur) - 1] = true;
      cycle.push_back(cur);
      cur = (*this)(cur);
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty())
    tokens.push_back(cur);

  if (tokens.empty())
    throw std::invalid_argument("empty permutation");

  std::vector<int> values;
  values.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    int v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw std::invalid_argument("invalid token '" + tok + "'");
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1)
      out.push_back(' ');
    out += std::to_string(p(i));
  }
  return out;
}

} // namespace sucfix
