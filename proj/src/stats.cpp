#include "sucfix/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace sucfix {

namespace {

// position_of[v-1] = the index holding value v
std::vector<int> positions_of_values(const Permutation& p) {
  std::vector<int> pos(static_cast<size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i)
    pos[static_cast<size_t>(p(i)) - 1] = i;
  return pos;
}

} // namespace

IndexSet successions(const Permutation& p) {
  IndexSet out;
  for (int i = 1; i <= p.size() - 1; ++i) {
    if (p(i) + 1 == p(i + 1))
      out.push_back(i);
  }
  return out;
}

IndexSet fixed_points_bar(const Permutation& p) {
  IndexSet out;
  for (int i = 1; i <= p.size() - 1; ++i) {
    if (p(i) == i)
      out.push_back(i);
  }
  return out;
}

IndexSet non_adjacent_successions(const Permutation& p) {
  const int n = p.size();
  const std::vector<int> pos = positions_of_values(p);
  IndexSet out;
  for (int i = 1; i <= n - 2; ++i) {
    const int v = p(i);
    if (v < n && pos[static_cast<size_t>(v)] >= i + 2)
      out.push_back(i);
  }
  return out;
}

IndexSet predecessors(const Permutation& p) {
  const int n = p.size();
  const std::vector<int> pos = positions_of_values(p);
  IndexSet out;
  for (int i = 2; i <= n; ++i) {
    const int v = p(i);
    if (v < n && pos[static_cast<size_t>(v)] < i)
      out.push_back(i);
  }
  return out;
}

ValueSet drop_values_bar(const Permutation& p) {
  ValueSet out;
  for (int i = 1; i <= p.size() - 1; ++i) {
    if (p(i) < i)
      out.push_back(p(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet excedance_values_bar(const Permutation& p) {
  ValueSet out;
  for (int i = 1; i <= p.size() - 1; ++i) {
    if (p(i) > i)
      out.push_back(p(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* statistic_name(Statistic s) {
  switch (s) {
  case Statistic::suc:
    return "suc";
  case Statistic::fix_bar:
    return "fix_bar";
  case Statistic::naj_suc:
    return "naj_suc";
  case Statistic::pred:
    return "pred";
  case Statistic::drop_bar:
    return "drop_bar";
  case Statistic::exc_bar:
    return "exc_bar";
  }
  return "";
}

Statistic statistic_from_name(std::string_view name) {
  for (Statistic s : kAllStatistics) {
    if (statistic_name(s) == name)
      return s;
  }
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::vector<int> compute_statistic(Statistic s, const Permutation& p) {
  switch (s) {
  case Statistic::suc:
    return successions(p);
  case Statistic::fix_bar:
    return fixed_points_bar(p);
  case Statistic::naj_suc:
    return non_adjacent_successions(p);
  case Statistic::pred:
    return predecessors(p);
  case Statistic::drop_bar:
    return drop_values_bar(p);
  case Statistic::exc_bar:
    return excedance_values_bar(p);
  }
  throw std::invalid_argument("unknown statistic");
}

} // namespace sucfix
