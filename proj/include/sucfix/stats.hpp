#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sucfix/permutation.hpp"

namespace sucfix {

/// Sorted ascending, duplicate-free indices in 1..n.
using IndexSet = std::vector<int>;
/// Sorted ascending, duplicate-free values in 1..n.
using ValueSet = std::vector<int>;

/// Indices i <= n-1 with sigma_{i+1} = sigma_i + 1.
IndexSet successions(const Permutation& p);

/// Indices i <= n-1 with sigma_i = i. Index n is excluded by definition.
IndexSet fixed_points_bar(const Permutation& p);

/// Indices i <= n-2 whose successor value sigma_i + 1 appears at a position
/// >= i+2.
IndexSet non_adjacent_successions(const Permutation& p);

/// Indices i >= 2 whose successor value sigma_i + 1 appears at a position < i.
IndexSet predecessors(const Permutation& p);

/// Values sigma_i over indices i <= n-1 with sigma_i < i.
ValueSet drop_values_bar(const Permutation& p);

/// Values sigma_i over indices i <= n-1 with sigma_i > i.
ValueSet excedance_values_bar(const Permutation& p);

enum class Statistic { suc, fix_bar, naj_suc, pred, drop_bar, exc_bar };

inline constexpr std::array<Statistic, 6> kAllStatistics = {
    Statistic::suc,      Statistic::fix_bar,  Statistic::naj_suc,
    Statistic::pred,     Statistic::drop_bar, Statistic::exc_bar,
};

const char* statistic_name(Statistic s);

/// Throws std::invalid_argument for anything outside the six names.
Statistic statistic_from_name(std::string_view name);

std::vector<int> compute_statistic(Statistic s, const Permutation& p);

} // namespace sucfix
