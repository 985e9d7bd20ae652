#include <doctest.h>
#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "sucfix/bijection.hpp"
#include "sucfix/enumeration.hpp"
#include "sucfix/permutation.hpp"
#include "sucfix/stats.hpp"

using sucfix::CanonicalCycleForm;
using sucfix::Permutation;

namespace {

const Permutation kSigma({7, 2, 6, 4, 1, 3, 5});
const Permutation kTau({4, 1, 2, 6, 7, 5, 3});

std::uint64_t encode_word(const std::vector<int>& word) {
  // 4 bits per entry, enough for n <= 8 words
  std::uint64_t key = 0;
  for (int v : word)
    key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

} // namespace

TEST_SUITE("bijection") {

TEST_CASE("canonical_cycle_form puts n last in the first cycle") {
  const CanonicalCycleForm form = sucfix::canonical_cycle_form(Permutation({5, 7, 4, 2, 6, 1, 3}));
  CHECK(form.cycles == std::vector<std::vector<int>>{{3, 4, 2, 7}, {1, 5, 6}});
}

TEST_CASE("canonical_cycle_form orders later cycles by decreasing minima") {
  CHECK(sucfix::canonical_cycle_form(Permutation::identity(4)).cycles ==
        std::vector<std::vector<int>>{{4}, {3}, {2}, {1}});
  CHECK(sucfix::canonical_cycle_form(Permutation({2, 1, 3})).cycles ==
        std::vector<std::vector<int>>{{3}, {1, 2}});
  CHECK(sucfix::canonical_cycle_form(Permutation({1})).cycles ==
        std::vector<std::vector<int>>{{1}});
}

TEST_CASE("flatten erases the parentheses") {
  const CanonicalCycleForm form{{{3, 4, 2, 7}, {1, 5, 6}}};
  CHECK(sucfix::flatten(form).values() == std::vector<int>{3, 4, 2, 7, 1, 5, 6});
  CHECK(sucfix::flatten(CanonicalCycleForm{{{1}}}).values() == std::vector<int>{1});
}

TEST_CASE("flatten rejects non-canonical forms") {
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{}), sucfix::StructuralError);
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{{{1, 2}, {3}}}), sucfix::StructuralError);
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{{{3, 1}, {2}}}), sucfix::StructuralError);
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{{{4}, {1, 2}, {3}}}),
                  sucfix::StructuralError);
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{{{4}, {2, 1}}}), sucfix::StructuralError);
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{{{2}, {1}, {1}}}), sucfix::StructuralError);
  CHECK_THROWS_AS(sucfix::flatten(CanonicalCycleForm{{{3}, {}}}), sucfix::StructuralError);
}

TEST_CASE("unflatten splits the suffix at its left-to-right minima") {
  CHECK(sucfix::unflatten(Permutation({3, 4, 2, 7, 1, 5, 6})).cycles ==
        std::vector<std::vector<int>>{{3, 4, 2, 7}, {1, 5, 6}});
  // suffix 1 3 4 has one minimum, so it stays one cycle even though the
  // whole word's minima would split it differently
  CHECK(sucfix::unflatten(Permutation({2, 7, 5, 6, 1, 3, 4})).cycles ==
        std::vector<std::vector<int>>{{2, 7}, {5, 6}, {1, 3, 4}});
  CHECK(sucfix::unflatten(Permutation({1})).cycles == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("flatten and unflatten are mutually inverse over S_5") {
  sucfix::for_each_permutation_word(5, [](const std::vector<int>& word) {
    const Permutation p = Permutation::unchecked(word);
    REQUIRE(sucfix::flatten(sucfix::unflatten(p)) == p);
    const CanonicalCycleForm form = sucfix::canonical_cycle_form(p);
    REQUIRE(sucfix::unflatten(sucfix::flatten(form)) == form);
  });
}

TEST_CASE("phi on the worked example") {
  CHECK(sucfix::phi(kSigma) == kTau);
  CHECK(sucfix::phi(Permutation({1})) == Permutation({1}));
  CHECK(sucfix::phi(Permutation({1, 2})) == Permutation({1, 2}));
}

TEST_CASE("phi_inverse on the worked example") {
  CHECK(sucfix::phi_inverse(kTau) == kSigma);
  CHECK(sucfix::phi_inverse(Permutation({1})) == Permutation({1}));
}

TEST_CASE("phi_with_trace exposes every stage of the worked example") {
  const sucfix::PipelineTrace trace = sucfix::phi_with_trace(kSigma);
  CHECK(trace.sigma == kSigma);
  CHECK(trace.sigma_bar.values() == std::vector<int>{3, 5, 7, 4, 2, 6, 1});
  CHECK(trace.sigma_hat.values() == std::vector<int>{5, 7, 4, 2, 6, 1, 3});
  CHECK(trace.cycle_form.cycles == std::vector<std::vector<int>>{{3, 4, 2, 7}, {1, 5, 6}});
  CHECK(trace.tau_bar.values() == std::vector<int>{3, 4, 2, 7, 1, 5, 6});
  CHECK(trace.tau_bar_inv.values() == std::vector<int>{5, 3, 1, 2, 6, 7, 4});
  CHECK(trace.tau == kTau);
}

TEST_CASE("phi matches phi_with_trace") {
  sucfix::for_each_permutation_word(5, [](const std::vector<int>& word) {
    const Permutation p = Permutation::unchecked(word);
    REQUIRE(sucfix::phi_with_trace(p).tau == sucfix::phi(p));
  });
}

TEST_CASE("phi round-trips and is injective over S_6") {
  std::unordered_set<std::uint64_t> images;
  std::uint64_t count = 0;
  sucfix::for_each_permutation_word(6, [&](const std::vector<int>& word) {
    const Permutation sigma = Permutation::unchecked(word);
    const Permutation tau = sucfix::phi(sigma);
    REQUIRE(sucfix::phi_inverse(tau) == sigma);
    images.insert(encode_word(tau.values()));
    ++count;
  });
  CHECK(count == 720);
  CHECK(images.size() == 720);
}

TEST_CASE("the set relations hold over S_6") {
  sucfix::for_each_permutation_word(6, [](const std::vector<int>& word) {
    const Permutation sigma = Permutation::unchecked(word);
    const Permutation tau = sucfix::phi(sigma);
    REQUIRE(sucfix::fixed_points_bar(sigma) == sucfix::successions(tau));
    REQUIRE(sucfix::drop_values_bar(sigma) == sucfix::non_adjacent_successions(tau));
    REQUIRE(sucfix::excedance_values_bar(sigma) == sucfix::predecessors(tau));
  });
}

TEST_CASE("the last entry of sigma is the position of n in tau, over S_6") {
  sucfix::for_each_permutation_word(6, [](const std::vector<int>& word) {
    const Permutation sigma = Permutation::unchecked(word);
    const Permutation tau = sucfix::phi(sigma);
    REQUIRE(tau(sigma(6)) == 6);
  });
}

TEST_CASE("pointwise rotation identities hold over S_5") {
  sucfix::for_each_permutation_word(5, [](const std::vector<int>& word) {
    const auto trace = sucfix::phi_with_trace(Permutation::unchecked(word));
    REQUIRE(!sucfix::pfee_violation(trace));
  });
}

TEST_CASE("canonical form invariants hold over S_5") {
  sucfix::for_each_permutation_word(5, [](const std::vector<int>& word) {
    const CanonicalCycleForm form =
        sucfix::canonical_cycle_form(Permutation::unchecked(word));
    REQUIRE(!form.cycles.empty());
    REQUIRE(form.cycles.front().back() == 5);
    int prev_min = 6;
    size_t total = 0;
    for (size_t c = 0; c < form.cycles.size(); ++c) {
      const auto& cycle = form.cycles[c];
      REQUIRE(!cycle.empty());
      total += cycle.size();
      if (c > 0) {
        REQUIRE(cycle.front() == *std::min_element(cycle.begin(), cycle.end()));
        REQUIRE(cycle.front() < prev_min);
        prev_min = cycle.front();
      }
    }
    REQUIRE(total == 5);
  });
}

} // TEST_SUITE
