#pragma once

#include <cstdint>
#include <vector>

#include "toridim/polytopal.hpp"

namespace toridim {

// Hitting-set instance on {0, ..., ground-1}.
struct SetSystem {
  std::size_t ground = 0;
  std::vector<IndexSet> sets;
  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Validates and sorts each set.
SetSystem make_set_system(std::size_t ground, std::vector<IndexSet> sets);

/// One monomial of degree `ground` per set, positive exactly on the set;
/// the excess goes on the least index.
std::vector<IntVec> hitting_supports(const SetSystem& r);
// Same shape with the excess spread at random.
std::vector<IntVec> hitting_supports_random(const SetSystem& r, std::uint64_t seed);

/// Exact minimum hitting set size; SIZE_LIMIT above 24 points.
std::size_t min_hitting_set(const SetSystem& r);
std::size_t min_hitting_set_serial(const SetSystem& r);

/// ground copies of the supports on the standard simplex of dimension ground-1.
PolytopalSystem hitting_system(const SetSystem& r, const std::vector<IntVec>& supports);
// n - dimension, with EMPTY counted as n + 1.
std::size_t hitting_codimension(const SetSystem& r, const std::vector<IntVec>& supports);

struct KnapsackReport {
  bool positive_solution = false;
  bool support_empty = false;
  Dim hypersurface_dim = Dim::empty();
  // positive_solution == (hypersurface_dim == n-1); reported, not enforced
  bool sides_agree = false;
  friend bool operator==(const KnapsackReport&, const KnapsackReport&) = default;
};

KnapsackReport knapsack_demo(const std::vector<long>& weights, long b);

}  // namespace toridim
