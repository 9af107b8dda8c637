#include "toridim/hardness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <random>

#include "toridim/error.hpp"

namespace toridim {

namespace {

constexpr std::size_t max_ground = 24;

std::vector<std::uint32_t> masks_of(const SetSystem& r) {
  std::vector<std::uint32_t> m;
  for (const auto& s : r.sets) {
    std::uint32_t b = 0;
    for (auto i : s) b |= 1U << i;
    m.push_back(b);
  }
  return m;
}

void check_size(const SetSystem& r) {
  if (r.ground > max_ground)
    fail(ErrorCode::size_limit, "hitting set search is limited to " + std::to_string(max_ground) + " points");
}

// Branch on the elements of the first set not yet hit.
void branch(const std::vector<std::uint32_t>& sets, std::uint32_t chosen, std::size_t size, std::size_t& best) {
  if (size >= best) return;
  auto open = std::find_if(sets.begin(), sets.end(), [&](std::uint32_t s) { return (s & chosen) == 0; });
  if (open == sets.end()) {
    best = size;
    return;
  }
  for (std::uint32_t rest = *open; rest != 0; rest &= rest - 1)
    branch(sets, chosen | (rest & -rest), size + 1, best);
}

}  // namespace

SetSystem make_set_system(std::size_t ground, std::vector<IndexSet> sets) {
  require(ground >= 1, "ground set is empty");
  for (std::size_t k = 0; k < sets.size(); ++k) {
    auto& s = sets[k];
    require(!s.empty(), "set " + std::to_string(k) + " is empty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    require(s.back() < ground, "set " + std::to_string(k) + " leaves the ground set");
  }
  return {ground, std::move(sets)};
}

std::vector<IntVec> hitting_supports(const SetSystem& r) {
  std::vector<IntVec> out;
  for (const auto& s : r.sets) {
    IntVec v(r.ground);
    for (auto i : s) v[i] = 1;
    v[s.front()] += static_cast<long>(r.ground - s.size());
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVec> hitting_supports_random(const SetSystem& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IntVec> out;
  for (const auto& s : r.sets) {
    IntVec v(r.ground);
    for (auto i : s) v[i] = 1;
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    for (std::size_t k = s.size(); k < r.ground; ++k) v[s[pick(rng)]] += 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t min_hitting_set(const SetSystem& r) {
  check_size(r);
  const auto sets = masks_of(r);
  struct Node {
    std::uint32_t chosen;
    std::size_t size;
  };
  std::size_t best = r.ground + 1;
  std::vector<Node> frontier{{0, 0}};
  for (int depth = 0; depth < 3 && !frontier.empty() && frontier.size() < 256; ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      auto open = std::find_if(sets.begin(), sets.end(), [&](std::uint32_t s) { return (s & node.chosen) == 0; });
      if (open == sets.end()) {
        best = std::min(best, node.size);
        continue;
      }
      for (std::uint32_t rest = *open; rest != 0; rest &= rest - 1)
        next.push_back({node.chosen | (rest & -rest), node.size + 1});
    }
    frontier = std::move(next);
  }
  std::atomic<std::size_t> shared(best);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(frontier.size()); ++i) {
    std::size_t local = shared.load();
    const auto& node = frontier[static_cast<std::size_t>(i)];
    branch(sets, node.chosen, node.size, local);
    std::size_t cur = shared.load();
    while (local < cur && !shared.compare_exchange_weak(cur, local)) {
    }
  }
  return shared.load();
}

std::size_t min_hitting_set_serial(const SetSystem& r) {
  check_size(r);
  std::size_t best = r.ground + 1;
  branch(masks_of(r), 0, 0, best);
  return best;
}

PolytopalSystem hitting_system(const SetSystem& r, const std::vector<IntVec>& supports) {
  const std::size_t m = r.ground;
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < m; ++i) {
    RatVec v(m);
    v[i] = 1;
    verts.push_back(std::move(v));
  }
  return make_polytopal_system(std::move(verts), std::vector<long>(m, static_cast<long>(m)),
                               std::vector<std::vector<IntVec>>(m, supports));
}

std::size_t hitting_codimension(const SetSystem& r, const std::vector<IntVec>& supports) {
  const int n = static_cast<int>(r.ground) - 1;
  auto dim = polytopal_dimension(hitting_system(r, supports)).dimension;
  return dim.is_empty() ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n - dim.value());
}

KnapsackReport knapsack_demo(const std::vector<long>& weights, long b) {
  require(!weights.empty(), "weights are empty");
  require(b >= 1, "target must be positive");
  for (auto a : weights) require(a >= 1, "weights must be positive");
  KnapsackReport rep;
  const long sum = std::accumulate(weights.begin(), weights.end(), 0L);
  rep.positive_solution = b >= sum && semigroup_member(weights, b - sum);
  const int n = static_cast<int>(weights.size()) - 1;
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    RatVec v(weights.size());
    v[i] = ratio(1, weights[i]);
    verts.push_back(std::move(v));
  }
  auto support = full_support(dual_description(verts), b);
  if (support.empty()) {
    rep.support_empty = true;
  } else {
    auto sys = make_polytopal_system(std::move(verts), {b}, {std::move(support)});
    rep.hypersurface_dim = polytopal_dimension(sys).dimension;
  }
  rep.sides_agree = rep.positive_solution == (rep.hypersurface_dim == Dim::of(n - 1));
  return rep;
}

}  // namespace toridim
