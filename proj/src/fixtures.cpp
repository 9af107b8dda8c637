#include "toridim/fixtures.hpp"

#include "toridim/error.hpp"

namespace toridim::fixtures {

namespace {

IntVec v2(long a, long b) { return make_intvec({a, b}); }

std::shared_ptr<const ToricVariety> variety(Fan f) { return std::make_shared<const ToricVariety>(std::move(f)); }

}  // namespace

Fan projective_plane() { return {2, {v2(1, 0), v2(0, 1), v2(-1, -1)}, {{0, 1}, {1, 2}, {0, 2}}}; }

Fan weighted_plane_123() { return {2, {v2(2, 3), v2(-1, 0), v2(0, -1)}, {{0, 1}, {1, 2}, {0, 2}}}; }

Fan p1_times_p2() {
  Fan f;
  f.rank = 3;
  f.rays = {make_intvec({1, 0, 0}), make_intvec({-1, 0, 0}), make_intvec({0, 1, 0}), make_intvec({0, 0, 1}),
            make_intvec({0, -1, -1})};
  for (std::size_t a : {0, 1}) {
    f.max_cones.push_back({a, 2, 3});
    f.max_cones.push_back({a, 3, 4});
    f.max_cones.push_back({a, 2, 4});
  }
  return f;
}

Fan hirzebruch2() { return {2, {v2(1, 0), v2(0, 1), v2(-1, 2), v2(0, -1)}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}; }

Fan four_ray_fan() { return {2, {v2(0, 1), v2(-1, -2), v2(1, -1), v2(2, 1)}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}; }

Fan weighted_plane_hyperelliptic(int genus) {
  require(genus >= 1, "genus must be positive");
  return {2, {v2(1, 0), v2(0, 1), v2(-1, -(genus + 1))}, {{0, 1}, {1, 2}, {0, 2}}};
}

SparseSystem p1xp2_system() {
  auto x = variety(p1_times_p2());
  std::vector<IntVec> monos{make_intvec({1, 0, 0, 0, 0}), make_intvec({0, 1, 1, 0, 0}), make_intvec({0, 1, 0, 1, 0})};
  SparseSystem s{x, {}};
  for (const auto& m : monos) s.supports.push_back(make_support(*x, m, {m}));
  return s;
}

SparseSystem hyperelliptic_projective(int genus) {
  require(genus >= 1, "genus must be positive");
  auto x = variety(projective_plane());
  const long d = 2L * genus + 1;
  std::vector<IntVec> monos;
  for (long i = 0; i <= d; ++i) monos.push_back(make_intvec({i, 0, d - i}));
  monos.push_back(make_intvec({0, 2, d - 2}));
  return {x, {make_support(*x, make_intvec({0, 0, d}), monos)}};
}

IndexSet hyperelliptic_projective_point() { return {0, 2}; }

SparseSystem hyperelliptic_weighted(int genus) {
  auto x = variety(weighted_plane_hyperelliptic(genus));
  const long d = 2L * genus + 2;
  std::vector<IntVec> monos;
  for (long i = 0; i < d; ++i) monos.push_back(make_intvec({i, 0, d - i}));
  monos.push_back(make_intvec({0, 2, 0}));
  return {x, {make_support(*x, make_intvec({0, 0, d}), monos)}};
}

IndexSet hyperelliptic_weighted_point() { return {1, 2}; }

std::vector<IntVec> hirzebruch_support() {
  return {make_intvec({0, 1, 3, 0}), make_intvec({0, 0, 1, 1}), make_intvec({1, 0, 0, 1}), make_intvec({1, 1, 2, 0}),
          make_intvec({2, 1, 1, 0})};
}

TDivisor hirzebruch_degree() { return make_intvec({1, 0, 0, 1}); }

RationalPolytope weighted_simplex(const std::vector<long>& weights) {
  require(!weights.empty(), "weights are empty");
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    require(weights[i] > 0, "weights must be positive");
    RatVec v(weights.size());
    v[i] = ratio(1, weights[i]);
    verts.push_back(std::move(v));
  }
  return dual_description(std::move(verts));
}

RationalPolytope standard_simplex(std::size_t n) { return weighted_simplex(std::vector<long>(n + 1, 1)); }

}  // namespace toridim::fixtures
