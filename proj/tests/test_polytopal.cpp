#include "doctest.h"

#include <map>
#include <random>

#include "toridim/error.hpp"
#include "toridim/fixtures.hpp"
#include "toridim/polytopal.hpp"

using namespace toridim;
namespace fx = toridim::fixtures;

namespace {

std::vector<RatVec> simplex_vertices(const std::vector<long>& weights) {
  std::vector<RatVec> v;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    RatVec p(weights.size());
    p[i] = ratio(1, weights[i]);
    v.push_back(p);
  }
  return v;
}

const FaceRow& row_of(const PolytopalReport& rep, const IndexSet& face) {
  for (const auto& r : rep.rows)
    if (r.face == face) return r;
  throw std::runtime_error("no such face");
}

PolytopalSystem simplex_system(std::vector<long> degrees, std::vector<std::vector<IntVec>> supports) {
  return make_polytopal_system(simplex_vertices({1, 1, 1}), std::move(degrees), std::move(supports));
}

PolytopalSystem weighted_113() {
  std::vector<IntVec> a;
  for (long i = 0; i <= 5; ++i) a.push_back(make_intvec({i, 6 - i, 0}));
  a.push_back(make_intvec({0, 0, 2}));
  return make_polytopal_system(simplex_vertices({1, 1, 3}), {6}, {a});
}

// Brute-force semigroup membership by a boolean table.
bool table_member(const std::vector<long>& gens, long t) {
  std::vector<char> ok(static_cast<std::size_t>(t) + 1, 0);
  ok[0] = 1;
  for (long v = 1; v <= t; ++v)
    for (auto g : gens)
      if (g <= v && ok[static_cast<std::size_t>(v - g)]) ok[static_cast<std::size_t>(v)] = 1;
  return ok[static_cast<std::size_t>(t)];
}

std::vector<IntVec> random_subset(std::mt19937_64& rng, const std::vector<IntVec>& all, std::size_t max) {
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<std::size_t> size(1, std::min(all.size(), max));
  std::vector<IntVec> out;
  const std::size_t k = size(rng);
  for (std::size_t i = 0; i < k; ++i) out.push_back(all[pick(rng)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using Signature = std::map<std::tuple<int, std::size_t, bool>, int>;

Signature face_signature(const PolytopalReport& rep) {
  Signature s;
  for (const auto& r : rep.rows) ++s[{r.dim, r.e.size(), r.essential}];
  return s;
}

Signature cone_signature(const SparseSystem& sys) {
  Signature s;
  const int n = static_cast<int>(sys.rank());
  for (const auto& r : orbit_table(sys)) ++s[{n - r.cone.dim, r.e.size(), r.essential}];
  return s;
}

void check_route(const PolytopalSystem& sys) {
  auto rep = polytopal_dimension(sys);
  auto route = fan_route_system(sys);
  CHECK(generic_dimension(route) == rep.dimension);
  CHECK(face_signature(rep) == cone_signature(route));
}

}  // namespace

TEST_CASE("a double line on the plane simplex") {
  auto sys = simplex_system({2, 2}, {{make_intvec({1, 1, 0})}, {make_intvec({1, 1, 0})}});
  auto rep = polytopal_dimension(sys);
  CHECK(rep.rows.size() == 7);
  const auto& edge = row_of(rep, {0, 2});
  CHECK(edge.e.empty());
  CHECK(edge.essential);
  CHECK(edge.contribution == Dim::of(1));
  CHECK(rep.dimension == Dim::of(1));
  auto reg = is_regular_sequence(sys);
  CHECK_FALSE(reg.regular);
  CHECK(reg.witness == IndexSet{0, 2});
  // the other edge through the vertex of x2 also violates
  CHECK(row_of(rep, {1, 2}).e.empty());
}

TEST_CASE("the weighted plane (1,1,3) sextic") {
  auto sys = weighted_113();
  auto rep = polytopal_dimension(sys);
  CHECK(rep.dimension == Dim::of(1));
  const auto& inf = row_of(rep, {0});
  CHECK(inf.e.empty());
  CHECK(inf.contribution == Dim::of(0));
  CHECK(row_of(rep, {1}).contribution == Dim::empty());
  CHECK(row_of(rep, {2}).contribution == Dim::empty());
  CHECK(polytopal_dimension(refine_lattice(sys, 3)).dimension == Dim::of(1));
  check_route(refine_lattice(sys, 3));
  CHECK_THROWS_AS(fan_route_system(sys), Error);
}

TEST_CASE("no equations") {
  auto sys = make_polytopal_system(simplex_vertices({1, 2, 3}), {}, {});
  auto rep = polytopal_dimension(sys);
  CHECK(rep.dimension == Dim::of(2));
  CHECK(row_of(rep, {0, 1, 2}).contribution == Dim::of(2));
  CHECK(is_regular_sequence(sys).regular);
}

TEST_CASE("regular sequences on simplices") {
  auto squares = simplex_system({2, 2}, {{make_intvec({2, 0, 0})}, {make_intvec({0, 2, 0})}});
  auto r = is_regular_sequence(squares);
  CHECK(r.regular);
  CHECK(r.dimension == Dim::of(0));

  auto p = dual_description(simplex_vertices({1, 2, 3}));
  auto w = make_polytopal_system(simplex_vertices({1, 2, 3}), {2, 3}, {full_support(p, 2), full_support(p, 3)});
  CHECK(full_support(p, 2).size() == 2);
  CHECK(full_support(p, 3).size() == 3);
  CHECK(is_regular_sequence(w).regular);

  auto three = simplex_system({1, 1, 1}, {{make_intvec({1, 0, 0})}, {make_intvec({0, 1, 0})}, {make_intvec({0, 0, 1})}});
  CHECK_THROWS_AS(is_regular_sequence(three), Error);
  CHECK(polytopal_dimension(three).dimension == Dim::empty());
}

TEST_CASE("standard graded criterion") {
  auto r = standard_regseq(2, {2, 2}, {{make_intvec({2, 0, 0})}, {make_intvec({0, 2, 0})}});
  CHECK(r.regular);
  CHECK(r.polytopal_checked);
  r = standard_regseq(2, {2, 2}, {{make_intvec({1, 1, 0})}, {make_intvec({1, 1, 0})}});
  CHECK_FALSE(r.regular);
  CHECK(r.witness == IndexSet{0, 2});
  auto quad = full_support(fx::standard_simplex(2), 2);
  CHECK(quad.size() == 6);
  CHECK(standard_regseq(2, {2, 2}, {quad, quad}).regular);
  CHECK_THROWS_AS(standard_regseq(2, {2}, {{make_intvec({1, 0, 0})}}), Error);
  CHECK_THROWS_AS(standard_regseq(1, {1, 1}, {{make_intvec({1, 0})}, {make_intvec({0, 1})}}), Error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    const std::size_t r2 = 1 + static_cast<std::size_t>(trial / 2) % n;
    std::vector<long> degs;
    std::vector<std::vector<IntVec>> sups;
    for (std::size_t j = 0; j < r2; ++j) {
      long d = 1 + trial % 3;
      degs.push_back(d);
      sups.push_back(random_subset(rng, full_support(fx::standard_simplex(n), d), 3));
    }
    CHECK(standard_regseq(n, degs, sups).polytopal_checked);
  }
}

TEST_CASE("weighted criterion") {
  auto r = weighted_regseq({1, 2, 3}, {2, 3});
  CHECK(r.regular);
  CHECK(r.polytopal_checked);
  r = weighted_regseq({1, 2, 3}, {1, 1});
  CHECK_FALSE(r.regular);
  CHECK(r.witness == IndexSet{1, 2});
  for (long d1 = 1; d1 <= 4; ++d1)
    for (long d2 = 1; d2 <= 4; ++d2) CHECK(weighted_regseq({1, 1, 1, 1}, {d1, d2}).regular);
  auto empty = weighted_regseq({2, 2}, {3});
  CHECK_FALSE(empty.polytopal_checked);
  CHECK_THROWS_AS(weighted_regseq({1, 0, 2}, {1}), Error);
  CHECK_THROWS_AS(weighted_regseq({1, 2}, {1, 1}), Error);

  // every small instance runs the face-criterion cross-check
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> w(1, 5), d(1, 12);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<long> a(2 + static_cast<std::size_t>(trial % 3));
    for (auto& x : a) x = w(rng);
    std::vector<long> degs(1 + static_cast<std::size_t>(trial) % (a.size() - 1));
    for (auto& x : degs) x = d(rng);
    auto res = weighted_regseq(a, degs);
    bool all_nonempty = std::all_of(degs.begin(), degs.end(), [&](long x) { return semigroup_member(a, x); });
    CHECK(res.polytopal_checked == all_nonempty);
    checked += res.polytopal_checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("semigroup membership") {
  CHECK_FALSE(semigroup_member({2, 3}, 1));
  CHECK(semigroup_member({2, 3}, 7));
  CHECK_FALSE(semigroup_member({3}, 2));
  CHECK(semigroup_member({3}, 0));
  CHECK_FALSE(semigroup_member({3}, -3));
  CHECK_THROWS_AS(semigroup_member({}, 2), Error);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> g(1, 30), t(0, 200);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<long> gens(1 + static_cast<std::size_t>(trial % 4));
    for (auto& x : gens) x = g(rng);
    long target = t(rng);
    CHECK(semigroup_member(gens, target) == table_member(gens, target));
  }
}

TEST_CASE("weight reduction") {
  auto r = reduce_weights({2, 4, 6}, {4, 6});
  CHECK(r.divisor == 2);
  CHECK(r.weights == std::vector<long>{1, 2, 3});
  CHECK(r.degrees == std::vector<long>{2, 3});
  CHECK(r.degrees_divisible);
  CHECK(weighted_regseq({2, 4, 6}, {4, 6}).regular == weighted_regseq(r.weights, r.degrees).regular);
  CHECK_FALSE(reduce_weights({2, 2}, {3}).degrees_divisible);
}

TEST_CASE("lattice refinement keeps every verdict") {
  auto sys = simplex_system({2, 2}, {{make_intvec({1, 1, 0})}, {make_intvec({1, 1, 0})}});
  auto same = refine_lattice(sys, 1);
  CHECK(same.supports == sys.supports);
  CHECK(same.polytope.vertices() == sys.polytope.vertices());
  auto doubled = refine_lattice(sys, 2);
  CHECK(is_regular_sequence(doubled).regular == is_regular_sequence(sys).regular);
  CHECK(is_regular_sequence(doubled).witness == is_regular_sequence(sys).witness);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = dual_description(simplex_vertices({1, 1, 2}));
    std::vector<long> degs{1 + trial % 4, 2};
    std::vector<std::vector<IntVec>> sups;
    for (auto d : degs) sups.push_back(random_subset(rng, full_support(p, d), 3));
    auto s = make_polytopal_system(simplex_vertices({1, 1, 2}), degs, sups);
    auto base = is_regular_sequence(s);
    for (long k : {2L, 3L}) {
      auto refined = is_regular_sequence(refine_lattice(s, k));
      CHECK(refined.regular == base.regular);
      CHECK(refined.dimension == base.dimension);
      CHECK(refined.witness == base.witness);
    }
  }
}

TEST_CASE("the face route agrees with the fan route") {
  // the Hirzebruch polytope of class (1,1)
  ToricVariety h(fx::hirzebruch2());
  auto hp = divisor_polytope(h, fx::hirzebruch_degree(), h.zero_cone());
  std::vector<IntVec> pts;
  for (const auto& a : fx::hirzebruch_support()) pts.push_back(monomial_to_point(h, fx::hirzebruch_degree(), a));
  auto hs = make_polytopal_system(hp, {1, 1}, {pts, full_support(hp, 1)});
  check_route(hs);
  CHECK(polytopal_dimension(hs).dimension ==
        generic_dimension(SparseSystem{std::make_shared<const ToricVariety>(fx::hirzebruch2()),
                                       {make_support(h, fx::hirzebruch_degree(), fx::hirzebruch_support()),
                                        make_support(h, fx::hirzebruch_degree(),
                                                     monomials_of_class(h, fx::hirzebruch_degree()))}}));

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-2, 2);
  int tested = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 2);
    std::vector<RatVec> verts;
    for (int k = 0; k < 4 + trial % 3; ++k) {
      RatVec v(dim);
      for (auto& x : v) x = c(rng);
      verts.push_back(v);
    }
    auto p = dual_description(verts);
    if (p.dim() != static_cast<int>(dim)) continue;
    std::vector<long> degs;
    std::vector<std::vector<IntVec>> sups;
    const std::size_t r = 1 + static_cast<std::size_t>(trial % 3);
    for (std::size_t j = 0; j < r; ++j) {
      degs.push_back(1 + static_cast<long>(j % 2));
      sups.push_back(random_subset(rng, full_support(p, degs.back()), 4));
    }
    auto sys = make_polytopal_system(p, degs, sups);
    check_route(sys);
    if (r <= dim) {
      auto reg = is_regular_sequence(sys);
      CHECK(reg.regular == (reg.dimension == Dim::of(static_cast<int>(dim - r))));
    }
    auto ser = polytopal_dimension_serial(sys);
    auto par = polytopal_dimension(sys);
    CHECK(ser.dimension == par.dimension);
    REQUIRE(ser.rows.size() == par.rows.size());
    for (std::size_t i = 0; i < ser.rows.size(); ++i) {
      CHECK(ser.rows[i].face == par.rows[i].face);
      CHECK(ser.rows[i].e == par.rows[i].e);
      CHECK(ser.rows[i].contribution == par.rows[i].contribution);
    }
    ++tested;
  }
  CHECK(tested > 30);

  // lower-dimensional lattice simplex
  auto simplex = make_polytopal_system(simplex_vertices({1, 1, 1, 1}), {1, 2},
                                       {{make_intvec({1, 0, 0, 0}), make_intvec({0, 1, 0, 0})},
                                        {make_intvec({0, 0, 1, 1}), make_intvec({2, 0, 0, 0})}});
  check_route(simplex);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(simplex_system({2}, {{make_intvec({1, 0, 0})}}), Error);
  CHECK_THROWS_AS(simplex_system({0}, {{make_intvec({0, 0, 0})}}), Error);
  CHECK_THROWS_AS(simplex_system({1}, {{}}), Error);
  CHECK_THROWS_AS(simplex_system({1}, {{make_intvec({2, -1, 0})}}), Error);
  CHECK_THROWS_AS(make_polytopal_system(std::vector<RatVec>{make_ratvec({0, 0}), make_ratvec({1, 0}),
                                                            make_ratvec({2, 0})},
                                        {}, {}),
                  Error);
}
