#include "doctest.h"

#include <random>

#include "toridim/error.hpp"
#include "toridim/fixtures.hpp"
#include "toridim/oracle.hpp"
#include "toridim/polytopal.hpp"

using namespace toridim;
using namespace toridim::oracle;

namespace {

Mono mono(std::initializer_list<int> e) {
  Mono m{};
  std::size_t i = 0;
  for (int x : e) m[i++] = x;
  return m;
}

Poly poly(const Ring& r, std::initializer_list<std::pair<long, Mono>> terms) {
  std::vector<Term> ts;
  for (const auto& [c, m] : terms) ts.push_back({m, Rat(c)});
  return make_poly(r, ts);
}

std::vector<IntVec> weighted_support(const std::vector<long>& a, long d) {
  std::vector<RatVec> v;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVec p(a.size());
    p[i] = ratio(1, a[i]);
    v.push_back(p);
  }
  return full_support(dual_description(v), d);
}

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < max_vars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Reduced: monic, and no term of one element is divisible by another leading monomial.
bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    if (gb.polys[i].terms.front().c != 1) return false;
    for (std::size_t j = 0; j < gb.polys.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.polys[i].terms)
        if (divides(gb.polys[j].lead(), t.m)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("weighted degrevlex order") {
  Ring r{{1, 2, 3}};
  CHECK(r.degree(mono({1, 1, 1})) == 6);
  CHECK(r.greater(mono({0, 0, 1}), mono({2, 0, 0})));
  CHECK(r.greater(mono({3, 0, 0}), mono({1, 1, 0})));  // same degree, less X2 and then less X1
  CHECK(r.greater(mono({1, 1, 0}), mono({0, 0, 1})));
  Ring s = standard_ring(3);
  CHECK(s.greater(mono({1, 1, 0}), mono({1, 0, 1})));
  CHECK(s.greater(mono({0, 2, 0}), mono({1, 0, 1})));
  CHECK_FALSE(s.greater(mono({1, 1, 0}), mono({1, 1, 0})));
}

TEST_CASE("small Groebner bases") {
  Ring r = standard_ring(3);
  auto sq = buchberger(r, {poly(r, {{1, mono({2, 0, 0})}}), poly(r, {{1, mono({0, 2, 0})}})});
  REQUIRE(sq.polys.size() == 2);
  CHECK(sq.polys[0].lead() == mono({0, 2, 0}));
  CHECK(sq.polys[1].lead() == mono({2, 0, 0}));
  auto dup = buchberger(r, {poly(r, {{3, mono({1, 1, 0})}}), poly(r, {{-2, mono({1, 1, 0})}})});
  REQUIRE(dup.polys.size() == 1);
  CHECK(dup.polys[0].lead() == mono({1, 1, 0}));
  CHECK(dup.polys[0].terms.front().c == 1);

  // two conics through finitely many points
  auto gb = buchberger(r, {poly(r, {{1, mono({2, 0, 0})}, {-1, mono({0, 1, 1})}}),
                           poly(r, {{1, mono({1, 1, 0})}, {-1, mono({0, 0, 2})}})});
  CHECK(is_groebner_basis(r, gb.polys));
  CHECK(is_reduced(gb));
  CHECK(gb.polys.size() > 2);
  CHECK_FALSE(is_groebner_basis(r, {poly(r, {{1, mono({2, 0, 0})}, {-1, mono({0, 1, 1})}}),
                                    poly(r, {{1, mono({1, 1, 0})}, {-1, mono({0, 0, 2})}})}));
  CHECK(krull_dimension(gb, 3) == 1);
}

TEST_CASE("weighted example with random coefficients") {
  Ring r{{1, 2, 3}};
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> c(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = poly(r, {{c(rng), mono({2, 0, 0})}, {c(rng), mono({0, 1, 0})}});
    auto g = poly(r, {{c(rng), mono({3, 0, 0})}, {c(rng), mono({1, 1, 0})}, {c(rng), mono({0, 0, 1})}});
    auto gb = buchberger(r, {f, g});
    CHECK(is_groebner_basis(r, gb.polys));
    CHECK(krull_dimension(gb, 3) == 1);
  }
}

TEST_CASE("random homogeneous ideals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    Ring r = trial % 2 ? standard_ring(3) : Ring{{1, 1, 2}};
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) {
      const long d = 2 + k % 2;
      std::vector<Term> ts;
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
          for (int z = 0; z <= 4; ++z) {
            Mono m = mono({a, b, z});
            if (r.degree(m) == d && e(rng) > 0) ts.push_back({m, Rat(c(rng))});
          }
      gens.push_back(make_poly(r, ts));
    }
    auto gb = buchberger(r, gens);
    CHECK(is_groebner_basis(r, gb.polys));
    CHECK(is_reduced(gb));
    // the generators lie in the ideal of the basis, and the basis in the ideal of the generators
    for (const auto& g : gens) CHECK(normal_form(r, gb.polys, g).zero());
    auto gens_gb = buchberger(r, gens);
    for (const auto& g : gb.polys) CHECK(normal_form(r, gens_gb.polys, g).zero());
    // order of generators does not matter
    std::reverse(gens.begin(), gens.end());
    auto rev = buchberger(r, gens);
    REQUIRE(rev.polys.size() == gb.polys.size());
    for (std::size_t i = 0; i < gb.polys.size(); ++i)
      for (std::size_t k = 0; k < gb.polys[i].terms.size(); ++k) {
        CHECK(rev.polys[i].terms[k].m == gb.polys[i].terms[k].m);
        CHECK(rev.polys[i].terms[k].c == gb.polys[i].terms[k].c);
      }
  }
}

TEST_CASE("guards and budget") {
  Ring big = standard_ring(6);
  CHECK_THROWS_AS(buchberger(big, {}), Error);
  Ring r = standard_ring(3);
  CHECK_THROWS_AS(buchberger(r, {poly(r, {{1, mono({13, 0, 0})}})}), Error);
  std::vector<Poly> seven(7, poly(r, {{1, mono({1, 0, 0})}}));
  CHECK_THROWS_AS(buchberger(r, seven), Error);

  auto gens = random_instance(r, {weighted_support({1, 1, 1}, 4), weighted_support({1, 1, 1}, 4)}, 3, 0);
  Budget tiny;
  tiny.max_pairs = 2;
  try {
    buchberger(r, gens, tiny);
    FAIL("expected BUDGET_EXCEEDED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
    CHECK(std::string(e.what()).find("pairs") != std::string::npos);
  }
}

TEST_CASE("Krull dimension of monomial ideals") {
  CHECK(krull_dimension({mono({1, 0, 0})}, 3) == 2);
  CHECK(krull_dimension(std::vector<Mono>{}, 3) == 3);
  CHECK(krull_dimension({mono({1, 1, 0})}, 3) == 2);
  CHECK(krull_dimension({mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})}, 3) == 0);
  CHECK_THROWS_AS(krull_dimension({mono({0, 0, 0})}, 3), Error);
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> e(0, 2), count(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    std::vector<Mono> leads;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Mono m{};
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        m[j] = e(rng);
        nonzero = nonzero || m[j] > 0;
      }
      if (nonzero) leads.push_back(m);
    }
    CHECK(krull_dimension(leads, n) == krull_dimension_recursive(leads, n));
  }
}

TEST_CASE("random projective dimension probes") {
  Ring w{{1, 2, 3}};
  auto p = random_proj_dimension(w, {weighted_support({1, 2, 3}, 2), weighted_support({1, 2, 3}, 3)}, 20, 42);
  CHECK(p.proj_dim == Dim::of(0));
  CHECK(p.successes == 20);
  CHECK(p.affine_dims.size() == 20);

  auto q = random_proj_dimension(w, {weighted_support({1, 2, 3}, 1), weighted_support({1, 2, 3}, 1)}, 10, 42);
  CHECK(q.proj_dim == Dim::of(1));

  Ring s = standard_ring(3);
  IntVec x0x1{1, 1, 0};
  auto t = random_proj_dimension(s, {{x0x1}, {x0x1}}, 10, 42);
  CHECK(t.proj_dim == Dim::of(1));

  auto u = random_proj_dimension(s, {{IntVec{1, 0, 0}}, {IntVec{0, 1, 0}}, {IntVec{0, 0, 1}}}, 5, 1);
  CHECK(u.proj_dim == Dim::empty());

  CHECK_THROWS_AS(random_proj_dimension(s, {{x0x1}}, 4, 1), Error);
  CHECK_THROWS_AS(random_proj_dimension(s, {{IntVec{1, 0, 0}, IntVec{2, 0, 0}}}, 5, 1), Error);

  // reproducible and identical to the serial run
  auto ser = random_proj_dimension_serial(w, {weighted_support({1, 2, 3}, 2), weighted_support({1, 2, 3}, 3)}, 20, 42);
  CHECK(ser.affine_dims == p.affine_dims);
  auto i1 = random_instance(w, {weighted_support({1, 2, 3}, 6)}, 9, 3);
  auto i2 = random_instance(w, {weighted_support({1, 2, 3}, 6)}, 9, 3);
  CHECK(to_string(i1[0]) == to_string(i2[0]));
  for (const auto& term : i1[0].terms) {
    CHECK(term.c != 0);
    CHECK(abs(term.c) <= coefficient_bound);
  }
}

TEST_CASE("probes agree with the face criterion on weighted systems") {
  struct Case {
    std::vector<long> a, d;
  };
  std::vector<Case> cases{{{1, 2, 3}, {2, 3}}, {{1, 2, 3}, {1, 1}}, {{1, 1, 2}, {2}},   {{1, 1, 3}, {6}},
                          {{1, 2, 3}, {6}},    {{1, 1, 1}, {2, 2}}, {{2, 3, 5}, {6, 10}}, {{1, 3, 4}, {4, 3}},
                          {{1, 1, 1, 2}, {2, 3}}, {{2, 2, 3}, {4, 6}}};
  for (const auto& c : cases) {
    CAPTURE(c.a);
    CAPTURE(c.d);
    std::vector<std::vector<IntVec>> sups;
    for (auto d : c.d) sups.push_back(weighted_support(c.a, d));
    std::vector<RatVec> verts;
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      RatVec v(c.a.size());
      v[i] = ratio(1, c.a[i]);
      verts.push_back(v);
    }
    auto sys = make_polytopal_system(verts, c.d, sups);
    auto poly_dim = polytopal_dimension(sys).dimension;
    auto probe = random_proj_dimension(Ring{c.a}, sups, 10, 2024);
    CHECK(probe.proj_dim == poly_dim);
    auto reg = weighted_regseq(c.a, c.d);
    CHECK(reg.regular == (poly_dim == Dim::of(static_cast<int>(c.a.size() - 1 - c.d.size()))));
  }
}
