// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "properties.hpp"
#include "toridim/oracle.hpp"

using namespace toridim;

namespace {

struct Line {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << "first failure: " << what << "; ";
    ok = false;
  }
};

std::string fixture(const std::string& name) { return std::string(TORIDIM_FIXTURES_DIR) + "/" + name; }

FanInstance fan_fixture(const std::string& name) { return std::get<FanInstance>(load_instance(fixture(name))); }

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

Int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

void criterion1(Line& l) {
  const auto inst = fan_fixture("p123.fan");
  ToricVariety x(inst.fan);
  const auto& cl = x.class_group();
  l.expect(cl.free_rank == 1 && cl.torsion.empty(), "class group is not Z");
  std::multiset<Int> degrees;
  std::set<Int> signs;
  for (std::size_t i = 0; i < x.nrays(); ++i) {
    IntVec e(x.nrays());
    e[i] = 1;
    const Int c = divisor_class(x, e).coords[0];
    degrees.insert(abs(c));
    signs.insert(sign_of(c));
  }
  l.expect(degrees == std::multiset<Int>{1, 2, 3} && signs.size() == 1, "ray degrees are not 1, 2, 3");
  const auto mons = monomials_of_class(x, inst.systems[0].divisor);
  l.expect(as_set(mons) == std::set<IntVec>{make_intvec({2, 0, 0}), make_intvec({0, 1, 0})},
           "degree 2 monomials are not X^2 and Y");
  l.note << "Cl = Z, ray degrees {1,2,3}, degree 2 basis {X^2, Y}";
}

void criterion2(Line& l) {
  ToricVariety x(fan_fixture("four_ray_fan.json").fan);
  const auto p = divisor_polytope(x, make_intvec({1, 1, 3, 4}), x.zero_cone());
  const std::set<RatVec> expected{{ratio(-3, 2), Rat(-1)}, {ratio(-7, 3), ratio(2, 3)}, {ratio(-5, 3), ratio(4, 3)},
                                  {Rat(3), Rat(-1)}};
  l.expect(as_set(p.vertices()) == expected, "vertices differ");
  const std::set<IntVec> expected_points{make_intvec({-2, 0}), make_intvec({-2, 1}), make_intvec({-1, -1}),
                                  make_intvec({-1, 0}), make_intvec({-1, 1}), make_intvec({0, 0}),
                                  make_intvec({0, -1}), make_intvec({1, 0}), make_intvec({1, -1}),
                                  make_intvec({2, -1}), make_intvec({3, -1})};
  const auto pts = lattice_points(p);
  l.expect(pts.size() == 11 && as_set(pts) == expected_points, "lattice points differ from the expected 11");
  l.expect(as_set(oracle_ref::box_scan(p)) == expected_points, "box scan disagrees");
  std::vector<RatVec> rp;
  for (const auto& q : pts) rp.push_back(to_rational(q));
  const auto hull = dual_description(rp);
  bool inside = true, some_vertex_outside = false;
  for (const auto& v : hull.vertices()) inside = inside && p.contains(v);
  for (const auto& v : p.vertices()) some_vertex_outside = some_vertex_outside || !hull.contains(v);
  l.expect(inside && some_vertex_outside, "conv(A) is not a proper subset of P");
  l.note << "4 vertices, 11 lattice points, conv(A) strictly inside P";
}

void criterion3(Line& l) {
  const auto inst = fan_fixture("hirzebruch2.json");
  ToricVariety x(inst.fan);
  l.expect(x.class_group().free_rank == 2 && x.class_group().torsion.empty(), "class group is not Z^2");
  // rays x, y, z, t; a divisor a D_x + b D_y + c D_z + d D_t has degree (c + a - 2b, d + b)
  std::vector<IntVec> box;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        for (long d = -1; d <= 1; ++d) box.push_back(make_intvec({a, b, c, d}));
  std::vector<IntVec> classes;
  for (const auto& d : box) classes.push_back(divisor_class(x, d).coords);
  bool partitions_match = true;
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = 0; j < box.size(); ++j) {
      const auto& u = box[i];
      const auto& v = box[j];
      const bool g = u[2] + u[0] - 2 * u[1] == v[2] + v[0] - 2 * v[1] && u[3] + u[1] == v[3] + v[1];
      partitions_match = partitions_match && g == (classes[i] == classes[j]);
    }
  l.expect(partitions_match, "class equality differs from the grading (c+a-2b, d+b)");
  const auto& sys = inst.systems[0];
  l.expect(sys.divisor == make_intvec({1, 0, 0, 1}), "fixture degree is not D_x + D_t");
  l.expect(monomials_of_class(x, sys.divisor).size() == 6, "degree (1,1) does not have 6 monomials");
  const auto ext = extremal_monomials(x, make_support(x, sys.divisor, sys.support));
  l.expect(as_set(ext) == std::set<IntVec>{make_intvec({0, 1, 3, 0}), make_intvec({0, 0, 1, 1}),
                                           make_intvec({1, 0, 0, 1}), make_intvec({2, 1, 1, 0})},
           "extremal monomials differ");
  l.note << "grading matches on " << box.size() << " divisors, 6 monomials, extremal {yz^3, zt, xt, x^2yz}";
}

void criterion4(Line& l) {
  const auto full = make_sparse_system(fan_fixture("p1xp2_full.json"));
  const auto sub = make_sparse_system(fan_fixture("p1xp2_sub23.json"));
  l.expect(generic_dimension(full) == Dim::of(0), "full system is not 0-dimensional");
  const auto ci = is_complete_intersection(full);
  l.expect(ci.complete_intersection && ci.dimension == Dim::of(0), "full system is not a complete intersection");
  l.expect(generic_dimension(sub) == Dim::of(2), "subsystem does not give 2");
  const auto all = all_subsystems_ci(full);
  l.expect(!all.all_ci && all.violating && full.variety->cones()[*all.violating].rays == IndexSet{1},
           "subsystem witness is not the ray of x1");
  l.note << "dimension 0 (CI), subsystem 2, all_subsystems_ci false at cone {1}";
}

void criterion5(Line& l) {
  for (int g : {2, 3, 4}) {
    const std::string gs = std::to_string(g);
    const auto p2 = make_sparse_system(fan_fixture("hyperelliptic_g" + gs + "_p2.json"));
    const auto wt = make_sparse_system(fan_fixture("hyperelliptic_g" + gs + "_weighted.json"));
    for (const auto& [sys, point, model] : {std::tuple{p2, IndexSet{0, 2}, "P^2"}, std::tuple{wt, IndexSet{1, 2}, "weighted"}}) {
      const auto rep = dimension_report(sys);
      l.expect(rep.global == Dim::of(1), "g=" + gs + " " + model + ": curve dimension is not 1");
      bool found = false;
      for (const auto& row : rep.rows)
        if (row.cone.rays == point) {
          found = true;
          l.expect(row.orbit_dim == Dim::of(0), "g=" + gs + " " + model + ": point at infinity row is not 0");
        }
      l.expect(found, "g=" + gs + " " + model + ": no row for the point at infinity");
    }
  }
  l.note << "g = 2, 3, 4: dimension 1 and orbit_dim 0 at infinity in both models";
}

struct WeightedCase {
  std::vector<long> weights;
  std::vector<long> degrees;
};

std::string describe(const WeightedCase& c) {
  std::ostringstream os;
  os << "a=" << to_string(IntVec(c.weights.begin(), c.weights.end())) << " d="
     << to_string(IntVec(c.degrees.begin(), c.degrees.end()));
  return os.str();
}

// Sorted weight tuples with n <= 3, a_i <= 5; sorted degree tuples with r <= n, d_i <= 12.
std::vector<WeightedCase> weighted_cases() {
  std::vector<WeightedCase> all;
  std::vector<long> w, d;
  std::function<void(std::size_t, long)> degs = [&](std::size_t r, long lo) {
    all.push_back({w, d});
    if (d.size() == r) return;
    for (long x = lo; x <= 12; ++x) {
      d.push_back(x);
      degs(r, x);
      d.pop_back();
    }
  };
  std::function<void(std::size_t, long)> wts = [&](std::size_t k, long lo) {
    if (w.size() == k) {
      degs(k - 1, 1);
      return;
    }
    for (long x = lo; x <= 5; ++x) {
      w.push_back(x);
      wts(k, x);
      w.pop_back();
    }
  };
  for (std::size_t n = 1; n <= 3; ++n) wts(n + 1, 1);
  return all;
}

void criterion6(Line& l) {
  const auto all = weighted_cases();
  std::vector<std::size_t> comparable;
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& c = all[i];
    const auto sub = weighted_regseq(c.weights, c.degrees);
    bool has_monomials = true;
    for (auto x : c.degrees) has_monomials = has_monomials && semigroup_member(c.weights, x);
    if (!has_monomials) continue;
    comparable.push_back(i);
    const auto face = is_regular_sequence(make_polytopal_system(WeightedInstance{c.weights, c.degrees, std::nullopt}));
    if (sub.regular != face.regular || sub.witness != face.witness) {
      ++disagreements;
      l.expect(false, describe(c) + ": subset and face criteria disagree");
    }
  }
  l.note << all.size() << " cases, " << comparable.size() << " compared, " << all.size() - comparable.size()
         << " skipped (a degree outside the weight semigroup), " << disagreements << " disagreements; ";

  std::mt19937_64 rng(6);
  std::vector<std::size_t> sample;
  std::sample(comparable.begin(), comparable.end(), std::back_inserter(sample), 50, rng);
  std::size_t agree = 0;
  for (auto i : sample) {
    const auto& c = all[i];
    const auto sys = make_polytopal_system(WeightedInstance{c.weights, c.degrees, std::nullopt});
    const auto predicted = polytopal_dimension(sys).dimension;
    const auto probe = oracle::random_proj_dimension(oracle::Ring{c.weights}, sys.supports, 10, 6);
    const bool ok = probe.failures == 0 && probe.proj_dim == predicted;
    agree += ok;
    l.expect(ok, describe(c) + ": oracle gives " + to_string(probe.proj_dim) + " with " +
                     std::to_string(probe.failures) + " failed trials, predicted " + to_string(predicted));
  }
  l.note << "oracle agrees on " << agree << " of " << sample.size() << " sampled cases (10 trials, seed 6)";
}

void criterion7(Line& l) {
  std::mt19937_64 rng(7);
  std::size_t tested = 0;
  while (tested < 120) {
    const std::size_t n = 1 + rng() % 3, r = 1 + rng() % 3;
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < n + 1 + rng() % 3; ++i) pts.push_back(to_rational(props::random_point(rng, n, -2, 2)));
    auto p = dual_description(pts);
    if (p.dim() != static_cast<int>(n) || lattice_points(p).size() > 30) continue;
    std::vector<long> degrees;
    std::vector<std::vector<IntVec>> supports;
    for (std::size_t i = 0; i < r; ++i) {
      const long d = 1 + static_cast<long>(rng() % 2);
      degrees.push_back(d);
      supports.push_back(props::random_subset(rng, full_support(p, d), 4));
    }
    const auto sys = make_polytopal_system(std::move(p), degrees, supports);
    const auto poly = polytopal_dimension(sys).dimension;
    const auto fan = generic_dimension(fan_route_system(sys));
    l.expect(poly == fan, "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": polytopal " + to_string(poly) +
                              ", fan " + to_string(fan));
    ++tested;
  }
  l.note << tested << " lattice-polytope systems agree";
}

// Exhaustive search over subsets of the ground set.
std::size_t brute_hitting_set(const SetSystem& s) {
  std::size_t best = s.ground;
  for (unsigned long mask = 0; mask < (1UL << s.ground); ++mask) {
    bool hits = true;
    for (const auto& set : s.sets) {
      bool any = false;
      for (auto i : set) any = any || (mask >> i & 1);
      hits = hits && any;
    }
    if (hits) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountl(mask)));
  }
  return best;
}

void criterion8(Line& l) {
  std::mt19937_64 rng(8);
  std::size_t tested = 0;
  for (; tested < 240; ++tested) {
    const std::size_t ground = 2 + rng() % 6, count = 1 + rng() % 9;
    std::uniform_int_distribution<std::size_t> pt(0, ground - 1), size(1, 3);
    std::vector<IndexSet> sets;
    for (std::size_t k = 0; k < count; ++k) {
      IndexSet s;
      for (std::size_t m = size(rng); m > 0; --m) s.push_back(pt(rng));
      sets.push_back(s);
    }
    const auto sys = make_set_system(ground, sets);
    const std::size_t expected = brute_hitting_set(sys);
    l.expect(min_hitting_set(sys) == expected, "min_hitting_set differs from exhaustive search");
    const long n = static_cast<long>(ground) - 1;
    for (const auto& sup : {hitting_supports(sys), hitting_supports_random(sys, tested)}) {
      const auto d = polytopal_dimension(hitting_system(sys, sup)).dimension;
      const long codim = d.is_empty() ? n + 1 : n - d.value();
      l.expect(codim == static_cast<long>(expected),
               "ground " + std::to_string(ground) + ": codimension " + std::to_string(codim) + ", hitting set " +
                   std::to_string(expected));
    }
  }
  l.note << tested << " set systems, two support choices each";
}

void criterion9(Line& l) {
  const auto fx = props::load_fixtures(TORIDIM_FIXTURES_DIR);
  for (const auto& t : props::run_all(fx, 100, 9)) {
    l.expect(t.passed(), t.name + ": " + t.first_failure);
    l.note << t.name << " " << t.cases << " checks " << t.failures << " failures; ";
  }
  l.note << fx.size() << " fixtures and 100 random instances each";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("criteria", only, "criteria to run, all by default");
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::pair<int, void (*)(Line&)>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  bool all = true;
  for (const auto& [k, run] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), k) == only.end()) continue;
    Line l;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(l);
    } catch (const std::exception& e) {
      l.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << k << ": " << (l.ok ? "PASS" : "FAIL") << " (" << l.note.str() << ", "
              << static_cast<long>(secs * 1000) / 1000.0 << " s)" << std::endl;
    all = all && l.ok;
  }
  return all ? 0 : 1;
}
