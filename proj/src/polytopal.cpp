#include "toridim/polytopal.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <queue>

#include "toridim/error.hpp"

namespace toridim {

namespace {

IndexSet iota_set(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// Sets of facets on which each support point is tight, checking membership in d * P.
std::vector<std::vector<IndexSet>> tight_facets(const PolytopalSystem& sys) {
  const auto& p = sys.polytope;
  std::vector<std::vector<IndexSet>> out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Rat d = sys.degrees[i];
    for (const auto& a : sys.supports[i]) {
      auto outside = [&] {
        fail(ErrorCode::invalid_input, "support " + std::to_string(i) + " point " + to_string(a) + " is not in d*P");
      };
      if (a.size() != p.ambient())
        fail(ErrorCode::invalid_input, "support " + std::to_string(i) + " has a point of the wrong length");
      IndexSet tight;
      for (const auto& eq : p.equations())
        if (dot(eq.normal, a) != d * eq.rhs) outside();
      for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const auto& fc = p.facets()[f];
        const int c = cmp(dot(fc.normal, a), d * fc.offset);
        if (c < 0) outside();
        if (c == 0) tight.push_back(f);
      }
      out[i].push_back(std::move(tight));
    }
  }
  return out;
}

struct FaceJob {
  Face face;
  IndexSet labels;
};

std::vector<FaceJob> labelled_faces(const PolytopalSystem& sys) {
  std::vector<FaceJob> jobs;
  for (auto& f : face_lattice(sys.polytope)) {
    IndexSet labels;
    for (auto v : f.vertices) labels.push_back(sys.vertex_labels[v]);
    std::sort(labels.begin(), labels.end());
    jobs.push_back({std::move(f), std::move(labels)});
  }
  std::sort(jobs.begin(), jobs.end(), [](const FaceJob& a, const FaceJob& b) {
    if (a.face.dim != b.face.dim) return a.face.dim < b.face.dim;
    return a.labels < b.labels;
  });
  return jobs;
}

FaceRow make_row(const PolytopalSystem& sys, const std::vector<std::vector<IndexSet>>& tight, const FaceJob& job) {
  FaceRow row;
  row.face = job.labels;
  row.dim = job.face.dim;
  std::vector<PointSet> sets;
  const auto& need = job.face.facets;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    PointSet on;
    for (std::size_t k = 0; k < sys.supports[i].size(); ++k) {
      const auto& t = tight[i][k];
      if (std::includes(t.begin(), t.end(), need.begin(), need.end())) on.push_back(sys.supports[i][k]);
    }
    if (on.empty()) continue;
    row.e.push_back(i);
    sets.push_back(std::move(on));
  }
  auto ess = is_essential(PointFamily{std::move(sets), row.e});
  row.essential = ess.essential;
  row.witness = ess.witness;
  if (row.essential) row.contribution = Dim::of(row.dim - static_cast<int>(row.e.size()));
  return row;
}

void validate(const PolytopalSystem& sys) {
  require(!sys.polytope.empty(), "polytope is empty");
  require(sys.degrees.size() == sys.supports.size(), "number of degrees and supports differ");
  for (std::size_t i = 0; i < sys.size(); ++i) {
    require(sys.degrees[i] >= 1, "degree " + std::to_string(i) + " must be positive");
    require(!sys.supports[i].empty(), "support " + std::to_string(i) + " is empty");
  }
}

Dim max_contribution(const std::vector<FaceRow>& rows) {
  Dim best = Dim::empty();
  for (const auto& r : rows) best = std::max(best, r.contribution);
  return best;
}

// Least violating subset of {0..n} by (size, lex), where count(I) must reach |I| - 1 + r - n.
template <class Count>
std::optional<IndexSet> least_violating_subset(std::size_t n, std::size_t r, Count count) {
  const std::size_t m = n + 1;
  for (std::size_t k = 1; k <= m; ++k) {
    IndexSet c = iota_set(k);
    while (true) {
      const long need = static_cast<long>(k) - 1 + static_cast<long>(r) - static_cast<long>(n);
      if (static_cast<long>(count(c)) < need) return c;
      std::size_t i = k;
      while (i > 0 && c[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return std::nullopt;
}

void cross_check(const SubsetResult& combinatorial, const RegSeqResult& polytopal, const char* what) {
  if (combinatorial.regular != polytopal.regular || combinatorial.witness != polytopal.witness)
    fail(ErrorCode::invariant_violation, std::string(what) + ": subset criterion disagrees with the face criterion");
}

}  // namespace

PolytopalSystem make_polytopal_system(RationalPolytope p, std::vector<long> degrees,
                                      std::vector<std::vector<IntVec>> supports) {
  PolytopalSystem sys{std::move(p), {}, std::move(degrees), std::move(supports)};
  sys.vertex_labels = iota_set(sys.polytope.vertices().size());
  validate(sys);
  tight_facets(sys);
  return sys;
}

PolytopalSystem make_polytopal_system(std::vector<RatVec> vertices, std::vector<long> degrees,
                                      std::vector<std::vector<IntVec>> supports) {
  require(!vertices.empty(), "polytope has no vertices");
  auto p = dual_description(vertices);
  require(p.vertices().size() == vertices.size(), "every listed point must be a distinct vertex of the hull");
  PolytopalSystem sys{std::move(p), {}, std::move(degrees), std::move(supports)};
  for (const auto& v : sys.polytope.vertices())
    sys.vertex_labels.push_back(static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin()));
  validate(sys);
  tight_facets(sys);
  return sys;
}

std::vector<IntVec> full_support(const RationalPolytope& p, long d) {
  require(d >= 1, "degree must be positive");
  return lattice_points(scaled(p, d));
}

PolytopalReport polytopal_dimension_serial(const PolytopalSystem& sys) {
  validate(sys);
  const auto tight = tight_facets(sys);
  PolytopalReport rep;
  for (const auto& job : labelled_faces(sys)) rep.rows.push_back(make_row(sys, tight, job));
  rep.dimension = max_contribution(rep.rows);
  return rep;
}

PolytopalReport polytopal_dimension(const PolytopalSystem& sys) {
  validate(sys);
  const auto tight = tight_facets(sys);
  const auto jobs = labelled_faces(sys);
  PolytopalReport rep;
  rep.rows.resize(jobs.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
    try {
      rep.rows[static_cast<std::size_t>(i)] = make_row(sys, tight, jobs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  rep.dimension = max_contribution(rep.rows);
  return rep;
}

RegSeqResult is_regular_sequence(const PolytopalSystem& sys) {
  const long n = static_cast<long>(sys.rank());
  const long r = static_cast<long>(sys.size());
  require(r <= n, "regular sequence test needs at most as many equations as the dimension");
  auto rep = polytopal_dimension(sys);
  RegSeqResult res;
  res.dimension = rep.dimension;
  bool weak = true;
  for (const auto& row : rep.rows) {
    const bool ok = static_cast<long>(row.e.size()) >= row.dim + r - n;
    if (!ok && !res.witness) res.witness = row.face;
    if (!ok && row.essential) weak = false;
  }
  res.regular = !res.witness;
  if (res.dimension.is_empty())
    fail(ErrorCode::invariant_violation, "zero set is empty although r <= n");
  if (weak && !res.regular)
    fail(ErrorCode::invariant_violation, "face criterion holds on essential faces but fails on face " +
                                             to_string(*res.witness));
  if (res.regular != (res.dimension == Dim::of(static_cast<int>(n - r))))
    fail(ErrorCode::invariant_violation, "regular sequence verdict disagrees with the dimension count");
  return res;
}

SubsetResult standard_regseq(std::size_t n, const std::vector<long>& degrees,
                             const std::vector<std::vector<IntVec>>& supports) {
  const std::size_t r = supports.size();
  require(degrees.size() == r, "number of degrees and supports differ");
  require(r <= n, "regular sequence test needs at most as many equations as the dimension");
  for (std::size_t j = 0; j < r; ++j) {
    require(degrees[j] >= 1, "degree " + std::to_string(j) + " must be positive");
    require(!supports[j].empty(), "support " + std::to_string(j) + " is empty");
    for (const auto& a : supports[j]) {
      require(a.size() == n + 1, "support " + std::to_string(j) + " has an exponent of the wrong length");
      Int total = 0;
      for (const auto& c : a) {
        require(c >= 0, "support " + std::to_string(j) + " has a negative exponent");
        total += c;
      }
      require(total == degrees[j], "support " + std::to_string(j) + " is not homogeneous of degree " +
                                       std::to_string(degrees[j]));
    }
  }
  SubsetResult res;
  res.witness = least_violating_subset(n, r, [&](const IndexSet& in) {
    std::size_t count = 0;
    for (const auto& s : supports) {
      bool hit = std::any_of(s.begin(), s.end(), [&](const IntVec& a) {
        for (std::size_t i = 0; i <= n; ++i)
          if (a[i] != 0 && !std::binary_search(in.begin(), in.end(), i)) return false;
        return true;
      });
      count += hit;
    }
    return count;
  });
  res.regular = !res.witness;

  std::vector<RatVec> verts;
  for (std::size_t i = 0; i <= n; ++i) {
    RatVec v(n + 1);
    v[i] = 1;
    verts.push_back(std::move(v));
  }
  auto sys = make_polytopal_system(std::move(verts), degrees, supports);
  cross_check(res, is_regular_sequence(sys), "standard simplex");
  res.polytopal_checked = true;
  return res;
}

bool semigroup_member(const std::vector<long>& generators, long target) {
  require(!generators.empty(), "semigroup needs generators");
  if (target < 0) return false;
  if (target == 0) return true;
  long m = std::numeric_limits<long>::max();
  for (auto g : generators) {
    require(g >= 1, "semigroup generators must be positive");
    m = std::min(m, g);
  }
  require(m <= 50'000'000, "smallest generator is too large");
  // least representable value in each residue class mod m
  const long inf = std::numeric_limits<long>::max();
  std::vector<long> best(static_cast<std::size_t>(m), inf);
  best[0] = 0;
  using Item = std::pair<long, long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [v, res] = pq.top();
    pq.pop();
    if (v != best[static_cast<std::size_t>(res)]) continue;
    if (v > target) break;
    for (auto g : generators) {
      const long w = v + g;
      const long rr = w % m;
      if (w < best[static_cast<std::size_t>(rr)]) {
        best[static_cast<std::size_t>(rr)] = w;
        pq.push({w, rr});
      }
    }
  }
  return best[static_cast<std::size_t>(target % m)] <= target;
}

ReducedWeights reduce_weights(const std::vector<long>& weights, const std::vector<long>& degrees) {
  require(!weights.empty(), "weights are empty");
  ReducedWeights out;
  long g = 0;
  for (auto a : weights) {
    require(a >= 1, "weights must be positive");
    g = std::gcd(g, a);
  }
  out.divisor = g;
  for (auto a : weights) out.weights.push_back(a / g);
  for (auto d : degrees) {
    require(d >= 1, "degrees must be positive");
    if (d % g != 0) out.degrees_divisible = false;
    out.degrees.push_back(d / g);
  }
  return out;
}

SubsetResult weighted_regseq(const std::vector<long>& weights, const std::vector<long>& degrees) {
  require(!weights.empty(), "weights are empty");
  for (auto a : weights) require(a >= 1, "weights must be positive");
  for (auto d : degrees) require(d >= 1, "degrees must be positive");
  const std::size_t n = weights.size() - 1;
  const std::size_t r = degrees.size();
  require(r <= n, "regular sequence test needs at most as many equations as the dimension");
  SubsetResult res;
  res.witness = least_violating_subset(n, r, [&](const IndexSet& j) {
    std::vector<long> gens;
    for (auto i : j) gens.push_back(weights[i]);
    return static_cast<std::size_t>(
        std::count_if(degrees.begin(), degrees.end(), [&](long d) { return semigroup_member(gens, d); }));
  });
  res.regular = !res.witness;

  if (std::all_of(degrees.begin(), degrees.end(), [&](long d) { return semigroup_member(weights, d); })) {
    std::vector<RatVec> verts;
    for (std::size_t i = 0; i <= n; ++i) {
      RatVec v(n + 1);
      v[i] = ratio(1, weights[i]);
      verts.push_back(std::move(v));
    }
    auto p = dual_description(verts);
    std::vector<std::vector<IntVec>> supports;
    for (auto d : degrees) supports.push_back(full_support(p, d));
    auto sys = make_polytopal_system(std::move(verts), degrees, std::move(supports));
    cross_check(res, is_regular_sequence(sys), "weighted simplex");
    res.polytopal_checked = true;
  }
  return res;
}

PolytopalSystem refine_lattice(const PolytopalSystem& sys, long k) {
  require(k >= 1, "refinement factor must be positive");
  PolytopalSystem out = sys;
  out.polytope = scaled(sys.polytope, k);
  for (auto& s : out.supports)
    for (auto& a : s)
      for (auto& c : a) c *= k;
  return out;
}

SparseSystem fan_route_system(const PolytopalSystem& sys) {
  validate(sys);
  for (const auto& v : sys.polytope.vertices())
    require(is_integral(v), "the fan route needs a lattice polytope");
  auto chart = lattice_chart(sys.polytope);
  require(chart.has_value(), "the fan route needs a lattice polytope");
  auto q = in_chart(sys.polytope, *chart);
  auto nf = normal_fan(q);
  auto x = std::make_shared<const ToricVariety>(nf.fan);
  const auto& u = nf.fan.rays;
  SparseSystem out{x, {}};
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const long d = sys.degrees[i];
    TDivisor deg(u.size());
    for (std::size_t f = 0; f < u.size(); ++f) deg[f] = -to_integer(RatVec{d * nf.offsets[f]})[0];
    std::vector<IntVec> monos;
    for (const auto& a : sys.supports[i]) {
      IntVec shifted = a;
      for (std::size_t j = 0; j < a.size(); ++j) shifted[j] -= (d - 1) * chart->base[j];
      IntVec c = chart->to_chart(shifted);
      IntVec e(u.size());
      for (std::size_t f = 0; f < u.size(); ++f) e[f] = dot(u[f], c) + deg[f];
      monos.push_back(std::move(e));
    }
    out.supports.push_back(make_support(*x, deg, std::move(monos)));
  }
  return out;
}

}  // namespace toridim
