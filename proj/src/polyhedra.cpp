#include "toridim/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

#include "toridim/dd.hpp"
#include "toridim/error.hpp"

namespace toridim {

namespace {

std::size_t leading_index(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

RatVec minus(const RatVec& a, const RatVec& b) {
  RatVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

std::size_t affine_rank(const std::vector<RatVec>& pts, const IndexSet& idx) {
  if (idx.empty()) return 0;
  RowEchelon ech(pts[idx[0]].size());
  for (auto i : idx) ech.insert(to_integer_scaled(minus(pts[i], pts[idx[0]])));
  return ech.rank();
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

}  // namespace

bool RationalPolytope::contains(const RatVec& x) const {
  if (empty()) return false;
  require(x.size() == ambient_, "point dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.rhs) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) < f.offset) return false;
  return true;
}

bool RationalPolytope::contains(const IntVec& x) const { return contains(to_rational(x)); }

RationalPolytope dual_description(std::vector<RatVec> points) {
  require(!points.empty(), "convex hull of an empty point list");
  const std::size_t n = points.front().size();
  for (const auto& p : points) require(p.size() == n, "points of different dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope poly(n);
  const RatVec& p0 = points.front();
  RowEchelon ech(n);
  for (const auto& p : points) ech.insert(to_integer_scaled(minus(p, p0)));
  const std::size_t k = ech.rank();
  std::vector<std::size_t> free;
  for (const auto& r : ech.rows()) free.push_back(leading_index(r));

  IntMatrix diff = IntMatrix::from_rows(ech.rows(), n);
  for (auto& c : rational_nullspace(diff)) {
    Rat rhs = dot(c, p0);
    poly.equations_.push_back({std::move(c), rhs});
  }
  poly.dim_ = static_cast<int>(k);

  if (k == 0) {
    poly.vertices_ = {p0};
    return poly;
  }

  std::vector<IntVec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    RatVec q(k + 1);
    for (std::size_t j = 0; j < k; ++j) q[j] = p[free[j]];
    q[k] = 1;
    rows.push_back(to_integer_scaled(q));
  }
  for (const auto& ray : extreme_rays(rows, k + 1)) {
    IntVec a(k);
    std::copy(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(k), a.begin());
    Int g = content(a);
    if (g == 0) fail(ErrorCode::invariant_violation, "degenerate facet normal");
    IntVec normal(n);
    for (std::size_t j = 0; j < k; ++j) normal[free[j]] = a[j] / g;
    poly.facets_.push_back({std::move(normal), ratio(-ray[k], g)});
  }
  std::sort(poly.facets_.begin(), poly.facets_.end(), facet_less);

  for (const auto& p : points) {
    RowEchelon tight(n);
    for (const auto& f : poly.facets_)
      if (dot(f.normal, p) == f.offset) tight.insert(f.normal);
    if (tight.rank() == k) poly.vertices_.push_back(p);
  }
  for (const auto& f : poly.facets_) {
    IndexSet inc;
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i)
      if (dot(f.normal, poly.vertices_[i]) == f.offset) inc.push_back(i);
    poly.incidence_.push_back(std::move(inc));
  }
  return poly;
}

RationalPolytope from_inequalities(std::size_t ambient, const std::vector<Facet>& ineqs,
                                   const std::vector<Equation>& eqs) {
  for (const auto& f : ineqs) require(f.normal.size() == ambient, "inequality length mismatch");
  for (const auto& e : eqs) require(e.normal.size() == ambient, "equation length mismatch");

  RatVec x0(ambient);
  std::vector<IntVec> kernel;
  if (eqs.empty()) {
    for (std::size_t j = 0; j < ambient; ++j) {
      IntVec e(ambient);
      e[j] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    IntMatrix e(eqs.size(), ambient);
    RatVec rhs(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (std::size_t j = 0; j < ambient; ++j) e(i, j) = eqs[i].normal[j];
      rhs[i] = eqs[i].rhs;
    }
    auto sol = solve_rational(e, rhs);
    if (!sol) return RationalPolytope(ambient);
    x0 = *sol;
    kernel = rational_nullspace(e);
  }
  const std::size_t k = kernel.size();

  // restrict to x0 + K y
  std::vector<IntVec> a(ineqs.size(), IntVec(k));
  RatVec b(ineqs.size());
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(ineqs[i].normal, kernel[j]);
    b[i] = ineqs[i].offset - dot(ineqs[i].normal, x0);
  }
  if (k == 0) {
    for (const auto& bi : b)
      if (bi > 0) return RationalPolytope(ambient);
    return dual_description({x0});
  }

  // Parametrize by the row space of a so the homogenized cone is pointed.
  RowEchelon ech(k);
  std::vector<IntVec> basis;
  for (const auto& row : a)
    if (ech.insert(row)) basis.push_back(row);
  const std::size_t rho = basis.size();

  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVec r(rho + 1);
    for (std::size_t j = 0; j < rho; ++j) r[j] = dot(a[i], basis[j]);
    r[rho] = -b[i];
    rows.push_back(to_integer_scaled(r));
  }
  IntVec t(rho + 1);
  t[rho] = 1;
  rows.push_back(t);

  std::vector<RatVec> verts;
  for (const auto& ray : extreme_rays(rows, rho + 1)) {
    if (ray[rho] == 0) fail(ErrorCode::invalid_input, "inequality system is unbounded");
    if (rho < k) fail(ErrorCode::invalid_input, "inequality system is unbounded");
    RatVec y(k);
    for (std::size_t j = 0; j < rho; ++j) {
      Rat z = ratio(ray[j], ray[rho]);
      for (std::size_t l = 0; l < k; ++l) y[l] += z * basis[j][l];
    }
    RatVec x = x0;
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t c = 0; c < ambient; ++c) x[c] += y[l] * kernel[l][c];
    verts.push_back(std::move(x));
  }
  if (verts.empty()) return RationalPolytope(ambient);
  return dual_description(std::move(verts));
}

RationalPolytope scaled(const RationalPolytope& p, const Int& k) {
  if (p.empty()) return p;
  std::vector<RatVec> v = p.vertices();
  for (auto& x : v)
    for (auto& c : x) c *= k;
  return dual_description(std::move(v));
}

std::vector<Face> face_lattice(const RationalPolytope& p) {
  if (p.empty()) return {};
  const auto& inc = p.incidence();
  std::set<IndexSet> seen;
  std::vector<IndexSet> queue;
  IndexSet all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  seen.insert(all);
  for (const auto& f : inc)
    if (!f.empty() && seen.insert(f).second) queue.push_back(f);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : inc) {
      IndexSet meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<Face> faces;
  for (const auto& vs : seen) {
    Face face;
    face.vertices = vs;
    face.dim = static_cast<int>(affine_rank(p.vertices(), vs));
    for (std::size_t i = 0; i < inc.size(); ++i)
      if (std::includes(inc[i].begin(), inc[i].end(), vs.begin(), vs.end())) face.facets.push_back(i);
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return faces;
}

namespace {

// Projections onto leading coordinates; level k bounds coordinate k given a prefix.
class LatticeWalker {
 public:
  explicit LatticeWalker(const RationalPolytope& p) : n_(p.ambient()) {
    for (std::size_t k = 1; k < n_; ++k) {
      std::vector<RatVec> pts;
      for (const auto& v : p.vertices()) pts.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
      levels_.push_back(dual_description(std::move(pts)));
    }
    levels_.push_back(p);
  }

  std::size_t dim() const { return n_; }

  // Integer range of coordinate k over prefix; false when empty.
  bool range(std::size_t k, const IntVec& prefix, Int& lo, Int& hi) const {
    const auto& lvl = levels_[k];
    bool has_lo = false, has_hi = false;
    for (const auto& e : lvl.equations()) {
      Rat s = e.rhs;
      for (std::size_t j = 0; j < k; ++j) s -= e.normal[j] * prefix[j];
      if (e.normal[k] == 0) {
        if (s != 0) return false;
        continue;
      }
      Rat x = s / e.normal[k];
      if (x.get_den() != 1) return false;
      if (has_lo && x.get_num() < lo) return false;
      if (has_hi && x.get_num() > hi) return false;
      lo = hi = x.get_num();
      has_lo = has_hi = true;
    }
    for (const auto& f : lvl.facets()) {
      Rat s = f.offset;
      for (std::size_t j = 0; j < k; ++j) s -= f.normal[j] * prefix[j];
      const Int& a = f.normal[k];
      if (a == 0) {
        if (s > 0) return false;
      } else if (a > 0) {
        Int c = ceil_of(s / a);
        if (!has_lo || c > lo) lo = c;
        has_lo = true;
      } else {
        Int c = floor_of(s / a);
        if (!has_hi || c < hi) hi = c;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) fail(ErrorCode::invariant_violation, "unbounded coordinate in lattice walk");
    return lo <= hi;
  }

  void walk(std::size_t k, IntVec& prefix, std::vector<IntVec>& out) const {
    Int lo, hi;
    if (!range(k, prefix, lo, hi)) return;
    for (Int x = lo; x <= hi; ++x) {
      prefix[k] = x;
      if (k + 1 == n_) out.push_back(prefix);
      else walk(k + 1, prefix, out);
    }
  }

 private:
  std::size_t n_;
  std::vector<RationalPolytope> levels_;
};

}  // namespace

std::vector<IntVec> lattice_points_serial(const RationalPolytope& p) {
  if (p.empty()) return {};
  if (p.ambient() == 0) return {IntVec{}};
  LatticeWalker w(p);
  std::vector<IntVec> out;
  IntVec prefix(w.dim());
  w.walk(0, prefix, out);
  return out;
}

std::vector<IntVec> lattice_points(const RationalPolytope& p) {
  if (p.empty()) return {};
  if (p.ambient() == 0) return {IntVec{}};
  LatticeWalker w(p);
  Int lo, hi;
  IntVec none;
  if (!w.range(0, none, lo, hi)) return {};
  const long first = lo.get_si();
  const long count = Int(hi - lo + 1).get_si();
  std::vector<std::vector<IntVec>> chunks(static_cast<std::size_t>(count));
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      IntVec prefix(w.dim());
      prefix[0] = first + i;
      auto& out = chunks[static_cast<std::size_t>(i)];
      if (w.dim() == 1) out.push_back(prefix);
      else w.walk(1, prefix, out);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  std::vector<IntVec> out;
  for (auto& c : chunks)
    for (auto& x : c) out.push_back(std::move(x));
  return out;
}

RatVec LatticeChart::to_chart(const RatVec& x) const {
  const std::size_t n = base.size();
  IntMatrix b(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) b(i, j) = basis[j][i];
  auto y = solve_rational(b, minus(x, to_rational(base)));
  if (!y) fail(ErrorCode::invalid_input, "point " + to_string(x) + " is off the affine hull");
  return *y;
}

IntVec LatticeChart::to_chart(const IntVec& x) const { return to_integer(to_chart(to_rational(x))); }

IntVec LatticeChart::from_chart(const IntVec& y) const {
  IntVec x = base;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * basis[j][i];
  return x;
}

std::optional<LatticeChart> lattice_chart(const RationalPolytope& p) {
  if (p.empty()) return std::nullopt;
  const std::size_t n = p.ambient();
  LatticeChart c;
  if (p.equations().empty()) {
    c.base = IntVec(n);
    for (std::size_t j = 0; j < n; ++j) {
      IntVec e(n);
      e[j] = 1;
      c.basis.push_back(std::move(e));
    }
    return c;
  }
  IntMatrix e(p.equations().size(), n);
  IntVec rhs(p.equations().size());
  for (std::size_t i = 0; i < p.equations().size(); ++i) {
    const auto& eq = p.equations()[i];
    Int den = eq.rhs.get_den();
    for (std::size_t j = 0; j < n; ++j) e(i, j) = eq.normal[j] * den;
    rhs[i] = eq.rhs.get_num();
  }
  auto sol = solve_integer_affine(e, rhs);
  if (!sol) return std::nullopt;
  c.base = sol->particular;
  // a reduced basis keeps chart coordinates small
  auto h = hermite_normal_form(IntMatrix::from_rows(sol->kernel, n));
  for (std::size_t i = 0; i < sol->kernel.size(); ++i) c.basis.push_back(h.H.row(i));
  return c;
}

RationalPolytope in_chart(const RationalPolytope& p, const LatticeChart& c) {
  std::vector<RatVec> v;
  for (const auto& x : p.vertices()) v.push_back(c.to_chart(x));
  return dual_description(std::move(v));
}

std::vector<IntVec> cone_facet_normals(const std::vector<IntVec>& gens, std::size_t rank) {
  return extreme_rays(gens, rank);
}

namespace {

std::vector<IntVec> gather(const Fan& f, const IndexSet& idx) {
  std::vector<IntVec> g;
  for (auto i : idx) g.push_back(f.rays[i]);
  return g;
}

// Ray sets of all faces of a full-dimensional strongly convex cone.
std::set<IndexSet> cone_faces(const Fan& f, const IndexSet& cone, const std::vector<IntVec>& normals) {
  std::vector<IndexSet> facets;
  for (const auto& u : normals) {
    IndexSet s;
    for (auto r : cone)
      if (dot(u, f.rays[r]) == 0) s.push_back(r);
    facets.push_back(std::move(s));
  }
  std::set<IndexSet> seen{cone};
  std::vector<IndexSet> queue;
  for (const auto& s : facets)
    if (seen.insert(s).second) queue.push_back(s);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& s : facets) {
      IndexSet meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), s.begin(), s.end(), std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  return seen;
}

std::size_t rank_of(const std::vector<IntVec>& vs, std::size_t n) {
  RowEchelon e(n);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

}  // namespace

std::string to_string(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

FanReport fan_validate(const Fan& f) {
  const std::size_t n = f.rank;
  auto bad = [](std::string m) { return FanReport{false, std::move(m)}; };
  if (n == 0) return bad("fan rank must be positive");
  std::set<IntVec> distinct;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const auto& r = f.rays[i];
    if (r.size() != n) return bad("ray " + std::to_string(i) + " has wrong length");
    if (content(r) != 1) return bad("ray " + std::to_string(i) + " " + to_string(r) + " is zero or not primitive");
    if (!distinct.insert(r).second) return bad("ray " + std::to_string(i) + " is duplicated");
  }
  if (f.max_cones.empty()) return bad("fan has no maximal cones");

  std::vector<IndexSet> cones;
  std::vector<std::vector<IntVec>> normals;
  std::vector<std::set<IndexSet>> faces;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    IndexSet cone = f.max_cones[c];
    std::sort(cone.begin(), cone.end());
    const std::string name = "maximal cone " + std::to_string(c) + " " + to_string(cone);
    if (cone.empty()) return bad(name + " is empty");
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) return bad(name + " repeats a ray");
    if (cone.back() >= f.rays.size()) return bad(name + " references a missing ray");
    auto gens = gather(f, cone);
    if (rank_of(gens, n) != n) return bad(name + " is not full-dimensional");
    auto dual = cone_facet_normals(gens, n);
    if (rank_of(dual, n) != n) return bad(name + " is not strongly convex");
    if (n >= 2)
      for (auto r : cone) {
        std::vector<IntVec> tight;
        for (const auto& u : dual)
          if (dot(u, f.rays[r]) == 0) tight.push_back(u);
        if (rank_of(tight, n) != n - 1) return bad(name + ": ray " + std::to_string(r) + " is not extreme");
      }
    faces.push_back(cone_faces(f, cone, dual));
    cones.push_back(std::move(cone));
    normals.push_back(std::move(dual));
  }
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      IndexSet common;
      std::set_intersection(cones[i].begin(), cones[i].end(), cones[j].begin(), cones[j].end(),
                            std::back_inserter(common));
      const std::string pair = "maximal cones " + std::to_string(i) + " and " + std::to_string(j);
      if (cones[i] == cones[j]) return bad(pair + " coincide");
      if (!faces[i].count(common) || !faces[j].count(common))
        return bad(pair + ": common rays " + to_string(common) + " do not form a common face");
      std::vector<IntVec> rows = normals[i];
      rows.insert(rows.end(), normals[j].begin(), normals[j].end());
      for (const auto& r : extreme_rays(rows, n)) {
        bool listed = false;
        for (auto c : common) listed = listed || f.rays[c] == r;
        if (!listed) return bad(pair + " overlap beyond their common face " + to_string(common));
      }
    }
  std::map<IndexSet, std::vector<std::size_t>> walls;
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (const auto& s : faces[c]) {
      if (rank_of(gather(f, s), n) + 1 == n) walls[s].push_back(c);
    }
  for (const auto& [wall, owners] : walls) {
    if (owners.size() == 1)
      return bad("unmatched facet " + to_string(wall) + " of maximal cone " + std::to_string(owners[0]));
    if (owners.size() > 2) return bad("facet " + to_string(wall) + " is shared by more than two maximal cones");
  }
  return {};
}

std::vector<Cone> enumerate_cones(const Fan& f) {
  std::set<IndexSet> all;
  for (auto cone : f.max_cones) {
    std::sort(cone.begin(), cone.end());
    auto gens = gather(f, cone);
    auto sub = cone_faces(f, cone, cone_facet_normals(gens, f.rank));
    all.insert(sub.begin(), sub.end());
  }
  std::vector<Cone> out;
  for (const auto& s : all) out.push_back({s, static_cast<int>(rank_of(gather(f, s), f.rank))});
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.rays < b.rays;
  });
  return out;
}

NormalFan normal_fan(const RationalPolytope& p) {
  require(!p.empty() && p.dim() == static_cast<int>(p.ambient()) && p.ambient() >= 1,
          "normal fan needs a full-dimensional polytope");
  NormalFan nf;
  nf.fan.rank = p.ambient();
  for (const auto& f : p.facets()) {
    nf.fan.rays.push_back(f.normal);
    nf.offsets.push_back(f.offset);
  }
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    IndexSet cone;
    for (std::size_t i = 0; i < p.incidence().size(); ++i)
      if (std::binary_search(p.incidence()[i].begin(), p.incidence()[i].end(), v)) cone.push_back(i);
    nf.fan.max_cones.push_back(std::move(cone));
  }
  return nf;
}

}  // namespace toridim
