#include "toridim/toric.hpp"

#include <algorithm>

#include "toridim/error.hpp"

namespace toridim {

namespace {

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

IntMatrix pairing_matrix(const Fan& f) { return IntMatrix::from_rows(f.rays, f.rank); }

}  // namespace

IntVec ClassGroup::project(const IntVec& divisor) const {
  require(divisor.size() == nrays, "divisor length does not match the number of rays");
  IntVec c = projection * divisor;
  for (std::size_t t = 0; t < torsion.size(); ++t) c[free_rank + t] = mod_pos(c[free_rank + t], torsion[t]);
  return c;
}

ClassGroup class_group(const Fan& f) {
  const IntMatrix p = pairing_matrix(f);
  const std::size_t s = p.rows();
  SmithForm snf = smith_normal_form(p);

  ClassGroup cl;
  cl.nrays = s;
  cl.free_rank = s - snf.rank;

  // Free rows of U span the left kernel; put them in Hermite form for stable coordinates.
  IntMatrix free_rows(cl.free_rank, s);
  for (std::size_t i = 0; i < cl.free_rank; ++i)
    for (std::size_t j = 0; j < s; ++j) free_rows(i, j) = snf.U(snf.rank + i, j);
  IntMatrix h = hermite_normal_form(free_rows).H;

  IntMatrix u = snf.U;
  for (std::size_t i = 0; i < cl.free_rank; ++i)
    for (std::size_t j = 0; j < s; ++j) u(snf.rank + i, j) = h(i, j);
  IntMatrix inv = unimodular_inverse(u);

  std::vector<std::size_t> tors_rows;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) > 1) {
      tors_rows.push_back(i);
      cl.torsion.push_back(snf.D(i, i));
    }

  const std::size_t k = cl.coords();
  cl.projection = IntMatrix(k, s);
  cl.section = IntMatrix(s, k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t row = c < cl.free_rank ? snf.rank + c : tors_rows[c - cl.free_rank];
    for (std::size_t j = 0; j < s; ++j) {
      cl.projection(c, j) = u(row, j);
      cl.section(j, c) = inv(j, row);
    }
  }
  return cl;
}

ToricVariety::ToricVariety(Fan fan) : fan_(std::move(fan)) {
  auto rep = fan_validate(fan_);
  if (!rep.ok) fail(ErrorCode::invalid_input, "invalid fan: " + rep.message);
  for (auto& c : fan_.max_cones) std::sort(c.begin(), c.end());
  cones_ = enumerate_cones(fan_);
  pairing_ = pairing_matrix(fan_);
  cl_ = toridim::class_group(fan_);
}

std::size_t ToricVariety::cone_index(IndexSet rays) const {
  std::sort(rays.begin(), rays.end());
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].rays == rays) return i;
  fail(ErrorCode::invalid_input, "no cone with rays " + to_string(rays));
}

DivisorClass divisor_class(const ToricVariety& x, const TDivisor& d) {
  return {x.class_group().project(d), d};
}

RationalPolytope divisor_polytope(const ToricVariety& x, const TDivisor& d, const Cone& sigma) {
  require(d.size() == x.nrays(), "divisor length does not match the number of rays");
  for (auto r : sigma.rays)
    require(d[r] == 0, "divisor has nonzero coefficient on ray " + std::to_string(r) + " of the cone");
  std::vector<Facet> ineqs;
  for (std::size_t r = 0; r < x.nrays(); ++r) ineqs.push_back({x.fan().rays[r], Rat(-d[r])});
  std::vector<Equation> eqs;
  for (auto r : sigma.rays) eqs.push_back({x.fan().rays[r], Rat(0)});
  return from_inequalities(x.rank(), ineqs, eqs);
}

IntVec monomial_to_point(const ToricVariety& x, const TDivisor& d, const IntVec& a) {
  require(a.size() == x.nrays() && d.size() == x.nrays(), "exponent length does not match the number of rays");
  auto sol = solve_integer_affine(x.pairing(), sub(a, d));
  if (!sol) fail(ErrorCode::invalid_input, "monomial " + to_string(a) + " is not in the class of " + to_string(d));
  return sol->particular;
}

IntVec point_to_monomial(const ToricVariety& x, const TDivisor& d, const IntVec& m) {
  IntVec a = x.pairing() * m;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += d[i];
  return a;
}

std::optional<TDivisor> effective_rep_vanishing_on(const ToricVariety& x, const DivisorClass& alpha,
                                                  const Cone& sigma) {
  const TDivisor& d0 = alpha.rep;
  TDivisor d = d0;
  if (!sigma.rays.empty()) {
    IntMatrix ps(sigma.rays.size(), x.rank());
    IntVec rhs(sigma.rays.size());
    for (std::size_t i = 0; i < sigma.rays.size(); ++i) {
      for (std::size_t j = 0; j < x.rank(); ++j) ps(i, j) = x.pairing()(sigma.rays[i], j);
      rhs[i] = -d0[sigma.rays[i]];
    }
    auto sol = solve_integer_affine(ps, rhs);
    if (!sol) return std::nullopt;
    d = point_to_monomial(x, d0, sol->particular);
  }
  auto pts = lattice_points(divisor_polytope(x, d, sigma));
  if (pts.empty()) return std::nullopt;
  return point_to_monomial(x, d, pts.front());
}

std::vector<IntVec> monomials_of_class(const ToricVariety& x, const TDivisor& d) {
  std::vector<IntVec> out;
  for (const auto& m : lattice_points(divisor_polytope(x, d, x.zero_cone()))) out.push_back(point_to_monomial(x, d, m));
  return out;
}

Support make_support(const ToricVariety& x, const TDivisor& degree, std::vector<IntVec> monomials) {
  require(degree.size() == x.nrays(), "degree length does not match the number of rays");
  require(!monomials.empty(), "support is empty");
  Support s{divisor_class(x, degree), {}};
  for (const auto& a : monomials) {
    if (a.size() != x.nrays()) fail(ErrorCode::invalid_input, "exponent " + to_string(a) + " has wrong length");
    for (const auto& e : a)
      if (e < 0) fail(ErrorCode::invalid_input, "exponent " + to_string(a) + " has a negative entry");
    require(x.class_group().project(a) == s.cls.coords,
            "monomial " + to_string(a) + " does not have the class of " + to_string(degree));
  }
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  s.monomials = std::move(monomials);
  return s;
}

std::vector<IntVec> restrict_support_with(const ToricVariety& x, const Support& a, const Cone& sigma,
                                          const TDivisor& d) {
  for (auto r : sigma.rays) require(d[r] == 0, "representative does not vanish on the cone");
  std::vector<IntVec> pts;
  for (const auto& mono : a.monomials) {
    bool survives = std::all_of(sigma.rays.begin(), sigma.rays.end(), [&](std::size_t r) { return mono[r] == 0; });
    if (survives) pts.push_back(monomial_to_point(x, d, mono));
  }
  if (pts.empty()) return pts;
  std::sort(pts.begin(), pts.end());
  const IntVec base = pts.front();
  for (auto& p : pts) p = sub(p, base);
  return pts;
}

std::vector<IntVec> restrict_support(const ToricVariety& x, const Support& a, const Cone& sigma) {
  auto d = effective_rep_vanishing_on(x, a.cls, sigma);
  if (!d) return {};
  return restrict_support_with(x, a, sigma, *d);
}

std::string to_string(OrbitCase c) {
  switch (c) {
    case OrbitCase::orbit_contained: return "ORBIT_CONTAINED";
    case OrbitCase::empty_intersection: return "EMPTY_INTERSECTION";
    case OrbitCase::hypersurface: return "HYPERSURFACE";
  }
  return "UNKNOWN";
}

OrbitCase classify_orbit(const ToricVariety& x, const Support& a, const Cone& sigma) {
  auto n = restrict_support(x, a, sigma).size();
  if (n == 0) return OrbitCase::orbit_contained;
  if (n == 1) return OrbitCase::empty_intersection;
  return OrbitCase::hypersurface;
}

Positivity class_positivity(const ToricVariety& x, const DivisorClass& alpha) {
  Positivity pos;
  pos.effective = effective_rep_vanishing_on(x, alpha, x.zero_cone()).has_value();
  const TDivisor& d = alpha.rep;
  const auto& rays = x.fan().rays;
  pos.q_cartier = pos.cartier = pos.nef = pos.ample = true;
  for (const auto& sigma : x.fan().max_cones) {
    IntMatrix ps(sigma.size(), x.rank());
    RatVec rhs(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      for (std::size_t j = 0; j < x.rank(); ++j) ps(i, j) = rays[sigma[i]][j];
      rhs[i] = -d[sigma[i]];
    }
    auto m = solve_rational(ps, rhs);
    if (!m) {
      pos.q_cartier = pos.cartier = pos.nef = pos.ample = false;
      return pos;
    }
    if (!is_integral(*m)) pos.cartier = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (std::binary_search(sigma.begin(), sigma.end(), r)) continue;
      Rat lhs = dot(rays[r], *m);
      if (lhs < -d[r]) pos.nef = false;
      if (lhs <= -d[r]) pos.ample = false;
    }
  }
  if (!pos.nef) pos.ample = false;
  return pos;
}

std::vector<IntVec> extremal_monomials(const ToricVariety&, const Support& a) {
  std::vector<RatVec> pts;
  for (const auto& m : a.monomials) pts.push_back(to_rational(m));
  auto hull = dual_description(pts);
  std::vector<IntVec> out;
  for (const auto& v : hull.vertices()) out.push_back(to_integer(v));
  return out;
}

}  // namespace toridim
