#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toridim/exactlin.hpp"

namespace toridim {

// <normal, x> >= offset
struct Facet {
  IntVec normal;
  Rat offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

// <normal, x> = rhs
struct Equation {
  IntVec normal;
  Rat rhs;
};

using IndexSet = std::vector<std::size_t>;

/// Bounded rational polyhedron with both representations. The empty polytope
/// has dim() == -1 and no vertices.
class RationalPolytope {
 public:
  RationalPolytope() = default;
  explicit RationalPolytope(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  int dim() const { return dim_; }
  bool empty() const { return dim_ < 0; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Equation>& equations() const { return equations_; }
  // Sorted vertex indices on each facet.
  const std::vector<IndexSet>& incidence() const { return incidence_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;

 private:
  friend RationalPolytope dual_description(std::vector<RatVec> points);

  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Equation> equations_;
  std::vector<IndexSet> incidence_;
};

/// Convex hull of a point list. Duplicates and non-extreme points are dropped.
RationalPolytope dual_description(std::vector<RatVec> points);

/// {x : facets hold, equations hold}. Throws INVALID_INPUT when unbounded.
RationalPolytope from_inequalities(std::size_t ambient, const std::vector<Facet>& ineqs,
                                   const std::vector<Equation>& eqs = {});

RationalPolytope scaled(const RationalPolytope& p, const Int& k);

struct Face {
  IndexSet vertices;
  IndexSet facets;  // facets containing the face
  int dim = 0;
};

/// All nonempty faces including the polytope itself, ordered by (dim, vertex set).
std::vector<Face> face_lattice(const RationalPolytope& p);

/// Integer points of p in lexicographic order.
std::vector<IntVec> lattice_points(const RationalPolytope& p);
std::vector<IntVec> lattice_points_serial(const RationalPolytope& p);

// Affine lattice aff(P) ∩ Z^n written as base + span_Z(basis).
struct LatticeChart {
  IntVec base;
  std::vector<IntVec> basis;

  RatVec to_chart(const RatVec& x) const;
  IntVec to_chart(const IntVec& x) const;  // throws if x is off the lattice
  IntVec from_chart(const IntVec& y) const;
};

/// Absent when the affine hull carries no lattice point.
std::optional<LatticeChart> lattice_chart(const RationalPolytope& p);

/// p expressed in chart coordinates; full-dimensional there.
RationalPolytope in_chart(const RationalPolytope& p, const LatticeChart& c);

struct Cone {
  IndexSet rays;
  int dim = 0;
  friend bool operator==(const Cone&, const Cone&) = default;
};

struct Fan {
  std::size_t rank = 0;
  std::vector<IntVec> rays;
  std::vector<IndexSet> max_cones;
  friend bool operator==(const Fan&, const Fan&) = default;
};

struct FanReport {
  bool ok = true;
  std::string message;
};

/// Primitive distinct rays, strongly convex full-dimensional maximal cones
/// with extreme listed rays, common-face intersections, and every wall shared
/// by exactly two maximal cones.
FanReport fan_validate(const Fan& f);

/// All cones including the zero cone, ordered by (dim, ray set).
std::vector<Cone> enumerate_cones(const Fan& f);

// Facet normals of a full-dimensional cone spanned by the given rays.
std::vector<IntVec> cone_facet_normals(const std::vector<IntVec>& gens, std::size_t rank);

struct NormalFan {
  Fan fan;
  // Facet offsets b_F; the polytope is {m : <u_F, m> >= b_F}, so D_P = -sum b_F D_F.
  std::vector<Rat> offsets;
};

/// Inner normal fan of a full-dimensional polytope; ray i is the normal of facet i.
NormalFan normal_fan(const RationalPolytope& p);

std::string to_string(const IndexSet& s);

}  // namespace toridim
