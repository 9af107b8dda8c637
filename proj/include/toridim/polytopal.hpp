#pragma once

#include <optional>
#include <vector>

#include "toridim/dimension.hpp"
#include "toridim/polyhedra.hpp"
#include "toridim/sparse.hpp"

namespace toridim {

// Supports A_i inside d_i * P. Faces are named by the labels of their
// vertices, where label j is the position of the vertex in the input list.
struct PolytopalSystem {
  RationalPolytope polytope;
  std::vector<std::size_t> vertex_labels;  // label of polytope.vertices()[k]
  std::vector<long> degrees;
  std::vector<std::vector<IntVec>> supports;

  std::size_t size() const { return supports.size(); }
  std::size_t rank() const { return static_cast<std::size_t>(polytope.dim()); }
};

/// Every input point must be a distinct vertex of the hull.
PolytopalSystem make_polytopal_system(std::vector<RatVec> vertices, std::vector<long> degrees,
                                      std::vector<std::vector<IntVec>> supports);
PolytopalSystem make_polytopal_system(RationalPolytope p, std::vector<long> degrees,
                                      std::vector<std::vector<IntVec>> supports);

// All lattice points of d * P.
std::vector<IntVec> full_support(const RationalPolytope& p, long d);

struct FaceRow {
  IndexSet face;  // vertex labels, sorted
  int dim = 0;
  IndexSet e;
  bool essential = true;
  std::optional<IndexSet> witness;
  Dim contribution = Dim::empty();  // dim F - |E_F| when essential
  friend bool operator==(const FaceRow&, const FaceRow&) = default;
};

struct PolytopalReport {
  std::vector<FaceRow> rows;  // by (dim, labels)
  Dim dimension = Dim::empty();
  friend bool operator==(const PolytopalReport&, const PolytopalReport&) = default;
};

PolytopalReport polytopal_dimension(const PolytopalSystem& sys);
PolytopalReport polytopal_dimension_serial(const PolytopalSystem& sys);

struct RegSeqResult {
  bool regular = false;
  std::optional<IndexSet> witness;  // first violating face
  Dim dimension = Dim::empty();
  friend bool operator==(const RegSeqResult&, const RegSeqResult&) = default;
};

/// Throws INVARIANT_VIOLATION when the face criterion, the closure property
/// or the dimension count disagree with each other.
RegSeqResult is_regular_sequence(const PolytopalSystem& sys);

struct SubsetResult {
  bool regular = false;
  std::optional<IndexSet> witness;  // least violating subset by (size, lex)
  bool polytopal_checked = false;
  friend bool operator==(const SubsetResult&, const SubsetResult&) = default;
};

/// Homogeneous supports in n+1 variables; cross-checked on the standard simplex.
SubsetResult standard_regseq(std::size_t n, const std::vector<long>& degrees,
                             const std::vector<std::vector<IntVec>>& supports);

/// Full supports of degrees d in weights a; cross-checked on the weighted
/// simplex whenever every degree has monomials.
SubsetResult weighted_regseq(const std::vector<long>& weights, const std::vector<long>& degrees);

bool semigroup_member(const std::vector<long>& generators, long target);

/// Divides weights by their gcd g. Degrees not divisible by g have no monomials.
struct ReducedWeights {
  std::vector<long> weights;
  std::vector<long> degrees;
  long divisor = 1;
  bool degrees_divisible = true;
};
ReducedWeights reduce_weights(const std::vector<long>& weights, const std::vector<long>& degrees);

/// The system in the lattice refined by k: P and the supports scaled by k.
PolytopalSystem refine_lattice(const PolytopalSystem& sys, long k);

/// The same system as a Cox system over the normal fan, with degrees d_i D_P.
/// Needs lattice vertices.
SparseSystem fan_route_system(const PolytopalSystem& sys);

}  // namespace toridim
