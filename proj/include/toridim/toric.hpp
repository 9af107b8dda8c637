#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toridim/exactlin.hpp"
#include "toridim/polyhedra.hpp"

namespace toridim {

// Cokernel of m -> (<m, u_rho>)_rho. Coordinates list the free part first,
// then one residue per torsion invariant.
struct ClassGroup {
  std::size_t nrays = 0;
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  IntMatrix projection;  // (free_rank + torsion.size()) x nrays
  IntMatrix section;     // nrays x (free_rank + torsion.size())

  std::size_t coords() const { return free_rank + torsion.size(); }
  IntVec project(const IntVec& divisor) const;
};

using TDivisor = IntVec;

struct DivisorClass {
  IntVec coords;
  TDivisor rep;
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.coords == b.coords; }
};

/// A validated complete fan with its cones, ray-pairing matrix and class group.
class ToricVariety {
 public:
  explicit ToricVariety(Fan fan);

  const Fan& fan() const { return fan_; }
  std::size_t rank() const { return fan_.rank; }
  std::size_t nrays() const { return fan_.rays.size(); }
  const std::vector<Cone>& cones() const { return cones_; }
  const IntMatrix& pairing() const { return pairing_; }  // row rho is u_rho
  const ClassGroup& class_group() const { return cl_; }
  const Cone& zero_cone() const { return cones_.front(); }
  // Index into cones() of the cone with this ray set.
  std::size_t cone_index(IndexSet rays) const;

 private:
  Fan fan_;
  std::vector<Cone> cones_;
  IntMatrix pairing_;
  ClassGroup cl_;
};

ClassGroup class_group(const Fan& f);

DivisorClass divisor_class(const ToricVariety& x, const TDivisor& d);

/// {m : <m,u_rho> >= -d_rho for all rho, <m,u_rho> = 0 on the rays of sigma}.
RationalPolytope divisor_polytope(const ToricVariety& x, const TDivisor& d, const Cone& sigma);

/// The unique m with a = d + P m; throws INVALID_INPUT when the classes differ.
IntVec monomial_to_point(const ToricVariety& x, const TDivisor& d, const IntVec& a);
IntVec point_to_monomial(const ToricVariety& x, const TDivisor& d, const IntVec& m);

std::optional<TDivisor> effective_rep_vanishing_on(const ToricVariety& x, const DivisorClass& alpha,
                                                  const Cone& sigma);

/// Exponent tuples of all monomials of the class of d, in lattice-point order.
std::vector<IntVec> monomials_of_class(const ToricVariety& x, const TDivisor& d);

struct Support {
  DivisorClass cls;
  std::vector<IntVec> monomials;
};

/// Checks nonemptiness, nonnegativity and that every monomial has the class of `degree`.
Support make_support(const ToricVariety& x, const TDivisor& degree, std::vector<IntVec> monomials);

/// Points of the surviving monomials in sigma-perp, translated so the
/// lexicographically least one is the origin, sorted.
std::vector<IntVec> restrict_support(const ToricVariety& x, const Support& a, const Cone& sigma);
// Same, mapped through an explicit representative that vanishes on sigma.
std::vector<IntVec> restrict_support_with(const ToricVariety& x, const Support& a, const Cone& sigma,
                                          const TDivisor& d);

enum class OrbitCase { orbit_contained, empty_intersection, hypersurface };
std::string to_string(OrbitCase c);

OrbitCase classify_orbit(const ToricVariety& x, const Support& a, const Cone& sigma);

struct Positivity {
  bool effective = false;
  bool cartier = false;
  bool q_cartier = false;
  bool nef = false;
  bool ample = false;
};

Positivity class_positivity(const ToricVariety& x, const DivisorClass& alpha);

/// Vertices of conv(A) among the exponent tuples of a support.
std::vector<IntVec> extremal_monomials(const ToricVariety& x, const Support& a);

}  // namespace toridim
