#pragma once

#include <string>
#include <vector>

#include "toridim/dimension.hpp"
#include "toridim/polyhedra.hpp"

// Built-in named examples.
namespace toridim::fixtures {

Fan projective_plane();        // rays of x, y, z: e1, e2, -e1-e2
Fan weighted_plane_123();      // rays (2,3), (-1,0), (0,-1)
Fan p1_times_p2();             // x0, x1, y0, y1, y2
Fan hirzebruch2();             // x, y, z, t: (1,0), (0,1), (-1,2), (0,-1)
Fan four_ray_fan();            // (0,1), (-1,-2), (1,-1), (2,1)
Fan weighted_plane_hyperelliptic(int genus);  // x, y, z with weights 1, g+1, 1

// {x0}, {x1 y0}, {x1 y1}
SparseSystem p1xp2_system();

// y^2 = f(x) of degree 2g+1, homogenized in P^2; the point at infinity is
// the cone of the rays of x and z.
SparseSystem hyperelliptic_projective(int genus);
IndexSet hyperelliptic_projective_point();

// y^2 = f(x), weighted homogenization with deg y = g+1; the point at
// infinity is the cone of the rays of y and z.
SparseSystem hyperelliptic_weighted(int genus);
IndexSet hyperelliptic_weighted_point();

// Monomials yz^3, zt, xt, xyz^2, x^2yz of class (1,1) on the Hirzebruch surface.
std::vector<IntVec> hirzebruch_support();
TDivisor hirzebruch_degree();  // D_x + D_t

// Weighted simplex {v >= 0 : sum a_i v_i = 1} in Z^{n+1}.
RationalPolytope weighted_simplex(const std::vector<long>& weights);
RationalPolytope standard_simplex(std::size_t n);

}  // namespace toridim::fixtures
