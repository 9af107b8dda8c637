#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "toridim/exactlin.hpp"
#include "toridim/sparse.hpp"

// Small exact Groebner engine used to check combinatorial predictions.
namespace toridim::oracle {

constexpr std::size_t max_vars = 5;

using Mono = std::array<int, max_vars>;

struct Term {
  Mono m{};
  Rat c;
};

// Polynomial ring Q[X_0..X_n] with deg X_i = weights[i], ordered by weighted degrevlex.
struct Ring {
  std::vector<long> weights;

  std::size_t nvars() const { return weights.size(); }
  long degree(const Mono& m) const;
  // true when a > b
  bool greater(const Mono& a, const Mono& b) const;
};

Ring standard_ring(std::size_t nvars);

/// Terms sorted by decreasing monomial, no zero coefficients.
struct Poly {
  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Mono& lead() const { return terms.front().m; }
};

Poly make_poly(const Ring& ring, std::vector<Term> terms);
Poly make_poly(const Ring& ring, const std::vector<IntVec>& exponents, const std::vector<Int>& coeffs);
bool is_homogeneous(const Ring& ring, const Poly& p);
std::string to_string(const Poly& p);

struct Budget {
  std::size_t max_pairs = 20000;
  std::size_t max_basis = 400;
  std::size_t max_terms = 20000;  // per polynomial
  std::size_t max_coeff_bits = 1 << 16;
};

struct GroebnerStats {
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
  std::size_t max_terms = 0;
};

struct GroebnerBasis {
  std::vector<Poly> polys;  // reduced, monic, by increasing leading monomial
  GroebnerStats stats;
};

/// Reduced Groebner basis of homogeneous generators. Throws SIZE_LIMIT outside
/// 5 variables, degree 12 and 6 generators, and BUDGET_EXCEEDED with the
/// statistics so far when a cap is hit.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Poly>& gens, const Budget& budget = {});

/// Remainder of p on division by g, scaled to be monic.
Poly normal_form(const Ring& ring, const std::vector<Poly>& g, const Poly& p);

/// Every S-pair reduces to zero.
bool is_groebner_basis(const Ring& ring, const std::vector<Poly>& g);

/// Largest set of variables containing the support of no leading monomial.
std::size_t krull_dimension(const std::vector<Mono>& leads, std::size_t nvars);
std::size_t krull_dimension(const GroebnerBasis& gb, std::size_t nvars);
// The same number by recursion on the complement.
std::size_t krull_dimension_recursive(const std::vector<Mono>& leads, std::size_t nvars);

struct ProbeResult {
  Dim proj_dim = Dim::empty();
  std::vector<int> affine_dims;  // per trial, -1 when the budget ran out
  std::size_t successes = 0;
  std::size_t failures = 0;
  friend bool operator==(const ProbeResult&, const ProbeResult&) = default;
};

constexpr long coefficient_bound = 10000;

/// Random integer coefficients in [-10^4, 10^4] \ {0}; trial t draws from seed_seq{seed, t}.
/// Projective dimension is the minimum affine-cone dimension minus one.
ProbeResult random_proj_dimension(const Ring& ring, const std::vector<std::vector<IntVec>>& supports,
                                  std::size_t trials, std::uint64_t seed, const Budget& budget = {});
ProbeResult random_proj_dimension_serial(const Ring& ring, const std::vector<std::vector<IntVec>>& supports,
                                         std::size_t trials, std::uint64_t seed, const Budget& budget = {});

// The random instance of a given trial.
std::vector<Poly> random_instance(const Ring& ring, const std::vector<std::vector<IntVec>>& supports,
                                  std::uint64_t seed, std::size_t trial);

}  // namespace toridim::oracle
