#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace toridim {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVec> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
};

struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
};

struct AffineSolution {
  IntVec particular;
  std::vector<IntVec> kernel;  // lattice basis of ker A
};

/// Row-style Hermite normal form: U unimodular, U*A = H, H in echelon form
/// with positive pivots and the entries above each pivot reduced into [0, pivot).
/// Pivots are chosen by minimal absolute value.
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Smith normal form: U*A*V = D with D diagonal, d1 | d2 | ..., d_i >= 0.
SmithForm smith_normal_form(const IntMatrix& a);

Int determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix (throws if `u` is not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& u);

std::size_t rational_rank(std::span<const RatVec> vectors);
std::size_t integer_rank(const IntMatrix& a);

/// Integer solutions of A*x = b, certified absent through the Smith form.
std::optional<AffineSolution> solve_integer_affine(const IntMatrix& a, const IntVec& b);

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

/// Basis of the rational null space {x : A*x = 0}, as primitive integer vectors.
std::vector<IntVec> rational_nullspace(const IntMatrix& a);

// Incremental fraction-free row echelon form; used wherever only rank or
// span membership is needed.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  // Returns true iff `v` was independent of the rows inserted so far.
  bool insert(IntVec v);
  bool in_span(IntVec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& rows() const { return rows_; }

 private:
  void reduce(IntVec& v) const;

  std::size_t dim_;
  std::vector<IntVec> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

// Small vector helpers.
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int content(const IntVec& v);           // gcd of the entries, 0 for the zero vector
IntVec primitive(IntVec v);             // divided by content; zero stays zero
IntVec to_integer_scaled(const RatVec& v);  // positive multiple with integer entries
RatVec to_rational(const IntVec& v);
IntVec to_integer(const RatVec& v);     // throws if some entry is not integral
bool is_integral(const RatVec& v);
IntVec make_intvec(std::initializer_list<long> xs);
RatVec make_ratvec(std::initializer_list<long> xs);
Rat parse_rational(const std::string& s);  // "p/q", "p", "-p/q"
Rat ratio(const Int& num, const Int& den);  // canonicalized num/den
Int floor_of(const Rat& q);
Int ceil_of(const Rat& q);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace toridim
