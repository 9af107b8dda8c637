#include "toridim/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toridim/error.hpp"

namespace toridim {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVec> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  require(a.cols() == x.size(), "matrix-vector dimension mismatch");
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  return os << ']';
}

namespace {

// row_i -= q * row_j, mirrored in the transform
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= q * m(j, c);
}

void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) -= q * m(r, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < m; ++col) {
    bool found = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (h(i, col) == 0) continue;
        if (best == m || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == m) break;
      found = true;
      h.swap_rows(row, best);
      u.swap_rows(row, best);
      bool cleared = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        Int q = h(i, col) / h(row, col);
        row_axpy(h, i, row, q);
        row_axpy(u, i, row, q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = fdiv(h(i, col), h(row, col));
      if (q == 0) continue;
      row_axpy(h, i, row, q);
      row_axpy(u, i, row, q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t rank = 0;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // global minimum of the remaining block as first pivot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
    if (pi == m) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    while (true) {
      // bring the smallest entry of row/column t to the pivot
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < m; ++i)
        if (d(i, t) != 0 && (d(bi, bj) == 0 || abs(d(i, t)) < abs(d(bi, bj)))) bi = i, bj = t;
      for (std::size_t j = t; j < n; ++j)
        if (d(t, j) != 0 && (d(bi, bj) == 0 || abs(d(t, j)) < abs(d(bi, bj)))) bi = t, bj = j;
      if (bi != t) {
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
      }
      if (bj != t) {
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_axpy(d, t, bad, Int(-1));
      row_axpy(u, t, bad, Int(-1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    ++rank;
  }
  return {std::move(d), std::move(u), std::move(v), rank};
}

Int determinant(const IntMatrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& u) {
  require(u.rows() == u.cols(), "inverse of a non-square matrix");
  const std::size_t n = u.rows();
  std::vector<RatVec> rows(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = u(i, j);
    rows[i][n + i] = 1;
  }
  auto piv = rref(rows, n);
  require(piv.size() == n, "matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = rows[i][n + j];
      require(x.get_den() == 1, "matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::size_t rational_rank(std::span<const RatVec> vectors) {
  if (vectors.empty()) return 0;
  RowEchelon ech(vectors.front().size());
  for (const auto& v : vectors) {
    require(v.size() == ech.dim(), "vectors of different lengths");
    ech.insert(to_integer_scaled(v));
  }
  return ech.rank();
}

std::size_t integer_rank(const IntMatrix& a) {
  RowEchelon ech(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) ech.insert(a.row(i));
  return ech.rank();
}

std::optional<AffineSolution> solve_integer_affine(const IntMatrix& a, const IntVec& b) {
  require(b.size() == a.rows(), "right-hand side length mismatch");
  SmithForm s = smith_normal_form(a);
  IntVec c = s.U * b;
  const std::size_t n = a.cols();
  IntVec y(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      const Int& di = s.D(i, i);
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  AffineSolution sol;
  sol.particular = s.V * y;
  for (std::size_t j = s.rank; j < n; ++j) sol.kernel.push_back(s.V.col(j));
  return sol;
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
  require(b.size() == a.rows(), "right-hand side length mismatch");
  const std::size_t n = a.cols();
  std::vector<RatVec> rows(a.rows(), RatVec(n + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n] = b[i];
  }
  auto piv = rref(rows, n + 1);
  RatVec x(n);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == n) return std::nullopt;  // 0 = nonzero
    x[piv[r]] = rows[r][n];
  }
  return x;
}

std::vector<IntVec> rational_nullspace(const IntMatrix& a) {
  const std::size_t n = a.cols();
  std::vector<RatVec> rows(a.rows(), RatVec(n));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
  auto piv = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(n);
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -rows[r][f];
    basis.push_back(primitive(to_integer_scaled(x)));
  }
  return basis;
}

void RowEchelon::reduce(IntVec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p] == 0) continue;
    const IntVec& r = rows_[k];
    Int g = gcd(r[p], v[p]);
    Int fr = r[p] / g;
    Int fv = v[p] / g;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fr * v[j] - fv * r[j];
    v = primitive(std::move(v));
  }
}

bool RowEchelon::insert(IntVec v) {
  require(v.size() == dim_, "vector length mismatch");
  if (rows_.size() == dim_) return false;
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
  if (lead == v.end()) return false;
  const auto p = static_cast<std::size_t>(lead - v.begin());
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowEchelon::in_span(IntVec v) const {
  require(v.size() == dim_, "vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "dot product length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  require(a.size() == b.size(), "dot product length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

IntVec to_integer_scaled(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

IntVec to_integer(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) fail(ErrorCode::invalid_input, "non-integral coordinate " + v[i].get_str());
    out[i] = v[i].get_num();
  }
  return out;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntVec make_intvec(std::initializer_list<long> xs) { return IntVec(xs.begin(), xs.end()); }

RatVec make_ratvec(std::initializer_list<long> xs) { return RatVec(xs.begin(), xs.end()); }

Rat parse_rational(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorCode::invalid_input, "malformed rational '" + s + "'");
  require(q.get_den() != 0, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rat ratio(const Int& num, const Int& den) {
  require(den != 0, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int floor_of(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_of(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace toridim
