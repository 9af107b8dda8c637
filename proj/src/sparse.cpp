#include "toridim/sparse.hpp"

#include <algorithm>
#include <exception>

#include "toridim/error.hpp"

namespace toridim {

int Dim::value() const {
  if (!value_) fail(ErrorCode::invariant_violation, "value of an EMPTY dimension");
  return *value_;
}

std::string to_string(const Dim& d) { return d.is_empty() ? "EMPTY" : std::to_string(d.value()); }

PointFamily make_family(std::vector<PointSet> sets) {
  PointFamily f;
  f.labels.resize(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) f.labels[i] = i;
  f.sets = std::move(sets);
  return f;
}

namespace {

std::size_t ambient_of(const PointFamily& fam) {
  for (const auto& s : fam.sets)
    if (!s.empty()) return s.front().size();
  return 0;
}

// Integer basis of the linear span of (A - a0).
std::vector<IntVec> difference_basis(const PointSet& s, std::size_t n) {
  RowEchelon e(n);
  for (const auto& p : s) {
    require(p.size() == n, "points of different dimensions in a family");
    IntVec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = p[j] - s.front()[j];
    e.insert(std::move(d));
  }
  return e.rows();
}

std::size_t span_rank(const std::vector<std::vector<IntVec>>& bases, const IndexSet& positions, std::size_t n) {
  RowEchelon e(n);
  for (auto i : positions)
    for (const auto& v : bases[i]) {
      e.insert(v);
      if (e.rank() == n) return n;
    }
  return e.rank();
}

// Subsets of {0..r-1} of size k in lexicographic order.
std::vector<IndexSet> combinations(std::size_t r, std::size_t k) {
  std::vector<IndexSet> out;
  IndexSet c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<IntVec>> bases_of(const PointFamily& fam, std::size_t n) {
  std::vector<std::vector<IntVec>> bases;
  for (const auto& s : fam.sets) {
    require(!s.empty(), "family contains an empty set");
    bases.push_back(difference_basis(s, n));
  }
  return bases;
}

EssentialResult witness_of(const PointFamily& fam, const IndexSet& positions) {
  IndexSet w;
  for (auto i : positions) w.push_back(fam.labels[i]);
  return {false, w};
}

PointFamily extremal(const PointFamily& fam) {
  PointFamily out = fam;
  for (auto& s : out.sets) {
    std::vector<RatVec> pts;
    for (const auto& p : s) pts.push_back(to_rational(p));
    auto hull = dual_description(pts);
    s.clear();
    for (const auto& v : hull.vertices()) s.push_back(to_integer(v));
  }
  return out;
}

}  // namespace

std::size_t affine_span_dim(const PointFamily& fam, const IndexSet& positions) {
  const std::size_t n = ambient_of(fam);
  std::vector<std::vector<IntVec>> bases;
  for (auto i : positions) {
    require(i < fam.sets.size(), "subset index out of range");
    require(!fam.sets[i].empty(), "subset contains an empty set");
  }
  IndexSet local;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    bases.push_back(difference_basis(fam.sets[positions[k]], n));
    local.push_back(k);
  }
  return span_rank(bases, local, n);
}

EssentialResult is_essential(const PointFamily& fam, bool extremal_only) {
  if (extremal_only) return is_essential(extremal(fam), false);
  const std::size_t r = fam.sets.size();
  if (r == 0) return {};
  const std::size_t n = ambient_of(fam);
  const auto bases = bases_of(fam, n);
  for (std::size_t k = 1; k <= r; ++k) {
    auto combos = combinations(r, k);
    if (k > n) return witness_of(fam, combos.front());
    const long count = static_cast<long>(combos.size());
    long first = count;
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) reduction(min : first)
    for (long c = 0; c < count; ++c) {
      if (c >= first) continue;
      try {
        if (span_rank(bases, combos[static_cast<std::size_t>(c)], n) < k) first = std::min(first, c);
      } catch (...) {
#pragma omp critical
        err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    if (first < count) return witness_of(fam, combos[static_cast<std::size_t>(first)]);
  }
  return {};
}

EssentialResult is_essential_serial(const PointFamily& fam) {
  const std::size_t r = fam.sets.size();
  if (r == 0) return {};
  const std::size_t n = ambient_of(fam);
  const auto bases = bases_of(fam, n);
  for (std::size_t k = 1; k <= r; ++k)
    for (const auto& c : combinations(r, k))
      if (k > n || span_rank(bases, c, n) < k) return witness_of(fam, c);
  return {};
}

Dim generic_torus_dim(const PointFamily& fam, std::size_t rank) {
  if (!is_essential(fam).essential) return Dim::empty();
  return Dim::of(static_cast<int>(rank) - static_cast<int>(fam.sets.size()));
}

}  // namespace toridim
