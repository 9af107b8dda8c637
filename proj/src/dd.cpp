#include "toridim/dd.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "toridim/error.hpp"

namespace toridim {

namespace {

class RowSet {
 public:
  explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  RowSet operator&(const RowSet& o) const {
    RowSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }

  bool subset_of(const RowSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVec v;
  RowSet zero;
};

}  // namespace

std::vector<IntVec> extreme_rays(std::span<const IntVec> rows, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t m = rows.size();

  std::vector<std::size_t> basis;
  std::vector<bool> used(m, false);
  RowEchelon ech(dim);
  for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
    require(rows[i].size() == dim, "constraint length mismatch");
    if (ech.insert(rows[i])) {
      basis.push_back(i);
      used[i] = true;
    }
  }
  if (basis.size() < dim) fail(ErrorCode::invariant_violation, "cone is not pointed");

  IntMatrix b(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = rows[basis[i]][j];

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVec e(dim);
    e[j] = 1;
    auto col = solve_rational(b, e);
    Ray r{primitive(to_integer_scaled(*col)), RowSet(m)};
    for (std::size_t i = 0; i < dim; ++i)
      if (i != j) r.zero.set(basis[i]);
    rays.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (used[k]) continue;
    const IntVec& a = rows[k];
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else rays[i].zero.set(k);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (auto p : pos) {
      for (auto n : neg) {
        RowSet z = rays[p].zero & rays[n].zero;
        if (dim >= 2 && z.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != n && z.subset_of(rays[o].zero)) adjacent = false;
        if (!adjacent) continue;
        IntVec v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = val[p] * rays[n].v[j] - val[n] * rays[p].v[j];
        v = primitive(std::move(v));
        if (content(v) == 0) continue;
        z.set(k);
        next.push_back({std::move(v), z});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toridim
