#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "toridim/exactlin.hpp"
#include "toridim/polyhedra.hpp"

namespace toridim {

// A dimension or EMPTY. EMPTY sorts below every integer.
class Dim {
 public:
  static Dim empty() { return Dim(); }
  static Dim of(int d) { return Dim(d); }

  bool is_empty() const { return !value_.has_value(); }
  int value() const;

  friend bool operator==(const Dim&, const Dim&) = default;
  friend std::strong_ordering operator<=>(const Dim& a, const Dim& b) {
    if (a.is_empty() || b.is_empty()) return !a.is_empty() <=> !b.is_empty();
    return *a.value_ <=> *b.value_;
  }

 private:
  Dim() = default;
  explicit Dim(int d) : value_(d) {}
  std::optional<int> value_;
};

std::string to_string(const Dim& d);

using PointSet = std::vector<IntVec>;

struct PointFamily {
  std::vector<PointSet> sets;
  std::vector<std::size_t> labels;  // original system index of each set
};

PointFamily make_family(std::vector<PointSet> sets);

/// Dimension of the affine span of the Minkowski sum of the sets at positions E.
std::size_t affine_span_dim(const PointFamily& fam, const IndexSet& positions);

struct EssentialResult {
  bool essential = true;
  std::optional<IndexSet> witness;  // labels of a smallest violating subfamily
};

/// Smallest violating subfamily first, lexicographically least among those.
/// With `extremal_only` each set is first replaced by its convex-hull vertices.
EssentialResult is_essential(const PointFamily& fam, bool extremal_only = false);
EssentialResult is_essential_serial(const PointFamily& fam);

Dim generic_torus_dim(const PointFamily& fam, std::size_t rank);

}  // namespace toridim
