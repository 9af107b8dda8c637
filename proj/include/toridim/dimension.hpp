#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "toridim/sparse.hpp"
#include "toridim/toric.hpp"

namespace toridim {

struct SparseSystem {
  std::shared_ptr<const ToricVariety> variety;
  std::vector<Support> supports;

  std::size_t size() const { return supports.size(); }
  std::size_t rank() const { return variety->rank(); }
  SparseSystem subsystem(const IndexSet& indices) const;
};

struct OrbitRow {
  Cone cone;
  IndexSet e;  // indices i with a nonempty restriction to the orbit
  bool essential = true;
  std::optional<IndexSet> witness;
  Dim orbit_dim = Dim::empty();
  friend bool operator==(const OrbitRow&, const OrbitRow&) = default;
};

struct DimensionReport {
  std::vector<OrbitRow> rows;
  Dim global = Dim::empty();
  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// One row per cone, in cone order.
std::vector<OrbitRow> orbit_table(const SparseSystem& sys);
std::vector<OrbitRow> orbit_table_serial(const SparseSystem& sys);

Dim generic_dimension(const std::vector<OrbitRow>& rows);
Dim generic_dimension(const SparseSystem& sys);
DimensionReport dimension_report(const SparseSystem& sys);

struct CiResult {
  bool complete_intersection = false;
  Dim dimension = Dim::empty();
  IndexSet certified;  // cones with essential E_sigma
  std::optional<std::size_t> violating;  // index of the first failing cone
  friend bool operator==(const CiResult&, const CiResult&) = default;
};

/// Throws NOT_Q_CARTIER naming the first degree that is not effective and Q-Cartier.
CiResult is_complete_intersection(const SparseSystem& sys);

struct SubsystemsResult {
  bool all_ci = false;
  std::optional<std::size_t> violating;  // index into the cone list
  friend bool operator==(const SubsystemsResult&, const SubsystemsResult&) = default;
};

SubsystemsResult all_subsystems_ci(const SparseSystem& sys);

}  // namespace toridim
