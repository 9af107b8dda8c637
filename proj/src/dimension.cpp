#include "toridim/dimension.hpp"

#include <algorithm>
#include <exception>

#include "toridim/error.hpp"

namespace toridim {

SparseSystem SparseSystem::subsystem(const IndexSet& indices) const {
  SparseSystem s{variety, {}};
  for (auto i : indices) {
    require(i < supports.size(), "subsystem index out of range");
    s.supports.push_back(supports[i]);
  }
  return s;
}

namespace {

OrbitRow make_row(const SparseSystem& sys, const Cone& cone) {
  const auto& x = *sys.variety;
  OrbitRow row;
  row.cone = cone;
  std::vector<PointSet> sets;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto pts = restrict_support(x, sys.supports[i], cone);
    if (pts.empty()) continue;
    row.e.push_back(i);
    sets.push_back(std::move(pts));
  }
  PointFamily fam{std::move(sets), row.e};
  auto ess = is_essential(fam);
  row.essential = ess.essential;
  row.witness = ess.witness;
  if (row.essential)
    row.orbit_dim = Dim::of(static_cast<int>(x.rank()) - cone.dim - static_cast<int>(row.e.size()));
  return row;
}

void check_degrees(const SparseSystem& sys) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto pos = class_positivity(*sys.variety, sys.supports[i].cls);
    if (!pos.effective || !pos.q_cartier)
      fail(ErrorCode::not_q_cartier, "degree " + std::to_string(i) + " is not an effective Q-Cartier class");
  }
}

}  // namespace

std::vector<OrbitRow> orbit_table_serial(const SparseSystem& sys) {
  std::vector<OrbitRow> rows;
  for (const auto& c : sys.variety->cones()) rows.push_back(make_row(sys, c));
  return rows;
}

std::vector<OrbitRow> orbit_table(const SparseSystem& sys) {
  const auto& cones = sys.variety->cones();
  std::vector<OrbitRow> rows(cones.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(cones.size()); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = make_row(sys, cones[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return rows;
}

Dim generic_dimension(const std::vector<OrbitRow>& rows) {
  Dim best = Dim::empty();
  for (const auto& r : rows) best = std::max(best, r.orbit_dim);
  return best;
}

Dim generic_dimension(const SparseSystem& sys) { return generic_dimension(orbit_table(sys)); }

DimensionReport dimension_report(const SparseSystem& sys) {
  DimensionReport rep;
  rep.rows = orbit_table(sys);
  rep.global = generic_dimension(rep.rows);
  return rep;
}

CiResult is_complete_intersection(const SparseSystem& sys) {
  const std::size_t r = sys.size();
  require(r <= sys.rank(), "complete intersection needs at most as many equations as the dimension");
  check_degrees(sys);
  auto rows = orbit_table(sys);
  CiResult res;
  res.dimension = generic_dimension(rows);
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.essential) continue;
    res.certified.push_back(i);
    if (static_cast<std::size_t>(row.cone.dim) + row.e.size() < r && ok) {
      ok = false;
      res.violating = i;
    }
  }
  res.complete_intersection = ok && !res.certified.empty();
  return res;
}

SubsystemsResult all_subsystems_ci(const SparseSystem& sys) {
  const std::size_t r = sys.size();
  require(r <= sys.rank(), "subsystem criterion needs at most as many equations as the dimension");
  check_degrees(sys);
  auto rows = orbit_table(sys);
  require(!generic_dimension(rows).is_empty(), "subsystem criterion needs a nonempty generic zero set");
  SubsystemsResult res;
  res.all_ci = true;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (r > rows[i].e.size() + static_cast<std::size_t>(rows[i].cone.dim)) {
      res.all_ci = false;
      res.violating = i;
      break;
    }
  return res;
}

}  // namespace toridim
