#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "toridim/dimension.hpp"
#include "toridim/hardness.hpp"
#include "toridim/oracle.hpp"
#include "toridim/polytopal.hpp"

// JSON instance files and report serialization.
namespace toridim {

using json = nlohmann::ordered_json;

struct FanEquation {
  TDivisor divisor;
  std::vector<IntVec> support;
  friend bool operator==(const FanEquation&, const FanEquation&) = default;
};

struct FanInstance {
  Fan fan;
  std::vector<FanEquation> systems;
  friend bool operator==(const FanInstance&, const FanInstance&) = default;
};

struct PolytopeInstance {
  std::size_t rank = 0;
  std::vector<RatVec> vertices;
  std::vector<long> degrees;
  std::vector<std::vector<IntVec>> supports;
  friend bool operator==(const PolytopeInstance&, const PolytopeInstance&) = default;
};

// Supports default to all monomials of each degree.
struct WeightedInstance {
  std::vector<long> weights;
  std::vector<long> degrees;
  std::optional<std::vector<std::vector<IntVec>>> supports;
  friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;
};

using Instance = std::variant<FanInstance, PolytopeInstance, WeightedInstance, SetSystem>;

/// Throws INVALID_INPUT; messages start with the JSON path of the offending
/// field, or with line and column for syntax errors.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);
json instance_to_json(const Instance& inst);
std::string instance_kind(const Instance& inst);

/// Sparse system over the fan of a fan instance.
SparseSystem make_sparse_system(const FanInstance& inst);

// Hull vertices in first-occurrence order, plus notes on every dropped point.
struct Canonical {
  std::vector<RatVec> vertices;
  std::vector<std::string> notes;
};
Canonical canonicalize_vertices(const std::vector<RatVec>& points);

PolytopalSystem make_polytopal_system(const PolytopeInstance& inst);
PolytopalSystem make_polytopal_system(const WeightedInstance& inst);

json dim_to_json(const Dim& d);
Dim dim_from_json(const json& j);

void to_json(json& j, const OrbitRow& r);
void from_json(const json& j, OrbitRow& r);
void to_json(json& j, const DimensionReport& r);
void from_json(const json& j, DimensionReport& r);
void to_json(json& j, const FaceRow& r);
void from_json(const json& j, FaceRow& r);
void to_json(json& j, const PolytopalReport& r);
void from_json(const json& j, PolytopalReport& r);
void to_json(json& j, const CiResult& r);
void from_json(const json& j, CiResult& r);
void to_json(json& j, const SubsystemsResult& r);
void from_json(const json& j, SubsystemsResult& r);
void to_json(json& j, const RegSeqResult& r);
void from_json(const json& j, RegSeqResult& r);
void to_json(json& j, const SubsetResult& r);
void from_json(const json& j, SubsetResult& r);
void to_json(json& j, const KnapsackReport& r);
void from_json(const json& j, KnapsackReport& r);

namespace oracle {
void to_json(json& j, const ProbeResult& r);
void from_json(const json& j, ProbeResult& r);
}  // namespace oracle

}  // namespace toridim
