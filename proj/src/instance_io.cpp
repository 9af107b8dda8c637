#include "toridim/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toridim/error.hpp"

namespace toridim {

namespace {

// A JSON value together with its path, for diagnostics.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void bad(const std::string& msg) const {
    fail(ErrorCode::invalid_input, (path_.empty() ? std::string("<root>") : path_) + ": " + msg);
  }

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) bad("expected an object");
    if (!j_.contains(key)) bad("missing field '" + key + "'");
    return Reader(j_.at(key), path_.empty() ? key : path_ + "." + key);
  }

  void only(std::initializer_list<const char*> keys) const {
    if (!j_.is_object()) bad("expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!allowed.count(it.key())) bad("unexpected field '" + it.key() + "'");
  }

  std::vector<Reader> items() const {
    if (!j_.is_array()) bad("expected an array");
    std::vector<Reader> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], path_ + "[" + std::to_string(i) + "]");
    return out;
  }

  Int integer() const {
    if (j_.is_number_integer()) return Int(std::to_string(j_.get<std::int64_t>()));
    if (j_.is_number_unsigned()) return Int(std::to_string(j_.get<std::uint64_t>()));
    if (j_.is_string()) {
      const auto& s = j_.get_ref<const std::string&>();
      Int v;
      if (!s.empty() && v.set_str(s, 10) == 0) return v;
    }
    bad("expected an integer");
  }

  long small(long lo) const {
    Int v = integer();
    if (!v.fits_slong_p() || v.get_si() < lo) bad("expected an integer of at least " + std::to_string(lo));
    return v.get_si();
  }

  Rat rational() const {
    if (j_.is_string()) {
      try {
        return parse_rational(j_.get<std::string>());
      } catch (const Error& e) {
        bad(e.detail());
      }
    }
    return Rat(integer());
  }

  IntVec int_tuple(std::size_t len) const {
    auto xs = items();
    if (xs.size() != len) bad("expected " + std::to_string(len) + " entries, found " + std::to_string(xs.size()));
    IntVec v;
    for (const auto& x : xs) v.push_back(x.integer());
    return v;
  }

  RatVec rat_tuple(std::size_t len) const {
    auto xs = items();
    if (xs.size() != len) bad("expected " + std::to_string(len) + " entries, found " + std::to_string(xs.size()));
    RatVec v;
    for (const auto& x : xs) v.push_back(x.rational());
    return v;
  }

  std::vector<IntVec> int_tuples(std::size_t len) const {
    std::vector<IntVec> out;
    for (const auto& x : items()) out.push_back(x.int_tuple(len));
    return out;
  }

  std::vector<long> positives() const {
    std::vector<long> out;
    for (const auto& x : items()) out.push_back(x.small(1));
    return out;
  }

  IndexSet indices(std::size_t bound) const {
    IndexSet out;
    for (const auto& x : items()) {
      long i = x.small(0);
      if (static_cast<std::size_t>(i) >= bound) x.bad("index out of range (" + std::to_string(bound) + " available)");
      out.push_back(static_cast<std::size_t>(i));
    }
    return out;
  }

 private:
  const json& j_;
  std::string path_;
};

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json ints_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json tuples_json(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(ints_json(v));
  return a;
}

json opt_set_json(const std::optional<IndexSet>& s) { return s ? json(*s) : json(nullptr); }

std::optional<IndexSet> opt_set_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<IndexSet>();
}

FanInstance read_fan(const Reader& r) {
  r.only({"rank", "rays", "max_cones", "systems"});
  FanInstance inst;
  inst.fan.rank = static_cast<std::size_t>(r.at("rank").small(1));
  inst.fan.rays = r.at("rays").int_tuples(inst.fan.rank);
  const std::size_t nrays = inst.fan.rays.size();
  for (const auto& c : r.at("max_cones").items()) inst.fan.max_cones.push_back(c.indices(nrays));
  if (r.has("systems"))
    for (const auto& eq : r.at("systems").items()) {
      eq.only({"divisor", "support"});
      inst.systems.push_back({eq.at("divisor").int_tuple(nrays), eq.at("support").int_tuples(nrays)});
    }
  return inst;
}

PolytopeInstance read_polytope(const Reader& r) {
  r.only({"rank", "vertices", "degrees", "supports"});
  PolytopeInstance inst;
  inst.rank = static_cast<std::size_t>(r.at("rank").small(1));
  for (const auto& v : r.at("vertices").items()) inst.vertices.push_back(v.rat_tuple(inst.rank));
  if (inst.vertices.empty()) r.at("vertices").bad("expected at least one vertex");
  if (r.has("degrees")) inst.degrees = r.at("degrees").positives();
  if (r.has("supports"))
    for (const auto& s : r.at("supports").items()) inst.supports.push_back(s.int_tuples(inst.rank));
  if (inst.degrees.size() != inst.supports.size())
    r.bad("degrees has " + std::to_string(inst.degrees.size()) + " entries but supports has " +
          std::to_string(inst.supports.size()));
  return inst;
}

WeightedInstance read_weighted(const Reader& r) {
  r.only({"weights", "degrees", "supports"});
  WeightedInstance inst;
  inst.weights = r.at("weights").positives();
  if (inst.weights.size() < 2) r.at("weights").bad("expected at least two weights");
  if (r.has("degrees")) inst.degrees = r.at("degrees").positives();
  if (r.has("supports")) {
    std::vector<std::vector<IntVec>> sups;
    const auto items = r.at("supports").items();
    if (items.size() != inst.degrees.size()) r.at("supports").bad("expected one support per degree");
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto tuples = items[i].int_tuples(inst.weights.size());
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        Int deg = 0;
        for (std::size_t v = 0; v < tuples[k].size(); ++v) {
          if (tuples[k][v] < 0) items[i].items()[k].bad("negative exponent");
          deg += tuples[k][v] * inst.weights[v];
        }
        if (deg != inst.degrees[i])
          items[i].items()[k].bad("weighted degree " + deg.get_str() + " differs from " +
                                  std::to_string(inst.degrees[i]));
      }
      sups.push_back(std::move(tuples));
    }
    inst.supports = std::move(sups);
  }
  return inst;
}

SetSystem read_hitting(const Reader& r) {
  r.only({"ground", "sets"});
  const auto ground = static_cast<std::size_t>(r.at("ground").small(1));
  std::vector<IndexSet> sets;
  for (const auto& s : r.at("sets").items()) {
    sets.push_back(s.indices(ground));
    if (sets.back().empty()) s.bad("empty set");
  }
  return make_set_system(ground, std::move(sets));
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    const auto pos = what.find("parse error at ");
    fail(ErrorCode::invalid_input, pos == std::string::npos ? what : what.substr(pos));
  }
  Reader r(j, "");
  if (!j.is_object()) r.bad("expected an object");
  if (r.has("rays")) return read_fan(r);
  if (r.has("vertices")) return read_polytope(r);
  if (r.has("weights")) return read_weighted(r);
  if (r.has("ground")) return read_hitting(r);
  r.bad("cannot tell the instance kind: expected a 'rays', 'vertices', 'weights' or 'ground' field");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_input, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.detail());
  }
}

std::string instance_kind(const Instance& inst) {
  static const char* names[] = {"fan", "polytope", "weighted", "hitting"};
  return names[inst.index()];
}

json instance_to_json(const Instance& inst) {
  json j;
  if (const auto* f = std::get_if<FanInstance>(&inst)) {
    j["rank"] = f->fan.rank;
    j["rays"] = tuples_json(f->fan.rays);
    j["max_cones"] = f->fan.max_cones;
    json sys = json::array();
    for (const auto& eq : f->systems) sys.push_back({{"divisor", ints_json(eq.divisor)}, {"support", tuples_json(eq.support)}});
    j["systems"] = sys;
  } else if (const auto* p = std::get_if<PolytopeInstance>(&inst)) {
    j["rank"] = p->rank;
    json vs = json::array();
    for (const auto& v : p->vertices) {
      json row = json::array();
      for (const auto& x : v) row.push_back(x.get_str());
      vs.push_back(row);
    }
    j["vertices"] = vs;
    j["degrees"] = p->degrees;
    json sups = json::array();
    for (const auto& s : p->supports) sups.push_back(tuples_json(s));
    j["supports"] = sups;
  } else if (const auto* w = std::get_if<WeightedInstance>(&inst)) {
    j["weights"] = w->weights;
    j["degrees"] = w->degrees;
    if (w->supports) {
      json sups = json::array();
      for (const auto& s : *w->supports) sups.push_back(tuples_json(s));
      j["supports"] = sups;
    }
  } else {
    const auto& h = std::get<SetSystem>(inst);
    j["ground"] = h.ground;
    j["sets"] = h.sets;
  }
  return j;
}

SparseSystem make_sparse_system(const FanInstance& inst) {
  auto report = fan_validate(inst.fan);
  if (!report.ok) fail(ErrorCode::invalid_input, "fan: " + report.message);
  SparseSystem sys;
  sys.variety = std::make_shared<ToricVariety>(inst.fan);
  for (std::size_t i = 0; i < inst.systems.size(); ++i) {
    try {
      sys.supports.push_back(make_support(*sys.variety, inst.systems[i].divisor, inst.systems[i].support));
    } catch (const Error& e) {
      fail(e.code(), "systems[" + std::to_string(i) + "]: " + e.detail());
    }
  }
  return sys;
}

Canonical canonicalize_vertices(const std::vector<RatVec>& points) {
  Canonical c;
  auto hull = dual_description(points);
  std::set<RatVec> verts(hull.vertices().begin(), hull.vertices().end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto first = std::find(points.begin(), points.end(), points[i]);
    if (first != points.begin() + static_cast<std::ptrdiff_t>(i)) {
      c.notes.push_back("vertices[" + std::to_string(i) + "] repeats vertices[" +
                        std::to_string(first - points.begin()) + "] and was dropped");
    } else if (!verts.count(points[i])) {
      c.notes.push_back("vertices[" + std::to_string(i) + "] is not a vertex of the hull and was dropped");
    } else {
      c.vertices.push_back(points[i]);
    }
  }
  return c;
}

PolytopalSystem make_polytopal_system(const PolytopeInstance& inst) {
  return make_polytopal_system(canonicalize_vertices(inst.vertices).vertices, inst.degrees, inst.supports);
}

PolytopalSystem make_polytopal_system(const WeightedInstance& inst) {
  std::vector<RatVec> verts;
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    RatVec v(inst.weights.size());
    v[i] = ratio(1, inst.weights[i]);
    verts.push_back(std::move(v));
  }
  if (inst.supports) return make_polytopal_system(std::move(verts), inst.degrees, *inst.supports);
  auto p = dual_description(verts);
  std::vector<std::vector<IntVec>> sups;
  for (std::size_t i = 0; i < inst.degrees.size(); ++i) {
    sups.push_back(full_support(p, inst.degrees[i]));
    if (sups.back().empty())
      fail(ErrorCode::invalid_input, "degrees[" + std::to_string(i) + "]: no monomial has weighted degree " +
                                         std::to_string(inst.degrees[i]));
  }
  return make_polytopal_system(std::move(verts), inst.degrees, std::move(sups));
}

json dim_to_json(const Dim& d) {
  if (d.is_empty()) return json{{"empty", true}};
  return json{{"empty", false}, {"value", d.value()}};
}

Dim dim_from_json(const json& j) {
  if (j.at("empty").get<bool>()) return Dim::empty();
  return Dim::of(j.at("value").get<int>());
}

void to_json(json& j, const OrbitRow& r) {
  j = json{{"cone", r.cone.rays},     {"cone_dim", r.cone.dim},          {"e", r.e},
           {"essential", r.essential}, {"witness", opt_set_json(r.witness)}, {"orbit_dim", dim_to_json(r.orbit_dim)}};
}

void from_json(const json& j, OrbitRow& r) {
  r.cone.rays = j.at("cone").get<IndexSet>();
  r.cone.dim = j.at("cone_dim").get<int>();
  r.e = j.at("e").get<IndexSet>();
  r.essential = j.at("essential").get<bool>();
  r.witness = opt_set_from(j.at("witness"));
  r.orbit_dim = dim_from_json(j.at("orbit_dim"));
}

void to_json(json& j, const DimensionReport& r) {
  j = json{{"dimension", dim_to_json(r.global)}, {"rows", r.rows}};
}

void from_json(const json& j, DimensionReport& r) {
  r.global = dim_from_json(j.at("dimension"));
  r.rows = j.at("rows").get<std::vector<OrbitRow>>();
}

void to_json(json& j, const FaceRow& r) {
  j = json{{"face", r.face},           {"dim", r.dim},
           {"e", r.e},                 {"essential", r.essential},
           {"witness", opt_set_json(r.witness)}, {"contribution", dim_to_json(r.contribution)}};
}

void from_json(const json& j, FaceRow& r) {
  r.face = j.at("face").get<IndexSet>();
  r.dim = j.at("dim").get<int>();
  r.e = j.at("e").get<IndexSet>();
  r.essential = j.at("essential").get<bool>();
  r.witness = opt_set_from(j.at("witness"));
  r.contribution = dim_from_json(j.at("contribution"));
}

void to_json(json& j, const PolytopalReport& r) {
  j = json{{"dimension", dim_to_json(r.dimension)}, {"rows", r.rows}};
}

void from_json(const json& j, PolytopalReport& r) {
  r.dimension = dim_from_json(j.at("dimension"));
  r.rows = j.at("rows").get<std::vector<FaceRow>>();
}

void to_json(json& j, const CiResult& r) {
  j = json{{"complete_intersection", r.complete_intersection},
           {"dimension", dim_to_json(r.dimension)},
           {"certified", r.certified},
           {"violating", r.violating ? json(*r.violating) : json(nullptr)}};
}

void from_json(const json& j, CiResult& r) {
  r.complete_intersection = j.at("complete_intersection").get<bool>();
  r.dimension = dim_from_json(j.at("dimension"));
  r.certified = j.at("certified").get<IndexSet>();
  const auto& v = j.at("violating");
  r.violating = v.is_null() ? std::nullopt : std::optional<std::size_t>(v.get<std::size_t>());
}

void to_json(json& j, const SubsystemsResult& r) {
  j = json{{"all_ci", r.all_ci}, {"violating", r.violating ? json(*r.violating) : json(nullptr)}};
}

void from_json(const json& j, SubsystemsResult& r) {
  r.all_ci = j.at("all_ci").get<bool>();
  const auto& v = j.at("violating");
  r.violating = v.is_null() ? std::nullopt : std::optional<std::size_t>(v.get<std::size_t>());
}

void to_json(json& j, const RegSeqResult& r) {
  j = json{{"regular", r.regular}, {"witness", opt_set_json(r.witness)}, {"dimension", dim_to_json(r.dimension)}};
}

void from_json(const json& j, RegSeqResult& r) {
  r.regular = j.at("regular").get<bool>();
  r.witness = opt_set_from(j.at("witness"));
  r.dimension = dim_from_json(j.at("dimension"));
}

void to_json(json& j, const SubsetResult& r) {
  j = json{{"regular", r.regular}, {"witness", opt_set_json(r.witness)}, {"polytopal_checked", r.polytopal_checked}};
}

void from_json(const json& j, SubsetResult& r) {
  r.regular = j.at("regular").get<bool>();
  r.witness = opt_set_from(j.at("witness"));
  r.polytopal_checked = j.at("polytopal_checked").get<bool>();
}

void to_json(json& j, const KnapsackReport& r) {
  j = json{{"positive_solution", r.positive_solution},
           {"support_empty", r.support_empty},
           {"hypersurface_dim", dim_to_json(r.hypersurface_dim)},
           {"sides_agree", r.sides_agree}};
}

void from_json(const json& j, KnapsackReport& r) {
  r.positive_solution = j.at("positive_solution").get<bool>();
  r.support_empty = j.at("support_empty").get<bool>();
  r.hypersurface_dim = dim_from_json(j.at("hypersurface_dim"));
  r.sides_agree = j.at("sides_agree").get<bool>();
}

namespace oracle {

void to_json(json& j, const ProbeResult& r) {
  j = json{{"proj_dim", dim_to_json(r.proj_dim)},
           {"affine_dims", r.affine_dims},
           {"successes", r.successes},
           {"failures", r.failures}};
}

void from_json(const json& j, ProbeResult& r) {
  r.proj_dim = dim_from_json(j.at("proj_dim"));
  r.affine_dims = j.at("affine_dims").get<std::vector<int>>();
  r.successes = j.at("successes").get<std::size_t>();
  r.failures = j.at("failures").get<std::size_t>();
}

}  // namespace oracle

}  // namespace toridim
