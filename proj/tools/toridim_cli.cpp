#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "toridim/error.hpp"
#include "toridim/instance_io.hpp"

using namespace toridim;

namespace {

enum Exit { exit_true = 0, exit_false = 1, exit_invalid = 2, exit_disagree = 3 };

struct Options {
  std::string path;
  std::string route = "polytope";
  bool json_out = false;
  bool orbit_table = false;
  bool witness = false;
  bool reduce = false;
  std::vector<long> weights;
  std::vector<long> degrees;
  std::vector<std::uint64_t> oracle;  // trials, seed
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  long target = 0;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string set_str(const std::optional<IndexSet>& s) { return s ? to_string(*s) : "-"; }

void print_orbit_table(const DimensionReport& rep) {
  std::cout << "cone\tdim\tE\tessential\twitness\torbit_dim\n";
  for (const auto& r : rep.rows)
    std::cout << to_string(r.cone.rays) << "\t" << r.cone.dim << "\t" << to_string(r.e) << "\t"
              << (r.essential ? "yes" : "no") << "\t" << set_str(r.witness) << "\t" << to_string(r.orbit_dim) << "\n";
}

void print_face_table(const PolytopalReport& rep) {
  std::cout << "face\tdim\tE\tessential\twitness\tcontribution\n";
  for (const auto& r : rep.rows)
    std::cout << to_string(r.face) << "\t" << r.dim << "\t" << to_string(r.e) << "\t" << (r.essential ? "yes" : "no")
              << "\t" << set_str(r.witness) << "\t" << to_string(r.contribution) << "\n";
}

WeightedInstance weighted_input(const Options& o) {
  if (!o.path.empty()) {
    auto inst = load_instance(o.path);
    if (auto* w = std::get_if<WeightedInstance>(&inst)) return *w;
    fail(ErrorCode::invalid_input, o.path + ": expected a weighted instance, found a " + instance_kind(inst) + " instance");
  }
  if (o.weights.empty()) fail(ErrorCode::invalid_input, "give an instance file or --weights and --degrees");
  for (auto a : o.weights) require(a >= 1, "weights must be positive");
  for (auto d : o.degrees) require(d >= 1, "degrees must be positive");
  return WeightedInstance{o.weights, o.degrees, std::nullopt};
}

void check_count(std::size_t r, std::size_t n) {
  if (r > n)
    fail(ErrorCode::invalid_input, "a regular sequence test needs r <= n, but there are " + std::to_string(r) +
                                       " equations in dimension " + std::to_string(n));
}

int cmd_validate(const Options& o) {
  auto inst = load_instance(o.path);
  json out{{"kind", instance_kind(inst)}, {"ok", true}, {"notes", json::array()}};
  if (auto* f = std::get_if<FanInstance>(&inst)) {
    auto sys = make_sparse_system(*f);
    out["rays"] = sys.variety->nrays();
    out["cones"] = sys.variety->cones().size();
    out["equations"] = sys.size();
  } else if (auto* p = std::get_if<PolytopeInstance>(&inst)) {
    auto c = canonicalize_vertices(p->vertices);
    for (const auto& n : c.notes) out["notes"].push_back(n);
    auto sys = make_polytopal_system(*p);
    out["dim"] = sys.polytope.dim();
    out["vertices"] = c.vertices.size();
    out["equations"] = sys.size();
  } else if (auto* w = std::get_if<WeightedInstance>(&inst)) {
    out["equations"] = w->degrees.size();
    if (w->supports) make_polytopal_system(*w);
  } else {
    out["sets"] = std::get<SetSystem>(inst).sets.size();
  }
  if (o.json_out) {
    emit(out);
  } else {
    std::cout << "PASS " << out["kind"].get<std::string>() << "\n";
    for (const auto& n : out["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
  }
  return exit_true;
}

int cmd_dim(const Options& o) {
  auto inst = load_instance(o.path);
  if (o.route != "fan" && o.route != "polytope") fail(ErrorCode::invalid_input, "--route must be fan or polytope");
  std::optional<SparseSystem> fan_sys;
  std::optional<PolytopalSystem> poly_sys;
  if (auto* f = std::get_if<FanInstance>(&inst)) {
    fan_sys = make_sparse_system(*f);
  } else if (auto* p = std::get_if<PolytopeInstance>(&inst)) {
    poly_sys = make_polytopal_system(*p);
  } else if (auto* w = std::get_if<WeightedInstance>(&inst)) {
    poly_sys = make_polytopal_system(*w);
  } else {
    fail(ErrorCode::invalid_input, "dim needs a fan, polytope or weighted instance");
  }
  if (poly_sys && o.route == "fan") {
    fan_sys = fan_route_system(*poly_sys);
    poly_sys.reset();
  }
  if (fan_sys) {
    auto rep = dimension_report(*fan_sys);
    if (o.json_out) {
      json j = rep;
      j["route"] = "fan";
      emit(j);
    } else {
      if (o.orbit_table) print_orbit_table(rep);
      std::cout << "dimension " << to_string(rep.global) << "\n";
    }
  } else {
    auto rep = polytopal_dimension(*poly_sys);
    if (o.json_out) {
      json j = rep;
      j["route"] = "polytope";
      emit(j);
    } else {
      if (o.orbit_table) print_face_table(rep);
      std::cout << "dimension " << to_string(rep.dimension) << "\n";
    }
  }
  return exit_true;
}

SparseSystem fan_input(const Options& o) {
  auto inst = load_instance(o.path);
  if (auto* f = std::get_if<FanInstance>(&inst)) return make_sparse_system(*f);
  if (auto* p = std::get_if<PolytopeInstance>(&inst)) return fan_route_system(make_polytopal_system(*p));
  if (auto* w = std::get_if<WeightedInstance>(&inst)) return fan_route_system(make_polytopal_system(*w));
  fail(ErrorCode::invalid_input, "expected a fan, polytope or weighted instance");
}

int cmd_ci(const Options& o) {
  auto sys = fan_input(o);
  auto res = is_complete_intersection(sys);
  if (o.json_out) {
    emit(json(res));
  } else {
    std::cout << (res.complete_intersection ? "COMPLETE_INTERSECTION" : "NOT_COMPLETE_INTERSECTION") << "\n";
    std::cout << "dimension " << to_string(res.dimension) << "\n";
    if (res.violating)
      std::cout << "violating cone " << to_string(sys.variety->cones()[*res.violating].rays) << "\n";
  }
  return res.complete_intersection ? exit_true : exit_false;
}

int cmd_subsystems(const Options& o) {
  auto sys = fan_input(o);
  auto res = all_subsystems_ci(sys);
  if (o.json_out) {
    json j = res;
    j["violating_cone"] = res.violating ? json(sys.variety->cones()[*res.violating].rays) : json(nullptr);
    emit(j);
  } else {
    std::cout << (res.all_ci ? "ALL_SUBSYSTEMS_CI" : "NOT_ALL_SUBSYSTEMS_CI") << "\n";
    if (res.violating) std::cout << "violating cone " << to_string(sys.variety->cones()[*res.violating].rays) << "\n";
  }
  return res.all_ci ? exit_true : exit_false;
}

// Runs the oracle on a weighted instance against its polytopal dimension.
json oracle_check(const WeightedInstance& w, std::size_t trials, std::uint64_t seed, bool& agree) {
  auto sys = make_polytopal_system(w);
  const Dim predicted = polytopal_dimension(sys).dimension;
  auto probe = oracle::random_proj_dimension(oracle::Ring{w.weights}, sys.supports, trials, seed);
  agree = probe.proj_dim == predicted;
  return json{{"trials", trials},
              {"seed", seed},
              {"predicted", dim_to_json(predicted)},
              {"probe", probe},
              {"agree", agree}};
}

void print_oracle(const json& j) {
  std::cout << "oracle " << (j["agree"].get<bool>() ? "AGREE" : "DISAGREE") << ": predicted "
            << to_string(dim_from_json(j["predicted"])) << ", probe "
            << to_string(dim_from_json(j["probe"]["proj_dim"])) << " (" << j["probe"]["successes"].get<std::size_t>()
            << " of " << j["trials"].get<std::size_t>() << " trials finished)\n";
}

int weighted_verdict(const Options& o, WeightedInstance w, bool allow_reduce) {
  json out;
  if (allow_reduce && o.reduce) {
    auto red = reduce_weights(w.weights, w.degrees);
    out["reduction"] = {{"divisor", red.divisor}, {"weights", red.weights}, {"degrees", red.degrees},
                        {"degrees_divisible", red.degrees_divisible}};
    if (!red.degrees_divisible)
      fail(ErrorCode::invalid_input, "a degree is not divisible by the common weight divisor " +
                                         std::to_string(red.divisor) + ", so that form is zero");
    w.weights = red.weights;
    w.degrees = red.degrees;
  }
  check_count(w.degrees.size(), w.weights.size() - 1);
  bool regular = false;
  if (w.supports) {
    auto res = is_regular_sequence(make_polytopal_system(w));
    out["result"] = res;
    regular = res.regular;
    if (!o.json_out) {
      std::cout << (res.regular ? "REGULAR" : "NOT_REGULAR") << "\n";
      if (o.witness && res.witness) std::cout << "witness face " << to_string(*res.witness) << "\n";
    }
  } else {
    auto res = weighted_regseq(w.weights, w.degrees);
    out["result"] = res;
    regular = res.regular;
    if (!o.json_out) {
      std::cout << (res.regular ? "REGULAR" : "NOT_REGULAR") << "\n";
      if (o.witness && res.witness) std::cout << "J = " << to_string(*res.witness) << "\n";
    }
  }
  bool agree = true;
  if (o.oracle.size() == 2) {
    out["oracle"] = oracle_check(w, o.oracle[0], o.oracle[1], agree);
    if (!o.json_out) print_oracle(out["oracle"]);
  }
  if (o.json_out) emit(out);
  if (!agree) return exit_disagree;
  return regular ? exit_true : exit_false;
}

int cmd_regseq(const Options& o) {
  if (o.path.empty()) return weighted_verdict(o, weighted_input(o), false);
  auto inst = load_instance(o.path);
  if (auto* w = std::get_if<WeightedInstance>(&inst)) return weighted_verdict(o, *w, false);
  auto* p = std::get_if<PolytopeInstance>(&inst);
  if (!p) fail(ErrorCode::invalid_input, "regseq needs a polytope or weighted instance");
  if (o.oracle.size() == 2) fail(ErrorCode::invalid_input, "--oracle needs a weighted instance");
  auto sys = make_polytopal_system(*p);
  check_count(sys.size(), sys.rank());
  auto res = is_regular_sequence(sys);
  if (o.json_out) {
    emit(json{{"result", res}});
  } else {
    std::cout << (res.regular ? "REGULAR" : "NOT_REGULAR") << "\n";
    if (o.witness && res.witness) std::cout << "witness face " << to_string(*res.witness) << "\n";
  }
  return res.regular ? exit_true : exit_false;
}

int cmd_weighted(const Options& o) { return weighted_verdict(o, weighted_input(o), true); }

int cmd_hitting(const Options& o) {
  auto inst = load_instance(o.path);
  auto* s = std::get_if<SetSystem>(&inst);
  if (!s) fail(ErrorCode::invalid_input, "hardness needs a hitting-set instance");
  const auto hit = min_hitting_set(*s);
  const auto sup = hitting_supports(*s);
  const auto codim = hitting_codimension(*s, sup);
  const bool agree = hit == codim;
  if (o.json_out) {
    json sups = json::array();
    for (const auto& a : sup) {
      json row = json::array();
      for (const auto& x : a) row.push_back(x.get_si());
      sups.push_back(row);
    }
    emit(json{{"min_hitting_set", hit}, {"supports", sups}, {"codimension", codim}, {"agree", agree}});
  } else {
    std::cout << "min hitting set " << hit << "\ncodimension " << codim << "\n" << (agree ? "AGREE" : "DISAGREE")
              << "\n";
  }
  return agree ? exit_true : exit_disagree;
}

int cmd_knapsack(const Options& o) {
  auto rep = knapsack_demo(o.weights, o.target);
  if (o.json_out) {
    emit(json(rep));
  } else {
    std::cout << "positive solution " << (rep.positive_solution ? "true" : "false") << "\n";
    std::cout << "support " << (rep.support_empty ? "empty" : "nonempty") << "\n";
    std::cout << "hypersurface dimension " << to_string(rep.hypersurface_dim) << "\n";
  }
  return rep.positive_solution ? exit_true : exit_false;
}

int cmd_oracle(const Options& o) {
  auto w = weighted_input(o);
  check_count(w.degrees.size(), w.weights.size() - 1);
  bool agree = false;
  auto j = oracle_check(w, o.trials, o.seed, agree);
  if (o.json_out) {
    emit(j);
  } else {
    print_oracle(j);
    std::cout << "affine dimensions";
    for (int d : j["probe"]["affine_dims"]) std::cout << " " << d;
    std::cout << "\n";
  }
  return agree ? exit_true : exit_disagree;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("TORIDIM_THREADS")) {
    const int n = std::atoi(t);
    if (n >= 1) omp_set_num_threads(n);
  }

  CLI::App app{"Generic dimension of sparse polynomial systems on toric varieties"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "Structured output"); };
  auto add_weighted = [&](CLI::App* c) {
    c->add_option("path", o.path, "Instance file");
    c->add_option("--weights", o.weights, "Weights a_0..a_n")->delimiter(',');
    c->add_option("--degrees", o.degrees, "Degrees d_1..d_r")->delimiter(',');
    c->add_flag("--witness", o.witness, "Print the violating face or index set");
    c->add_option("--oracle", o.oracle, "Cross-check with TRIALS random instances from SEED")->expected(2);
    add_json(c);
  };

  auto* validate = app.add_subcommand("validate", "Parse and check an instance");
  validate->add_option("path", o.path)->required();
  add_json(validate);

  auto* dim = app.add_subcommand("dim", "Generic dimension");
  dim->add_option("path", o.path)->required();
  dim->add_option("--route", o.route, "fan or polytope")->check(CLI::IsMember({"fan", "polytope"}));
  dim->add_flag("--orbit-table", o.orbit_table, "Print one row per cone or face");
  add_json(dim);

  auto* ci = app.add_subcommand("ci", "Complete intersection test");
  ci->add_option("path", o.path)->required();
  add_json(ci);

  auto* subs = app.add_subcommand("subsystems", "Complete intersection test for every subsystem");
  subs->add_option("path", o.path)->required();
  add_json(subs);

  auto* regseq = app.add_subcommand("regseq", "Regular sequence test");
  add_weighted(regseq);

  auto* weighted = app.add_subcommand("weighted", "Weighted projective regular sequence test");
  add_weighted(weighted);
  weighted->add_flag("--reduce-weights", o.reduce, "Divide weights and degrees by the common weight divisor");

  auto* hardness = app.add_subcommand("hardness", "Hitting-set and knapsack reductions");
  hardness->add_option("path", o.path, "Hitting-set instance");
  add_json(hardness);
  auto* knapsack = hardness->add_subcommand("knapsack", "Positive solutions of a knapsack equation");
  knapsack->add_option("--weights", o.weights)->delimiter(',')->required();
  knapsack->add_option("--target", o.target)->required();
  add_json(knapsack);

  auto* orc = app.add_subcommand("oracle", "Groebner probe of a weighted instance");
  orc->add_option("path", o.path, "Instance file");
  orc->add_option("--weights", o.weights)->delimiter(',');
  orc->add_option("--degrees", o.degrees)->delimiter(',');
  orc->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  orc->add_option("--seed", o.seed);
  add_json(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_true : exit_invalid;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*dim) return cmd_dim(o);
    if (*ci) return cmd_ci(o);
    if (*subs) return cmd_subsystems(o);
    if (*regseq) return cmd_regseq(o);
    if (*weighted) return cmd_weighted(o);
    if (*knapsack) return cmd_knapsack(o);
    if (*hardness) {
      if (o.path.empty()) throw Error(ErrorCode::invalid_input, "hardness needs an instance file or knapsack");
      return cmd_hitting(o);
    }
    if (*orc) return cmd_oracle(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::invariant_violation ? exit_disagree : exit_invalid;
  }
  return exit_invalid;
}
