#include "doctest.h"

#include <filesystem>
#include <random>

#include "toridim/error.hpp"
#include "toridim/fixtures.hpp"
#include "toridim/instance_io.hpp"

using namespace toridim;
namespace fx = toridim::fixtures;

namespace {

std::string fixture(const std::string& name) { return std::string(TORIDIM_FIXTURES_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_input);
    return e.detail();
  }
  return "";
}

template <class T>
void check_round_trip(const T& x) {
  json j = x;
  json reparsed = json::parse(j.dump());
  CHECK(reparsed == j);
  CHECK(reparsed.get<T>() == x);
}

}  // namespace

TEST_CASE("every fixture parses and survives a round trip") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(TORIDIM_FIXTURES_DIR)) {
    auto inst = load_instance(entry.path().string());
    auto again = parse_instance(instance_to_json(inst).dump(2));
    CHECK_MESSAGE(inst == again, entry.path().string());
    ++count;
  }
  CHECK(count >= 15);
}

TEST_CASE("fixture files describe the built-in examples") {
  auto inst = std::get<FanInstance>(load_instance(fixture("p1xp2_full.json")));
  CHECK(inst.fan == fx::p1_times_p2());
  auto sys = make_sparse_system(inst);
  auto builtin = fx::p1xp2_system();
  for (std::size_t i = 0; i < sys.size(); ++i) CHECK(sys.supports[i].monomials == builtin.supports[i].monomials);
  CHECK(generic_dimension(sys) == Dim::of(0));
  CHECK(generic_dimension(make_sparse_system(std::get<FanInstance>(load_instance(fixture("p1xp2_sub23.json"))))) ==
        Dim::of(2));

  for (int g : {2, 3, 4}) {
    auto p2 = make_sparse_system(
        std::get<FanInstance>(load_instance(fixture("hyperelliptic_g" + std::to_string(g) + "_p2.json"))));
    CHECK(p2.supports[0].monomials == fx::hyperelliptic_projective(g).supports[0].monomials);
    auto wt = make_sparse_system(
        std::get<FanInstance>(load_instance(fixture("hyperelliptic_g" + std::to_string(g) + "_weighted.json"))));
    CHECK(wt.variety->fan() == fx::weighted_plane_hyperelliptic(g));
    CHECK(wt.supports[0].monomials == fx::hyperelliptic_weighted(g).supports[0].monomials);
  }

  auto h = std::get<FanInstance>(load_instance(fixture("hirzebruch2.json")));
  CHECK(h.fan == fx::hirzebruch2());
  CHECK(h.systems[0].divisor == fx::hirzebruch_degree());
  auto hs = h.systems[0].support;
  auto expected = fx::hirzebruch_support();
  std::sort(hs.begin(), hs.end());
  std::sort(expected.begin(), expected.end());
  CHECK(hs == expected);

  CHECK(std::get<FanInstance>(load_instance(fixture("p123.fan"))).fan == fx::weighted_plane_123());
  CHECK(std::get<FanInstance>(load_instance(fixture("four_ray_fan.json"))).fan == fx::four_ray_fan());
}

TEST_CASE("diagnostics name the offending field") {
  CHECK(error_of(R"({"rank": 2, "rays": [[1, 0], [0, "x"]], "max_cones": []})") == "rays[1][1]: expected an integer");
  CHECK(error_of(R"({"rank": 2, "rays": [[1, 0], [0, 1, 2]], "max_cones": []})") ==
        "rays[1]: expected 2 entries, found 3");
  CHECK(error_of(R"({"rank": 2, "rays": [[1, 0]], "max_cones": [[0, 3]]})") ==
        "max_cones[0][1]: index out of range (1 available)");
  CHECK(error_of(R"({"rank": 2, "rays": [[1, 0]], "max_cones": [], "extra": 1})") == "<root>: unexpected field 'extra'");
  CHECK(error_of(R"({"rank": 2, "rays": [[1, 0]], "max_cones": [], "systems": [{"divisor": [1]}]})") ==
        "systems[0]: missing field 'support'");
  CHECK(error_of(R"({"rank": 1, "vertices": [["1/0"]]})") == "vertices[0][0]: zero denominator in '1/0'");
  CHECK(error_of(R"({"rank": 1, "vertices": [["1"]], "degrees": [1]})") ==
        "<root>: degrees has 1 entries but supports has 0");
  CHECK(error_of(R"({"weights": [1, 2], "degrees": [2], "supports": [[[2, 0], [1, 1]]]})") ==
        "supports[0][1]: weighted degree 3 differs from 2");
  CHECK(error_of(R"({"weights": [1, 0]})") == "weights[1]: expected an integer of at least 1");
  CHECK(error_of(R"({"ground": 3, "sets": [[0], []]})") == "sets[1]: empty set");
  CHECK(error_of(R"({"colour": 1})").find("cannot tell the instance kind") != std::string::npos);
  CHECK(error_of(R"([1, 2])") == "<root>: expected an object");
  auto syntax = error_of("{\"rank\": 2,\n  \"rays\": [1, }");
  CHECK(syntax.find("line 2") != std::string::npos);
}

TEST_CASE("numbers load exactly") {
  auto inst = std::get<PolytopeInstance>(
      parse_instance(R"({"rank": 2, "vertices": [["6/4", "-2/-4"], [3, "123456789012345678901234567890"]]})"));
  CHECK(inst.vertices[0] == RatVec{ratio(3, 2), ratio(1, 2)});
  CHECK(inst.vertices[1][1] == Rat(Int("123456789012345678901234567890")));
  auto again = std::get<PolytopeInstance>(parse_instance(instance_to_json(inst).dump()));
  CHECK(again == inst);
}

TEST_CASE("canonicalization drops repeated and interior points") {
  auto c = canonicalize_vertices({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(0)}, {ratio(1, 3), ratio(1, 3)},
                                  {Rat(0), Rat(1)}});
  CHECK(c.vertices == std::vector<RatVec>{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(c.notes.size() == 2);
}

TEST_CASE("reports round-trip through JSON") {
  check_round_trip(dimension_report(fx::p1xp2_system()));
  check_round_trip(dimension_report(fx::hyperelliptic_weighted(3)));
  check_round_trip(is_complete_intersection(fx::p1xp2_system()));
  check_round_trip(all_subsystems_ci(fx::p1xp2_system()));
  check_round_trip(knapsack_demo({2, 2}, 3));
  check_round_trip(knapsack_demo({1, 2, 3}, 6));
  check_round_trip(weighted_regseq({1, 2, 3}, {1, 1}));

  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> w(1, 4), d(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> weights(3), degrees(static_cast<std::size_t>(trial % 3));
    for (auto& x : weights) x = w(rng);
    for (auto& x : degrees) x = d(rng);
    WeightedInstance inst{weights, degrees, std::nullopt};
    check_round_trip(weighted_regseq(weights, degrees));
    try {
      auto sys = make_polytopal_system(inst);
      check_round_trip(polytopal_dimension(sys));
      check_round_trip(is_regular_sequence(sys));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_input);  // some degree has no monomial
    }
  }
  oracle::ProbeResult probe;
  probe.proj_dim = Dim::of(1);
  probe.affine_dims = {2, -1, 2};
  probe.successes = 2;
  probe.failures = 1;
  check_round_trip(probe);
  check_round_trip(oracle::ProbeResult{});
}
