#include <doctest.h>

#include "quadsyn/error.hpp"
#include "quadsyn/fixtures.hpp"
#include "quadsyn/json_io.hpp"
#include "quadsyn/oracle.hpp"

using namespace quadsyn;

TEST_CASE("every fixture kind reaches its branch and agrees with the oracle") {
  for (const auto& kind : fixture_kinds()) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      CAPTURE(kind);
      CAPTURE(seed);
      const Config c = make_fixture(kind, seed);
      REQUIRE(c.size() == 10);
      const Decision d = decide(c, {.record_trace = true, .parallel = false});
      CHECK(d.on_quadric == oracle_decide(c));
      CHECK_FALSE(d.flagged);
      if (kind.starts_with("qd-branch:")) {
        CHECK(std::string(to_string(d.branch)) == kind.substr(10));
      } else if (kind.starts_with("case:")) {
        CHECK(std::find(d.route.begin(), d.route.end(), kind.substr(5)) != d.route.end());
      } else {
        CHECK(d.branch == Branch::Generic);
      }
      if (d.on_quadric && !std::holds_alternative<std::monostate>(d.certificate)) {
        CHECK(certificate_vanishes(d.certificate, c));
      }
      if (d.trace) CHECK(replay(*d.trace).ok);
    }
  }
  CHECK_THROWS_AS(make_fixture("qd-branch:unresolved", 0), GeometryError);
  CHECK_THROWS_AS(make_fixture("nonsense", 0), GeometryError);
}

TEST_CASE("fixtures are deterministic") {
  for (const auto& kind : fixture_kinds()) CHECK(make_fixture(kind, 4) == make_fixture(kind, 4));
}

TEST_CASE("labeling helpers") {
  const Labeling id = identity_labeling();
  CHECK(is_permutation(id));
  Labeling l = id;
  std::swap(l[0], l[9]);
  CHECK(compose(l, l) == id);
  Labeling bad = id;
  bad[1] = 0;
  CHECK_FALSE(is_permutation(bad));
  const auto pts = sample_generic(1, 10);
  const auto out = apply_labeling(pts, l);
  CHECK(out[0] == pts[9]);
}

TEST_CASE("mutations and fuzz items agree with the oracle") {
  const auto base = sample_on_quadric(2, 10, true, {40, 12});
  for (auto m : {Mutation::Duplicate, Mutation::CollinearCollapse, Mutation::CoplanarCollapse}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto c = mutate(base, m, s);
      CHECK(decide(c).on_quadric == oracle_decide(c));
    }
  }
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto c = fuzz_config(3, i);
    CHECK(decide(c).on_quadric == oracle_decide(c));
  }
}

TEST_CASE("batch evaluation is order-stable and mode-independent") {
  std::vector<Config> configs;
  for (std::uint64_t i = 0; i < 24; ++i) configs.push_back(fuzz_config(11, i));
  const auto serial = decide_batch(configs, Exec::Serial);
  const auto parallel = decide_batch(configs, Exec::Parallel);
  const auto os = oracle_batch(configs, Exec::Serial);
  const auto op = oracle_batch(configs, Exec::Parallel);
  REQUIRE(serial.size() == configs.size());
  CHECK(os == op);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    CHECK(dump(to_json(serial[i]), false) == dump(to_json(parallel[i]), false));
    CHECK(serial[i].on_quadric == static_cast<bool>(os[i]));
  }
}

TEST_CASE("parallel columns give the same decision and trace") {
  const auto pts = sample_on_quadric(21, 10);
  const Decision a = decide(pts, {.record_trace = true, .parallel = false});
  const Decision b = decide(pts, {.record_trace = true, .parallel = true});
  CHECK(dump(to_json(a), false) == dump(to_json(b), false));
  REQUIRE(a.trace.has_value());
  REQUIRE(b.trace.has_value());
  CHECK(dump(to_json(*a.trace), false) == dump(to_json(*b.trace), false));
}

TEST_CASE("json round trips") {
  const auto pts = sample_on_quadric(5, 10);
  const Config back = config_from_json(parse_json_text(dump(config_to_json(pts), true)));
  CHECK(back == pts);

  const Decision d = decide(pts, {.record_trace = true, .parallel = false});
  REQUIRE(d.trace.has_value());
  const Trace t = trace_from_json(parse_json_text(dump(to_json(*d.trace), false)));
  CHECK(dump(to_json(t), false) == dump(to_json(*d.trace), false));
  CHECK(replay(t).ok);

  const Json dj = to_json(d, "trace.json");
  CHECK(dj["branch"] == "generic");
  CHECK(dj["trace_ref"] == "trace.json");
  const Certificate c = certificate_from_json(dj["certificate"]);
  CHECK(certificate_vanishes(c, pts));
  CHECK(std::holds_alternative<std::monostate>(certificate_from_json(Json(nullptr))));

  PlanePair pp{Vec4{1, 2, 3, 4}, Vec4{0, Rational(1, 2), 0, -1}};
  const Certificate pc = certificate_from_json(to_json(Certificate{pp}));
  REQUIRE(std::holds_alternative<PlanePair>(pc));
  CHECK(std::get<PlanePair>(pc).second == pp.second);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(parse_json_text("{"), GeometryError);
  CHECK_THROWS_AS(config_from_json(parse_json_text(R"({"points": [["1","0","0","0"]]})")), GeometryError);
  CHECK_THROWS_AS(point_from_json(parse_json_text(R"(["0","0","0","0"])")), GeometryError);
  CHECK_THROWS_AS(point_from_json(parse_json_text(R"(["1.5","0","0","1"])")), GeometryError);
  CHECK_THROWS_AS(trace_from_json(parse_json_text(R"({"steps":[{"id":0,"op":"join","inputs":[3],"output":["1","0","0","0"]}]})")),
                  GeometryError);
}

TEST_CASE("tampered traces fail replay") {
  const auto pts = sample_generic(6, 10);
  const Decision d = decide(pts, {.record_trace = true, .parallel = false});
  REQUIRE(d.trace.has_value());
  Json j = to_json(*d.trace);
  auto& steps = j["steps"];
  for (auto& s : steps) {
    if (s["op"] == "product") {
      s["output"] = Json::array({"1", "2", "3", "4"});
      break;
    }
  }
  const ReplayReport r = replay(trace_from_json(j));
  CHECK_FALSE(r.ok);
  CHECK(r.first_mismatch >= 0);
}
