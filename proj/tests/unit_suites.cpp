#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvb/jsonio.hpp"
#include "dvb/suites.hpp"
#include "test_support.hpp"

using namespace dvb;

namespace {

SuiteConfig small(const std::string& name, std::uint64_t trials = 30) {
  SuiteConfig cfg;
  cfg.suite = name;
  cfg.dims = Dims{2, 2, 2};
  cfg.trials = trials;
  cfg.seed = 13;
  return cfg;
}

nlohmann::json strip_time(nlohmann::json j) {
  j.erase("wall_time_ms");
  return j;
}

} // namespace

TEST_CASE("every registered suite passes on its default fixture") {
  for (const std::string& name : suite_names()) {
    SuiteReport r = run_suite(small(name, name == "algebra" ? 10 : 30));
    INFO(name);
    for (const auto& p : r.properties) {
      INFO(p.name << " " << p.counterexample);
      CHECK(p.pass);
    }
    CHECK(r.all_pass());
    CHECK(!r.properties.empty());
    CHECK(std::is_sorted(r.properties.begin(), r.properties.end(),
                         [](const PropertyResult& a, const PropertyResult& b) {
                           return a.name < b.name;
                         }));
  }
}

TEST_CASE("reports are deterministic modulo wall time") {
  for (const std::string& name : {"aut", "dual", "bundles", "dla"}) {
    SuiteConfig cfg = small(name, 20);
    nlohmann::json a = strip_time(suite_report_json(run_suite(cfg)));
    nlohmann::json b = strip_time(suite_report_json(run_suite(cfg)));
    INFO(name);
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("seed changes the drawn samples but not the verdicts") {
  SuiteConfig cfg = small("aut", 25);
  SuiteReport a = run_suite(cfg);
  cfg.seed = 14;
  SuiteReport b = run_suite(cfg);
  CHECK(a.all_pass());
  CHECK(b.all_pass());
  CHECK(a.properties.size() == b.properties.size());
}

TEST_CASE("counterexample appears exactly on failing properties") {
  SuiteReport r = run_suite(small("frames", 15));
  nlohmann::json j = suite_report_json(r);
  for (const auto& p : j["properties"]) {
    CHECK(p["pass"].get<bool>());
    CHECK(!p.contains("counterexample"));
  }
  CHECK(j.contains("wall_time_ms"));
  CHECK(j["suite"] == "frames");
}

TEST_CASE("a broken bundle fixture fails with a named counterexample") {
  Dims d{1, 1, 1};
  PrincipalCocycle<Rat> pc;
  pc.group = DlgSpec<Rat>::aut(d);
  pc.cover.chart_count = 3;
  pc.cover.overlaps = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}};
  pc.cover.triples = {{0, 1, 2}};
  pc.g.emplace(std::make_pair(1, 0), dvbtest::quad1(2, 3, 5, 7));
  pc.g.emplace(std::make_pair(2, 1), dvbtest::quad1(1, 1, 1, 1));
  pc.g.emplace(std::make_pair(2, 0), dvbtest::quad1(1, 1, 1, 0)); // not the composite
  symmetrize_transitions(pc);

  SuiteConfig cfg = small("bundles", 10);
  cfg.fixture = jsonio::bundle_out(pc);
  cfg.fixture_name = "broken_triple";
  SuiteReport r = run_suite(cfg);
  CHECK(!r.all_pass());
  bool saw_triple = false;
  for (const auto& p : r.properties)
    if (p.name == "broken_triple/triple_condition") {
      saw_triple = true;
      CHECK(!p.pass);
      CHECK(p.counterexample.find("triple (0,1,2)") != std::string::npos);
    }
  CHECK(saw_triple);
  CHECK(r.fixture == "broken_triple");
}

TEST_CASE("unknown suite names and malformed fixtures are input errors") {
  CHECK_THROWS_AS(run_suite(small("nope")), Error);
  try {
    run_suite(small("nope"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InputError);
  }

  SuiteConfig cfg = small("bundles");
  cfg.fixture = nlohmann::json{{"charts", 2}};
  CHECK_THROWS_AS(run_suite(cfg), Error);
}

TEST_CASE("connections suite tracks the twist dimension") {
  SuiteConfig cfg = small("connections", 10);
  cfg.dims = Dims{1, 1, 1};
  SuiteReport r = run_suite(cfg);
  CHECK(r.all_pass());

  cfg.dims = Dims{2, 2, 0}; // no twist: the canonical splitting is flat
  SuiteReport flat = run_suite(cfg);
  CHECK(flat.all_pass());
}
