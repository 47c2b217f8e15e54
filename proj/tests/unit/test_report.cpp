#include "braidcalc/catalog.hpp"
#include "braidcalc/report.hpp"
#include "braidcalc/suites.hpp"
#include "doctest.h"

using namespace braidcalc;

TEST_CASE("report ordering and serialization") {
  SuiteReport r;
  r.suite = "demo";
  r.checks.push_back({"b.second", Status::fail, "second", "", 0, false});
  r.checks.push_back({"a.first", Status::pass, "first", "w", 3, true});
  r.finalize();
  CHECK(r.checks.front().id == "a.first");
  CHECK(r.ok());
  SuiteSummary s = r.summary();
  CHECK(s.pass == 1);
  CHECK(s.fail == 1);
  std::string json = r.to_json();
  CHECK(json.find("\"witness\": \"w\"") != std::string::npos);
  CHECK(json.find("\"suite\": \"demo\"") < json.find("\"version\""));
  SuiteReport back = parse_report_json(json);
  CHECK(back.checks.size() == 2);
  CHECK(back.checks[1].status == Status::fail);
  CHECK(back.checks[0].runtime_ms == 3);
  r.checks.push_back({"a.first", Status::pass, "dup", "", 0, true});
  CHECK_THROWS_AS(r.finalize(), Error);
  std::erase_if(r.checks, [](const CheckResult& c) { return c.paper_ref == "dup"; });
  REQUIRE(r.checks.size() == 2);
  r.checks[1].asserted = true;
  CHECK_FALSE(r.ok());
}

TEST_CASE("builtin catalog") {
  CHECK(parse_range("-2..3") == std::pair<long, long>{-2, 3});
  CHECK_THROWS_AS(parse_range("3..1"), Error);
  CHECK_THROWS_AS(parse_range("1-3"), Error);
  for (const auto& b : builtin_catalog()) {
    AlgebraPresentation p = builtin(b.name);
    CHECK_NOTHROW(p.validate());
    if (b.has_weyl) CHECK_NOTHROW(builtin_weyl(b.name));
    else CHECK_THROWS_AS(builtin_weyl(b.name), Error);
  }
  CHECK(builtin("gl", {{"m", "1"}}).generators == std::vector<std::string>{"n"});
  CHECK_THROWS_AS(builtin("gl", {{"m", "1/2"}}), Error);
  CHECK_THROWS_AS(builtin("gl", {{"x", "1"}}), Error);
  CHECK_THROWS_AS(builtin("nosuch"), Error);
  CHECK_THROWS_AS(builtin("qwitt-truncated", {{"range", "1..20"}}), Error);
  CHECK(builtin("qwitt-truncated", {{"range", "1..4"}}).relations.size() == 6);
}

TEST_CASE("suite runner") {
  CHECK(is_suite("all"));
  CHECK_FALSE(is_suite("nosuch"));
  CHECK_THROWS_AS(run_suite("nosuch"), Error);
  SuiteReport one = run_suite("families", {false, 1});
  SuiteReport four = run_suite("families", {false, 4});
  CHECK(one.to_json() == four.to_json());
  CHECK(one.ok());
  bool reported = false;
  for (const auto& c : one.checks)
    if (c.id == "families.end.hecke.strong") reported = !c.asserted;
  CHECK(reported);
}
