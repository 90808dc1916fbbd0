#include "clusterlab/json_io.hpp"
#include "clusterlab/seed.hpp"

#include <doctest.h>

using namespace clusterlab;

TEST_CASE("matrix JSON round trip") {
  const IntMatrix m{{0, 1}, {-1, 0}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(parse_json("[[0,2],[-1,0]]")) == IntMatrix{{0, 2}, {-1, 0}});
  const IntMatrix big = matrix_from_json(parse_json(R"({"n":1,"rows":[["123456789012345678901234567890"]]})"));
  CHECK(big(0, 0) == Int("123456789012345678901234567890"));
  CHECK(matrix_to_json(big)["rows"][0][0] == "123456789012345678901234567890");
}

TEST_CASE("matrix JSON errors") {
  CHECK_THROWS_AS(parse_json("{\"n\": 2, \"rows\": [[0,1],"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":3,"rows":[[0,1],[-1,0]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":2,"rows":[[0,1],[-1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":2,"rows":[[0,"x"],[-1,0]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"n":2})")), ParseError);
  try {
    parse_json("{\n  \"n\": 2,\n  \"rows\": [[0,1]],,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("quiver JSON") {
  const auto q = quiver_from_json(parse_json(
      R"({"n":3,"matrix":[[0,1,0],[-1,0,-1],[0,1,0]],"frozen":[],"action_generators":[[3,2,1]]})"));
  CHECK(q.generators() == std::vector<Permutation>{{2, 1, 0}});
  CHECK(quiver_from_json(quiver_to_json(q)) == q);
  CHECK_THROWS_AS(quiver_from_json(parse_json(R"({"n":2,"matrix":[[0,1],[-1,0]],"frozen":[3]})")), ParseError);
  CHECK_THROWS_AS(quiver_from_json(parse_json(R"({"n":2,"matrix":[[0,1],[-1,0]],"action_generators":[[1]]})")),
                  ParseError);
}

TEST_CASE("Laurent JSON") {
  const Seed s = mutate_seed(make_principal_seed(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}})), 0);
  const Json j = laurent_to_json(s.cluster()[0]);
  CHECK(j["vars"] == Json({"x1", "x2", "y1", "y2"}));
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["exp"] == Json({-1, 0, 1, 0}));
  CHECK(j["terms"][0]["coef"] == 1);
}

TEST_CASE("check JSON") {
  auto r = CheckResult::failure("x", {0, 1}, "broken");
  const Json j = check_to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["witness"] == Json({1, 2}));
  CheckResult ok;
  ok.name = "y";
  CHECK(check_to_json(ok)["witness"].is_null());
}
