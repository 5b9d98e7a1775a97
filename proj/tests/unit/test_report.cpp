#include <doctest.h>

#include <json.hpp>

#include "raaglie/errors.hpp"
#include "raaglie/report.hpp"
#include "support/oracles.hpp"

using namespace raaglie;
using namespace raaglie::testing;
using Json = nlohmann::json;

TEST_CASE("lcs-basis output for the mini graph at degree 3") {
  const std::string text = render_lcs_basis(mini_graph(), 3, Format::kText);
  CHECK(text ==
        "degree: 3\n"
        "rank: 5\n"
        "generators: [v1,[v1,v2]], [v1,[v1,v3]], [[v1,v2],v2], [[v1,v3],v2], "
        "[[v1,v3],v3]\n");

  const Json doc = Json::parse(render_lcs_basis(mini_graph(), 3, Format::kJson));
  CHECK(doc["rank"] == 5);
  CHECK(doc["generators"] ==
        Json::array({"[v1,[v1,v2]]", "[v1,[v1,v3]]", "[[v1,v2],v2]",
                     "[[v1,v3],v2]", "[[v1,v3],v3]"}));
}

TEST_CASE("lyndon output lists elements by length") {
  const Json doc = Json::parse(render_lyndon(mini_graph(), 3, Format::kJson));
  CHECK(doc["total"] == 10);
  CHECK(doc["lengths"][0]["count"] == 3);
  CHECK(doc["lengths"][1]["count"] == 2);
  CHECK(doc["lengths"][2]["count"] == 5);
  CHECK(doc["lengths"][2]["elements"][3]["trace"] ==
        Json::array({"v1", "v3", "v2"}));
  CHECK(doc["lengths"][2]["elements"][3]["bracketing"] == "[[v1,v3],v2]");

  // text mode carries the same content
  const std::string text = render_lyndon(mini_graph(), 3, Format::kText);
  CHECK(text.find("lyndon elements up to length 3: 10") != std::string::npos);
  CHECK(text.find("v1 v3 v2  [[v1,v3],v2]") != std::string::npos);
}

TEST_CASE("magnus output serializes the polynomial") {
  const Json doc =
      Json::parse(render_magnus(mini_graph(), "v1^2", 2, Format::kJson));
  CHECK(doc["truncation"] == 2);
  REQUIRE(doc["terms"].size() == 3);
  CHECK(doc["terms"][0]["coeff"] == "1");
  CHECK(doc["terms"][0]["trace"] == Json::array());
  CHECK(doc["terms"][1]["coeff"] == "2");
  CHECK(doc["terms"][1]["trace"] == Json::array({"v1"}));
  CHECK(doc["terms"][2]["trace"] == Json::array({"v1", "v1"}));

  const std::string text = render_magnus(mini_graph(), "v1^2", 2, Format::kText);
  CHECK(text == "truncation: 2\n1 1\n2 v1\n1 v1 v1\n");
}

TEST_CASE("normal form output") {
  CHECK(render_normal_form(mini_graph(), "v2 v3 v2^-1", Format::kText) == "v3\n");
  CHECK(render_normal_form(mini_graph(), "[v2,v3]", Format::kText) == "1\n");
  const Json doc =
      Json::parse(render_normal_form(mini_graph(), "v2 v3 v2^-1", Format::kJson));
  CHECK(doc["normal_form"] == "v3");
  CHECK(doc["syllables"][0]["vertex"] == "v3");
  CHECK(doc["syllables"][0]["exponent"] == 1);
}

TEST_CASE("member output reports the filtration verdict") {
  const Json in_d3 = Json::parse(
      render_member(mini_graph(), "[[v1,v3],v2]", 3, 0, Format::kJson));
  CHECK(in_d3["truncation"] == 4);  // default degree + 1
  CHECK(in_d3["filtration_degree"] == 3);
  CHECK(in_d3["exact"] == true);
  CHECK(in_d3["member"] == true);

  const Json identity = Json::parse(render_member(mini_graph(), "1", 3, 0, Format::kJson));
  CHECK(identity["filtration_degree"] == 5);
  CHECK(identity["exact"] == false);
  CHECK(identity["member"] == true);

  const Json not_member =
      Json::parse(render_member(mini_graph(), "v1", 2, 0, Format::kJson));
  CHECK(not_member["member"] == false);

  const std::string text =
      render_member(mini_graph(), "[[v1,v3],v2]", 3, 0, Format::kText);
  CHECK(text.find("filtration degree: 3\n") != std::string::npos);
  CHECK(text.find("member: yes") != std::string::npos);
}

TEST_CASE("coords output uses the declared schema") {
  const Json doc = Json::parse(
      render_coords(mini_graph(), "[[v1,v3],v2]", 3, 0, Format::kJson));
  CHECK(doc["degree"] == 3);
  REQUIRE(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["lyndon"] == Json::array({"v1", "v3", "v2"}));
  CHECK(doc["terms"][0]["coeff"] == "1");
  CHECK_THROWS_AS(render_coords(mini_graph(), "v1", 2, 0, Format::kJson),
                  NotInFiltrationError);
}

TEST_CASE("structure output") {
  const Json doc =
      Json::parse(render_structure(mini_graph(), "v1 v3", "v2", Format::kJson));
  CHECK(doc["degree"] == 3);
  CHECK(doc["terms"][0]["lyndon"] == Json::array({"v1", "v3", "v2"}));
  CHECK(doc["terms"][0]["coeff"] == "1");
  CHECK_THROWS_AS(render_structure(mini_graph(), "v2 v3", "v1", Format::kJson),
                  NotLyndonError);
}

TEST_CASE("verify-series output") {
  const Json doc = Json::parse(render_verify_series(mini_graph(), 3, Format::kJson));
  CHECK(doc["equal"] == true);
  CHECK(doc["lhs"] == Json::array({"1", "3", "8", "21"}));
  CHECK(doc["rhs"] == Json::array({"1", "3", "8", "21"}));
  CHECK(doc["ranks"] == Json::array({3, 2, 5}));
  CHECK(doc["clique_polynomial"] == Json::array({"1", "3", "1"}));

  const std::string text = render_verify_series(mini_graph(), 3, Format::kText);
  CHECK(text.find("equal: yes") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  for (int round = 0; round < 2; ++round) {
    CHECK(render_lyndon(mini_graph(), 4, Format::kJson) ==
          render_lyndon(mini_graph(), 4, Format::kJson));
    CHECK(render_verify_series(path4_graph(), 5, Format::kText) ==
          render_verify_series(path4_graph(), 5, Format::kText));
  }
}
