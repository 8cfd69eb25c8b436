#include <doctest.h>

#include "qalg/report.hpp"

using namespace qalg;

TEST_SUITE("report") {

TEST_CASE("operators round trip through JSON") {
  const RootConfig root(12);
  const Sector s = Sector::make(3, 2, root);
  const GeneratorSet g = cartan_weyl(s);
  for (const auto& ref : g.members()) {
    const Json j = operator_to_json(g.get(ref));
    CHECK(operator_from_json(Json::parse(j.dump())) == g.get(ref));
  }
  const Operator down = annihilation(1, Sector::make(3, 0, root));
  CHECK(operator_from_json(operator_to_json(down)) == down);
  CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"domain": 1})")), FormatError);
}

TEST_CASE("bundles carry their tags") {
  const RootConfig root = RootConfig::for_embedding(2, 2);
  const Json b = bundle_to_json(embed_boson_route(2, 2, Sector::make(4, 0, root)));
  CHECK(b["route"] == "boson");
  CHECK(b["k1"] == 2);
  CHECK(b["level"] == 0);
  CHECK(b["operators"].size() == 6);
  const Json g = bundle_to_json(cartan_weyl(Sector::make(2, 1, RootConfig())));
  CHECK(g["operators"].contains("Y+(1,2)"));
}

TEST_CASE("reports round trip and render") {
  RelationReport r = check_cartan_weyl(2, 1);
  const Json j = report_to_json(r, false);
  CHECK_FALSE(j.contains("timing"));
  CHECK(j["summary"]["status"] == "pass");
  const RelationReport back = report_from_json(j);
  CHECK(report_to_json(back, false) == j);

  const std::string text = render_text(r);
  CHECK(text.find("overall: PASS") != std::string::npos);
  CHECK(merged_summary({r}).find("overall: PASS") != std::string::npos);

  r.relations[0].status = Status::fail;
  r.relations[0].witness = "i=1,k=2,j=3: (|1,0>,|0,1>) = 1";
  const std::string merged = merged_summary({r, check_cartan_weyl(3, 1)});
  CHECK(merged.find("overall: FAIL") != std::string::npos);
  CHECK(merged.find("raise.borel [n=2,m=1,D=2] i=1,k=2,j=3") != std::string::npos);
  CHECK(merged.find("n=3,m=1,D=2") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(report_from_json(Json::parse("{}")), FormatError);
  Json j = report_to_json(check_cartan_weyl(2, 1), false);
  j["relations"][0]["status"] = "maybe";
  CHECK_THROWS_AS(report_from_json(j), FormatError);
}

}
