#include <doctest.h>

#include "qalg/certify.hpp"
#include "qalg/report.hpp"

using namespace qalg;

namespace {

const RelationResult* find_row(const RelationReport& r, const std::string& name) {
  for (const auto& row : r.relations)
    if (row.name == name) return &row;
  return nullptr;
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("relation table enumerations match closed-form counts") {
  CHECK(cartan_weyl_relations().size() == 25);
  for (const auto& spec : cartan_weyl_relations()) {
    for (int n = 2; n <= 6; ++n) {
      CHECK_MESSAGE(spec.tuples(n).size() == spec.expected_count(n), spec.name << " at n=" << n);
    }
  }
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("rendered relations") {
  const auto& t = cartan_weyl_relations();
  CHECK(t.front().expression() == "[Y+(i,k),Y+(k,j)]_q = Y+(i,j)");
  const auto it = std::find_if(t.begin(), t.end(), [](const auto& s) { return s.name == "mixed.end-to-start-b"; });
  REQUIRE(it != t.end());
  CHECK(it->expression() == "[Y+(i,j),Y-(k,i)] = -q^H(j,i) Y-(k,j)");
}

TEST_CASE("Cartan-Weyl battery passes") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}}) {
    const RelationReport r = check_cartan_weyl(n, m);
    CHECK(r.passed());
    CHECK(r.count(Status::pass) == r.relations.size());
  }
  // The k>j>i end-to-start line on sector(3,2).
  const RelationReport r = check_cartan_weyl(3, 2);
  const auto* row = find_row(r, "mixed.end-to-start-b");
  REQUIRE(row != nullptr);
  CHECK(row->indices_checked == 1);
  CHECK(row->status == Status::pass);
}

TEST_CASE("a corrupted lowering generator is reported") {
  const Sector s = Sector::make(2, 1, RootConfig());
  GeneratorSet g = cartan_weyl(s);
  Operator y = g.lowering(2, 1);
  y.add_to(0, 0, LaurentScalar(1));
  g.set({GeneratorRef::Kind::lowering, 2, 1}, y);
  const auto rows = run_relation_battery(g, "", "n=2,m=1,D=2");
  const auto it = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.name == "mixed.cartan"; });
  REQUIRE(it != rows.end());
  CHECK(it->status == Status::fail);
  CHECK(it->witness.rfind("i=1,j=2: ", 0) == 0);
}

TEST_CASE("RLL families") {
  const RelationReport r = check_rll(2, 1);
  REQUIRE(r.relations.size() == 3);
  for (const auto& row : r.relations) {
    CHECK(row.indices_checked == 16);
    CHECK(row.status == Status::pass);
  }
  CHECK(check_rll(3, 2).passed());
}

TEST_CASE("Hopf and identity bundles report deviations without failing") {
  const RelationReport h = check_hopf(3, 1);
  CHECK(h.passed());
  CHECK(find_row(h, "hopf.antipode")->status == Status::pass);
  CHECK(find_row(h, "hopf.antipode[printed]")->status == Status::deviation);

  const RelationReport id = check_identities(3, 2);
  CHECK(id.passed());
  CHECK(find_row(id, "identity.total-number-recurrence")->status == Status::pass);
  CHECK(find_row(id, "identity.total-number-recurrence[literal]")->status == Status::deviation);
  CHECK(find_row(id, "identity.diagonal-functionals[verbatim]")->status == Status::deviation);
}

TEST_CASE("propositions on small embeddings") {
  const RootConfig r22 = RootConfig::for_embedding(2, 2);
  const RelationReport p1 = check_prop1(2, 2, 1, r22);
  CHECK(p1.passed());
  CHECK(p1.relations.size() == 9);
  CHECK(check_prop1(3, 1, 1, RootConfig::for_embedding(3, 1)).passed());
  CHECK(check_prop2(3, 2, 1, RootConfig::for_embedding(3, 2)).passed());
  const RelationReport e = check_embedding(2, 2, 1, r22);
  CHECK(e.passed());
  CHECK(find_row(e, "route.delta=boson")->status == Status::pass);
}

TEST_CASE("mutations are caught") {
  const RelationReport r = mutation_soundness(4, 1);
  CHECK(r.relations.size() == 28);
  CHECK(r.passed());
}

TEST_CASE("reports are deterministic") {
  const auto a = report_to_json(check_cartan_weyl(3, 1), false).dump();
  const auto b = report_to_json(check_cartan_weyl(3, 1), false).dump();
  CHECK(a == b);
}

}
