#include "helpers.hpp"

using namespace th;
using nlohmann::json;

namespace {

json minimal_problem() {
  return json::parse(R"({
    "ring": {"vars": ["x"], "relations": [], "order": "grevlex"},
    "W": "x^2",
    "objects": {"kstab": {"koszul_stab": true}}
  })");
}

} // namespace

TEST_SUITE("problem") {

TEST_CASE("round trip of factorizations through JSON is exact") {
  auto R = qring({"x", "y"});
  MatrixFactorization P = koszul_stab(pp("x^3+y^3", R));
  json j = mf_to_json(P);
  MatrixFactorization Q = mf_from_json(j, "");
  CHECK(Q.W == P.W);
  CHECK(Q.p1 == P.p1);
  CHECK(Q.p0 == P.p0);
  CHECK(j.dump() == mf_to_json(Q).dump());
}

TEST_CASE("qdim serialization distinguishes infinite") {
  CHECK(qdim_to_json(fin(3)) == json(3));
  CHECK(qdim_to_json(inf()) == json("infinite"));
}

TEST_CASE("parse_problem applies defaults and builds objects") {
  Problem p = parse_problem(minimal_problem());
  CHECK(p.ring->arity() == 1);
  CHECK(p.W == pp("x^2", p.ring));
  REQUIRE(p.cover.denominators.size() == 1);
  CHECK(p.cover.denominators[0].is_constant());
  REQUIRE(p.objects.count("kstab") == 1);
  CHECK(p.objects.at("kstab").rank_even() == 1);
  CHECK(p.task_args.is_object());
}

TEST_CASE("schema violations name the offending JSON path") {
  json j = minimal_problem();
  j.erase("ring");
  try {
    parse_problem(j);
    FAIL("expected SchemaError");
  } catch (const MfError &e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(std::string(e.what()).find("/ring") != std::string::npos);
  }

  j = minimal_problem();
  j["objects"]["bad"] = {{"p1", json::array({json::array({"x", "y"})})}};
  try {
    parse_problem(j);
    FAIL("expected SchemaError");
  } catch (const MfError &e) {
    CHECK(e.kind() == ErrorKind::SchemaError);
    CHECK(std::string(e.what()).find("/objects/bad") != std::string::npos);
  }

  j = minimal_problem();
  j["cover"] = json::array();
  CHECK_THROWS_AS(parse_problem(j), MfError);

  j = minimal_problem();
  j["objects"]["ragged"] = {
      {"p1", json::array({json::array({"x", "0"}), json::array({"x"})})},
      {"p0", json::array({json::array({"x"})})}};
  CHECK_THROWS_AS(parse_problem(j), MfError);
}

TEST_CASE("explicit matrices and diagonal objects parse") {
  json j = minimal_problem();
  j["objects"]["explicit"] = {{"p1", json::array({json::array({"x"})})},
                              {"p0", json::array({json::array({"x"})})}};
  j["objects"]["diag"] = {{"diagonal", true}};
  Problem p = parse_problem(j);
  CHECK(p.objects.at("explicit").rank_even() == 1);
  // diagonal object lives over the doubled ring
  CHECK(p.objects.at("diag").ring->arity() == 2);
}

TEST_CASE("run_command dispatches and reports") {
  Problem p = parse_problem(minimal_problem());
  GbOptions opts;

  Report verify_rep = run_command(p, "verify", opts, false);
  CHECK(verify_rep.passed);
  CHECK(verify_rep.payload["objects"]["kstab"]["verified"] == true);

  Report ext_rep = run_command(p, "ext", opts, false);
  CHECK(ext_rep.passed);
  CHECK(ext_rep.payload["dims"]["even"] == json(1));
  CHECK(ext_rep.payload["dims"]["odd"] == json(1));

  Report coker_rep = run_command(p, "coker", opts, false);
  CHECK(coker_rep.payload["q_dimension_at_origin"] == json(1));

  Report cmp_rep = run_command(p, "hh-compare", opts, false);
  CHECK(cmp_rep.passed);
  CHECK(cmp_rep.payload["passed"] == true);
  CHECK(cmp_rep.payload["mu"] == json(1));

  CHECK_THROWS_AS(run_command(p, "nonsense", opts, false), MfError);
}

TEST_CASE("verbose timing never reaches the machine payload") {
  Problem p = parse_problem(minimal_problem());
  GbOptions opts;
  Report quiet = run_command(p, "ext", opts, false);
  Report loud = run_command(p, "ext", opts, true);
  CHECK(quiet.payload.dump() == loud.payload.dump());
  CHECK(loud.text.find("elapsed_ms") != std::string::npos);
  CHECK(quiet.text.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("task_args select sources and targets by name") {
  json j = minimal_problem();
  j["objects"]["other"] = {{"koszul_stab", true}};
  j["task_args"] = {{"source", "kstab"}, {"target", "other"}};
  Problem p = parse_problem(j);
  GbOptions opts;
  Report r = run_command(p, "ext", opts, false);
  CHECK(r.payload["dims"]["even"] == json(1));

  // without task_args a two-object problem is ambiguous
  j.erase("task_args");
  Problem q = parse_problem(j);
  CHECK_THROWS_AS(run_command(q, "ext", opts, false), MfError);
}

TEST_CASE("stabilize command builds the module from q1 by default") {
  json j = json::parse(R"({
    "ring": {"vars": ["x"], "relations": [], "order": "grevlex"},
    "W": "x^3",
    "objects": {},
    "task_args": {"q1": [["x"]]}
  })");
  Problem p = parse_problem(j);
  GbOptions opts;
  Report r = run_command(p, "stabilize", opts, false);
  CHECK(r.passed);
  CHECK(r.payload["object"]["p0"] == json::array({json::array({"x^2"})}));
}

} // TEST_SUITE
