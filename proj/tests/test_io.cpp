#include "skewlab/io.hpp"

#include <doctest.h>
#include <fstream>

using namespace skewlab;

namespace {
const std::string kData = SKEWLAB_DATA_DIR;
}

TEST_CASE("field descriptors") {
  CHECK(field_from_json(Json("Q")) == Field::rationals());
  CHECK(field_from_json(Json{{"Fp", 7}}) == Field::prime(7));
  CHECK_THROWS_AS(field_from_json(Json("R")), IoError);
  CHECK(field_to_json(Field::prime(5)) == Json{{"Fp", 5}});
  CHECK(field_from_json(field_to_json(Field::rationals())) ==
        Field::rationals());
}

TEST_CASE("matrix round trip with exact rational literals") {
  Field F = Field::rationals();
  Matrix m(F, 2, 2);
  m.at(0, 0) = F.from_string("3/2");
  m.at(0, 1) = F.from_string("-7");
  m.at(1, 0) = F.from_string("0");
  m.at(1, 1) = F.from_string("22/7");
  Json j = matrix_to_json(F, m);
  CHECK(matrix_from_json(F, j) == m);
  CHECK(j[0][0] == "3/2");
}

TEST_CASE("algebra round trip through the structure-constant form") {
  Field F = Field::rationals();
  Algebra A = Algebra::path_algebra(
      Quiver({"0", "1", "2"}, {{"a", 0, 1}, {"b", 0, 2}}), F);
  Json j = algebra_to_json(A);
  Algebra back = algebra_from_json(F, j);
  CHECK(back.dim() == A.dim());
  CHECK(back.structure() == A.structure());
  CHECK(back.unit() == A.unit());
  CHECK(back.basis_labels() == A.basis_labels());
}

TEST_CASE("group round trip") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  Json j = group_to_json(s3);
  FiniteGroup back = group_from_json(j);
  CHECK(back.order() == 6);
}

TEST_CASE("bundled problem files parse and validate") {
  for (const char *name :
       {"star_c2.json", "double_arrow_c2.json", "wreath_kxk_n2.json",
        "quaternion_s3.json"}) {
    Problem p = load_problem(kData + "/" + name);
    CHECK(p.algebra->dim() > 0);
    CHECK(p.group->order() > 1);
    CHECK(p.action->algebra_ptr().get() == p.algebra.get());
  }
  Problem star = load_problem(kData + "/star_c2.json");
  CHECK(star.algebra->dim() == 5);
  CHECK(star.block_order == std::vector<int>{0, 1});
  CHECK(star.seed == 1);
}

TEST_CASE("characteristic dividing the group order is rejected at parse time") {
  Json j;
  j["field"] = Json{{"Fp", 2}};
  j["algebra"] = Json{{"quiver", Json{{"vertices", Json::array({"0"})}}}};
  j["group"] = Json{{"degree", 2}, {"generators", Json::array({Json::array({1, 0})})}};
  j["action"] = Json{{"trivial", true}};
  CHECK_THROWS_AS(problem_from_json(j), IoError);
  j["field"] = Json{{"Fp", 3}};
  CHECK_NOTHROW(problem_from_json(j));
}

TEST_CASE("cyclic quivers fail with the cycle named") {
  Json j;
  j["field"] = "Q";
  Json quiver;
  quiver["vertices"] = Json::array({"u", "w"});
  quiver["arrows"] = Json::array(
      {Json{{"name", "a"}, {"source", "u"}, {"target", "w"}},
       Json{{"name", "b"}, {"source", "w"}, {"target", "u"}}});
  j["algebra"] = Json{{"quiver", quiver}};
  j["group"] = Json{{"degree", 1}, {"generators", Json::array()}};
  j["action"] = Json{{"trivial", true}};
  try {
    problem_from_json(j);
    FAIL("expected an error");
  } catch (const std::exception &e) {
    std::string msg = e.what();
    CHECK(msg.find("u") != std::string::npos);
    CHECK(msg.find("w") != std::string::npos);
  }
}

TEST_CASE("reports serialize deterministically") {
  Problem p = load_problem(kData + "/star_c2.json");
  ExceptionalSetup setup = make_setup(p.action, p.block_order);
  MainTheoremReport r1 = verify_main_theorem(setup, p.seed);
  MainTheoremReport r2 = verify_main_theorem(setup, p.seed);
  CHECK(main_report_to_json(r1).dump() == main_report_to_json(r2).dump());
  ValidationReport v = validate_setup(setup);
  Json jv = validation_report_to_json(v);
  CHECK(jv["ok"] == true);
}

TEST_CASE("emitted skew JSON re-parses to an equal algebra") {
  Problem p = load_problem(kData + "/double_arrow_c2.json");
  SkewAlgebra sk = skew_algebra(p.action);
  Json j = skew_summary_to_json(sk);
  Algebra back = algebra_from_json(p.field, j["algebra"]);
  CHECK(back.dim() == sk.algebra->dim());
  CHECK(back.structure() == sk.algebra->structure());
  CHECK(back.unit() == sk.algebra->unit());
}
