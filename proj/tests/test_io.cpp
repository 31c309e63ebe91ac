#include <gtest/gtest.h>

#include "kac/error.hpp"
#include "kac/gradings.hpp"
#include "kac/io.hpp"
#include "kac/morphisms.hpp"
#include "support.hpp"

using namespace kac;
using namespace kac::testing;

TEST(Json, AlgebraRoundTrip) {
  for (const auto& desc : {"rational", "fp:5", "fp:3", "quad:rational:-1", "quad:fp:5:2"}) {
    ScalarDomain dom = ScalarDomain::parse(desc);
    for (const auto& name : {"k3", "jw", "k10", "k3xk3", "jwxjw"}) {
      SuperAlgebra a = catalog_algebra(name, dom);
      json j = to_json(a);
      SuperAlgebra b = algebra_from_json(json::parse(j.dump()));
      EXPECT_EQ(a, b) << name << " over " << desc;
      EXPECT_EQ(a.labels(), b.labels());
      EXPECT_EQ(j.contains("d"), dom.is_quadratic());
    }
  }
}

TEST(Json, AlgebraHeaderAndBody) {
  json j = to_json(kac_k10(ScalarDomain::rational()));
  EXPECT_EQ(j["domain"], "rational");
  EXPECT_EQ(j["dim"], 10);
  EXPECT_EQ(j["parity"], json({0, 0, 0, 0, 0, 0, 1, 1, 1, 1}));
  EXPECT_EQ(j["labels"][1], "a⊗a");
  bool correction = false;
  for (const auto& t : j["constants"]) {
    EXPECT_NE(t[3], "0");
    if (t[0] == 1 && t[1] == 1 && t[2] == 0) {
      EXPECT_EQ(t[3], "-3/16");
      correction = true;
    }
  }
  EXPECT_TRUE(correction);
}

TEST(Json, SerializationIsCanonical) {
  ScalarDomain q = ScalarDomain::rational();
  EXPECT_EQ(to_json(kac_k10(q)).dump(), to_json(kac_k10(q)).dump());
  std::string s = to_json(kaplansky_k3(q)).dump();
  EXPECT_LT(s.find("\"constants\""), s.find("\"dim\""));
  EXPECT_LT(s.find("\"dim\""), s.find("\"domain\""));
}

TEST(Json, MapAndGradingRoundTrip) {
  ScalarDomain q = ScalarDomain::rational();
  SuperAlgebra k = kac_k10(q);
  LinearMap t = tau_auto(k);
  EXPECT_EQ(map_from_json(json::parse(to_json(t).dump()), k, k), t);

  AbelianGroup G(1, {2});
  Grading g = gamma_k10(k, 2, G.element({1, 0}), G.element({0, 1}));
  json j = json::parse(to_json(g).dump());
  EXPECT_EQ(j["group"]["rank"], 1);
  EXPECT_EQ(j["group"]["torsion"], json({2}));
  EXPECT_EQ(grading_from_json(j, k), g);
}

TEST(Json, QuadraticScalars) {
  ScalarDomain k = ScalarDomain::parse("quad:rational:-1");
  Scalar x = Scalar::parse(k, "1/2+3*w");
  EXPECT_EQ(to_json(x), "1/2+3*w");
  EXPECT_EQ(scalar_from_json(k, to_json(x)), x);
  EXPECT_EQ(scalar_from_json(k, json(7)), Scalar(k, 7));
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1})")), Error);
  EXPECT_THROW(algebra_from_json(json::parse(
                   R"({"domain":"rational","dim":1,"parity":[0],"constants":[[0,0,1,"1"]]})")),
               Error);
  EXPECT_THROW(algebra_from_json(json::parse(
                   R"({"domain":"rational","dim":2,"parity":[0,1],"constants":[[0,0,1,"1"]]})")),
               Error);
  EXPECT_THROW(algebra_from_json(json::parse(
                   R"({"domain":"rational","dim":1,"parity":[0],"constants":[[0,0,0,"x"]]})")),
               Error);
  SuperAlgebra k3 = kaplansky_k3(ScalarDomain::rational());
  EXPECT_THROW(map_from_json(json::parse(R"([["1","0"],["0","1"]])"), k3, k3), Error);
  EXPECT_THROW(map_from_json(json::parse(R"({"matrix":[["1"]],"parity":"sideways"})"), k3, k3),
               Error);
}
