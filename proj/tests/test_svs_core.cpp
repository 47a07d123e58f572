#include <catch2/catch_amalgamated.hpp>

#include "svq/fixtures.hpp"
#include "svq/kan.hpp"

using namespace svq;

namespace {

// Materialize levels 0..L of an SVS as a truncation for identity checking.
TruncSVS snapshot(const SVS& v, int L) {
  TruncSVS t;
  t.L = L;
  t.faces.resize(L + 1);
  t.degens.resize(L + 1);
  for (int m = 0; m <= L; ++m) t.dims.push_back(v.dim(m));
  for (int m = 1; m <= L; ++m)
    for (int i = 0; i <= m; ++i) t.faces[m].push_back(v.face(m, i));
  for (int m = 0; m < L; ++m)
    for (int j = 0; j <= m; ++j) t.degens[m].push_back(v.degen(m, j));
  return t;
}

}  // namespace

TEST_CASE("validate_identities on built-in truncations") {
  CHECK(validate_identities(trunc_pair(1, 2)).empty());
  CHECK(validate_identities(trunc_pair(2, 3)).empty());
  CHECK(validate_identities(trunc_id(3, 2)).empty());
  SECTION("forced failure is reported with the identity name") {
    TruncSVS t = trunc_pair(1, 2);
    t.faces[2][0] = -t.faces[2][0];
    auto report = validate_identities(t);
    REQUIRE(!report.empty());
    CHECK(report.front().identity.find("d_i d_j") != std::string::npos);
  }
}

TEST_CASE("coskeletal extension dims") {
  SECTION("zero") {
    SVS z = svs_zero();
    for (int m = 0; m <= 4; ++m) CHECK(z.dim(m) == 0);
  }
  SECTION("identity groupoid") {
    SVS v = svs_id(3);
    for (int m = 0; m <= 4; ++m) CHECK(v.dim(m) == 3);
  }
  SECTION("pair groupoid nerve has level dims d(m+1)") {
    SVS v = svs_pair(1);
    for (int m = 0; m <= 4; ++m) CHECK(v.dim(m) == m + 1);
    SVS w = svs_pair(2);
    for (int m = 0; m <= 4; ++m) CHECK(w.dim(m) == 2 * (m + 1));
  }
  SECTION("bnr dims are binomial") {
    SVS b2 = svs_bnr(2);
    CHECK(b2.dim(0) == 0);
    CHECK(b2.dim(1) == 0);
    CHECK(b2.dim(2) == 1);
    CHECK(b2.dim(3) == 3);
    CHECK(b2.dim(4) == 6);
    SVS b1 = svs_bnr(1);
    CHECK(b1.dim(0) == 0);
    CHECK(b1.dim(1) == 1);
    CHECK(b1.dim(2) == 2);
    CHECK(b1.dim(3) == 3);
    SVS b0 = svs_bnr(0);
    for (int m = 0; m <= 3; ++m) CHECK(b0.dim(m) == 1);
  }
}

TEST_CASE("materialized levels satisfy the simplicial identities") {
  for (const SVS& v : {svs_pair(1), svs_id(2), svs_bnr(1), svs_bnr(2),
                       SVS::tensor(svs_bnr(1), svs_bnr(1)), SVS::copower(svs_bnr(1), 2),
                       SVS::opposite(svs_pair(1))}) {
    CHECK(validate_identities(snapshot(v, 4)).empty());
  }
}

TEST_CASE("tensor and copower dims") {
  SVS t = SVS::tensor(svs_bnr(1), svs_bnr(1));
  CHECK(t.dim(2) == 4);
  SVS c = SVS::copower(svs_id(1), 2);  // Q[Delta[2]]
  CHECK(c.dim(0) == 3);
  CHECK(c.dim(1) == 6);
  CHECK(c.dim(2) == 10);
  SVS u = SVS::tensor(svs_id(1), svs_pair(1));
  for (int m = 0; m <= 3; ++m) CHECK(u.dim(m) == svs_pair(1).dim(m));
}

TEST_CASE("opposite") {
  SVS v = svs_pair(1);
  SVS o = SVS::opposite(v);
  SECTION("involution") { CHECK(SVS::opposite(o).same_node(v)); }
  SECTION("swaps d_0 and d_1 at level 1") {
    CHECK(o.face(1, 0) == v.face(1, 1));
    CHECK(o.face(1, 1) == v.face(1, 0));
  }
  SECTION("dims unchanged") {
    SVS b = svs_bnr(2);
    SVS ob = SVS::opposite(b);
    for (int m = 0; m <= 4; ++m) CHECK(ob.dim(m) == b.dim(m));
  }
}

TEST_CASE("coskeletal level of a groupoid nerve matches the nerve") {
  // Pair(1) truncated at 2, extended coskeletally: level 3 dim must be 4.
  SVS v = svs_pair(1);
  CHECK(v.dim(3) == 4);
  CHECK(v.dim(4) == 5);
}

TEST_CASE("arrow action composes faces and degeneracies") {
  SVS v = svs_pair(1);
  Arrow t{2, 2, {0, 0, 2}};  // s_0 d_1
  CHECK(v.arrow_action(t) == v.degen(1, 0) * v.face(2, 1));
  CHECK(v.arrow_action(arrow_identity(2)) == Mat::identity(3));
}
