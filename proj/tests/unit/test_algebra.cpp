#include "doctest.h"
#include "support.hpp"
#include "tiltglue/error.hpp"

using namespace tiltglue;

namespace {

AlgebraPtr linear_a3(std::vector<Relation> rels) {
  Quiver q({"3", "4", "5"}, {{"α", 0, 1}, {"β", 1, 2}});
  return BoundQuiverAlgebra::build("A3", q, std::move(rels), PrimeField(101));
}

}  // namespace

TEST_CASE("dimensions by counting paths") {
  // Path algebra of 3 -> 4 -> 5: three idempotents, two arrows, one path of length two.
  CHECK(linear_a3({})->dimension() == 6);
  CHECK(linear_a3({Relation{{{1, {0, 1}}}}})->dimension() == 5);

  Workspace ws;
  auto lambda = ws.algebra("example5/lambda.alg");
  // 5 idempotents, 5 arrows, βα = 0 and γα = δε leave one path of length two.
  CHECK(lambda->dimension() == 11);
  CHECK(lambda->vertex_count() == 5);
  CHECK(lambda->relations().size() == 2);
  CHECK(ws.algebra("example5/lambda1.alg")->dimension() == 3);
  CHECK(ws.algebra("example5/lambda2.alg")->dimension() == 5);
}

TEST_CASE("commutativity relation identifies the two paths") {
  Workspace ws;
  auto a = ws.algebra("example5/lambda.alg");
  const auto& q = a->quiver();
  Path ge{2, 1, {q.arrow_index("α"), q.arrow_index("γ")}};
  Path de{2, 1, {q.arrow_index("ε"), q.arrow_index("δ")}};
  CHECK(a->reduce(ge) == a->reduce(de));
  CHECK(a->basis_between(2, 1).size() == 1);
  CHECK(a->basis_between(2, 4).empty());
}

TEST_CASE("opposite algebra") {
  Workspace ws;
  auto a = ws.algebra("example5/lambda.alg");
  auto op = opposite(a);
  CHECK(op->dimension() == a->dimension());
  CHECK(opposite(op) == a);
  for (std::size_t s = 0; s < 5; ++s)
    for (std::size_t t = 0; t < 5; ++t) CHECK(op->basis_between(t, s).size() == a->basis_between(s, t).size());
}

TEST_CASE("restriction to a vertex set") {
  Workspace ws;
  auto a = ws.algebra("example5/lambda.alg");
  auto c = restrict_algebra(a, {2, 3, 4}, "C");
  CHECK(same_algebra(c, ws.algebra("example5/lambda2.alg")));
  auto left = restrict_algebra(a, {0, 1}, "A");
  CHECK(same_algebra(left, ws.algebra("example5/lambda1.alg")));
}

TEST_CASE("malformed input is rejected") {
  Quiver q({"1", "2"}, {{"a", 0, 1}});
  // No paths of length two exist, so a relation on "aa" is not composable.
  CHECK_THROWS_AS(BoundQuiverAlgebra::build("x", q, {Relation{{{1, {0, 0}}}}}, PrimeField(5)), Error);
  Quiver loop({"1"}, {{"x", 0, 0}});
  try {
    BoundQuiverAlgebra::build("loop", loop, {}, PrimeField(5), 6);
    FAIL("a loop without relations is infinite dimensional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteDimensional);
  }
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", 0, 3}}), Error);
}
