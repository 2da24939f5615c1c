#include "doctest.h"
#include "support.hpp"
#include "tiltglue/error.hpp"

using namespace tiltglue;

TEST_CASE("exactness certificates for the example") {
  auto b = testsupport::load_bundle();
  const auto& ex = b->r.exactness();
  CHECK_FALSE(ex.i_upper_star.exact);
  CHECK(ex.i_shriek.exact);
  CHECK(ex.j_lower_shriek.exact);
  CHECK(ex.j_star.exact);
  // L_1 i^* is nonzero exactly on S(3) and S(4): their projective covers leave the C-vertices through ε and γ.
  CHECK(ex.i_upper_star.defects == std::vector<std::size_t>{0, 0, 1, 1, 0});
}

TEST_CASE("functor values quoted for the example") {
  auto b = testsupport::load_bundle();
  const auto& r = b->r;
  CHECK(is_isomorphic(r.i_star(b->a_member("P(1)")), b->member("(P(1)|0)")));
  CHECK(is_isomorphic(r.i_star(b->a_member("S(2)")), b->member("(S(2)|0)")));
  CHECK(is_isomorphic(r.j_lower_shriek(b->c_member("P(3)")), b->member("(P(1)|P(3))")));
  CHECK(is_isomorphic(r.j_lower_shriek(b->c_member("P(4)")), b->member("(S(2)|P(4))")));
  CHECK(is_isomorphic(r.j_lower_shriek(b->c_member("S(3)")), b->member("(S(1)|S(3))")));
  CHECK(is_isomorphic(r.j_star(b->c_member("P(3)")), b->member("(0|P(3))")));
}

TEST_CASE("functors on every member follow the triple description") {
  auto b = testsupport::load_bundle();
  const auto& r = b->r;
  for (std::size_t i = 0; i < b->total->size(); ++i) {
    const auto& m = b->total->member(i);
    const auto d = testsupport::dims_from_name(b->total->member_name(i));
    CHECK(r.i_shriek(m).dims() == std::vector<std::size_t>{d[0], d[1]});
    CHECK(r.j_upper_star(m).dims() == std::vector<std::size_t>{d[2], d[3], d[4]});
    // i^* M kills the submodule generated by the C-part: im ε at 1, im γ + im δε at 2.
    const auto eps = m.map(1), gam = m.map(2), de = m.map(0) * m.map(1);
    const std::vector<Matrix> at2 = {gam, de};
    const auto im = r.i_upper_star(m);
    CHECK(im.dim(0) == d[0] - rank(eps));
    CHECK(im.dim(1) == d[1] - rank(hstack(at2, d[1], m.field())));
  }
}

TEST_CASE("adjunctions hold dimension by dimension") {
  auto b = testsupport::load_bundle();
  const auto& r = b->r;
  for (const auto& m : b->total->members()) {
    for (const auto& x : b->a->members()) {
      CHECK(hom_dim(r.i_upper_star(m), x) == hom_dim(m, r.i_star(x)));
      CHECK(hom_dim(r.i_star(x), m) == hom_dim(x, r.i_shriek(m)));
    }
    for (const auto& y : b->c->members()) {
      CHECK(hom_dim(r.j_lower_shriek(y), m) == hom_dim(y, r.j_upper_star(m)));
      CHECK(hom_dim(r.j_upper_star(m), y) == hom_dim(m, r.j_star(y)));
    }
  }
}

TEST_CASE("canonical sequences") {
  auto b = testsupport::load_bundle();
  const auto& r = b->r;
  for (const auto& m : b->total->members()) {
    auto up = r.canonical_sequence_upper(m);
    CHECK(up.left_injective);
    CHECK(up.middle_exact);
    CHECK(up.right_surjective);
    auto low = r.canonical_sequence_lower(m);
    CHECK(low.middle_exact);
    CHECK(low.right_surjective);
    CHECK(low.composite_zero);
  }
  // i^* is not exact, and the counit j_! j^* M -> M has a kernel on (0|P(3)).
  auto low = r.canonical_sequence_lower(b->member("(0|P(3))"));
  CHECK_FALSE(low.left_injective);
}

TEST_CASE("non-triangular cuts are refused") {
  auto b = testsupport::load_bundle();
  try {
    Recollement::build(b->total->algebra(), {2, 3});
    FAIL("expected NotTriangular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTriangular);
  }
}

TEST_CASE("a recollement where j_! is not exact") {
  // 3 -α-> 4 -ε-> 1 with εα = 0, cut at {1}: Tor_1(N, S(3)) != 0.
  Quiver q({"3", "4", "1"}, {{"α", 0, 1}, {"ε", 1, 2}});
  auto a = BoundQuiverAlgebra::build("T", q, {Relation{{{1, {0, 1}}}}}, PrimeField(101));
  auto r = Recollement::build(a, {2});
  CHECK_FALSE(r.exactness().j_lower_shriek.exact);
  CHECK(r.exactness().j_lower_shriek.defects == std::vector<std::size_t>{1, 0});
}

TEST_CASE("the opposite recollement swaps the sides") {
  auto b = testsupport::load_bundle();
  auto op = b->r.opposite();
  CHECK(op.a_vertices() == b->r.c_vertices());
  CHECK(same_algebra(op.total(), opposite(b->total->algebra())));
  // Restricting to the C-vertices commutes with D.
  for (const auto& m : b->total->members())
    CHECK(is_isomorphic(dualize(b->r.j_upper_star(m)), op.i_shriek(dualize(m))));
}
