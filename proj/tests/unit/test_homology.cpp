#include "doctest.h"
#include "support.hpp"

using namespace tiltglue;

TEST_CASE("Euler characteristic matches the quiver-with-relations form") {
  auto b = testsupport::load_bundle();
  const auto& u = *b->total;
  const auto euler = testsupport::lambda_euler();
  REQUIRE(global_dimension(u.algebra()) == std::optional<std::size_t>(2));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const auto& m = u.member(i);
      const auto& n = u.member(j);
      long long chi = static_cast<long long>(hom_dim(m, n));
      chi -= static_cast<long long>(ext_dim(m, n, 1));
      chi += static_cast<long long>(ext_dim(m, n, 2));
      CHECK(ext_dim(m, n, 3) == 0);
      CHECK(chi == euler(m.dims(), n.dims()));
    }
}

TEST_CASE("Ext by syzygies agrees with Ext by cosyzygies") {
  auto b = testsupport::load_bundle();
  for (const auto* u : {b->total.get(), b->a.get(), b->c.get()})
    for (const auto& m : u->members())
      for (const auto& n : u->members())
        for (std::size_t i = 1; i <= 3; ++i) CHECK(ext_dim(m, n, i) == ext_dim_sigma(m, n, i));
}

TEST_CASE("projective and injective dimensions") {
  auto b = testsupport::load_bundle();
  // Over Λ″ = 3 -> 4 -> 5 with βα = 0: 0 -> P(5) -> P(4) -> P(3) -> S(3) -> 0.
  CHECK(projective_dimension(b->c_member("S(3)")) == std::optional<std::size_t>(2));
  CHECK(projective_dimension(b->c_member("S(4)")) == std::optional<std::size_t>(1));
  CHECK(projective_dimension(b->c_member("P(4)")) == std::optional<std::size_t>(0));
  // 0 -> P(5) -> P(4) -> P(3) -> S(3) -> 0 is also the injective coresolution of P(5) = S(5).
  CHECK(injective_dimension(b->c_member("P(5)")) == std::optional<std::size_t>(2));
  CHECK(global_dimension(b->a->algebra()) == std::optional<std::size_t>(1));
  CHECK(global_dimension(b->c->algebra()) == std::optional<std::size_t>(2));
}

TEST_CASE("realized extensions are non-split and have the right middle term") {
  auto b = testsupport::load_bundle();
  const auto& s1 = b->a_member("S(1)");
  const auto& s2 = b->a_member("S(2)");
  auto e = ext(s1, s2, 1);
  REQUIRE(e.dimension == 1);
  auto seq = realize_extension(s1, e.cocycles[0]);
  CHECK(seq.is_exact());
  CHECK(is_isomorphic(seq.middle(), b->a_member("P(1)")));
  CHECK(e.coordinates(e.cocycles[0]) == std::vector<Scalar>{1});
}

TEST_CASE("pushout and pullback dimensions") {
  auto b = testsupport::load_bundle();
  const auto& p13 = b->member("(P(1)|P(3))");
  const auto cover = projective_cover(b->member("(S(1)|S(3))"));
  const auto k = kernel(cover);
  auto po = pushout(k.inclusion, Morphism::zero(k.object, k.object));
  // Pushing a mono out along zero gives (P/K) ⊕ K.
  CHECK(po.object.total_dim() == p13.total_dim());
  CHECK(is_isomorphic(po.object, direct_sum({b->member("(S(1)|S(3))"), k.object}).object));
  auto pb = pullback(cover, cover);
  CHECK(pb.object.total_dim() == 2 * p13.total_dim() - b->member("(S(1)|S(3))").total_dim());
}
