#include "doctest.h"
#include "support.hpp"

using namespace tiltglue;

TEST_CASE("Hom from projectives and into injectives counts vector space dimensions") {
  auto b = testsupport::load_bundle();
  const auto& a = b->total->algebra();
  for (std::size_t v = 0; v < 5; ++v) {
    const auto p = projective_module(a, v);
    const auto in = injective_module(a, v);
    CHECK(is_projective(p));
    CHECK(is_injective(in));
    for (const auto& m : b->total->members()) {
      CHECK(hom_dim(p, m) == m.dim(v));
      CHECK(hom_dim(m, in) == m.dim(v));
    }
  }
}

TEST_CASE("projective and injective dimension vectors") {
  auto b = testsupport::load_bundle();
  const auto& a = b->total->algebra();
  // dim P(v)_w = number of basis paths v -> w.
  for (std::size_t v = 0; v < 5; ++v)
    for (std::size_t w = 0; w < 5; ++w) {
      CHECK(projective_module(a, v).dim(w) == a->basis_between(v, w).size());
      CHECK(injective_module(a, v).dim(w) == a->basis_between(w, v).size());
    }
  // Recognise them among the members by name.
  CHECK(is_isomorphic(projective_module(a, 2), b->member("(P(1)|P(3))")));
  CHECK(is_isomorphic(projective_module(a, 3), b->member("(S(2)|P(4))")));
  CHECK(is_isomorphic(projective_module(a, 0), b->member("(P(1)|0)")));
}

TEST_CASE("members are indecomposable and pairwise non-isomorphic") {
  auto b = testsupport::load_bundle();
  const auto& u = *b->total;
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(u.member(i).dims() == testsupport::dims_from_name(u.member_name(i)));
    CHECK(is_indecomposable(u.member(i)));
    for (std::size_t j = 0; j < u.size(); ++j)
      if (i != j) CHECK_FALSE(is_isomorphic(u.member(i), u.member(j)));
  }
}

TEST_CASE("decomposition of a direct sum recovers the parts for several seeds") {
  auto b = testsupport::load_bundle();
  const auto& u = *b->total;
  const std::vector<std::size_t> parts = {0, 4, 6, 6, 12, 13};
  const auto m = sum_of_members(u, parts);
  for (std::uint64_t seed : {kDefaultSeed, std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{99}}) {
    auto summands = decompose(m, seed);
    CHECK(summands.size() == parts.size());
    CHECK(u.identify_summands(m, seed) == parts);
    // Split: sum of inclusion*projection is the identity.
    Morphism total = Morphism::zero(m, m);
    for (const auto& s : summands) {
      CHECK(s.projection * s.inclusion == Morphism::identity(s.module));
      total = total + s.inclusion * s.projection;
    }
    CHECK(total == Morphism::identity(m));
  }
}

TEST_CASE("kernels, cokernels and duality") {
  auto b = testsupport::load_bundle();
  const auto& a = b->total->algebra();
  const auto cover = projective_cover(b->member("(S(1)|S(3))"));
  CHECK(cover.is_surjective());
  const auto k = kernel(cover);
  // 0 -> K -> P(3) -> (S(1)|S(3)) -> 0, with P(3) of dimension 4.
  CHECK(k.object.total_dim() == 2);
  CHECK(cokernel(k.inclusion).object.total_dim() == 2);
  for (const auto& m : b->total->members()) {
    const auto d = dualize(m);
    CHECK(same_algebra(d.algebra(), opposite(a)));
    CHECK(dualize(d) == m);
  }
  for (std::size_t v = 0; v < 5; ++v)
    CHECK(is_isomorphic(dualize(injective_module(a, v)), projective_module(opposite(a), v)));
}
