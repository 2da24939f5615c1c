#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace tiltglue;
using testsupport::sum_named;

namespace {

Module projectives(const AlgebraPtr& a) {
  std::vector<Module> ps;
  for (std::size_t v = 0; v < a->vertex_count(); ++v) ps.push_back(projective_module(a, v));
  return direct_sum(ps, a).object;
}

Module injectives(const AlgebraPtr& a) {
  std::vector<Module> is;
  for (std::size_t v = 0; v < a->vertex_count(); ++v) is.push_back(injective_module(a, v));
  return direct_sum(is, a).object;
}

// Ext^1(X, V) = 0 for all V, straight from the table.
std::vector<std::size_t> left_perp_oracle(const Universe& u, const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < u.size(); ++x)
    if (std::all_of(v.begin(), v.end(), [&](std::size_t y) { return ext_dim(u.member(x), u.member(y)) == 0; }))
      out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("the example inputs are tilting and cotilting of the stated degree") {
  auto b = testsupport::load_bundle();
  CHECK(verify_tilting(sum_named(*b->a, {"P(1)", "S(2)"}), 1).accepted);
  CHECK(verify_tilting(sum_named(*b->c, {"P(3)", "P(4)", "S(3)"}), 2).accepted);
  CHECK(verify_cotilting(sum_named(*b->a, {"P(1)", "S(1)"}), 1).accepted);
  CHECK(verify_cotilting(sum_named(*b->c, {"P(3)", "P(4)", "P(5)"}), 2).accepted);
  // pd S(3) = 2, so degree one is not enough.
  auto low = verify_tilting(sum_named(*b->c, {"P(3)", "P(4)", "S(3)"}), 1);
  CHECK_FALSE(low.accepted);
  CHECK(low.failed_axiom == "P1");
}

TEST_CASE("trivial tilting and cotilting modules") {
  auto b = testsupport::load_bundle();
  for (const auto* u : {b->total.get(), b->a.get(), b->c.get()}) {
    CHECK(verify_tilting(projectives(u->algebra()), 0).accepted);
    CHECK(verify_cotilting(injectives(u->algebra()), 0).accepted);
  }
}

TEST_CASE("refutations name the failing axiom") {
  auto b = testsupport::load_bundle();
  // Ext^1(S(1), S(2)) != 0.
  auto r = verify_tilting(sum_named(*b->a, {"S(1)", "S(2)"}), 1);
  CHECK_FALSE(r.accepted);
  CHECK(r.failed_axiom == "P2");
  // Too few summands to coresolve every projective.
  auto r3 = verify_tilting(sum_named(*b->a, {"P(1)"}), 1);
  CHECK_FALSE(r3.accepted);
  CHECK(r3.failed_axiom == "P3");
}

TEST_CASE("tilting modules have as many summands as vertices") {
  auto b = testsupport::load_bundle();
  // Every sum of distinct Λ″ members that is tilting has exactly three summands.
  const auto& u = *b->c;
  for (unsigned mask = 1; mask < (1u << u.size()); ++mask) {
    std::vector<std::size_t> ix;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (mask & (1u << i)) ix.push_back(i);
    auto deg = tilting_degree(sum_of_members(u, ix));
    if (deg) CHECK(ix.size() == 3);
  }
}

TEST_CASE("cotorsion pairs from tilting modules") {
  auto b = testsupport::load_bundle();
  const auto t3 = sum_named(*b->c, {"P(3)", "P(4)", "S(3)"});
  auto pair = cotorsion_pair_from_tilting(t3, 2, b->c);
  CHECK(testsupport::names_of(*b->c, pair.v) == std::vector<std::string>{"S(3)", "P(3)", "P(4)"});
  CHECK(pair.u == left_perp_oracle(*b->c, pair.v));
  auto check = check_cotorsion_pair(pair);
  CHECK(check.ok);
  CHECK(pair.hereditary);
  auto rec = is_tilting_cotorsion_pair(pair);
  CHECK(rec.accepted);
  CHECK(rec.n == 2);
  CHECK(testsupport::names_of(*b->c, rec.t_members) == std::vector<std::string>{"S(3)", "P(3)", "P(4)"});
  auto res = check_resolving_intersection(t3, 2, *b->c);
  CHECK(res.ok);
}

TEST_CASE("cotorsion pairs from cotilting modules") {
  auto b = testsupport::load_bundle();
  auto pair = cotorsion_pair_from_cotilting(sum_named(*b->a, {"P(1)", "S(1)"}), 1, b->a);
  CHECK(testsupport::names_of(*b->a, pair.v) == std::vector<std::string>{"P(1)", "S(1)"});
  CHECK(pair.u == left_perp_oracle(*b->a, pair.v));
  CHECK(check_cotorsion_pair(pair).ok);
  // P(1) = I(2) and S(1) = I(1): this T is the injective cogenerator, so the recognised degree is 0.
  auto rec = is_cotilting_cotorsion_pair(pair);
  CHECK(rec.accepted);
  CHECK(rec.n == 0);
  CHECK(cotilting_degree(sum_named(*b->a, {"P(1)", "S(1)"})) == std::optional<std::size_t>(0));
}

TEST_CASE("special preenvelopes for a tilting module") {
  auto b = testsupport::load_bundle();
  const auto t3 = sum_named(*b->c, {"P(3)", "P(4)", "S(3)"});
  for (const auto& x : b->c->members()) {
    auto pe = special_preenvelope_tilting(x, t3, 2);
    CHECK(pe.seq.is_exact());
    CHECK(is_isomorphic(pe.seq.sub(), x));
    for (std::size_t i = 1; i <= 2; ++i) CHECK(ext_dim(t3, pe.seq.middle(), i) == 0);
  }
  CHECK_THROWS_AS(special_preenvelope_tilting(b->c_member("S(4)"), sum_named(*b->c, {"S(3)", "S(4)"}), 2), Error);
}

TEST_CASE("add(T) resolutions and coresolutions") {
  auto b = testsupport::load_bundle();
  const auto t1 = sum_named(*b->a, {"P(1)", "S(2)"});
  // 0 -> S(2) -> P(1) -> S(1) -> 0 resolves S(1) by add T, but S(1) maps to no summand of T.
  auto res = in_t_vee(b->a_member("S(1)"), t1, 1);
  CHECK(res.accepted);
  CHECK(res.terms.size() == 2);
  CHECK_FALSE(in_t_wedge(b->a_member("S(1)"), t1, 1).accepted);
  CHECK(in_t_wedge(b->a_member("S(2)"), t1, 0).accepted);
}
