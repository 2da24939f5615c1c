#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "tiltglue/error.hpp"

using namespace tiltglue;
using testsupport::names_of;
using testsupport::sum_named;

namespace {

std::multiset<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

// V2 straight from the definition: i^! B in V1 and j^* B in V3, with the class
// tests done by decomposing and naming summands.
std::vector<std::size_t> v2_oracle(const testsupport::Bundle& b, const CotorsionPair& pa, const CotorsionPair& pc) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.total->size(); ++i) {
    const auto& m = b.total->member(i);
    auto x = b.a->identify_summands(b.r.i_shriek(m));
    auto y = b.c->identify_summands(b.r.j_upper_star(m));
    auto in = [](const std::vector<std::size_t>& s, const std::vector<std::size_t>& cls) {
      return std::all_of(s.begin(), s.end(), [&](std::size_t k) { return std::binary_search(cls.begin(), cls.end(), k); });
    };
    if (in(x, pa.v) && in(y, pc.v)) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("glued tilting module of the example") {
  auto b = testsupport::load_bundle();
  UniverseTriple ut{b->total, b->a, b->c};
  auto g = glue_tilting(b->r, sum_named(*b->a, {"P(1)", "S(2)"}), 1, sum_named(*b->c, {"P(3)", "P(4)", "S(3)"}), 2,
                        ut);
  CHECK(as_set(names_of(*b->total, g.t2_members)) == as_set(testsupport::kExpected52));
  CHECK(g.n2 == 2);
  CHECK(g.report.accepted);
  CHECK(g.constructive_matches);
  CHECK(g.glued.t2 == g.t2_members);
  CHECK(g.pd_u2 == std::optional<std::size_t>(2));
  CHECK_FALSE(g.split_check.has_value());
  CHECK(g.glued.v2() == v2_oracle(*b, g.glued.pair_a, g.glued.pair_c));
  REQUIRE(g.ks.size() == 3);
  for (const auto& k : g.ks) {
    CHECK(k.column.is_exact());
    CHECK(k.row.is_exact());
    CHECK(k.in_t2);
  }
}

TEST_CASE("glued cotilting module of the example") {
  auto b = testsupport::load_bundle();
  UniverseTriple ut{b->total, b->a, b->c};
  auto g = glue_cotilting(b->r, sum_named(*b->a, {"P(1)", "S(1)"}), 1, sum_named(*b->c, {"P(3)", "P(4)", "P(5)"}),
                          2, ut, {}, false);
  CHECK(as_set(names_of(*b->total, g.t2_members)) == as_set(testsupport::kExpected51));
  CHECK(g.report.accepted);
  CHECK(g.id_v2 == std::optional<std::size_t>(2));
  CHECK(g.glued.v2() == v2_oracle(*b, g.glued.pair_a, g.glued.pair_c));
}

TEST_CASE("trivial inputs glue to the trivial module") {
  auto b = testsupport::load_bundle();
  UniverseTriple ut{b->total, b->a, b->c};
  auto g = glue_tilting(b->r, sum_named(*b->a, {"P(1)", "S(2)"}), 0, sum_named(*b->c, {"P(3)", "P(4)", "P(5)"}), 0,
                        ut);
  // The projectives of Λ: P(1), P(2) = S(2), P(3), P(4), P(5).
  CHECK(as_set(names_of(*b->total, g.t2_members)) ==
        as_set({"(P(1)|0)", "(S(2)|0)", "(P(1)|P(3))", "(S(2)|P(4))", "(0|P(5))"}));
  CHECK(g.n2 == 0);
}

TEST_CASE("approximation sequences for every member") {
  auto b = testsupport::load_bundle();
  UniverseTriple ut{b->total, b->a, b->c};
  auto g = glue_tilting(b->r, sum_named(*b->a, {"P(1)", "S(2)"}), 1, sum_named(*b->c, {"P(3)", "P(4)", "S(3)"}), 2,
                        ut);
  const auto& u = *b->total;
  REQUIRE(g.glued.precovers.size() == u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& pc = g.glued.precovers[i];
    CHECK(pc.is_exact());
    CHECK(is_isomorphic(pc.quotient(), u.member(i)));
    CHECK(in_class(u, g.glued.u2(), pc.middle()));
    CHECK(in_class(u, g.glued.v2(), pc.sub()));
    const auto& pe = g.glued.preenvelopes[i];
    CHECK(pe.is_exact());
    CHECK(in_class(u, g.glued.v2(), pe.middle()));
    CHECK(in_class(u, g.glued.u2(), pe.quotient()));
  }
}

TEST_CASE("non-tilting inputs are refused") {
  auto b = testsupport::load_bundle();
  UniverseTriple ut{b->total, b->a, b->c};
  try {
    glue_tilting(b->r, sum_named(*b->a, {"S(1)", "S(2)"}), 1, sum_named(*b->c, {"P(3)", "P(4)", "S(3)"}), 2, ut);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
}

TEST_CASE("reproduce reports a diff when the universe lacks a member") {
  auto rp = [] {
    Workspace ws;
    return reproduce(ws, example_path("5-2"));
  }();
  CHECK(rp.match);
  CHECK(rp.diff.empty());
  CHECK(rp.outcome.summary == "T2 = {(S(2)|P(4)), (P(1)|P(3)), (S(2)|0), (S(1)|S(3)), (P(1)|0)}\nn2 = 2\n");
  CHECK(exit_code_for(ErrorCode::ParseError) == 3);
  CHECK(exit_code_for(ErrorCode::PreconditionFailed) == 4);
}
