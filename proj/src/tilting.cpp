#include "tiltglue/tilting.hpp"

#include <algorithm>
#include <set>

#include "tiltglue/error.hpp"

namespace tiltglue {

namespace {

enum class Side { Tilting, Cotilting };

TiltingReport verify_axioms(const Module& t, std::size_t n, const Settings& settings, Side side) {
  TiltingReport r;
  r.n = n;
  const AlgebraPtr& a = t.algebra();
  auto fail = [&](const char* axiom, std::string detail) {
    if (r.failed_axiom.empty()) {
      r.failed_axiom = axiom;
      r.detail = std::move(detail);
    }
  };
  if (t.is_zero()) {
    fail("P3", "the zero module is neither tilting nor cotilting");
    return r;
  }
  const std::size_t cap = std::max(n, settings.cap);
  r.dimension = side == Side::Tilting ? projective_dimension(t, cap) : injective_dimension(t, cap);
  const char* dim_name = side == Side::Tilting ? "pd" : "id";
  if (!r.dimension || *r.dimension > n)
    fail("P1", std::string(dim_name) + " T = " + (r.dimension ? std::to_string(*r.dimension) : "> " + std::to_string(cap)) +
                   " exceeds " + std::to_string(n));
  for (std::size_t i = 1; i <= n; ++i) {
    r.self_ext.push_back(ext_dim(t, t, i));
    if (r.self_ext.back() != 0)
      fail("P2", "dim Ext^" + std::to_string(i) + "(T, T) = " + std::to_string(r.self_ext.back()));
  }
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    if (side == Side::Tilting) {
      r.sequences.push_back(in_t_wedge(projective_module(a, v), t, n, settings));
      if (!r.sequences.back().accepted)
        fail("P3", "P(" + a->quiver().vertex_name(v) + "): " + r.sequences.back().reason);
    } else {
      r.sequences.push_back(in_t_vee(injective_module(a, v), t, n, settings));
      if (!r.sequences.back().accepted)
        fail("P3", "I(" + a->quiver().vertex_name(v) + "): " + r.sequences.back().reason);
    }
  }
  r.accepted = r.failed_axiom.empty();
  return r;
}

bool contains(const std::vector<std::size_t>& xs, std::size_t x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  for (auto x : a)
    if (contains(b, x)) out.push_back(x);
  return out;
}

}  // namespace

TiltingReport verify_tilting(const Module& t, std::size_t n, const Settings& settings) {
  return verify_axioms(t, n, settings, Side::Tilting);
}

TiltingReport verify_cotilting_direct(const Module& t, std::size_t n, const Settings& settings) {
  return verify_axioms(t, n, settings, Side::Cotilting);
}

TiltingReport verify_cotilting_dual(const Module& t, std::size_t n, const Settings& settings) {
  return verify_axioms(dualize(t), n, settings, Side::Tilting);
}

TiltingReport verify_cotilting(const Module& t, std::size_t n, const Settings& settings) {
  TiltingReport direct = verify_cotilting_direct(t, n, settings);
  const TiltingReport dual = verify_cotilting_dual(t, n, settings);
  if (direct.accepted != dual.accepted || direct.dimension != dual.dimension)
    throw Error(ErrorCode::Internal, "cotilting check disagrees with the tilting check of the dual");
  return direct;
}

std::optional<std::size_t> tilting_degree(const Module& t, const Settings& settings) {
  for (std::size_t n = 0; n <= settings.cap; ++n)
    if (verify_tilting(t, n, settings).accepted) return n;
  return std::nullopt;
}

std::optional<std::size_t> cotilting_degree(const Module& t, const Settings& settings) {
  for (std::size_t n = 0; n <= settings.cap; ++n)
    if (verify_cotilting(t, n, settings).accepted) return n;
  return std::nullopt;
}

std::vector<std::size_t> left_perp(const Universe& u, const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    bool ok = true;
    for (auto y : v)
      if (u.ext(x, y, 1) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> right_perp(const Universe& u, const std::vector<std::size_t>& us) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    bool ok = true;
    for (auto y : us)
      if (u.ext(y, x, 1) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

bool higher_ext_vanishes(const Universe& u, const std::vector<std::size_t>& us, const std::vector<std::size_t>& vs,
                         std::size_t max_degree) {
  for (std::size_t i = 2; i <= max_degree; ++i)
    for (auto x : us)
      for (auto y : vs)
        if (u.ext(x, y, i) != 0) return false;
  return true;
}

std::vector<std::size_t> add_members(const Universe& u, const Module& m, std::uint64_t seed) {
  auto idx = u.identify_summands(m, seed);
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

CotorsionPair cotorsion_pair_from_tilting(const Module& t, std::size_t n, std::shared_ptr<const Universe> universe,
                                          const Settings& settings) {
  const Universe& uni = *universe;
  CotorsionPair p;
  p.universe = universe;
  p.kind = PairKind::Tilting;
  p.module = t;
  p.n = n;
  for (std::size_t x = 0; x < uni.size(); ++x) {
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) ok = ext_dim(t, uni.member(x), i) == 0;
    if (ok) p.v.push_back(x);
  }
  p.u = left_perp(uni, p.v);
  std::vector<std::size_t> wedge;
  for (std::size_t x = 0; x < uni.size(); ++x)
    if (in_t_wedge(uni.member(x), t, n, settings).accepted) wedge.push_back(x);
  if (wedge != p.u)
    throw Error(ErrorCode::UniverseInconsistent, "left perp of T^perp " + uni.describe(p.u) +
                                                     " differs from the coresolvable members " + uni.describe(wedge));
  if (right_perp(uni, p.u) != p.v)
    throw Error(ErrorCode::UniverseInconsistent, "T^perp is not the right perp of its left perp");
  p.hereditary = higher_ext_vanishes(uni, p.u, p.v, 2);
  if (!p.hereditary) throw Error(ErrorCode::UniverseInconsistent, "the pair of a tilting module is not hereditary");
  return p;
}

CotorsionPair cotorsion_pair_from_cotilting(const Module& t, std::size_t n, std::shared_ptr<const Universe> universe,
                                            const Settings& settings) {
  const Universe& uni = *universe;
  CotorsionPair p;
  p.universe = universe;
  p.kind = PairKind::Cotilting;
  p.module = t;
  p.n = n;
  for (std::size_t x = 0; x < uni.size(); ++x) {
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) ok = ext_dim(uni.member(x), t, i) == 0;
    if (ok) p.u.push_back(x);
  }
  p.v = right_perp(uni, p.u);
  std::vector<std::size_t> vee;
  for (std::size_t x = 0; x < uni.size(); ++x)
    if (in_t_vee(uni.member(x), t, n, settings).accepted) vee.push_back(x);
  if (vee != p.v)
    throw Error(ErrorCode::UniverseInconsistent, "right perp of ^perp T " + uni.describe(p.v) +
                                                     " differs from the resolvable members " + uni.describe(vee));
  if (left_perp(uni, p.v) != p.u)
    throw Error(ErrorCode::UniverseInconsistent, "^perp T is not the left perp of its right perp");
  p.hereditary = higher_ext_vanishes(uni, p.u, p.v, 2);
  if (!p.hereditary) throw Error(ErrorCode::UniverseInconsistent, "the pair of a cotilting module is not hereditary");
  return p;
}

PairCheck check_cotorsion_pair(const CotorsionPair& pair, const Settings& settings) {
  const Universe& uni = *pair.universe;
  const AlgebraPtr& a = uni.algebra();
  PairCheck c;
  auto fail = [&](std::string s) {
    c.ok = false;
    c.failures.push_back(std::move(s));
  };
  for (auto x : pair.u)
    for (auto y : pair.v)
      if (uni.ext(x, y, 1) != 0) fail("Ext^1(" + uni.member_name(x) + ", " + uni.member_name(y) + ") != 0");
  if (right_perp(uni, pair.u) != pair.v) fail("V is not the right perp of U");
  if (left_perp(uni, pair.v) != pair.u) fail("U is not the left perp of V");
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    const auto p = uni.identify(projective_module(a, v), settings.seed);
    if (!p) fail("P(" + a->quiver().vertex_name(v) + ") is missing from the universe");
    else if (!contains(pair.u, *p)) fail("projective " + uni.member_name(*p) + " is not in U");
    const auto i = uni.identify(injective_module(a, v), settings.seed);
    if (!i) fail("I(" + a->quiver().vertex_name(v) + ") is missing from the universe");
    else if (!contains(pair.v, *i)) fail("injective " + uni.member_name(*i) + " is not in V");
  }
  const std::size_t top = std::max<std::size_t>(pair.n + 2, 3);
  c.ext2_vanishes = higher_ext_vanishes(uni, pair.u, pair.v, 2);
  c.ext_higher_vanishes = higher_ext_vanishes(uni, pair.u, pair.v, top);
  c.u_closed_under_syzygy = true;
  for (auto x : pair.u)
    for (auto s : uni.identify_summands(syzygy(uni.member(x), 1), settings.seed))
      if (!contains(pair.u, s)) c.u_closed_under_syzygy = false;
  c.v_closed_under_cosyzygy = true;
  for (auto y : pair.v)
    for (auto s : uni.identify_summands(cosyzygy(uni.member(y), 1), settings.seed))
      if (!contains(pair.v, s)) c.v_closed_under_cosyzygy = false;
  const bool all_same = c.ext2_vanishes == c.ext_higher_vanishes && c.ext2_vanishes == c.u_closed_under_syzygy &&
                        c.ext2_vanishes == c.v_closed_under_cosyzygy;
  if (!all_same) fail("the characterisations of hereditary disagree");
  if (c.ext2_vanishes != pair.hereditary) fail("stored hereditary flag is wrong");
  return c;
}

TiltingPairRecognition is_tilting_cotorsion_pair(const CotorsionPair& pair, const Settings& settings) {
  TiltingPairRecognition r;
  if (!pair.hereditary) {
    r.reason = "precondition: the pair is not hereditary";
    return r;
  }
  const Universe& uni = *pair.universe;
  for (auto x : pair.u) {
    auto pd = projective_dimension(uni.member(x), settings.cap);
    if (!pd) {
      r.reason = "pd " + uni.member_name(x) + " exceeds the cap";
      return r;
    }
    r.n = std::max(r.n, *pd);
  }
  r.t_members = intersect(pair.u, pair.v);
  r.report = verify_tilting(sum_of_members(uni, r.t_members), r.n, settings);
  r.accepted = r.report.accepted;
  if (!r.accepted) r.reason = "U cap V fails " + r.report.failed_axiom + ": " + r.report.detail;
  return r;
}

TiltingPairRecognition is_cotilting_cotorsion_pair(const CotorsionPair& pair, const Settings& settings) {
  TiltingPairRecognition r;
  if (!pair.hereditary) {
    r.reason = "precondition: the pair is not hereditary";
    return r;
  }
  const Universe& uni = *pair.universe;
  for (auto y : pair.v) {
    auto id = injective_dimension(uni.member(y), settings.cap);
    if (!id) {
      r.reason = "id " + uni.member_name(y) + " exceeds the cap";
      return r;
    }
    r.n = std::max(r.n, *id);
  }
  r.t_members = intersect(pair.u, pair.v);
  r.report = verify_cotilting(sum_of_members(uni, r.t_members), r.n, settings);
  r.accepted = r.report.accepted;
  if (!r.accepted) r.reason = "U cap V fails " + r.report.failed_axiom + ": " + r.report.detail;
  return r;
}

ResolvingCheck check_resolving_intersection(const Module& t, std::size_t n, const Universe& universe,
                                            const Settings& settings) {
  ResolvingCheck c;
  for (std::size_t x = 0; x < universe.size(); ++x) {
    if (in_t_wedge(universe.member(x), t, settings.cap, settings).accepted) c.coresolved.push_back(x);
    if (in_t_vee(universe.member(x), t, settings.cap, settings).accepted) c.resolved.push_back(x);
  }
  for (std::size_t i = 1; i <= std::max<std::size_t>(n, 3); ++i)
    for (auto x : c.coresolved)
      for (auto y : c.resolved)
        if (universe.ext(x, y, i) != 0) {
          c.ok = false;
          c.failures.push_back("Ext^" + std::to_string(i) + "(" + universe.member_name(x) + ", " +
                               universe.member_name(y) + ") != 0");
        }
  if (intersect(c.coresolved, c.resolved) != add_members(universe, t, settings.seed)) {
    c.ok = false;
    c.failures.push_back("the two classes do not meet exactly in add T");
  }
  return c;
}

}  // namespace tiltglue
