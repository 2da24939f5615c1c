#include "tiltglue/glue.hpp"

#include <algorithm>

#include "tiltglue/error.hpp"

namespace tiltglue {

namespace {

bool contains(const std::vector<std::size_t>& xs, std::size_t x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  for (auto x : a)
    if (contains(b, x)) out.push_back(x);
  return out;
}

std::vector<std::size_t> unique_sorted(std::vector<std::size_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void require_universe_over(const Universe& u, const AlgebraPtr& a, const char* what) {
  if (!same_algebra(u.algebra(), a))
    throw Error(ErrorCode::AlgebraMismatch, std::string(what) + " universe '" + u.name() + "' is not over '" +
                                                a->name() + "'");
}

// Ext^1(U, X) = 0 for all listed U: the perp description of the same class.
bool right_perp_of(const Universe& u, const std::vector<std::size_t>& us, const Module& x) {
  for (auto i : us)
    if (ext_dim(u.member(i), x, 1) != 0) return false;
  return true;
}

}  // namespace

bool in_class(const Universe& u, const std::vector<std::size_t>& members, const Module& m, std::uint64_t seed) {
  for (auto i : u.identify_summands(m, seed))
    if (!contains(members, i)) return false;
  return true;
}

GluedPair glued_classes(const Recollement& r, const CotorsionPair& pair_a, const CotorsionPair& pair_c,
                        std::shared_ptr<const Universe> universe, const Settings& settings) {
  if (!r.exactness().i_shriek.exact) throw Error(ErrorCode::ExactnessMissing, "i^! is not exact");
  if (!r.exactness().j_lower_shriek.exact) throw Error(ErrorCode::ExactnessMissing, "j_! is not exact");
  const Universe& uni = *universe;
  require_universe_over(uni, r.total(), "total");
  require_universe_over(*pair_a.universe, r.a_algebra(), "A-side");
  require_universe_over(*pair_c.universe, r.c_algebra(), "C-side");
  const Universe& ua = *pair_a.universe;
  const Universe& uc = *pair_c.universe;

  GluedPair g;
  g.pair_a = pair_a;
  g.pair_c = pair_c;
  g.pair.universe = universe;
  for (std::size_t b = 0; b < uni.size(); ++b) {
    const Module& m = uni.member(b);
    const Module x = r.i_shriek(m), y = r.j_upper_star(m);
    const bool in_v = in_class(ua, pair_a.v, x, settings.seed) && in_class(uc, pair_c.v, y, settings.seed);
    const bool by_ext = right_perp_of(ua, pair_a.u, x) && right_perp_of(uc, pair_c.u, y);
    if (in_v != by_ext)
      throw Error(ErrorCode::UniverseInconsistent,
                  "V-membership of " + uni.member_name(b) + " differs between add and Ext descriptions");
    if (in_v) g.pair.v.push_back(b);
    if (in_class(ua, pair_a.u, r.i_upper_star(m), settings.seed) && in_class(uc, pair_c.u, y, settings.seed))
      g.u2_tilde.push_back(b);
  }
  g.pair.u = left_perp(uni, g.pair.v);
  // U1 and U3 are closed under summands, so add U2~ meets the universe in U2~ itself.
  for (auto b : g.pair.u)
    if (!contains(g.u2_tilde, b))
      throw Error(ErrorCode::UniverseInconsistent, uni.member_name(b) + " lies in U2 but not in add U2~");
  g.pair.hereditary = higher_ext_vanishes(uni, g.pair.u, g.pair.v, 2);
  g.check = check_cotorsion_pair(g.pair, settings);
  if (!g.check.ok) {
    std::string msg = "glued pair fails:";
    for (const auto& f : g.check.failures) msg += " " + f + ";";
    throw Error(ErrorCode::UniverseInconsistent, msg);
  }
  if (pair_a.hereditary && pair_c.hereditary && !g.pair.hereditary)
    throw Error(ErrorCode::UniverseInconsistent, "hereditary inputs glued to a non-hereditary pair");
  for (std::size_t b = 0; b < uni.size(); ++b) {
    g.precovers.push_back(special_precover_universe(uni.member(b), uni, g.pair.u));
    g.preenvelopes.push_back(special_preenvelope_universe(uni.member(b), uni, g.pair.v));
  }
  g.t2 = intersect(g.pair.u, g.pair.v);
  return g;
}

KConstruction k_construction(const Recollement& r, const Module& t3, const CotorsionPair& pair_a,
                             const Settings& settings) {
  if (pair_a.kind != PairKind::Tilting)
    throw Error(ErrorCode::PreconditionFailed, "the A-side pair is not a tilting pair");
  KConstruction k;
  k.t3 = t3;
  k.j_t3 = r.j_lower_shriek(t3);
  const CanonicalSequence upper = r.canonical_sequence_upper(k.j_t3);  // i_* i^! j_! T -> j_! T -> j_* T
  const Module x = r.i_shriek(k.j_t3);
  k.preenvelope = special_preenvelope_tilting(x, pair_a.module, pair_a.n, settings);
  k.square = pushout(upper.left, r.i_star(k.preenvelope.seq.left));
  const QuotientObject col = cokernel(k.square.from_b);
  const QuotientObject row = cokernel(k.square.from_c);
  k.column = {k.square.from_b, col.projection};
  k.row = {k.square.from_c, row.projection};
  k.column_matches = k.column.is_exact() && is_isomorphic(col.object, r.i_star(k.preenvelope.seq.quotient()),
                                                           settings.seed);
  k.row_matches = k.row.is_exact() && is_isomorphic(row.object, r.j_star(t3), settings.seed);
  return k;
}

GluedTilting glue_tilting(const Recollement& r, const Module& t1, std::size_t n1, const Module& t3, std::size_t n3,
                          const UniverseTriple& universes, const Settings& settings) {
  const TiltingReport r1 = verify_tilting(t1, n1, settings);
  if (!r1.accepted)
    throw Error(ErrorCode::PreconditionFailed, "T1 is not " + std::to_string(n1) + "-tilting (" + r1.failed_axiom +
                                                   ": " + r1.detail + ")");
  const TiltingReport r3 = verify_tilting(t3, n3, settings);
  if (!r3.accepted)
    throw Error(ErrorCode::PreconditionFailed, "T3 is not " + std::to_string(n3) + "-tilting (" + r3.failed_axiom +
                                                   ": " + r3.detail + ")");
  const CotorsionPair pa = cotorsion_pair_from_tilting(t1, n1, universes.a, settings);
  const CotorsionPair pc = cotorsion_pair_from_tilting(t3, n3, universes.c, settings);

  GluedTilting out;
  out.glued = glued_classes(r, pa, pc, universes.total, settings);
  const Universe& uni = *universes.total;

  std::vector<Module> parts{r.i_star(t1)};
  for (const auto& s : decompose(t3, settings.seed)) {
    KConstruction k = k_construction(r, s.module, pa, settings);
    k.k_summands = uni.identify_summands(k.k(), settings.seed);
    k.in_t2 = std::all_of(k.k_summands.begin(), k.k_summands.end(),
                          [&](std::size_t i) { return contains(out.glued.t2, i); });
    parts.push_back(k.k());
    out.ks.push_back(std::move(k));
  }
  out.t2 = direct_sum(parts, r.total()).object;
  out.bound = std::max(n1, n3);
  const auto pd = projective_dimension(out.t2, std::max(settings.cap, out.bound));
  if (!pd) throw Error(ErrorCode::NotTilting, "pd of the glued module exceeds the cap");
  out.n2 = *pd;
  out.report = verify_tilting(out.t2, out.n2, settings);
  out.t2_members = add_members(uni, out.t2, settings.seed);
  out.constructive_matches = out.t2_members == out.glued.t2;

  out.pd_u2_bound = std::max(n1 + 1, n3);
  if (global_dimension(r.a_algebra(), settings.cap)) {
    std::size_t worst = 0;
    bool bounded = true;
    for (auto u : out.glued.u2()) {
      const auto d = projective_dimension(uni.member(u), settings.cap);
      if (!d) {
        bounded = false;
        break;
      }
      worst = std::max(worst, *d);
    }
    if (bounded) out.pd_u2 = worst;
  }

  if (r.exactness().i_upper_star.exact) {
    const Module split = direct_sum({r.i_star(t1), r.j_lower_shriek(t3)}, r.total()).object;
    out.split_check = add_members(uni, split, settings.seed) == out.t2_members;
    std::vector<std::size_t> images;
    for (const auto& s : decompose(t1, settings.seed)) {
      const auto i = uni.identify(r.i_star(s.module), settings.seed);
      if (i) images.push_back(*i);
    }
    for (const auto& s : decompose(t3, settings.seed)) {
      const auto i = uni.identify(r.j_lower_shriek(s.module), settings.seed);
      if (i) images.push_back(*i);
    }
    out.indecomposables_check =
        std::all_of(out.glued.t2.begin(), out.glued.t2.end(), [&](std::size_t i) { return contains(images, i); });
  }
  return out;
}

std::shared_ptr<const Universe> dual_universe(const Universe& u) {
  std::vector<Module> members;
  for (const auto& m : u.members()) members.push_back(dualize(m));
  return std::make_shared<const Universe>("D" + u.name(), opposite(u.algebra()), u.member_names(),
                                          std::move(members));
}

GluedCotilting glue_cotilting(const Recollement& r, const Module& t1, std::size_t n1, const Module& t3,
                              std::size_t n3, const UniverseTriple& universes, const Settings& settings,
                              bool with_dual_route) {
  const TiltingReport r1 = verify_cotilting(t1, n1, settings);
  if (!r1.accepted)
    throw Error(ErrorCode::PreconditionFailed, "T1 is not " + std::to_string(n1) + "-cotilting (" +
                                                   r1.failed_axiom + ": " + r1.detail + ")");
  const TiltingReport r3 = verify_cotilting(t3, n3, settings);
  if (!r3.accepted)
    throw Error(ErrorCode::PreconditionFailed, "T3 is not " + std::to_string(n3) + "-cotilting (" +
                                                   r3.failed_axiom + ": " + r3.detail + ")");
  const CotorsionPair pa = cotorsion_pair_from_cotilting(t1, n1, universes.a, settings);
  const CotorsionPair pc = cotorsion_pair_from_cotilting(t3, n3, universes.c, settings);

  GluedCotilting out;
  out.glued = glued_classes(r, pa, pc, universes.total, settings);
  const Universe& uni = *universes.total;
  out.t2_members = out.glued.t2;
  out.t2 = sum_of_members(uni, out.t2_members);
  const auto id = injective_dimension(out.t2, settings.cap);
  if (!id) throw Error(ErrorCode::NotTilting, "id of the glued module exceeds the cap");
  out.n2 = *id;
  out.report = verify_cotilting(out.t2, out.n2, settings);

  out.id_v2_bound = std::max(n1 + 1, n3);
  std::size_t worst = 0;
  bool bounded = true;
  for (auto v : out.glued.v2()) {
    const auto d = injective_dimension(uni.member(v), settings.cap);
    if (!d) {
      bounded = false;
      break;
    }
    worst = std::max(worst, *d);
  }
  if (bounded) out.id_v2 = worst;

  if (with_dual_route) {
    try {
      const Recollement op = r.opposite();
      const UniverseTriple dual{dual_universe(uni), dual_universe(*universes.c), dual_universe(*universes.a)};
      const GluedTilting g = glue_tilting(op, dualize(t3), n3, dualize(t1), n1, dual, settings);
      out.dual_members = unique_sorted(g.t2_members);
    } catch (const Error& e) {
      out.dual_error = std::string(to_string(e.code())) + ": " + e.what();
    }
  }
  return out;
}

}  // namespace tiltglue
