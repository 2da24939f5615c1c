#include "tiltglue/approx.hpp"

#include "tiltglue/error.hpp"

namespace tiltglue {

UniversalExtension universal_extension(const Module& a, const Module& e) {
  const ExtGroup g = ext(e, a, 1);
  UniversalExtension out;
  out.k = g.dimension;
  if (out.k == 0) {
    const Module zero = Module::zero(a.algebra());
    out.seq = {Morphism::identity(a), Morphism::zero(a, zero)};
    return out;
  }
  const auto& step = syzygy_step(e, 0);
  const std::vector<Module> omegas(out.k, step.inclusion.source());
  const std::vector<Module> covers(out.k, step.cover.source());
  const std::vector<Module> copies(out.k, e);
  const DirectSum so = direct_sum(omegas, a.algebra());
  const DirectSum sp = direct_sum(covers, a.algebra());
  const DirectSum se = direct_sum(copies, a.algebra());
  const Morphism iota = diagonal_map(std::vector<Morphism>(out.k, step.inclusion), so, sp);
  const Morphism pi = diagonal_map(std::vector<Morphism>(out.k, step.cover), sp, se);
  std::vector<Morphism> cocycles;
  for (const auto& c : g.cocycles) cocycles.push_back(Morphism::unchecked(step.inclusion.source(), a, c.blocks()));
  out.seq = pushout_extension(iota, pi, sum_map(cocycles, so));
  return out;
}

Preenvelope special_preenvelope_tilting(const Module& a, const Module& t, std::size_t n, const Settings& settings) {
  require_same_algebra(a.algebra(), t.algebra(), "preenvelope");
  if (!projective_dimension(t, n)) throw Error(ErrorCode::NotTilting, "pd T exceeds " + std::to_string(n));
  for (std::size_t i = 1; i <= n; ++i)
    if (ext_dim(t, t, i) != 0) throw Error(ErrorCode::NotTilting, "Ext^" + std::to_string(i) + "(T, T) != 0");

  Preenvelope out;
  Morphism left = Morphism::identity(a);
  auto vanishes = [&](const Module& v) {
    for (std::size_t i = 1; i <= n; ++i)
      if (ext_dim(t, v, i) != 0) return false;
    return true;
  };
  const std::size_t max_passes = std::max<std::size_t>(settings.cap, 1);
  while (!vanishes(left.target())) {
    if (out.passes == max_passes)
      throw Error(ErrorCode::Internal, "Ext(T, -) still nonzero after " + std::to_string(max_passes) + " sweeps");
    ++out.passes;
    // Kill Ext^j(T, -) = Ext^1(Omega^{j-1} T, -) from the top degree down.
    for (std::size_t j = n; j >= 1; --j) {
      const UniversalExtension ue = universal_extension(left.target(), syzygy(t, j - 1));
      if (ue.k > 0) left = ue.seq.left * left;
    }
  }
  const QuotientObject u = cokernel(left);
  out.seq = {left, u.projection};
  return out;
}

namespace {

enum class Side { Left, Right };

// Greedy removal of candidate maps while the approximation property survives.
// With p larger than the multiplicities involved this leaves a minimal approximation.
Approximation minimal_approximation(const Module& x, const std::vector<Module>& candidates, Side side) {
  struct Piece {
    std::size_t candidate;
    Morphism map;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto maps = side == Side::Left ? hom_basis(x, candidates[i]) : hom_basis(candidates[i], x);
    for (const auto& f : maps) pieces.push_back({i, f});
  }
  // For every test object C_c and piece j: the maps X -> C_c (or C_c -> X) obtained through piece j.
  std::vector<HomSpace> targets;
  for (const auto& c : candidates) targets.push_back(side == Side::Left ? HomSpace(x, c) : HomSpace(c, x));
  std::vector<std::vector<Matrix>> through(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const HomSpace& h = targets[c];
    for (const auto& piece : pieces) {
      const auto connecting = side == Side::Left ? hom_basis(candidates[piece.candidate], candidates[c])
                                                 : hom_basis(candidates[c], candidates[piece.candidate]);
      Matrix cols(h.dimension(), connecting.size(), x.field());
      for (std::size_t k = 0; k < connecting.size(); ++k) {
        const Morphism composite = side == Side::Left ? connecting[k] * piece.map : piece.map * connecting[k];
        const auto coords = h.coordinates(composite);
        for (std::size_t r = 0; r < coords.size(); ++r) cols(r, k) = coords[r];
      }
      through[c].push_back(std::move(cols));
    }
  }
  std::vector<bool> active(pieces.size(), true);
  auto approximates = [&]() {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::vector<Matrix> blocks;
      for (std::size_t j = 0; j < pieces.size(); ++j)
        if (active[j]) blocks.push_back(through[c][j]);
      const std::size_t r = blocks.empty() ? 0 : rank(hstack(blocks, targets[c].dimension(), x.field()));
      if (r != targets[c].dimension()) return false;
    }
    return true;
  };
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    active[j] = false;
    if (!approximates()) active[j] = true;
  }

  Approximation out;
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (!active[j]) continue;
    parts.push_back(candidates[pieces[j].candidate]);
    maps.push_back(pieces[j].map);
    out.summands.push_back(pieces[j].candidate);
  }
  const DirectSum sum = direct_sum(parts, x.algebra());
  if (maps.empty()) {
    out.map = side == Side::Left ? Morphism::zero(x, sum.object) : Morphism::zero(sum.object, x);
  } else {
    out.map = side == Side::Left ? tuple_map(maps, sum) : sum_map(maps, sum);
  }
  return out;
}

std::vector<Module> summand_types(const Module& t, std::uint64_t seed) {
  std::vector<Module> out;
  for (auto& [m, mult] : decompose_grouped(t, seed)) out.push_back(m);
  return out;
}

}  // namespace

Approximation minimal_left_approximation(const Module& x, const std::vector<Module>& candidates) {
  return minimal_approximation(x, candidates, Side::Left);
}

Approximation minimal_right_approximation(const Module& x, const std::vector<Module>& candidates) {
  return minimal_approximation(x, candidates, Side::Right);
}

ShortExactSequence special_precover_universe(const Module& x, const Universe& universe,
                                             const std::vector<std::size_t>& u_members) {
  std::vector<Module> cands;
  for (auto i : u_members) cands.push_back(universe.member(i));
  const Approximation ap = minimal_right_approximation(x, cands);
  if (!ap.map.is_surjective())
    throw Error(ErrorCode::NotSurjective, "the add(U)-approximation is not onto; is a projective missing from U?");
  const SubObject k = kernel(ap.map);
  for (auto i : u_members)
    if (ext_dim(universe.member(i), k.object, 1) != 0)
      throw Error(ErrorCode::KernelNotInV, "kernel of the minimal precover has Ext^1 with " + universe.member_name(i));
  return {k.inclusion, ap.map};
}

ShortExactSequence special_preenvelope_universe(const Module& x, const Universe& universe,
                                                const std::vector<std::size_t>& v_members) {
  std::vector<Module> cands;
  for (auto i : v_members) cands.push_back(universe.member(i));
  const Approximation ap = minimal_left_approximation(x, cands);
  if (!ap.map.is_injective())
    throw Error(ErrorCode::NotInjective, "the add(V)-approximation is not into; is an injective missing from V?");
  const QuotientObject c = cokernel(ap.map);
  for (auto i : v_members)
    if (ext_dim(c.object, universe.member(i), 1) != 0)
      throw Error(ErrorCode::KernelNotInV, "cokernel of the minimal preenvelope has Ext^1 into " +
                                               universe.member_name(i));
  return {ap.map, c.projection};
}

AddResolution in_t_wedge(const Module& x, const Module& t, std::size_t n, const Settings& settings) {
  const auto cands = summand_types(t, settings.seed);
  AddResolution out;
  Module current = x;
  std::optional<Morphism> previous;  // T^{k-1} -> current
  for (std::size_t k = 0; k <= n; ++k) {
    if (current.is_zero()) {
      out.accepted = true;
      return out;
    }
    const Approximation ap = minimal_left_approximation(current, cands);
    if (!ap.map.is_injective()) {
      out.reason = "left add(T)-approximation at step " + std::to_string(k) + " is not injective";
      return out;
    }
    out.terms.push_back(ap.map.target());
    out.maps.push_back(previous ? ap.map * *previous : ap.map);
    if (ap.map.is_surjective()) {
      out.accepted = true;
      return out;
    }
    const QuotientObject next = cokernel(ap.map);
    previous = next.projection;
    current = next.object;
  }
  out.reason = "no add(T) coresolution of length <= " + std::to_string(n);
  return out;
}

AddResolution in_t_vee(const Module& x, const Module& t, std::size_t n, const Settings& settings) {
  const auto cands = summand_types(t, settings.seed);
  AddResolution out;
  Module current = x;
  std::optional<Morphism> previous;  // current -> T_{k-1}
  for (std::size_t k = 0; k <= n; ++k) {
    if (current.is_zero()) {
      out.accepted = true;
      return out;
    }
    const Approximation ap = minimal_right_approximation(current, cands);
    if (!ap.map.is_surjective()) {
      out.reason = "right add(T)-approximation at step " + std::to_string(k) + " is not surjective";
      return out;
    }
    out.terms.push_back(ap.map.source());
    out.maps.push_back(previous ? *previous * ap.map : ap.map);
    if (ap.map.is_injective()) {
      out.accepted = true;
      return out;
    }
    const SubObject next = kernel(ap.map);
    previous = next.inclusion;
    current = next.object;
  }
  out.reason = "no add(T) resolution of length <= " + std::to_string(n);
  return out;
}

}  // namespace tiltglue
