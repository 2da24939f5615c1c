#pragma once

// Approximations: universal extensions, special preenvelopes for tilting
// modules, minimal approximations by add-closures, and T^vee / T^wedge membership.

#include <optional>
#include <vector>

#include "tiltglue/homology.hpp"
#include "tiltglue/universe.hpp"

namespace tiltglue {

struct UniversalExtension {
  std::size_t k = 0;        // dim Ext^1(E, A)
  ShortExactSequence seq;  // 0 -> A -> A' -> E^k -> 0
};

/// Pushes the cocycle basis of Ext^1(E, A) out at once; Ext^1(E, A') = 0.
UniversalExtension universal_extension(const Module& a, const Module& e);

/// 0 -> A -> V -> U -> 0 with Ext^{>=1}(T, V) = 0 and U built from syzygies of T.
struct Preenvelope {
  ShortExactSequence seq;
  std::size_t passes = 0;  // descending sweeps j = n..1 that were needed
};

/// Throws Error(NotTilting) when pd T > n or T has self-extensions up to n.
Preenvelope special_preenvelope_tilting(const Module& a, const Module& t, std::size_t n,
                                         const Settings& settings = {});

/// Minimal approximation of X by add(candidates): X -> C_0 (left) or C_0 -> X (right).
struct Approximation {
  Morphism map;
  std::vector<std::size_t> summands;  // candidate index of each summand of C_0, in order
};

Approximation minimal_left_approximation(const Module& x, const std::vector<Module>& candidates);
Approximation minimal_right_approximation(const Module& x, const std::vector<Module>& candidates);

/// 0 -> K -> U_0 -> X -> 0 from a minimal right add(U)-approximation.
/// Throws NotSurjective, or KernelNotInV when Ext^1(U, K) != 0 for some listed U.
ShortExactSequence special_precover_universe(const Module& x, const Universe& universe,
                                             const std::vector<std::size_t>& u_members);
/// 0 -> X -> V_0 -> U -> 0 from a minimal left add(V)-approximation.
/// Throws NotInjective, or KernelNotInV when Ext^1(U, V) != 0 for some listed V.
ShortExactSequence special_preenvelope_universe(const Module& x, const Universe& universe,
                                                const std::vector<std::size_t>& v_members);

/// A finite add(T) coresolution 0 -> X -> T^0 -> ... -> T^m -> 0 (or the dual resolution).
struct AddResolution {
  bool accepted = false;
  std::vector<Module> terms;        // T^0, T^1, ...
  std::vector<Morphism> maps;       // X -> T^0, T^0 -> T^1, ... (resp. T_0 -> X, T_1 -> T_0, ...)
  std::string reason;               // why it was rejected
};

/// Does X have an add(T) coresolution of length <= n? Built from iterated
/// minimal left add(T)-approximations; this is the class T^vee_n of a tilting T.
AddResolution in_t_wedge(const Module& x, const Module& t, std::size_t n, const Settings& settings = {});
/// Dual: an add(T) resolution of length <= n from minimal right approximations.
AddResolution in_t_vee(const Module& x, const Module& t, std::size_t n, const Settings& settings = {});

}  // namespace tiltglue
