#pragma once

// n-tilting and n-cotilting modules, and cotorsion pairs relative to a universe.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltglue/approx.hpp"
#include "tiltglue/universe.hpp"

namespace tiltglue {

/// Outcome of checking the three axioms; a refutation is a value, not an error.
struct TiltingReport {
  bool accepted = false;
  std::string failed_axiom;  // "P1", "P2", "P3" or empty
  std::string detail;
  std::size_t n = 0;
  std::optional<std::size_t> dimension;  // pd T (tilting) or id T (cotilting), nullopt above the cap
  std::vector<std::size_t> self_ext;     // dim Ext^i(T, T), i = 1..n
  std::vector<AddResolution> sequences;  // one per projective (tilting) or injective (cotilting)
};

/// (P1) pd T <= n, (P2) Ext^{1..n}(T, T) = 0, (P3) every P(v) has an add(T) coresolution of length <= n.
TiltingReport verify_tilting(const Module& t, std::size_t n, const Settings& settings = {});
/// Dual axioms checked directly.
TiltingReport verify_cotilting_direct(const Module& t, std::size_t n, const Settings& settings = {});
/// verify_tilting(DT, n) over the opposite algebra.
TiltingReport verify_cotilting_dual(const Module& t, std::size_t n, const Settings& settings = {});
/// Runs both routes; throws Error(Internal) if they disagree.
TiltingReport verify_cotilting(const Module& t, std::size_t n, const Settings& settings = {});
/// Smallest n <= cap for which T is tilting (resp. cotilting).
std::optional<std::size_t> tilting_degree(const Module& t, const Settings& settings = {});
std::optional<std::size_t> cotilting_degree(const Module& t, const Settings& settings = {});

enum class PairKind { Plain, Tilting, Cotilting };

struct CotorsionPair {
  std::shared_ptr<const Universe> universe;
  std::vector<std::size_t> u;  // member indices, ascending
  std::vector<std::size_t> v;
  bool hereditary = false;
  PairKind kind = PairKind::Plain;
  Module module;  // T for tilting/cotilting pairs
  std::size_t n = 0;
};

/// {X : Ext^1(X, V) = 0 for all listed V}.
std::vector<std::size_t> left_perp(const Universe& u, const std::vector<std::size_t>& v);
/// {X : Ext^1(U, X) = 0 for all listed U}.
std::vector<std::size_t> right_perp(const Universe& u, const std::vector<std::size_t>& us);
/// Ext^i(U, V) = 0 for all listed pairs and all 2 <= i <= max_degree.
bool higher_ext_vanishes(const Universe& u, const std::vector<std::size_t>& us, const std::vector<std::size_t>& vs,
                         std::size_t max_degree);
/// Members isomorphic to a summand of M.
std::vector<std::size_t> add_members(const Universe& u, const Module& m, std::uint64_t seed = kDefaultSeed);

/// (T^vee, T^perp): V = {X : Ext^{1..n}(T, X) = 0}, U = left perp of V.
/// Throws Error(UniverseInconsistent) when U disagrees with the coresolution test or V != right perp of U.
CotorsionPair cotorsion_pair_from_tilting(const Module& t, std::size_t n, std::shared_ptr<const Universe> universe,
                                          const Settings& settings = {});
/// U = {X : Ext^{1..n}(X, T) = 0}, V = right perp of U, cross-checked with the resolution test.
CotorsionPair cotorsion_pair_from_cotilting(const Module& t, std::size_t n, std::shared_ptr<const Universe> universe,
                                            const Settings& settings = {});

struct PairCheck {
  bool ok = true;
  std::vector<std::string> failures;
  bool ext2_vanishes = false;
  bool ext_higher_vanishes = false;
  bool u_closed_under_syzygy = false;
  bool v_closed_under_cosyzygy = false;
};

/// Ext^1(U, V) = 0, V = U^perp, U = ^perp V, projectives in U, injectives in V,
/// and agreement of the four characterisations of being hereditary.
PairCheck check_cotorsion_pair(const CotorsionPair& pair, const Settings& settings = {});

struct TiltingPairRecognition {
  bool accepted = false;
  std::string reason;
  std::size_t n = 0;
  std::vector<std::size_t> t_members;  // U cap V
  TiltingReport report;
};

/// A hereditary pair is tilting iff pd of U is bounded; then U cap V is n-tilting with n = max pd.
TiltingPairRecognition is_tilting_cotorsion_pair(const CotorsionPair& pair, const Settings& settings = {});
/// Dual: bounded id of V; U cap V is n-cotilting with n = max id.
TiltingPairRecognition is_cotilting_cotorsion_pair(const CotorsionPair& pair, const Settings& settings = {});

/// For a tilting T: members with a finite add(T) coresolution (T^vee) and with a
/// finite add(T) resolution (T^wedge) are Ext-orthogonal and meet exactly in add T.
struct ResolvingCheck {
  bool ok = true;
  std::vector<std::size_t> coresolved;  // T^vee
  std::vector<std::size_t> resolved;    // T^wedge
  std::vector<std::string> failures;
};
ResolvingCheck check_resolving_intersection(const Module& t, std::size_t n, const Universe& universe,
                                            const Settings& settings = {});

}  // namespace tiltglue
