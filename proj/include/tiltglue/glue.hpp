#pragma once

// Gluing cotorsion pairs, tilting and cotilting modules along a recollement.
//
//   V2 = {B : i^!B in V1 and j^*B in V3},   U2 = left Ext^1-perp of V2,
//   U2~ = {B : i^*B in U1 and j^*B in U3}  (U2 sits inside add U2~).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltglue/recollement.hpp"
#include "tiltglue/tilting.hpp"

namespace tiltglue {

struct GluedPair {
  CotorsionPair pair_a;
  CotorsionPair pair_c;
  CotorsionPair pair;  // (U2, V2) over the universe of the total algebra
  std::vector<std::size_t> u2_tilde;
  std::vector<std::size_t> t2;  // U2 cap V2
  PairCheck check;
  // One of each per universe member, in member order.
  std::vector<ShortExactSequence> precovers;     // 0 -> V -> U -> B -> 0
  std::vector<ShortExactSequence> preenvelopes;  // 0 -> B -> V -> U -> 0

  const std::vector<std::size_t>& u2() const { return pair.u; }
  const std::vector<std::size_t>& v2() const { return pair.v; }
  const Universe& universe() const { return *pair.universe; }
};

/// Throws ExactnessMissing unless i^! and j_! are certified exact, and
/// UniverseInconsistent when a pair axiom fails on the universe.
GluedPair glued_classes(const Recollement& r, const CotorsionPair& pair_a, const CotorsionPair& pair_c,
                        std::shared_ptr<const Universe> universe, const Settings& settings = {});

/// Is every indecomposable summand of M one of the listed members?
bool in_class(const Universe& u, const std::vector<std::size_t>& members, const Module& m,
              std::uint64_t seed = kDefaultSeed);

// The pushout square
//
//   i_* i^! j_! T  ->  j_! T  ->  j_* T
//        |              |          ||
//     i_* V1     ->     K     ->  j_* T
//        |              |
//     i_* U1     ==   i_* U1
struct KConstruction {
  Module t3;
  Module j_t3;                 // j_! T
  Preenvelope preenvelope;     // 0 -> i^! j_! T -> V1 -> U1 -> 0 over the A-side
  PushoutSquare square;        // from_b : j_! T -> K, from_c : i_* V1 -> K
  ShortExactSequence column;   // 0 -> j_! T -> K -> i_* U1 -> 0
  ShortExactSequence row;      // 0 -> i_* V1 -> K -> j_* T -> 0
  bool column_matches = false;  // cokernel of from_b is i_* U1
  bool row_matches = false;     // cokernel of from_c is j_* T
  std::vector<std::size_t> k_summands;  // filled in by glue_tilting
  bool in_t2 = false;

  const Module& k() const { return square.object; }
};

/// pair_a must be a tilting pair (carries T1 and n1); otherwise PreconditionFailed.
KConstruction k_construction(const Recollement& r, const Module& t3, const CotorsionPair& pair_a,
                             const Settings& settings = {});

struct GluedTilting {
  Module t2;
  std::size_t n2 = 0;
  GluedPair glued;
  std::vector<KConstruction> ks;           // one per indecomposable summand of T3, in decomposition order
  std::vector<std::size_t> t2_members;     // add(T2) in the universe
  TiltingReport report;                    // verify_tilting(T2, n2)
  std::size_t bound = 0;                   // max{n1, n3}
  bool constructive_matches = false;       // add(i_*T1 + K) == U2 cap V2
  std::optional<std::size_t> pd_u2;        // set when gl.dim of the A-side is finite
  std::size_t pd_u2_bound = 0;             // max{n1 + 1, n3}
  std::optional<bool> split_check;         // add(i_*T1 + j_!T3) == T2, only when i^* is exact
  std::optional<bool> indecomposables_check;  // each t2 member is i_*(T1-summand) or j_!(T3-summand), same gating
};

struct UniverseTriple {
  std::shared_ptr<const Universe> total;
  std::shared_ptr<const Universe> a;
  std::shared_ptr<const Universe> c;
};

/// Throws PreconditionFailed when an input is not tilting of the stated degree.
GluedTilting glue_tilting(const Recollement& r, const Module& t1, std::size_t n1, const Module& t3, std::size_t n3,
                          const UniverseTriple& universes, const Settings& settings = {});

struct GluedCotilting {
  Module t2;
  std::size_t n2 = 0;
  GluedPair glued;
  std::vector<std::size_t> t2_members;
  TiltingReport report;              // verify_cotilting(T2, n2)
  std::optional<std::size_t> id_v2;  // max id over V2, nullopt above the cap
  std::size_t id_v2_bound = 0;       // max{n1 + 1, n3}
  // Dual route: glue D T3, D T1 as tilting modules along the opposite recollement, then dualize.
  std::optional<std::vector<std::size_t>> dual_members;
  std::string dual_error;
};

GluedCotilting glue_cotilting(const Recollement& r, const Module& t1, std::size_t n1, const Module& t3,
                              std::size_t n3, const UniverseTriple& universes, const Settings& settings = {},
                              bool with_dual_route = true);

/// The same members dualized, over the opposite algebra.
std::shared_ptr<const Universe> dual_universe(const Universe& u);

}  // namespace tiltglue
