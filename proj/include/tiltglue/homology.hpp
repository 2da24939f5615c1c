#pragma once

// Resolutions, syzygies, Ext with cocycles, Yoneda realization, pushouts.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "tiltglue/module.hpp"

namespace tiltglue {

inline constexpr std::size_t kDefaultCap = 8;

/// The map P(v) -> M sending e_v to the vector m in M_v.
Morphism map_from_projective(const Module& pv, std::size_t v, const Module& m, std::span<const Scalar> element);

/// Minimal projective cover P -> M (P = sum of P(v)^{top_v}).
Morphism projective_cover(const Module& m);
/// Minimal injective envelope M -> I, computed through the opposite algebra.
Morphism injective_envelope(const Module& m);

/// One step of a minimal resolution: cover of `object`, and its kernel.
struct SyzygyStep {
  Module object;
  Morphism cover;      // P -> object
  Morphism inclusion;  // next object -> P
};
struct CosyzygyStep {
  Module object;
  Morphism envelope;    // object -> I
  Morphism projection;  // I -> next object
};

/// Cached: step k describes Omega^k M.
const SyzygyStep& syzygy_step(const Module& m, std::size_t k);
const CosyzygyStep& cosyzygy_step(const Module& m, std::size_t k);
Module syzygy(const Module& m, std::size_t i);
Module cosyzygy(const Module& m, std::size_t i);
void clear_homology_cache();

struct Resolution {
  enum class Kind { Projective, Injective };
  Kind kind;
  Module target;
  std::vector<Module> terms;
  /// Projective: d_0 : P_0 -> M, d_k : P_k -> P_{k-1}.
  /// Injective: d_0 : M -> I_0, d_k : I_{k-1} -> I_k.
  std::vector<Morphism> differentials;
  bool minimal = true;
};

/// Terms up to the given length (stops early once the resolution ends).
Resolution projective_resolution(const Module& m, std::size_t length);
Resolution injective_coresolution(const Module& m, std::size_t length);

/// nullopt means "exceeds cap", never "infinite".
std::optional<std::size_t> projective_dimension(const Module& m, std::size_t cap = kDefaultCap);
std::optional<std::size_t> injective_dimension(const Module& m, std::size_t cap = kDefaultCap);
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t cap = kDefaultCap);

struct ExtGroup {
  std::size_t degree = 1;
  Module source;
  Module target;
  std::size_t dimension = 0;
  /// Omega^degree(source) -> P_{degree-1} (the last cover's kernel inclusion).
  Morphism omega_inclusion;
  /// Basis of Hom(Omega^degree source, target) modulo maps that extend over the projective.
  std::vector<Morphism> cocycles;

  /// Class of a map Omega^degree source -> target in the cocycle basis.
  std::vector<Scalar> coordinates(const Morphism& c) const;

 private:
  friend ExtGroup ext(const Module&, const Module&, std::size_t);
  std::shared_ptr<const HomSpace> hom_;
  Matrix projection_;  // Hom coordinates -> Ext coordinates
};

/// Ext^i(M, N) with cocycle representatives; i >= 1.
ExtGroup ext(const Module& m, const Module& n, std::size_t i = 1);
/// Dimension only, by dimension shift on the first argument.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i = 1);
/// Dimension only, by cosyzygies of the second argument.
std::size_t ext_dim_sigma(const Module& m, const Module& n, std::size_t i = 1);

/// 0 -> A -> E -> U -> 0 given by its two maps.
struct ShortExactSequence {
  Morphism left;   // A -> E
  Morphism right;  // E -> U

  const Module& sub() const { return left.source(); }
  const Module& middle() const { return left.target(); }
  const Module& quotient() const { return right.target(); }
  bool is_exact() const;
};

struct PushoutSquare {
  Module object;
  Morphism from_b;  // B -> Q
  Morphism from_c;  // C -> Q
};
struct PullbackSquare {
  Module object;
  Morphism to_b;  // Q -> B
  Morphism to_c;  // Q -> C
};

/// Pushout of B <-f- A -g-> C, as the cokernel of (f, -g).
PushoutSquare pushout(const Morphism& f, const Morphism& g);
/// Pullback of B -f-> D <-g- C, as the kernel of f - g.
PullbackSquare pullback(const Morphism& f, const Morphism& g);

/// Given 0 -> K -iota-> P -pi-> E -> 0 and c : K -> A, the pushed-out
/// sequence 0 -> A -> E' -> E -> 0.
ShortExactSequence pushout_extension(const Morphism& iota, const Morphism& pi, const Morphism& c);

/// The extension of U by A classified by a cocycle Omega U -> A.
ShortExactSequence realize_extension(const Module& u, const Morphism& cocycle);

}  // namespace tiltglue
