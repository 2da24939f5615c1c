#pragma once

// The recollement of module categories cut out by a vertex partition of a
// triangular algebra: A-vertices receive arrows from C-vertices but never send
// paths back. Modules over the total algebra are read as triples (X | Y)_f with
// X on the A-vertices, Y on the C-vertices and f the connecting arrows.
//
//   i^*(X|Y) = Coker f     i_*(X) = (X|0)     i^!(X|Y) = X
//   j_!(Y) = (N (x) Y | Y)  j^*(X|Y) = Y       j_*(Y) = (0|Y)

#include <optional>
#include <string>
#include <vector>

#include "tiltglue/homology.hpp"

namespace tiltglue {

/// Derived-functor defects on simples: all zero iff the functor is exact.
struct ExactnessCertificate {
  bool exact = true;
  std::vector<std::size_t> defects;  // per simple of the source category
};

struct RecollementExactness {
  ExactnessCertificate i_upper_star;    // L_1 i^* on simples of the total algebra
  ExactnessCertificate i_shriek;        // R^1 i^! on simples of the total algebra
  ExactnessCertificate j_lower_shriek;  // L_1 j_! = Tor_1(N, -) on simples of the C-side
  ExactnessCertificate j_star;          // R^1 j_* on simples of the C-side
};

struct CanonicalSequence {
  Morphism left;
  Morphism right;
  bool left_injective = false;
  bool middle_exact = false;
  bool right_surjective = false;
  bool composite_zero = false;
};

class Recollement {
 public:
  /// Throws Error(NotTriangular) naming a path from an A-vertex to a C-vertex.
  /// `a_algebra` / `c_algebra` may be given to share algebra objects with other
  /// data; they must equal the restrictions of `total`.
  static Recollement build(AlgebraPtr total, std::vector<std::size_t> a_vertices,
                           AlgebraPtr a_algebra = nullptr, AlgebraPtr c_algebra = nullptr);

  const AlgebraPtr& total() const { return total_; }
  const AlgebraPtr& a_algebra() const { return a_alg_; }
  const AlgebraPtr& c_algebra() const { return c_alg_; }
  const std::vector<std::size_t>& a_vertices() const { return a_vertices_; }
  const std::vector<std::size_t>& c_vertices() const { return c_vertices_; }
  const RecollementExactness& exactness() const { return exactness_; }

  Module i_star(const Module& x) const;
  Module i_upper_star(const Module& m) const;
  Module i_shriek(const Module& m) const;
  Module j_lower_shriek(const Module& y) const;
  Module j_upper_star(const Module& m) const;
  Module j_star(const Module& y) const;

  Morphism i_star(const Morphism& f) const;
  Morphism i_upper_star(const Morphism& f) const;
  Morphism i_shriek(const Morphism& f) const;
  Morphism j_lower_shriek(const Morphism& f) const;
  Morphism j_upper_star(const Morphism& f) const;
  Morphism j_star(const Morphism& f) const;

  /// i_* i^! M -> M -> j_* j^* M (a short exact sequence here).
  CanonicalSequence canonical_sequence_upper(const Module& m) const;
  /// j_! j^* M -> M -> i_* i^* M -> 0; the left map is injective when i^* is exact.
  CanonicalSequence canonical_sequence_lower(const Module& m) const;

  /// The recollement of the opposite algebra with the roles of A and C swapped.
  Recollement opposite() const;

 private:
  Recollement() = default;

  // j_! at an A-vertex: the free space spanned by (path c -> t) (x) (basis of Y_c), modulo the tensor relations.
  struct TensorPiece {
    std::vector<std::size_t> offsets;  // per C-vertex position, then per path
    std::size_t free_dim = 0;
    Quotient quotient;
  };
  TensorPiece tensor_piece(const Module& y, std::size_t t) const;
  std::size_t free_index(const Module& y, std::size_t t, std::size_t c_pos, std::size_t path_pos, std::size_t k) const;

  Quotient cokernel_piece(const Module& m, std::size_t t) const;

  void check_over(const Module& m, const AlgebraPtr& a, const char* what) const;

  AlgebraPtr total_, a_alg_, c_alg_;
  std::vector<std::size_t> a_vertices_, c_vertices_;
  std::vector<std::optional<std::size_t>> a_pos_, c_pos_;  // total vertex -> position
  std::vector<std::optional<std::size_t>> a_arrow_, c_arrow_;  // total arrow -> arrow of the piece
  RecollementExactness exactness_;
};

}  // namespace tiltglue
