#pragma once

// Finite-dimensional left modules as quiver representations.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltglue/algebra.hpp"
#include "tiltglue/linalg.hpp"

namespace tiltglue {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// A representation: a space per vertex and a (target-dim x source-dim)
/// matrix per arrow satisfying every relation. Immutable; copies share storage.
class Module {
 public:
  Module() = default;
  /// Throws Error(InvalidModule) on shape errors or violated relations.
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return data_->algebra; }
  const PrimeField& field() const { return data_->algebra->field(); }
  const std::vector<std::size_t>& dims() const { return data_->dims; }
  std::size_t dim(std::size_t v) const { return data_->dims.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& map(std::size_t arrow) const { return data_->maps.at(arrow); }
  const std::vector<Matrix>& maps() const { return data_->maps; }

  /// The matrix by which a path acts (dim target x dim source).
  Matrix action(const Path& p) const;
  Matrix action_of_basis(std::size_t basis_index) const { return action(algebra()->basis_path(basis_index)); }

  /// Canonical text key (dims and matrices); equal keys mean equal modules.
  std::string fingerprint() const;

  friend bool operator==(const Module& a, const Module& b);

 private:
  struct Data {
    AlgebraPtr algebra;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
  };
  struct Unchecked {};
  Module(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);
  friend Module make_module_unchecked(AlgebraPtr, std::vector<std::size_t>, std::vector<Matrix>);

  std::shared_ptr<const Data> data_;
};

/// Skips the relation check; for constructions that preserve it by design.
Module make_module_unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

/// A module homomorphism given by one block per vertex.
class Morphism {
 public:
  Morphism() = default;
  /// Throws Error(InvalidMorphism) unless every square commutes.
  Morphism(Module source, Module target, std::vector<Matrix> blocks);

  static Morphism unchecked(Module source, Module target, std::vector<Matrix> blocks);
  static Morphism zero(const Module& source, const Module& target);
  static Morphism identity(const Module& m);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_.at(v); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  std::size_t rank() const;

  Morphism scaled(Scalar s) const;

  friend Morphism operator+(const Morphism& f, const Morphism& g);
  friend Morphism operator-(const Morphism& f, const Morphism& g);
  /// Composition: (g * f)(x) = g(f(x)).
  friend Morphism operator*(const Morphism& g, const Morphism& f);
  friend bool operator==(const Morphism& f, const Morphism& g);

 private:
  Module source_;
  Module target_;
  std::vector<Matrix> blocks_;
};

Module simple_module(const AlgebraPtr& a, std::size_t v);
Module projective_module(const AlgebraPtr& a, std::size_t v);
/// Computed as the dual of the projective of the opposite algebra.
Module injective_module(const AlgebraPtr& a, std::size_t v);

/// Hom(M, N) as the solution space of the commuting-square equations.
/// Unknowns are the concatenated row-major blocks, vertex by vertex.
class HomSpace {
 public:
  HomSpace(Module source, Module target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  std::size_t dimension() const { return basis_.cols(); }
  Morphism element(std::size_t i) const;
  std::vector<Morphism> basis() const;
  Morphism combination(std::span<const Scalar> coefficients) const;
  /// Coordinates of a morphism M -> N in this basis.
  std::vector<Scalar> coordinates(const Morphism& f) const;
  std::vector<Scalar> flatten(const Morphism& f) const;
  std::size_t unknowns() const { return offsets_.back(); }

 private:
  Module source_;
  Module target_;
  std::vector<std::size_t> offsets_;
  Matrix basis_;
  std::vector<std::size_t> free_;
};

std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct SubObject {
  Module object;
  Morphism inclusion;  // object -> ambient
};

struct QuotientObject {
  Module object;
  Morphism projection;  // ambient -> object
};

SubObject kernel(const Morphism& f);
QuotientObject cokernel(const Morphism& f);
SubObject image(const Morphism& f);

/// h with mono * h == g, or nullopt when g does not factor.
std::optional<Morphism> lift_through_mono(const Morphism& mono, const Morphism& g);
/// h with h * epi == g, or nullopt when g does not factor.
std::optional<Morphism> descend_through_epi(const Morphism& epi, const Morphism& g);

struct DirectSum {
  Module object;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};

/// Throws Error(AlgebraMismatch) for mixed algebras; needs the algebra for an empty list.
DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& algebra);
DirectSum direct_sum(const std::vector<Module>& parts);
/// f1 + f2 + ... : (+) sources -> common target.
Morphism sum_map(const std::vector<Morphism>& maps, const DirectSum& sources);
/// (f1, f2, ...) : common source -> (+) targets.
Morphism tuple_map(const std::vector<Morphism>& maps, const DirectSum& targets);
/// f1 (+) f2 (+) ... between the direct sums.
Morphism diagonal_map(const std::vector<Morphism>& maps, const DirectSum& sources, const DirectSum& targets);

/// D = Hom_k(-, k): a module over the opposite algebra.
Module dualize(const Module& m);
/// D f : D target -> D source.
Morphism dualize(const Morphism& f);

/// Same data read over an algebra that is structurally equal.
Module rebase(const Module& m, const AlgebraPtr& algebra);

struct Summand {
  Module module;
  Morphism inclusion;
  Morphism projection;
};

/// Indecomposable summands with split inclusions/projections. The seed only
/// drives the search for splitting idempotents; the result is certified.
/// Throws Error(FieldTooSmall) unless p > dim M.
std::vector<Summand> decompose(const Module& m, std::uint64_t seed = kDefaultSeed);
/// Summands grouped up to isomorphism, in order of first appearance.
std::vector<std::pair<Module, std::size_t>> decompose_grouped(const Module& m, std::uint64_t seed = kDefaultSeed);
bool is_indecomposable(const Module& m);

/// An invertible morphism M -> N, or nullopt.
std::optional<Morphism> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed = kDefaultSeed);
bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = kDefaultSeed);

/// Cheap projectivity / injectivity tests via tops and socles.
std::vector<std::size_t> top_dims(const Module& m);
std::vector<std::size_t> socle_dims(const Module& m);
bool is_projective(const Module& m);
bool is_injective(const Module& m);

}  // namespace tiltglue
