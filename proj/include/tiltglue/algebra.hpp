#pragma once

// Quivers, admissible relations and bound quiver algebras kQ/I.
//
// Paths compose right-to-left: the product b*a means "a first, then b", so on
// 3 -a-> 4 -b-> 5 the word "ba" is a path from 3 to 5. Internally a path keeps
// its arrows in traversal order (first arrow first).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tiltglue/linalg.hpp"

namespace tiltglue {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws Error(UnknownVertex) for dangling endpoints, Error(UnknownName) for duplicates.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::size_t vertex_index(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;

  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // traversal order

  std::size_t length() const noexcept { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct RelationTerm {
  Scalar coefficient;
  std::vector<std::size_t> arrows;  // traversal order

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// A linear combination of parallel paths of one common length >= 2.
struct Relation {
  std::vector<RelationTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

inline constexpr std::size_t kDefaultLengthCap = 12;

class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
 public:
  /// Computes the residue-path basis degree by degree.
  /// Throws Error(MalformedRelation) or Error(NotFiniteDimensional).
  static AlgebraPtr build(std::string name, Quiver quiver, std::vector<Relation> relations,
                          PrimeField field, std::size_t length_cap = kDefaultLengthCap);

  const std::string& name() const noexcept { return name_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t length_cap() const noexcept { return length_cap_; }
  std::size_t vertex_count() const noexcept { return quiver_.vertex_count(); }

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Path>& basis() const noexcept { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_.at(i); }
  /// Indices of basis paths from s to t (so dim e_t A e_s).
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const;
  std::size_t trivial_path(std::size_t v) const { return trivial_.at(v); }
  std::size_t arrow_basis_index(std::size_t a) const { return arrow_basis_.at(a); }

  /// Coordinates of an arbitrary composable path in the basis.
  std::vector<Scalar> reduce(const Path& p) const;
  /// Coordinates of basis_i * basis_j (basis_j traversed first); zero if not composable.
  const std::vector<Scalar>& multiply(std::size_t i, std::size_t j) const;

  /// Right-to-left word of arrow names, or "e_<vertex>" for trivial paths.
  std::string path_word(const Path& p) const;

  /// Structural equality: field, quiver and relations (names of algebras ignored).
  bool same_as(const BoundQuiverAlgebra& other) const;

 private:
  friend AlgebraPtr opposite(const AlgebraPtr& a);

  BoundQuiverAlgebra() = default;

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  PrimeField field_{};
  std::size_t length_cap_ = kDefaultLengthCap;

  std::vector<Path> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;  // [s][t]
  std::vector<std::size_t> trivial_;
  std::vector<std::size_t> arrow_basis_;
  std::map<std::vector<std::size_t>, std::vector<Scalar>> normal_forms_;  // nontrivial paths below the vanishing degree
  std::vector<std::vector<std::vector<Scalar>>> mult_;

  mutable std::mutex op_mutex_;
  mutable std::shared_ptr<const BoundQuiverAlgebra> op_strong_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> op_weak_;
};

/// Arrows reversed, relation paths reversed, same arrow and vertex names.
/// Cached: opposite(opposite(a)) returns `a` itself while `a` is alive.
AlgebraPtr opposite(const AlgebraPtr& a);

/// The full subquiver on `vertices` (kept in the given order) with the
/// relations supported there. Valid as e A e when `vertices` is closed under
/// successors or under predecessors.
AlgebraPtr restrict_algebra(const AlgebraPtr& a, const std::vector<std::size_t>& vertices, std::string name);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context);

}  // namespace tiltglue
