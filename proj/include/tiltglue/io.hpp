#pragma once

// Plain-text formats for algebras, modules and universe manifests.
//
//   algebra Λ                      module (P(1)|P(3)) over Λ
//   field 101                      dim 1 1
//   vertices 1 2 3 4 5             dim 2 1
//   arrow δ 1 2                    map δ [[1]]
//   relation 1*γα + -1*δε = 0
//
//   universe Λ over lambda.alg
//   member (P(1)|P(3)) modules/P1_P3.mod
//
// Relation words list arrow names right to left. '#' starts a comment.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiltglue/universe.hpp"

namespace tiltglue {

/// `prime` overrides the file's field line.
AlgebraPtr parse_algebra(std::string_view text, std::optional<Scalar> prime = std::nullopt);
std::string print_algebra(const BoundQuiverAlgebra& a);

struct NamedModule {
  std::string name;
  Module module;
};
NamedModule parse_module(std::string_view text, const AlgebraPtr& algebra);
std::string print_module(const Module& m, const std::string& name);

struct Manifest {
  std::string name;
  std::string algebra_path;
  std::vector<std::pair<std::string, std::string>> members;  // display name, module path
};
Manifest parse_manifest(std::string_view text);
std::string print_manifest(const Manifest& m);

/// Matrix literal [[a,b],[c,d]]; `[]` is 0 x cols.
Matrix parse_matrix(std::string_view text, std::size_t rows, std::size_t cols, const PrimeField& field);
std::string print_matrix(const Matrix& m);

/// Bundled files, keyed by path relative to the data root.
const std::map<std::string, std::string>& embedded_data();

/// Reads data files from a directory, or from the bundled copy when no directory is set.
class DataSource {
 public:
  DataSource() = default;
  explicit DataSource(std::filesystem::path root) : root_(std::move(root)) {}
  std::string read(const std::string& path) const;
  bool bundled() const { return !root_.has_value(); }

 private:
  std::optional<std::filesystem::path> root_;
};

/// Loads algebras and universes once per path so that modules share algebra objects.
class Workspace {
 public:
  explicit Workspace(DataSource source = {}, std::optional<Scalar> prime = std::nullopt)
      : source_(std::move(source)), prime_(prime) {}

  AlgebraPtr algebra(const std::string& path);
  std::shared_ptr<const Universe> universe(const std::string& path);
  NamedModule module(const std::string& path, const AlgebraPtr& algebra);
  const DataSource& source() const { return source_; }

 private:
  DataSource source_;
  std::optional<Scalar> prime_;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, std::shared_ptr<const Universe>> universes_;
};

/// `base` is the path of the referring file; the result is normalized.
std::string resolve_path(const std::string& base, const std::string& relative);

}  // namespace tiltglue
