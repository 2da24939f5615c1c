#pragma once

// A finite list of pairwise non-isomorphic indecomposables over a
// representation-finite algebra. Subcategory computations are relative to it.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tiltglue/homology.hpp"
#include "tiltglue/module.hpp"

namespace tiltglue {

struct Settings {
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultCap;
};

class Universe {
 public:
  Universe(std::string name, AlgebraPtr algebra, std::vector<std::string> names, std::vector<Module> members);

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return members_.size(); }
  const Module& member(std::size_t i) const { return members_.at(i); }
  const std::vector<Module>& members() const { return members_; }
  const std::string& member_name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& member_names() const { return names_; }
  std::optional<std::size_t> find_name(const std::string& display) const;
  std::size_t index_of_name(const std::string& display) const;

  /// Index of the member isomorphic to an indecomposable module.
  std::optional<std::size_t> identify(const Module& indecomposable, std::uint64_t seed = kDefaultSeed) const;
  /// Member indices of the indecomposable summands, sorted, with repetition.
  /// Throws Error(UniverseInconsistent) if a summand is missing from the universe.
  std::vector<std::size_t> identify_summands(const Module& m, std::uint64_t seed = kDefaultSeed) const;

  /// Memoized dim Ext^degree(member i, member j).
  std::size_t ext(std::size_t i, std::size_t j, std::size_t degree = 1) const;

  /// Display names for a list of member indices, e.g. "{(S(1)|0), (P(1)|P(3))}".
  std::string describe(const std::vector<std::size_t>& indices) const;

 private:
  std::string name_;
  AlgebraPtr algebra_;
  std::vector<std::string> names_;
  std::vector<Module> members_;
  mutable std::mutex ext_mutex_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> ext_table_;
};

/// Sum of one copy of each listed member.
Module sum_of_members(const Universe& u, const std::vector<std::size_t>& indices);

}  // namespace tiltglue
