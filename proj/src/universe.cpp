#include "tiltglue/universe.hpp"

#include <algorithm>

#include "tiltglue/error.hpp"

namespace tiltglue {

Universe::Universe(std::string name, AlgebraPtr algebra, std::vector<std::string> names, std::vector<Module> members)
    : name_(std::move(name)), algebra_(std::move(algebra)), names_(std::move(names)), members_(std::move(members)) {
  if (names_.size() != members_.size()) throw Error(ErrorCode::ShapeMismatch, "one display name per member");
  for (auto& m : members_) m = rebase(m, algebra_);
}

std::optional<std::size_t> Universe::find_name(const std::string& display) const {
  auto it = std::find(names_.begin(), names_.end(), display);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Universe::index_of_name(const std::string& display) const {
  if (auto i = find_name(display)) return *i;
  throw Error(ErrorCode::UnknownName, "universe '" + name_ + "' has no member " + display);
}

std::optional<std::size_t> Universe::identify(const Module& indecomposable, std::uint64_t seed) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].dims() == indecomposable.dims() && is_isomorphic(members_[i], indecomposable, seed)) return i;
  return std::nullopt;
}

std::vector<std::size_t> Universe::identify_summands(const Module& m, std::uint64_t seed) const {
  std::vector<std::size_t> out;
  for (const auto& s : decompose(m, seed)) {
    auto i = identify(s.module, seed);
    if (!i) {
      std::string dims;
      for (auto d : s.module.dims()) dims += std::to_string(d);
      throw Error(ErrorCode::UniverseInconsistent,
                  "universe '" + name_ + "' has no member isomorphic to a summand with dimension vector " + dims);
    }
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Universe::ext(std::size_t i, std::size_t j, std::size_t degree) const {
  const auto key = std::make_tuple(i, j, degree);
  {
    std::lock_guard lock(ext_mutex_);
    if (auto it = ext_table_.find(key); it != ext_table_.end()) return it->second;
  }
  const std::size_t d = ext_dim(members_.at(i), members_.at(j), degree);
  std::lock_guard lock(ext_mutex_);
  ext_table_[key] = d;
  return d;
}

std::string Universe::describe(const std::vector<std::size_t>& indices) const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) s += ", ";
    s += names_.at(indices[k]);
  }
  return s + "}";
}

Module sum_of_members(const Universe& u, const std::vector<std::size_t>& indices) {
  std::vector<Module> parts;
  for (auto i : indices) parts.push_back(u.member(i));
  return direct_sum(parts, u.algebra()).object;
}

}  // namespace tiltglue
