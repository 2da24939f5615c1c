#pragma once

// Shared fixtures for the unit and acceptance tests: the bundled example
// data, plus small oracles that do not go through the library.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltglue/example.hpp"
#include "tiltglue/glue.hpp"
#include "tiltglue/io.hpp"
#include "tiltglue/recollement.hpp"

namespace testsupport {

using namespace tiltglue;

struct Bundle {
  Workspace ws;
  std::shared_ptr<const Universe> total, a, c;
  Recollement r;

  const Module& member(const std::string& name) const { return total->member(total->index_of_name(name)); }
  const Module& a_member(const std::string& name) const { return a->member(a->index_of_name(name)); }
  const Module& c_member(const std::string& name) const { return c->member(c->index_of_name(name)); }
};

inline std::unique_ptr<Bundle> load_bundle(std::optional<Scalar> prime = std::nullopt) {
  Workspace ws(DataSource(), prime);
  auto total = ws.universe("example5/lambda.uni");
  auto a = ws.universe("example5/lambda1.uni");
  auto c = ws.universe("example5/lambda2.uni");
  auto r = Recollement::build(total->algebra(), {0, 1}, a->algebra(), c->algebra());
  return std::unique_ptr<Bundle>(new Bundle{std::move(ws), total, a, c, std::move(r)});
}

inline Module sum_named(const Universe& u, const std::vector<std::string>& names) {
  std::vector<std::size_t> ix;
  for (const auto& n : names) ix.push_back(u.index_of_name(n));
  return sum_of_members(u, ix);
}

// Dimension vectors read off the names: Λ′ = 1 -> 2 and Λ″ = 3 -> 4 -> 5 with
// the length-two path killed, so P(1) = (1,1), P(3) = (1,1,0), P(4) = (0,1,1).
inline std::vector<std::size_t> dims_from_name(const std::string& name) {
  static const std::map<std::string, std::vector<std::size_t>> left = {
      {"0", {0, 0}}, {"P(1)", {1, 1}}, {"S(1)", {1, 0}}, {"S(2)", {0, 1}}};
  static const std::map<std::string, std::vector<std::size_t>> right = {
      {"0", {0, 0, 0}},    {"P(3)", {1, 1, 0}}, {"P(4)", {0, 1, 1}}, {"P(5)", {0, 0, 1}},
      {"S(3)", {1, 0, 0}}, {"S(4)", {0, 1, 0}}};
  const auto bar = name.find('|');
  const auto x = left.at(name.substr(1, bar - 1));
  const auto y = right.at(name.substr(bar + 1, name.size() - bar - 2));
  return {x[0], x[1], y[0], y[1], y[2]};
}

// Euler form of an algebra of global dimension at most two:
// <x, y> = sum x_v y_v - sum over arrows x_s y_t + sum over minimal relations x_s y_t.
struct EulerForm {
  std::vector<std::pair<std::size_t, std::size_t>> arrows, relations;

  long long operator()(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) const {
    long long s = 0;
    for (std::size_t v = 0; v < x.size(); ++v) s += static_cast<long long>(x[v] * y[v]);
    for (auto [a, b] : arrows) s -= static_cast<long long>(x[a] * y[b]);
    for (auto [a, b] : relations) s += static_cast<long long>(x[a] * y[b]);
    return s;
  }
};

// Vertices 1..5 as 0..4: δ 1->2, ε 3->1, γ 4->2, α 3->4, β 4->5; relations 3 => 2 and 3 => 5.
inline EulerForm lambda_euler() { return {{{0, 1}, {2, 0}, {3, 1}, {2, 3}, {3, 4}}, {{2, 1}, {2, 4}}}; }

inline std::vector<std::string> names_of(const Universe& u, const std::vector<std::size_t>& ix) {
  std::vector<std::string> out;
  for (auto i : ix) out.push_back(u.member_name(i));
  return out;
}

inline const std::vector<std::string> kExpected52 = {"(S(2)|0)", "(S(2)|P(4))", "(P(1)|0)", "(P(1)|P(3))",
                                                     "(S(1)|S(3))"};
inline const std::vector<std::string> kExpected51 = {"(0|P(5))", "(S(1)|0)", "(P(1)|P(3))", "(P(1)|P(4))",
                                                     "(P(1)|0)"};

}  // namespace testsupport
