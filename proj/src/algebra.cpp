#include "tiltglue/algebra.hpp"

#include <algorithm>
#include <set>

#include "tiltglue/error.hpp"

namespace tiltglue {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw Error(ErrorCode::UnknownName, "duplicate vertex name '" + v + "'");
  std::set<std::string> arrow_names;
  for (const auto& a : arrows_) {
    if (!arrow_names.insert(a.name).second)
      throw Error(ErrorCode::UnknownName, "duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw Error(ErrorCode::UnknownVertex, "arrow '" + a.name + "' has an undeclared endpoint");
  }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + name + "'");
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  if (auto a = find_arrow(name)) return *a;
  throw Error(ErrorCode::UnknownName, "unknown arrow '" + name + "'");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed;
  reversed.reserve(arrows_.size());
  for (const auto& a : arrows_) reversed.push_back({a.name, a.target, a.source});
  return Quiver(vertices_, std::move(reversed));
}

namespace {

using Word = std::vector<std::size_t>;

std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<std::vector<Path>> by_len(max_len + 1);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) by_len[0].push_back({v, v, {}});
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& p : by_len[len - 1]) {
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != p.target) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        ext.target = q.arrow(a).target;
        by_len[len].push_back(std::move(ext));
      }
    }
  }
  return by_len;
}

std::vector<Relation> normalized_relations(const Quiver& q, std::vector<Relation> rels, const PrimeField& f) {
  std::vector<Relation> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string where = "relation #" + std::to_string(r + 1);
    Relation clean;
    std::optional<std::size_t> src, tgt, len;
    for (auto& term : rels[r].terms) {
      term.coefficient = f.reduce(term.coefficient);
      if (term.arrows.size() < 2)
        throw Error(ErrorCode::MalformedRelation, where + ": paths in relations must have length >= 2");
      for (auto a : term.arrows)
        if (a >= q.arrow_count()) throw Error(ErrorCode::MalformedRelation, where + ": unknown arrow");
      for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i)
        if (q.arrow(term.arrows[i]).target != q.arrow(term.arrows[i + 1]).source)
          throw Error(ErrorCode::MalformedRelation, where + ": path is not composable");
      const std::size_t s = q.arrow(term.arrows.front()).source;
      const std::size_t t = q.arrow(term.arrows.back()).target;
      if (src && (*src != s || *tgt != t))
        throw Error(ErrorCode::MalformedRelation, where + ": paths do not share source and target");
      if (len && *len != term.arrows.size())
        throw Error(ErrorCode::MalformedRelation, where + ": paths of different lengths are not supported");
      src = s;
      tgt = t;
      len = term.arrows.size();
      if (term.coefficient == 0) continue;
      auto same = std::find_if(clean.terms.begin(), clean.terms.end(),
                               [&](const RelationTerm& t2) { return t2.arrows == term.arrows; });
      if (same != clean.terms.end())
        same->coefficient = f.add(same->coefficient, term.coefficient);
      else
        clean.terms.push_back(term);
    }
    std::erase_if(clean.terms, [](const RelationTerm& t) { return t.coefficient == 0; });
    if (clean.terms.empty()) throw Error(ErrorCode::MalformedRelation, where + ": relation is identically zero");
    out.push_back(std::move(clean));
  }
  return out;
}

}  // namespace

AlgebraPtr BoundQuiverAlgebra::build(std::string name, Quiver quiver, std::vector<Relation> relations,
                                     PrimeField field, std::size_t length_cap) {
  auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
  alg->name_ = std::move(name);
  alg->field_ = field;
  alg->length_cap_ = length_cap;
  alg->relations_ = normalized_relations(quiver, std::move(relations), field);
  alg->quiver_ = std::move(quiver);
  const Quiver& q = alg->quiver_;
  const std::size_t n = q.vertex_count();

  const auto paths = enumerate_paths(q, length_cap);

  // Per degree: the rref of the degree-d part of the ideal and which columns survive.
  struct Degree {
    std::vector<Path> paths;
    std::map<Word, std::size_t> column;
    RowEchelon ideal;
    std::vector<std::size_t> survivors;
  };
  std::vector<Degree> degrees;
  std::size_t vanishing = 0;
  for (std::size_t d = 2;; ++d) {
    if (d > length_cap)
      throw Error(ErrorCode::NotFiniteDimensional,
                  "basis paths of length " + std::to_string(length_cap) + " still survive; raise the length cap");
    Degree deg;
    deg.paths = paths[d];
    for (std::size_t c = 0; c < deg.paths.size(); ++c) deg.column[deg.paths[c].arrows] = c;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& rel : alg->relations_) {
      const std::size_t len = rel.terms.front().arrows.size();
      if (len > d) continue;
      const std::size_t rs = q.arrow(rel.terms.front().arrows.front()).source;
      const std::size_t rt = q.arrow(rel.terms.front().arrows.back()).target;
      for (std::size_t before = 0; before + len <= d; ++before) {
        const std::size_t after = d - len - before;
        for (const auto& w : paths[before]) {
          if (w.target != rs) continue;
          for (const auto& u : paths[after]) {
            if (u.source != rt) continue;
            std::vector<Scalar> row(deg.paths.size(), 0);
            for (const auto& term : rel.terms) {
              Word word = w.arrows;
              word.insert(word.end(), term.arrows.begin(), term.arrows.end());
              word.insert(word.end(), u.arrows.begin(), u.arrows.end());
              auto& slot = row[deg.column.at(word)];
              slot = field.add(slot, term.coefficient);
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    Matrix gens(rows.size(), deg.paths.size(), field);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < deg.paths.size(); ++c) gens(r, c) = rows[r][c];
    deg.ideal = rref(gens);
    std::vector<bool> pivot(deg.paths.size(), false);
    for (auto p : deg.ideal.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < deg.paths.size(); ++c)
      if (!pivot[c]) deg.survivors.push_back(c);
    const bool empty = deg.survivors.empty();
    degrees.push_back(std::move(deg));
    if (empty) {
      vanishing = d;
      break;
    }
  }

  // Basis order: trivial paths, arrows, then surviving paths degree by degree.
  alg->trivial_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    alg->trivial_[v] = alg->basis_.size();
    alg->basis_.push_back({v, v, {}});
  }
  alg->arrow_basis_.resize(q.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    alg->arrow_basis_[a] = alg->basis_.size();
    alg->basis_.push_back({q.arrow(a).source, q.arrow(a).target, {a}});
  }
  std::vector<std::map<std::size_t, std::size_t>> survivor_index(degrees.size());
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    for (auto c : degrees[k].survivors) {
      survivor_index[k][c] = alg->basis_.size();
      alg->basis_.push_back(degrees[k].paths[c]);
    }
  }
  const std::size_t dim = alg->basis_.size();

  for (std::size_t k = 0; k + 2 < vanishing; ++k) {
    const auto& deg = degrees[k];
    std::vector<std::size_t> pivot_row(deg.paths.size(), SIZE_MAX);
    for (std::size_t i = 0; i < deg.ideal.rank; ++i) pivot_row[deg.ideal.pivots[i]] = i;
    for (std::size_t c = 0; c < deg.paths.size(); ++c) {
      std::vector<Scalar> coords(dim, 0);
      if (pivot_row[c] == SIZE_MAX) {
        coords[survivor_index[k].at(c)] = 1;
      } else {
        // path_c + sum_j r_j path_j lies in the ideal, so path_c = -sum_j r_j path_j.
        const auto row = deg.ideal.reduced.row(pivot_row[c]);
        for (auto s : deg.survivors)
          if (row[s] != 0) coords[survivor_index[k].at(s)] = field.neg(row[s]);
      }
      alg->normal_forms_[deg.paths[c].arrows] = std::move(coords);
    }
  }

  alg->between_.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t i = 0; i < dim; ++i) alg->between_[alg->basis_[i].source][alg->basis_[i].target].push_back(i);

  alg->mult_.assign(dim, std::vector<std::vector<Scalar>>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& pi = alg->basis_[i];
      const Path& pj = alg->basis_[j];
      if (pj.target != pi.source) {
        alg->mult_[i][j].assign(dim, 0);
        continue;
      }
      Path prod{pj.source, pi.target, pj.arrows};
      prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
      alg->mult_[i][j] = alg->reduce(prod);
    }
  }
  return alg;
}

const std::vector<std::size_t>& BoundQuiverAlgebra::basis_between(std::size_t s, std::size_t t) const {
  return between_.at(s).at(t);
}

std::vector<Scalar> BoundQuiverAlgebra::reduce(const Path& p) const {
  std::vector<Scalar> coords(basis_.size(), 0);
  std::size_t at = p.source;
  for (auto a : p.arrows) {
    if (a >= quiver_.arrow_count() || quiver_.arrow(a).source != at)
      throw Error(ErrorCode::MalformedRelation, "path is not composable");
    at = quiver_.arrow(a).target;
  }
  if (at != p.target) throw Error(ErrorCode::MalformedRelation, "path endpoints are inconsistent");
  if (p.arrows.empty()) {
    coords[trivial_.at(p.source)] = 1;
  } else if (p.arrows.size() == 1) {
    coords[arrow_basis_[p.arrows.front()]] = 1;
  } else if (auto it = normal_forms_.find(p.arrows); it != normal_forms_.end()) {
    coords = it->second;
  }
  return coords;
}

const std::vector<Scalar>& BoundQuiverAlgebra::multiply(std::size_t i, std::size_t j) const {
  return mult_.at(i).at(j);
}

std::string BoundQuiverAlgebra::path_word(const Path& p) const {
  if (p.arrows.empty()) return "e_" + quiver_.vertex_name(p.source);
  std::string word;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) word += quiver_.arrow(*it).name;
  return word;
}

bool BoundQuiverAlgebra::same_as(const BoundQuiverAlgebra& other) const {
  return this == &other ||
         (field_ == other.field_ && quiver_ == other.quiver_ && relations_ == other.relations_);
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  std::lock_guard lock(a->op_mutex_);
  if (a->op_strong_) return a->op_strong_;
  if (auto back = a->op_weak_.lock()) return back;
  std::vector<Relation> rels;
  for (const auto& r : a->relations_) {
    Relation rev;
    for (const auto& t : r.terms) rev.terms.push_back({t.coefficient, {t.arrows.rbegin(), t.arrows.rend()}});
    rels.push_back(std::move(rev));
  }
  auto op = BoundQuiverAlgebra::build(a->name_ + "^op", a->quiver_.opposite(), std::move(rels), a->field_,
                                      a->length_cap_);
  op->op_weak_ = a;
  a->op_strong_ = op;
  return op;
}

AlgebraPtr restrict_algebra(const AlgebraPtr& a, const std::vector<std::size_t>& vertices, std::string name) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> new_index(q.vertex_count(), SIZE_MAX);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    new_index.at(vertices[i]) = i;
    names.push_back(q.vertex_name(vertices[i]));
  }
  std::vector<std::size_t> arrow_index(q.arrow_count(), SIZE_MAX);
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arr = q.arrow(k);
    if (new_index[arr.source] == SIZE_MAX || new_index[arr.target] == SIZE_MAX) continue;
    arrow_index[k] = arrows.size();
    arrows.push_back({arr.name, new_index[arr.source], new_index[arr.target]});
  }
  std::vector<Relation> rels;
  for (const auto& r : a->relations()) {
    Relation sub;
    bool inside = true;
    for (const auto& t : r.terms) {
      RelationTerm nt{t.coefficient, {}};
      for (auto k : t.arrows) {
        if (arrow_index[k] == SIZE_MAX) inside = false;
        nt.arrows.push_back(arrow_index[k]);
      }
      sub.terms.push_back(std::move(nt));
    }
    if (inside) rels.push_back(std::move(sub));
  }
  return BoundQuiverAlgebra::build(std::move(name), Quiver(std::move(names), std::move(arrows)), std::move(rels),
                                   a->field(), a->length_cap());
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context) {
  if (!same_algebra(a, b))
    throw Error(ErrorCode::AlgebraMismatch, std::string(context) + ": modules live over different algebras");
}

}  // namespace tiltglue
