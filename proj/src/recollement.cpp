#include "tiltglue/recollement.hpp"

#include <algorithm>
#include <cstdint>

#include "tiltglue/error.hpp"

namespace tiltglue {

namespace {

std::vector<std::optional<std::size_t>> positions(std::size_t n, const std::vector<std::size_t>& vs) {
  std::vector<std::optional<std::size_t>> pos(n);
  for (std::size_t i = 0; i < vs.size(); ++i) pos.at(vs[i]) = i;
  return pos;
}

// Arrow numbering of restrict_algebra: arrows with both ends inside, in order.
std::vector<std::optional<std::size_t>> arrow_positions(const Quiver& q,
                                                        const std::vector<std::optional<std::size_t>>& pos) {
  std::vector<std::optional<std::size_t>> out(q.arrow_count());
  std::size_t next = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    if (pos[q.arrow(k).source] && pos[q.arrow(k).target]) out[k] = next++;
  return out;
}

std::int64_t dim_of(const Module& m) { return static_cast<std::int64_t>(m.total_dim()); }

template <class F>
ExactnessCertificate left_defects(const AlgebraPtr& a, F functor) {
  ExactnessCertificate c;
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    const Module s = simple_module(a, v);
    const auto& step = syzygy_step(s, 0);
    const std::int64_t d =
        dim_of(functor(step.inclusion.source())) - dim_of(functor(step.cover.source())) + dim_of(functor(s));
    if (d < 0) throw Error(ErrorCode::Internal, "negative Tor defect");
    c.defects.push_back(static_cast<std::size_t>(d));
    if (d != 0) c.exact = false;
  }
  return c;
}

template <class F>
ExactnessCertificate right_defects(const AlgebraPtr& a, F functor) {
  ExactnessCertificate c;
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    const Module s = simple_module(a, v);
    const auto& step = cosyzygy_step(s, 0);
    const std::int64_t d =
        dim_of(functor(step.projection.target())) - dim_of(functor(step.envelope.target())) + dim_of(functor(s));
    if (d < 0) throw Error(ErrorCode::Internal, "negative Ext defect");
    c.defects.push_back(static_cast<std::size_t>(d));
    if (d != 0) c.exact = false;
  }
  return c;
}

}  // namespace

Recollement Recollement::build(AlgebraPtr total, std::vector<std::size_t> a_vertices, AlgebraPtr a_algebra,
                               AlgebraPtr c_algebra) {
  Recollement r;
  const std::size_t n = total->vertex_count();
  for (auto v : a_vertices)
    if (v >= n) throw Error(ErrorCode::UnknownVertex, "A-vertex index out of range");
  r.total_ = std::move(total);
  r.a_vertices_ = std::move(a_vertices);
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(r.a_vertices_.begin(), r.a_vertices_.end(), v) == r.a_vertices_.end()) r.c_vertices_.push_back(v);
  for (auto a : r.a_vertices_)
    for (auto c : r.c_vertices_)
      if (!r.total_->basis_between(a, c).empty())
        throw Error(ErrorCode::NotTriangular,
                    "path " + r.total_->path_word(r.total_->basis_path(r.total_->basis_between(a, c).front())) +
                        " runs from A-vertex " + r.total_->quiver().vertex_name(a) + " to C-vertex " +
                        r.total_->quiver().vertex_name(c));
  r.a_pos_ = positions(n, r.a_vertices_);
  r.c_pos_ = positions(n, r.c_vertices_);
  r.a_arrow_ = arrow_positions(r.total_->quiver(), r.a_pos_);
  r.c_arrow_ = arrow_positions(r.total_->quiver(), r.c_pos_);

  auto pick = [&](AlgebraPtr given, const std::vector<std::size_t>& vs, const std::string& suffix) {
    AlgebraPtr restricted = restrict_algebra(r.total_, vs, r.total_->name() + suffix);
    if (!given) return restricted;
    if (!same_algebra(given, restricted))
      throw Error(ErrorCode::AlgebraMismatch, "algebra '" + given->name() + "' is not the restriction of '" +
                                                  r.total_->name() + "' to its vertices");
    return given;
  };
  r.a_alg_ = pick(std::move(a_algebra), r.a_vertices_, "'");
  r.c_alg_ = pick(std::move(c_algebra), r.c_vertices_, "''");

  r.exactness_.i_upper_star = left_defects(r.total_, [&](const Module& m) { return r.i_upper_star(m); });
  r.exactness_.i_shriek = right_defects(r.total_, [&](const Module& m) { return r.i_shriek(m); });
  r.exactness_.j_lower_shriek = left_defects(r.c_alg_, [&](const Module& m) { return r.j_lower_shriek(m); });
  r.exactness_.j_star = right_defects(r.c_alg_, [&](const Module& m) { return r.j_star(m); });
  return r;
}

void Recollement::check_over(const Module& m, const AlgebraPtr& a, const char* what) const {
  if (!same_algebra(m.algebra(), a))
    throw Error(ErrorCode::AlgebraMismatch, std::string(what) + " expects a module over '" + a->name() + "'");
}

// ---------------------------------------------------------------- on objects

Module Recollement::i_star(const Module& x) const {
  check_over(x, a_alg_, "i_*");
  const auto& q = total_->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (std::size_t i = 0; i < a_vertices_.size(); ++i) dims[a_vertices_[i]] = x.dim(i);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (a_arrow_[k]) maps.push_back(x.map(*a_arrow_[k]));
    else maps.emplace_back(dims[q.arrow(k).target], dims[q.arrow(k).source], total_->field());
  }
  return make_module_unchecked(total_, std::move(dims), std::move(maps));
}

Module Recollement::j_star(const Module& y) const {
  check_over(y, c_alg_, "j_*");
  const auto& q = total_->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (std::size_t i = 0; i < c_vertices_.size(); ++i) dims[c_vertices_[i]] = y.dim(i);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (c_arrow_[k]) maps.push_back(y.map(*c_arrow_[k]));
    else maps.emplace_back(dims[q.arrow(k).target], dims[q.arrow(k).source], total_->field());
  }
  return make_module_unchecked(total_, std::move(dims), std::move(maps));
}

Module Recollement::i_shriek(const Module& m) const {
  check_over(m, total_, "i^!");
  const auto& q = total_->quiver();
  std::vector<std::size_t> dims;
  for (auto v : a_vertices_) dims.push_back(m.dim(v));
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    if (a_arrow_[k]) maps.push_back(m.map(k));
  return make_module_unchecked(a_alg_, std::move(dims), std::move(maps));
}

Module Recollement::j_upper_star(const Module& m) const {
  check_over(m, total_, "j^*");
  const auto& q = total_->quiver();
  std::vector<std::size_t> dims;
  for (auto v : c_vertices_) dims.push_back(m.dim(v));
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    if (c_arrow_[k]) maps.push_back(m.map(k));
  return make_module_unchecked(c_alg_, std::move(dims), std::move(maps));
}

Quotient Recollement::cokernel_piece(const Module& m, std::size_t t) const {
  std::vector<Matrix> images;
  for (auto c : c_vertices_)
    for (auto path : total_->basis_between(c, t)) images.push_back(m.action_of_basis(path));
  const Matrix gens = images.empty() ? Matrix(m.dim(t), 0, m.field()) : hstack(images, m.dim(t), m.field());
  return quotient(m.dim(t), image_basis(gens), m.field());
}

Module Recollement::i_upper_star(const Module& m) const {
  check_over(m, total_, "i^*");
  const auto& q = total_->quiver();
  std::vector<Quotient> parts;
  std::vector<std::size_t> dims;
  for (auto v : a_vertices_) {
    parts.push_back(cokernel_piece(m, v));
    dims.push_back(parts.back().projection.rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (!a_arrow_[k]) continue;
    const auto s = *a_pos_[q.arrow(k).source], t = *a_pos_[q.arrow(k).target];
    maps.push_back(parts[t].projection * m.map(k) * parts[s].section);
  }
  return make_module_unchecked(a_alg_, std::move(dims), std::move(maps));
}

std::size_t Recollement::free_index(const Module& y, std::size_t t, std::size_t c_pos, std::size_t path_pos,
                                    std::size_t k) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < c_pos; ++i)
    idx += total_->basis_between(c_vertices_[i], t).size() * y.dim(i);
  return idx + path_pos * y.dim(c_pos) + k;
}

Recollement::TensorPiece Recollement::tensor_piece(const Module& y, std::size_t t) const {
  const auto& q = total_->quiver();
  const auto& F = total_->field();
  TensorPiece piece;
  for (std::size_t i = 0; i < c_vertices_.size(); ++i)
    piece.free_dim += total_->basis_between(c_vertices_[i], t).size() * y.dim(i);
  std::vector<std::vector<Scalar>> rels;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (!c_arrow_[k]) continue;
    const std::size_t cs = *c_pos_[q.arrow(k).source], ct = *c_pos_[q.arrow(k).target];
    const Matrix& yr = y.map(*c_arrow_[k]);
    const auto& from_target = total_->basis_between(q.arrow(k).target, t);
    const auto& from_source = total_->basis_between(q.arrow(k).source, t);
    for (std::size_t qp = 0; qp < from_target.size(); ++qp) {
      const auto& prod = total_->multiply(from_target[qp], total_->arrow_basis_index(k));
      for (std::size_t kk = 0; kk < y.dim(cs); ++kk) {
        // (q r) (x) y  -  q (x) (r y)
        std::vector<Scalar> rel(piece.free_dim, 0);
        for (std::size_t sp = 0; sp < from_source.size(); ++sp) {
          const Scalar c = prod[from_source[sp]];
          if (c == 0) continue;
          auto& slot = rel[free_index(y, t, cs, sp, kk)];
          slot = F.add(slot, c);
        }
        for (std::size_t l = 0; l < y.dim(ct); ++l) {
          const Scalar c = yr(l, kk);
          if (c == 0) continue;
          auto& slot = rel[free_index(y, t, ct, qp, l)];
          slot = F.sub(slot, c);
        }
        rels.push_back(std::move(rel));
      }
    }
  }
  Matrix relm(piece.free_dim, rels.size(), F);
  for (std::size_t j = 0; j < rels.size(); ++j)
    for (std::size_t r = 0; r < piece.free_dim; ++r) relm(r, j) = rels[j][r];
  piece.quotient = quotient(piece.free_dim, image_basis(relm), F);
  return piece;
}

Module Recollement::j_lower_shriek(const Module& y) const {
  check_over(y, c_alg_, "j_!");
  const auto& q = total_->quiver();
  const auto& F = total_->field();
  const std::size_t n = q.vertex_count();
  std::vector<std::optional<TensorPiece>> pieces(n);
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (a_pos_[v]) {
      pieces[v] = tensor_piece(y, v);
      dims[v] = pieces[v]->quotient.projection.rows();
    } else {
      dims[v] = y.dim(*c_pos_[v]);
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const std::size_t s = q.arrow(k).source, t = q.arrow(k).target;
    if (c_arrow_[k]) {
      maps.push_back(y.map(*c_arrow_[k]));
    } else if (c_pos_[s]) {
      // Connecting arrow: y in Y_s goes to the class of arrow (x) y.
      const auto& paths = total_->basis_between(s, t);
      const std::size_t pos =
          std::find(paths.begin(), paths.end(), total_->arrow_basis_index(k)) - paths.begin();
      Matrix lift(pieces[t]->free_dim, y.dim(*c_pos_[s]), F);
      for (std::size_t kk = 0; kk < lift.cols(); ++kk) lift(free_index(y, t, *c_pos_[s], pos, kk), kk) = 1;
      maps.push_back(pieces[t]->quotient.projection * lift);
    } else {
      Matrix lift(pieces[t]->free_dim, pieces[s]->free_dim, F);
      for (std::size_t ci = 0; ci < c_vertices_.size(); ++ci) {
        const auto& from = total_->basis_between(c_vertices_[ci], s);
        const auto& to = total_->basis_between(c_vertices_[ci], t);
        for (std::size_t p = 0; p < from.size(); ++p) {
          const auto& prod = total_->multiply(total_->arrow_basis_index(k), from[p]);
          for (std::size_t tp = 0; tp < to.size(); ++tp) {
            const Scalar c = prod[to[tp]];
            if (c == 0) continue;
            for (std::size_t kk = 0; kk < y.dim(ci); ++kk)
              lift(free_index(y, t, ci, tp, kk), free_index(y, s, ci, p, kk)) = c;
          }
        }
      }
      maps.push_back(pieces[t]->quotient.projection * lift * pieces[s]->quotient.section);
    }
  }
  return Module(total_, std::move(dims), std::move(maps));
}

// ---------------------------------------------------------------- on morphisms

Morphism Recollement::i_star(const Morphism& f) const {
  const Module s = i_star(f.source()), t = i_star(f.target());
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < total_->vertex_count(); ++v)
    blocks.push_back(a_pos_[v] ? f.block(*a_pos_[v]) : Matrix(0, 0, total_->field()));
  return Morphism::unchecked(s, t, std::move(blocks));
}

Morphism Recollement::j_star(const Morphism& f) const {
  const Module s = j_star(f.source()), t = j_star(f.target());
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < total_->vertex_count(); ++v)
    blocks.push_back(c_pos_[v] ? f.block(*c_pos_[v]) : Matrix(0, 0, total_->field()));
  return Morphism::unchecked(s, t, std::move(blocks));
}

Morphism Recollement::i_shriek(const Morphism& f) const {
  std::vector<Matrix> blocks;
  for (auto v : a_vertices_) blocks.push_back(f.block(v));
  return Morphism::unchecked(i_shriek(f.source()), i_shriek(f.target()), std::move(blocks));
}

Morphism Recollement::j_upper_star(const Morphism& f) const {
  std::vector<Matrix> blocks;
  for (auto v : c_vertices_) blocks.push_back(f.block(v));
  return Morphism::unchecked(j_upper_star(f.source()), j_upper_star(f.target()), std::move(blocks));
}

Morphism Recollement::i_upper_star(const Morphism& f) const {
  std::vector<Matrix> blocks;
  for (auto v : a_vertices_) {
    const Quotient qs = cokernel_piece(f.source(), v), qt = cokernel_piece(f.target(), v);
    blocks.push_back(qt.projection * f.block(v) * qs.section);
  }
  return Morphism::unchecked(i_upper_star(f.source()), i_upper_star(f.target()), std::move(blocks));
}

Morphism Recollement::j_lower_shriek(const Morphism& f) const {
  const Module& y = f.source();
  const Module& y2 = f.target();
  const auto& F = total_->field();
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < total_->vertex_count(); ++v) {
    if (c_pos_[v]) {
      blocks.push_back(f.block(*c_pos_[v]));
      continue;
    }
    const TensorPiece ps = tensor_piece(y, v), pt = tensor_piece(y2, v);
    Matrix lift(pt.free_dim, ps.free_dim, F);
    for (std::size_t ci = 0; ci < c_vertices_.size(); ++ci) {
      const Matrix& g = f.block(ci);
      const std::size_t paths = total_->basis_between(c_vertices_[ci], v).size();
      for (std::size_t p = 0; p < paths; ++p)
        for (std::size_t k = 0; k < y.dim(ci); ++k)
          for (std::size_t l = 0; l < y2.dim(ci); ++l)
            lift(free_index(y2, v, ci, p, l), free_index(y, v, ci, p, k)) = g(l, k);
    }
    blocks.push_back(pt.quotient.projection * lift * ps.quotient.section);
  }
  return Morphism::unchecked(j_lower_shriek(y), j_lower_shriek(y2), std::move(blocks));
}

// ---------------------------------------------------------------- canonical sequences

namespace {

CanonicalSequence certify(Morphism left, Morphism right) {
  CanonicalSequence s{std::move(left), std::move(right)};
  s.composite_zero = (s.right * s.left).is_zero();
  s.left_injective = s.left.is_injective();
  s.right_surjective = s.right.is_surjective();
  const std::size_t kernel_dim = s.right.source().total_dim() - s.right.rank();
  s.middle_exact = s.composite_zero && s.left.rank() == kernel_dim;
  return s;
}

}  // namespace

CanonicalSequence Recollement::canonical_sequence_upper(const Module& m) const {
  check_over(m, total_, "canonical sequence");
  const Module sub = i_star(i_shriek(m));
  const Module quo = j_star(j_upper_star(m));
  std::vector<Matrix> lb, rb;
  for (std::size_t v = 0; v < total_->vertex_count(); ++v) {
    lb.push_back(a_pos_[v] ? Matrix::identity(m.dim(v), m.field()) : Matrix(m.dim(v), 0, m.field()));
    rb.push_back(c_pos_[v] ? Matrix::identity(m.dim(v), m.field()) : Matrix(0, m.dim(v), m.field()));
  }
  return certify(Morphism(sub, m, std::move(lb)), Morphism(m, quo, std::move(rb)));
}

CanonicalSequence Recollement::canonical_sequence_lower(const Module& m) const {
  check_over(m, total_, "canonical sequence");
  const Module y = j_upper_star(m);
  const Module sub = j_lower_shriek(y);
  const Module quo = i_star(i_upper_star(m));
  const auto& F = m.field();
  std::vector<Matrix> lb, rb;
  for (std::size_t v = 0; v < total_->vertex_count(); ++v) {
    if (c_pos_[v]) {
      lb.push_back(Matrix::identity(m.dim(v), F));
      rb.push_back(Matrix(0, m.dim(v), F));
      continue;
    }
    // Counit: path (x) y goes to path . y.
    const TensorPiece piece = tensor_piece(y, v);
    Matrix eval(m.dim(v), piece.free_dim, F);
    for (std::size_t ci = 0; ci < c_vertices_.size(); ++ci) {
      const auto& paths = total_->basis_between(c_vertices_[ci], v);
      for (std::size_t p = 0; p < paths.size(); ++p) {
        const Matrix act = m.action_of_basis(paths[p]);
        for (std::size_t k = 0; k < y.dim(ci); ++k)
          for (std::size_t r = 0; r < m.dim(v); ++r) eval(r, free_index(y, v, ci, p, k)) = act(r, k);
      }
    }
    lb.push_back(eval * piece.quotient.section);
    rb.push_back(cokernel_piece(m, v).projection);
  }
  return certify(Morphism(sub, m, std::move(lb)), Morphism(m, quo, std::move(rb)));
}

Recollement Recollement::opposite() const {
  return build(tiltglue::opposite(total_), c_vertices_, tiltglue::opposite(c_alg_), tiltglue::opposite(a_alg_));
}

}  // namespace tiltglue
