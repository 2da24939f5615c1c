#include "tiltglue/homology.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "tiltglue/error.hpp"

namespace tiltglue {

namespace {

Morphism negated(const Morphism& f) { return f.scaled(f.source().field().modulus() - 1); }

std::size_t sum_of_products(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Keys carry the algebra's address: cached modules own their algebra, so the
// address cannot be recycled while the entry exists.
std::string cache_key(const Module& m) {
  std::ostringstream os;
  os << static_cast<const void*>(m.algebra().get()) << '/' << m.fingerprint();
  return os.str();
}

template <class Step>
struct ChainCache {
  std::shared_mutex mutex;
  std::map<std::string, std::deque<Step>> chains;

  template <class Make>
  const Step& get(const Module& m, std::size_t k, Make make) {
    const std::string key = cache_key(m);
    {
      std::shared_lock lock(mutex);
      auto it = chains.find(key);
      if (it != chains.end() && it->second.size() > k) return it->second[k];
    }
    std::unique_lock lock(mutex);
    auto& chain = chains[key];
    if (chain.empty()) chain.push_back(make(m));
    while (chain.size() <= k) chain.push_back(make(chain.back().next()));
    return chain[k];
  }
};

struct SyzygyEntry : SyzygyStep {
  const Module& next() const { return inclusion.source(); }
};
struct CosyzygyEntry : CosyzygyStep {
  const Module& next() const { return projection.target(); }
};

ChainCache<SyzygyEntry>& syzygy_cache() {
  static ChainCache<SyzygyEntry> cache;
  return cache;
}
ChainCache<CosyzygyEntry>& cosyzygy_cache() {
  static ChainCache<CosyzygyEntry> cache;
  return cache;
}

}  // namespace

Morphism map_from_projective(const Module& pv, std::size_t v, const Module& m, std::span<const Scalar> element) {
  const auto& a = *m.algebra();
  if (element.size() != m.dim(v)) throw Error(ErrorCode::ShapeMismatch, "element does not live at the vertex");
  const Matrix x = Matrix::column_vector(element, m.field());
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < a.vertex_count(); ++t) {
    const auto& paths = a.basis_between(v, t);
    Matrix b(m.dim(t), paths.size(), m.field());
    for (std::size_t c = 0; c < paths.size(); ++c) {
      const Matrix img = m.action_of_basis(paths[c]) * x;
      for (std::size_t r = 0; r < b.rows(); ++r) b(r, c) = img(r, 0);
    }
    blocks.push_back(std::move(b));
  }
  return Morphism::unchecked(pv, m, std::move(blocks));
}

Morphism projective_cover(const Module& m) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  std::vector<Module> parts;
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> generators;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> incoming;
    for (std::size_t k = 0; k < q.arrow_count(); ++k)
      if (q.arrow(k).target == v) incoming.push_back(m.map(k));
    const Matrix rad = incoming.empty() ? Matrix(m.dim(v), 0, m.field())
                                        : image_basis(hstack(incoming, m.dim(v), m.field()));
    const Quotient top = quotient(m.dim(v), rad, m.field());
    if (top.section.cols() == 0) continue;
    const Module pv = projective_module(alg, v);
    for (std::size_t c = 0; c < top.section.cols(); ++c) {
      parts.push_back(pv);
      generators.emplace_back(v, top.section.column(c));
    }
  }
  if (parts.empty()) return Morphism::zero(Module::zero(alg), m);
  const DirectSum sum = direct_sum(parts, alg);
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < parts.size(); ++i)
    maps.push_back(map_from_projective(parts[i], generators[i].first, m, generators[i].second));
  return sum_map(maps, sum);
}

Morphism injective_envelope(const Module& m) {
  const Morphism dual_cover = projective_cover(dualize(m));
  const Morphism env = dualize(dual_cover);
  return Morphism::unchecked(m, env.target(), env.blocks());
}

const SyzygyStep& syzygy_step(const Module& m, std::size_t k) {
  return syzygy_cache().get(m, k, [](const Module& x) {
    SyzygyEntry e;
    e.object = x;
    e.cover = projective_cover(x);
    e.inclusion = kernel(e.cover).inclusion;
    return e;
  });
}

const CosyzygyStep& cosyzygy_step(const Module& m, std::size_t k) {
  return cosyzygy_cache().get(m, k, [](const Module& x) {
    CosyzygyEntry e;
    e.object = x;
    e.envelope = injective_envelope(x);
    e.projection = cokernel(e.envelope).projection;
    return e;
  });
}

Module syzygy(const Module& m, std::size_t i) { return i == 0 ? m : syzygy_step(m, i - 1).inclusion.source(); }
Module cosyzygy(const Module& m, std::size_t i) { return i == 0 ? m : cosyzygy_step(m, i - 1).projection.target(); }

void clear_homology_cache() {
  {
    std::unique_lock lock(syzygy_cache().mutex);
    syzygy_cache().chains.clear();
  }
  std::unique_lock lock(cosyzygy_cache().mutex);
  cosyzygy_cache().chains.clear();
}

Resolution projective_resolution(const Module& m, std::size_t length) {
  Resolution r{Resolution::Kind::Projective, m, {}, {}, true};
  for (std::size_t k = 0; k <= length; ++k) {
    const auto& step = syzygy_step(m, k);
    if (step.object.is_zero()) break;
    r.terms.push_back(step.cover.source());
    if (k == 0) {
      r.differentials.push_back(step.cover);
    } else {
      r.differentials.push_back(syzygy_step(m, k - 1).inclusion * step.cover);
    }
  }
  return r;
}

Resolution injective_coresolution(const Module& m, std::size_t length) {
  Resolution r{Resolution::Kind::Injective, m, {}, {}, true};
  for (std::size_t k = 0; k <= length; ++k) {
    const auto& step = cosyzygy_step(m, k);
    if (step.object.is_zero()) break;
    r.terms.push_back(step.envelope.target());
    if (k == 0) {
      r.differentials.push_back(step.envelope);
    } else {
      r.differentials.push_back(step.envelope * cosyzygy_step(m, k - 1).projection);
    }
  }
  return r;
}

std::optional<std::size_t> projective_dimension(const Module& m, std::size_t cap) {
  for (std::size_t k = 0; k <= cap; ++k)
    if (is_projective(syzygy(m, k))) return k;
  return std::nullopt;
}

std::optional<std::size_t> injective_dimension(const Module& m, std::size_t cap) {
  for (std::size_t k = 0; k <= cap; ++k)
    if (is_injective(cosyzygy(m, k))) return k;
  return std::nullopt;
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t cap) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    auto pd = projective_dimension(simple_module(a, v), cap);
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

// ---------------------------------------------------------------- Ext

std::vector<Scalar> ExtGroup::coordinates(const Morphism& c) const {
  if (dimension == 0) return {};
  const auto h = hom_->coordinates(c);
  return (projection_ * Matrix::column_vector(h, source.field())).column(0);
}

ExtGroup ext(const Module& m, const Module& n, std::size_t i) {
  if (i == 0) throw Error(ErrorCode::PreconditionFailed, "Ext degree must be at least 1");
  require_same_algebra(m.algebra(), n.algebra(), "Ext");
  const auto& step = syzygy_step(m, i - 1);
  const Morphism& iota = step.inclusion;  // Omega^i M -> P_{i-1}
  ExtGroup g;
  g.degree = i;
  g.source = m;
  g.target = n;
  g.omega_inclusion = iota;
  g.hom_ = std::make_shared<const HomSpace>(iota.source(), n);
  const auto& F = m.field();
  const std::size_t h = g.hom_->dimension();
  const auto extendable = hom_basis(iota.target(), n);
  Matrix w(h, extendable.size(), F);
  for (std::size_t j = 0; j < extendable.size(); ++j) {
    const auto c = g.hom_->coordinates(extendable[j] * iota);
    for (std::size_t r = 0; r < h; ++r) w(r, j) = c[r];
  }
  Quotient q = quotient(h, image_basis(w), F);
  g.dimension = q.projection.rows();
  g.projection_ = std::move(q.projection);
  for (std::size_t k = 0; k < g.dimension; ++k) g.cocycles.push_back(g.hom_->combination(q.section.column(k)));
  return g;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  if (i == 0) throw Error(ErrorCode::PreconditionFailed, "Ext degree must be at least 1");
  require_same_algebra(m.algebra(), n.algebra(), "Ext");
  const auto& step = syzygy_step(m, i - 1);
  const Module& x = step.object;
  const std::size_t from_p0 = sum_of_products(top_dims(x), n.dims());
  return hom_dim(step.inclusion.source(), n) + hom_dim(x, n) - from_p0;
}

std::size_t ext_dim_sigma(const Module& m, const Module& n, std::size_t i) {
  if (i == 0) throw Error(ErrorCode::PreconditionFailed, "Ext degree must be at least 1");
  require_same_algebra(m.algebra(), n.algebra(), "Ext");
  const auto& step = cosyzygy_step(n, i - 1);
  const Module& y = step.object;
  const std::size_t to_i0 = sum_of_products(socle_dims(y), m.dims());
  return hom_dim(m, step.projection.target()) + hom_dim(m, y) - to_i0;
}

// ---------------------------------------------------------------- sequences

bool ShortExactSequence::is_exact() const {
  if (!(left.target() == right.source())) return false;
  return left.is_injective() && right.is_surjective() && (right * left).is_zero() &&
         middle().total_dim() == sub().total_dim() + quotient().total_dim();
}

PushoutSquare pushout(const Morphism& f, const Morphism& g) {
  require_same_algebra(f.source().algebra(), g.source().algebra(), "pushout");
  const DirectSum bc = direct_sum({f.target(), g.target()});
  const QuotientObject q = cokernel(tuple_map({f, negated(g)}, bc));
  return {q.object, q.projection * bc.inclusions[0], q.projection * bc.inclusions[1]};
}

PullbackSquare pullback(const Morphism& f, const Morphism& g) {
  require_same_algebra(f.target().algebra(), g.target().algebra(), "pullback");
  const DirectSum bc = direct_sum({f.source(), g.source()});
  const SubObject k = kernel(sum_map({f, negated(g)}, bc));
  return {k.object, bc.projections[0] * k.inclusion, bc.projections[1] * k.inclusion};
}

ShortExactSequence pushout_extension(const Morphism& iota, const Morphism& pi, const Morphism& c) {
  const DirectSum pa = direct_sum({iota.target(), c.target()});
  const QuotientObject q = cokernel(tuple_map({iota, negated(c)}, pa));
  const Morphism to_e = sum_map({pi, Morphism::zero(c.target(), pi.target())}, pa);
  auto right = descend_through_epi(q.projection, to_e);
  if (!right) throw Error(ErrorCode::Internal, "pushout does not map onto the quotient");
  return {q.projection * pa.inclusions[1], *right};
}

ShortExactSequence realize_extension(const Module& u, const Morphism& cocycle) {
  const auto& step = syzygy_step(u, 0);
  const Morphism& iota = step.inclusion;
  if (cocycle.source().dims() != iota.source().dims())
    throw Error(ErrorCode::PreconditionFailed, "cocycle is not defined on the syzygy of the quotient");
  const Morphism c = Morphism::unchecked(iota.source(), cocycle.target(), cocycle.blocks());
  return pushout_extension(iota, step.cover, c);
}

}  // namespace tiltglue
