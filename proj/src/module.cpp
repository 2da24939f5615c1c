#include "tiltglue/module.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "poly.hpp"
#include "tiltglue/error.hpp"

namespace tiltglue {

namespace {

Matrix must_solve(const Matrix& a, const Matrix& b, const char* what) {
  auto x = solve(a, b);
  if (!x) throw Error(ErrorCode::Internal, std::string(what) + ": expected a solution");
  return *x;
}

std::string algebra_signature(const BoundQuiverAlgebra& a) {
  std::ostringstream os;
  os << a.field().modulus() << ';' << a.vertex_count() << ';';
  for (const auto& arr : a.quiver().arrows()) os << arr.source << '>' << arr.target << ',';
  os << ';';
  for (const auto& r : a.relations()) {
    for (const auto& t : r.terms) {
      os << t.coefficient << ':';
      for (auto x : t.arrows) os << x << '.';
      os << '+';
    }
    os << '|';
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Module

Module::Module(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : data_(std::make_shared<const Data>(Data{std::move(algebra), std::move(dims), std::move(maps)})) {}

Module make_module_unchecked(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps) {
  return Module(Module::Unchecked{}, std::move(algebra), std::move(dims), std::move(maps));
}

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : Module(Unchecked{}, std::move(algebra), std::move(dims), std::move(maps)) {
  const auto& alg = *data_->algebra;
  const auto& q = alg.quiver();
  if (data_->dims.size() != q.vertex_count())
    throw Error(ErrorCode::InvalidModule, "expected one dimension per vertex");
  if (data_->maps.size() != q.arrow_count())
    throw Error(ErrorCode::InvalidModule, "expected one matrix per arrow");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const Matrix& m = data_->maps[a];
    if (m.rows() != data_->dims[arr.target] || m.cols() != data_->dims[arr.source])
      throw Error(ErrorCode::InvalidModule, "matrix for arrow '" + arr.name + "' has shape " +
                                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                ", expected " + std::to_string(data_->dims[arr.target]) + "x" +
                                                std::to_string(data_->dims[arr.source]));
    if (!(m.field() == alg.field()))
      throw Error(ErrorCode::InvalidModule, "matrix for arrow '" + arr.name + "' uses another field");
  }
  for (std::size_t r = 0; r < alg.relations().size(); ++r) {
    const auto& rel = alg.relations()[r];
    const auto& first = rel.terms.front().arrows;
    const std::size_t s = q.arrow(first.front()).source, t = q.arrow(first.back()).target;
    Matrix sum(data_->dims[t], data_->dims[s], alg.field());
    for (const auto& term : rel.terms) sum += action(Path{s, t, term.arrows}).scaled(term.coefficient);
    if (!sum.is_zero())
      throw Error(ErrorCode::InvalidModule, "relation #" + std::to_string(r + 1) + " is not satisfied");
  }
}

Module Module::zero(AlgebraPtr algebra) {
  const auto& q = algebra->quiver();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps.emplace_back(0, 0, algebra->field());
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  return make_module_unchecked(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Module::total_dim() const {
  return std::accumulate(data_->dims.begin(), data_->dims.end(), std::size_t{0});
}

Matrix Module::action(const Path& p) const {
  Matrix m = Matrix::identity(dim(p.source), field());
  for (auto a : p.arrows) m = map(a) * m;
  return m;
}

std::string Module::fingerprint() const {
  std::ostringstream os;
  os << algebra_signature(*algebra()) << '#';
  for (auto d : dims()) os << d << ',';
  for (const auto& m : maps()) {
    os << '[';
    for (auto x : m.data()) os << x << ' ';
    os << ']';
  }
  return os.str();
}

bool operator==(const Module& a, const Module& b) {
  if (a.data_ == b.data_) return true;
  return same_algebra(a.algebra(), b.algebra()) && a.dims() == b.dims() && a.maps() == b.maps();
}

// ---------------------------------------------------------------- Morphism

Morphism Morphism::unchecked(Module source, Module target, std::vector<Matrix> blocks) {
  Morphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.blocks_ = std::move(blocks);
  return f;
}

Morphism::Morphism(Module source, Module target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  require_same_algebra(source_.algebra(), target_.algebra(), "morphism");
  const auto& q = source_.algebra()->quiver();
  if (blocks_.size() != q.vertex_count()) throw Error(ErrorCode::InvalidMorphism, "expected one block per vertex");
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
      throw Error(ErrorCode::InvalidMorphism, "block at vertex " + q.vertex_name(v) + " has the wrong shape");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(target_.map(a) * blocks_[arr.source] == blocks_[arr.target] * source_.map(a)))
      throw Error(ErrorCode::InvalidMorphism, "square for arrow '" + arr.name + "' does not commute");
  }
}

Morphism Morphism::zero(const Module& source, const Module& target) {
  require_same_algebra(source.algebra(), target.algebra(), "zero morphism");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    blocks.emplace_back(target.dim(v), source.dim(v), source.field());
  return unchecked(source, target, std::move(blocks));
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Matrix> blocks;
  for (auto d : m.dims()) blocks.push_back(Matrix::identity(d, m.field()));
  return unchecked(m, m, std::move(blocks));
}

bool Morphism::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += tiltglue::rank(b);
  return r;
}

bool Morphism::is_injective() const { return rank() == source_.total_dim(); }
bool Morphism::is_surjective() const { return rank() == target_.total_dim(); }
bool Morphism::is_isomorphism() const {
  return source_.total_dim() == target_.total_dim() && is_injective() && is_surjective();
}

Morphism Morphism::scaled(Scalar s) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return unchecked(source_, target_, std::move(blocks));
}

Morphism operator+(const Morphism& f, const Morphism& g) {
  if (f.source().dims() != g.source().dims() || f.target().dims() != g.target().dims())
    throw Error(ErrorCode::ShapeMismatch, "adding morphisms between different modules");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(f.block(v) + g.block(v));
  return Morphism::unchecked(f.source(), f.target(), std::move(blocks));
}

Morphism operator-(const Morphism& f, const Morphism& g) {
  if (f.source().dims() != g.source().dims() || f.target().dims() != g.target().dims())
    throw Error(ErrorCode::ShapeMismatch, "subtracting morphisms between different modules");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(f.block(v) - g.block(v));
  return Morphism::unchecked(f.source(), f.target(), std::move(blocks));
}

Morphism operator*(const Morphism& g, const Morphism& f) {
  if (f.target().dims() != g.source().dims())
    throw Error(ErrorCode::ShapeMismatch, "composing morphisms that do not meet");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
  return Morphism::unchecked(f.source(), g.target(), std::move(blocks));
}

bool operator==(const Morphism& f, const Morphism& g) {
  return f.source() == g.source() && f.target() == g.target() && f.blocks() == g.blocks();
}

// ---------------------------------------------------------------- standard modules

Module simple_module(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex with index " + std::to_string(v));
  std::vector<std::size_t> dims(a->vertex_count(), 0);
  dims[v] = 1;
  std::vector<Matrix> maps;
  for (const auto& arr : a->quiver().arrows()) maps.emplace_back(dims[arr.target], dims[arr.source], a->field());
  return make_module_unchecked(a, std::move(dims), std::move(maps));
}

Module projective_module(const AlgebraPtr& a, std::size_t v) {
  if (v >= a->vertex_count()) throw Error(ErrorCode::UnknownVertex, "no vertex with index " + std::to_string(v));
  const std::size_t n = a->vertex_count();
  std::vector<std::size_t> dims(n);
  for (std::size_t t = 0; t < n; ++t) dims[t] = a->basis_between(v, t).size();
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < a->quiver().arrow_count(); ++k) {
    const auto& arr = a->quiver().arrow(k);
    const auto& from = a->basis_between(v, arr.source);
    const auto& to = a->basis_between(v, arr.target);
    Matrix m(to.size(), from.size(), a->field());
    for (std::size_t c = 0; c < from.size(); ++c) {
      const auto& prod = a->multiply(a->arrow_basis_index(k), from[c]);
      for (std::size_t r = 0; r < to.size(); ++r) m(r, c) = prod[to[r]];
    }
    maps.push_back(std::move(m));
  }
  return make_module_unchecked(a, std::move(dims), std::move(maps));
}

Module injective_module(const AlgebraPtr& a, std::size_t v) { return dualize(projective_module(opposite(a), v)); }

// ---------------------------------------------------------------- Hom

HomSpace::HomSpace(Module source, Module target) : source_(std::move(source)), target_(std::move(target)) {
  require_same_algebra(source_.algebra(), target_.algebra(), "Hom");
  const auto& q = source_.algebra()->quiver();
  const auto& F = source_.field();
  const std::size_t n = q.vertex_count();
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + target_.dim(v) * source_.dim(v);

  std::size_t eqs = 0;
  for (const auto& arr : q.arrows()) eqs += target_.dim(arr.target) * source_.dim(arr.source);
  Matrix sys(eqs, offsets_[n], F);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arr = q.arrow(k);
    const std::size_t s = arr.source, t = arr.target;
    const Matrix& na = target_.map(k);  // N_t x N_s
    const Matrix& ma = source_.map(k);  // M_t x M_s
    const std::size_t ms = source_.dim(s), mt = source_.dim(t), ns = target_.dim(s), nt = target_.dim(t);
    // (N_a B_s - B_t M_a)(i, j) = 0, with B_v(r, c) at offsets_[v] + r * dim M_v + c.
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t j = 0; j < ms; ++j, ++row) {
        for (std::size_t r = 0; r < ns; ++r) {
          const Scalar c = na(i, r);
          if (c == 0) continue;
          Scalar& slot = sys(row, offsets_[s] + r * ms + j);
          slot = F.add(slot, c);
        }
        for (std::size_t c2 = 0; c2 < mt; ++c2) {
          const Scalar c = ma(c2, j);
          if (c == 0) continue;
          Scalar& slot = sys(row, offsets_[t] + i * mt + c2);
          slot = F.sub(slot, c);
        }
      }
    }
  }
  auto ker = kernel(sys);
  basis_ = std::move(ker.basis);
  free_ = std::move(ker.free_columns);
}

Morphism HomSpace::element(std::size_t i) const {
  std::vector<Scalar> coeff(dimension(), 0);
  coeff.at(i) = 1;
  return combination(coeff);
}

std::vector<Morphism> HomSpace::basis() const {
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back(element(i));
  return out;
}

Morphism HomSpace::combination(std::span<const Scalar> coefficients) const {
  if (coefficients.size() != dimension()) throw Error(ErrorCode::ShapeMismatch, "wrong number of Hom coordinates");
  const auto& F = source_.field();
  std::vector<Scalar> flat(unknowns(), 0);
  for (std::size_t j = 0; j < dimension(); ++j) {
    const Scalar c = coefficients[j];
    if (c == 0) continue;
    for (std::size_t r = 0; r < unknowns(); ++r) flat[r] = F.add(flat[r], F.mul(c, basis_(r, j)));
  }
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    Matrix b(target_.dim(v), source_.dim(v), F);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = flat[offsets_[v] + r * b.cols() + c];
    blocks.push_back(std::move(b));
  }
  return Morphism::unchecked(source_, target_, std::move(blocks));
}

std::vector<Scalar> HomSpace::flatten(const Morphism& f) const {
  std::vector<Scalar> flat(unknowns(), 0);
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    const Matrix& b = f.block(v);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) flat[offsets_[v] + r * b.cols() + c] = b(r, c);
  }
  return flat;
}

std::vector<Scalar> HomSpace::coordinates(const Morphism& f) const {
  const auto flat = flatten(f);
  std::vector<Scalar> coords(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) coords[j] = flat[free_[j]];
  return coords;
}

std::vector<Morphism> hom_basis(const Module& m, const Module& n) { return HomSpace(m, n).basis(); }
std::size_t hom_dim(const Module& m, const Module& n) { return HomSpace(m, n).dimension(); }

// ---------------------------------------------------------------- kernels and friends

SubObject kernel(const Morphism& f) {
  const Module& m = f.source();
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> incl;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    incl.push_back(kernel_basis(f.block(v)));
    dims.push_back(incl.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arr = q.arrow(k);
    maps.push_back(must_solve(incl[arr.target], m.map(k) * incl[arr.source], "kernel"));
  }
  Module obj = make_module_unchecked(m.algebra(), std::move(dims), std::move(maps));
  return {obj, Morphism::unchecked(obj, m, std::move(incl))};
}

SubObject image(const Morphism& f) {
  const Module& n = f.target();
  const auto& q = n.algebra()->quiver();
  std::vector<Matrix> incl;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    incl.push_back(image_basis(f.block(v)));
    dims.push_back(incl.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arr = q.arrow(k);
    maps.push_back(must_solve(incl[arr.target], n.map(k) * incl[arr.source], "image"));
  }
  Module obj = make_module_unchecked(n.algebra(), std::move(dims), std::move(maps));
  return {obj, Morphism::unchecked(obj, n, std::move(incl))};
}

QuotientObject cokernel(const Morphism& f) {
  const Module& n = f.target();
  const auto& q = n.algebra()->quiver();
  std::vector<Quotient> parts;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    parts.push_back(quotient(n.dim(v), image_basis(f.block(v)), n.field()));
    dims.push_back(parts.back().projection.rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arr = q.arrow(k);
    maps.push_back(parts[arr.target].projection * n.map(k) * parts[arr.source].section);
  }
  Module obj = make_module_unchecked(n.algebra(), std::move(dims), std::move(maps));
  std::vector<Matrix> proj;
  for (auto& p : parts) proj.push_back(std::move(p.projection));
  return {obj, Morphism::unchecked(n, obj, std::move(proj))};
}

std::optional<Morphism> lift_through_mono(const Morphism& mono, const Morphism& g) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < g.blocks().size(); ++v) {
    auto x = solve(mono.block(v), g.block(v));
    if (!x) return std::nullopt;
    blocks.push_back(std::move(*x));
  }
  return Morphism::unchecked(g.source(), mono.source(), std::move(blocks));
}

std::optional<Morphism> descend_through_epi(const Morphism& epi, const Morphism& g) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < g.blocks().size(); ++v) {
    auto x = solve(epi.block(v).transposed(), g.block(v).transposed());
    if (!x) return std::nullopt;
    blocks.push_back(x->transposed());
  }
  return Morphism::unchecked(epi.target(), g.target(), std::move(blocks));
}

// ---------------------------------------------------------------- direct sums

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& algebra) {
  for (const auto& p : parts) require_same_algebra(p.algebra(), algebra, "direct sum");
  const auto& q = algebra->quiver();
  const auto& F = algebra->field();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(k));
    Matrix m = block_diagonal(blocks, F);
    if (blocks.empty()) m = Matrix(0, 0, F);
    maps.push_back(std::move(m));
  }
  DirectSum out;
  out.object = make_module_unchecked(algebra, dims, std::move(maps));
  std::vector<std::size_t> offset(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inc, pr;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix i(dims[v], p.dim(v), F);
      for (std::size_t r = 0; r < p.dim(v); ++r) i(offset[v] + r, r) = 1;
      pr.push_back(i.transposed());
      inc.push_back(std::move(i));
      offset[v] += p.dim(v);
    }
    out.inclusions.push_back(Morphism::unchecked(p, out.object, std::move(inc)));
    out.projections.push_back(Morphism::unchecked(out.object, p, std::move(pr)));
  }
  return out;
}

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error(ErrorCode::PreconditionFailed, "empty direct sum needs an explicit algebra");
  return direct_sum(parts, parts.front().algebra());
}

Morphism sum_map(const std::vector<Morphism>& maps, const DirectSum& sources) {
  if (maps.empty()) throw Error(ErrorCode::PreconditionFailed, "sum of no morphisms");
  if (maps.size() != sources.inclusions.size()) throw Error(ErrorCode::ShapeMismatch, "sum_map arity");
  Morphism total = maps[0] * sources.projections[0];
  for (std::size_t i = 1; i < maps.size(); ++i) total = total + maps[i] * sources.projections[i];
  return total;
}

Morphism tuple_map(const std::vector<Morphism>& maps, const DirectSum& targets) {
  if (maps.empty()) throw Error(ErrorCode::PreconditionFailed, "tuple of no morphisms");
  if (maps.size() != targets.inclusions.size()) throw Error(ErrorCode::ShapeMismatch, "tuple_map arity");
  Morphism total = targets.inclusions[0] * maps[0];
  for (std::size_t i = 1; i < maps.size(); ++i) total = total + targets.inclusions[i] * maps[i];
  return total;
}

Morphism diagonal_map(const std::vector<Morphism>& maps, const DirectSum& sources, const DirectSum& targets) {
  if (maps.size() != sources.inclusions.size() || maps.size() != targets.inclusions.size())
    throw Error(ErrorCode::ShapeMismatch, "diagonal_map arity");
  if (maps.empty()) return Morphism::zero(sources.object, targets.object);
  Morphism total = targets.inclusions[0] * maps[0] * sources.projections[0];
  for (std::size_t i = 1; i < maps.size(); ++i) total = total + targets.inclusions[i] * maps[i] * sources.projections[i];
  return total;
}

// ---------------------------------------------------------------- duality

Module dualize(const Module& m) {
  std::vector<Matrix> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transposed());
  return make_module_unchecked(opposite(m.algebra()), m.dims(), std::move(maps));
}

Morphism dualize(const Morphism& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(b.transposed());
  return Morphism::unchecked(dualize(f.target()), dualize(f.source()), std::move(blocks));
}

Module rebase(const Module& m, const AlgebraPtr& algebra) {
  require_same_algebra(m.algebra(), algebra, "rebase");
  return make_module_unchecked(algebra, m.dims(), m.maps());
}

// ---------------------------------------------------------------- decomposition

namespace {

Morphism power(const Morphism& z, std::uint64_t e) {
  Morphism result = Morphism::identity(z.source());
  Morphism base = z;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// End(M) modulo its radical, represented through a complement of the radical
// in Hom-space coordinates.
struct TopOfEnd {
  const HomSpace& hom;
  Quotient q;
  std::vector<Morphism> reps;

  Matrix project(const Morphism& f) const {
    const auto c = hom.coordinates(f);
    return q.projection * Matrix::column_vector(c, hom.source().field());
  }
};

// A nontrivial idempotent endomorphism of x, or nullopt when End(x) is local.
std::optional<Morphism> splitting_endomorphism(const Module& x, std::mt19937_64& rng) {
  const HomSpace hom(x, x);
  const std::size_t d = hom.dimension();
  if (d <= 1) return std::nullopt;
  const auto& F = x.field();
  const auto basis = hom.basis();

  // Trace form tr(E_i E_j); its radical is the Jacobson radical since p > dim x.
  Matrix gram(d, d, F);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Scalar t = 0;
      for (std::size_t v = 0; v < x.dims().size(); ++v) {
        const Matrix& a = basis[i].block(v);
        const Matrix& b = basis[j].block(v);
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c) t = F.add(t, F.mul(a(r, c), b(c, r)));
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  const Matrix rad = kernel_basis(gram);
  const std::size_t s = d - rad.cols();
  if (s <= 1) return std::nullopt;

  TopOfEnd top{hom, quotient(d, rad, F), {}};
  for (std::size_t k = 0; k < s; ++k) top.reps.push_back(hom.combination(top.q.section.column(k)));

  bool commutative = true;
  for (std::size_t a = 0; a < s && commutative; ++a)
    for (std::size_t b = a + 1; b < s && commutative; ++b)
      if (!top.project(top.reps[a] * top.reps[b] - top.reps[b] * top.reps[a]).is_zero()) commutative = false;
  if (commutative) {
    // Berlekamp: a commutative semisimple algebra is a field iff {z : z^p = z} is one-dimensional.
    Matrix frob(s, s, F);
    for (std::size_t k = 0; k < s; ++k) {
      const Matrix col = top.project(power(top.reps[k], F.modulus()));
      for (std::size_t r = 0; r < s; ++r) frob(r, k) = F.sub(col(r, 0), r == k ? 1 : 0);
    }
    if (s - rank(frob) == 1) return std::nullopt;
  }

  std::uniform_int_distribution<Scalar> dist(0, F.modulus() - 1);
  const Morphism id = Morphism::identity(x);
  for (std::size_t attempt = 0; attempt < s + 256; ++attempt) {
    Morphism z;
    if (attempt < s) {
      z = top.reps[attempt];
    } else {
      std::vector<Scalar> coeff(s);
      for (auto& c : coeff) c = dist(rng);
      const Matrix v = top.q.section * Matrix::column_vector(coeff, F);
      z = hom.combination(v.column(0));
    }
    // Minimal polynomial of z in End/rad.
    std::vector<Matrix> cols{top.project(id)};
    std::vector<Morphism> powers{id};
    poly::Poly f;
    for (;;) {
      powers.push_back(powers.back() * z);
      Matrix next = top.project(powers.back());
      Matrix span = hstack(cols, s, F);
      if (auto c = solve(span, next)) {
        f.assign(cols.size() + 1, 0);
        for (std::size_t i = 0; i < cols.size(); ++i) f[i] = F.neg((*c)(i, 0));
        f.back() = 1;
        break;
      }
      cols.push_back(std::move(next));
    }
    auto e_poly = poly::splitting_idempotent(f, F, rng);
    if (!e_poly) continue;
    Morphism e = Morphism::zero(x, x);
    for (std::size_t i = 0; i < e_poly->size(); ++i)
      if ((*e_poly)[i] != 0) e = e + powers[i].scaled((*e_poly)[i]);
    // Lift the idempotent modulo the radical: e <- 3e^2 - 2e^3 converges.
    bool idempotent = false;
    for (int it = 0; it < 64; ++it) {
      const Morphism e2 = e * e;
      if (e2 == e) {
        idempotent = true;
        break;
      }
      e = e2.scaled(3) - (e2 * e).scaled(2);
    }
    if (!idempotent) throw Error(ErrorCode::Internal, "idempotent lifting did not converge");
    if (!e.is_zero() && !(e == id)) return e;
  }
  throw Error(ErrorCode::Internal, "no splitting idempotent found for a decomposable module");
}

void split_into(const Module& x, const Morphism& incl, const Morphism& proj, std::mt19937_64& rng,
                std::vector<Summand>& out) {
  if (x.is_zero()) return;
  auto e = splitting_endomorphism(x, rng);
  if (!e) {
    out.push_back({x, incl, proj});
    return;
  }
  const Morphism id = Morphism::identity(x);
  for (const Morphism& idem : {*e, id - *e}) {
    SubObject part = image(idem);
    auto to_part = lift_through_mono(part.inclusion, idem);
    if (!to_part) throw Error(ErrorCode::Internal, "idempotent does not factor through its image");
    split_into(part.object, incl * part.inclusion, *to_part * proj, rng, out);
  }
}

void require_field_size(const Module& m) {
  if (m.total_dim() >= m.field().modulus())
    throw Error(ErrorCode::FieldTooSmall, "decomposition needs p > dim M (p = " +
                                              std::to_string(m.field().modulus()) +
                                              ", dim M = " + std::to_string(m.total_dim()) + ")");
}

std::optional<Morphism> iso_between_indecomposables(const Module& m, const Module& n) {
  if (m.dims() != n.dims()) return std::nullopt;
  const auto fs = hom_basis(m, n);
  if (fs.empty()) return std::nullopt;
  for (const auto& f : fs)
    if (f.is_isomorphism()) return f;
  // End(M) local: some g f is a unit iff M and N are isomorphic.
  const auto gs = hom_basis(n, m);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if ((g * f).is_isomorphism()) return f;
  return std::nullopt;
}

}  // namespace

std::vector<Summand> decompose(const Module& m, std::uint64_t seed) {
  if (m.is_zero()) return {};
  require_field_size(m);
  std::mt19937_64 rng(seed);
  std::vector<Summand> out;
  split_into(m, Morphism::identity(m), Morphism::identity(m), rng, out);
  return out;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  require_field_size(m);
  std::mt19937_64 rng(kDefaultSeed);
  return !splitting_endomorphism(m, rng).has_value();
}

std::vector<std::pair<Module, std::size_t>> decompose_grouped(const Module& m, std::uint64_t seed) {
  std::vector<std::pair<Module, std::size_t>> groups;
  for (const auto& s : decompose(m, seed)) {
    bool found = false;
    for (auto& g : groups) {
      if (iso_between_indecomposables(g.first, s.module)) {
        ++g.second;
        found = true;
        break;
      }
    }
    if (!found) groups.emplace_back(s.module, 1);
  }
  return groups;
}

std::optional<Morphism> find_isomorphism(const Module& m, const Module& n, std::uint64_t seed) {
  require_same_algebra(m.algebra(), n.algebra(), "isomorphism test");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return Morphism::zero(m, n);
  const auto ms = decompose(m, seed);
  const auto ns = decompose(n, seed);
  if (ms.size() != ns.size()) return std::nullopt;
  if (ms.size() == 1) return iso_between_indecomposables(m, n);
  std::vector<bool> used(ns.size(), false);
  std::optional<Morphism> witness;
  for (const auto& a : ms) {
    bool matched = false;
    for (std::size_t j = 0; j < ns.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto w = iso_between_indecomposables(a.module, ns[j].module)) {
        used[j] = true;
        matched = true;
        Morphism piece = ns[j].inclusion * *w * a.projection;
        witness = witness ? *witness + piece : piece;
      }
    }
    if (!matched) return std::nullopt;
  }
  return witness;
}

bool is_isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

std::vector<std::size_t> top_dims(const Module& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> incoming;
    for (std::size_t k = 0; k < q.arrow_count(); ++k)
      if (q.arrow(k).target == v) incoming.push_back(m.map(k));
    const std::size_t rad = incoming.empty() ? 0 : rank(hstack(incoming, m.dim(v), m.field()));
    out.push_back(m.dim(v) - rad);
  }
  return out;
}

std::vector<std::size_t> socle_dims(const Module& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Matrix> outgoing;
    for (std::size_t k = 0; k < q.arrow_count(); ++k)
      if (q.arrow(k).source == v) outgoing.push_back(m.map(k));
    const std::size_t r = outgoing.empty() ? 0 : rank(vstack(outgoing, m.dim(v), m.field()));
    out.push_back(m.dim(v) - r);
  }
  return out;
}

bool is_projective(const Module& m) {
  const auto& a = *m.algebra();
  const auto top = top_dims(m);
  std::size_t cover = 0;
  for (std::size_t v = 0; v < top.size(); ++v) {
    std::size_t pv = 0;
    for (std::size_t t = 0; t < a.vertex_count(); ++t) pv += a.basis_between(v, t).size();
    cover += top[v] * pv;
  }
  return cover == m.total_dim();
}

bool is_injective(const Module& m) {
  const auto& a = *m.algebra();
  const auto soc = socle_dims(m);
  std::size_t env = 0;
  for (std::size_t v = 0; v < soc.size(); ++v) {
    std::size_t iv = 0;
    for (std::size_t s = 0; s < a.vertex_count(); ++s) iv += a.basis_between(s, v).size();
    env += soc[v] * iv;
  }
  return env == m.total_dim();
}

}  // namespace tiltglue
