#include "tiltglue/linalg.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tiltglue/error.hpp"

namespace tiltglue {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Scalar p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorCode::NotPrime, "field modulus " + std::to_string(p) + " is not an odd prime below 2^31");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorCode::Internal, "inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
                         PrimeField field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column_vector(std::span<const Scalar> entries, PrimeField field) {
  Matrix m(entries.size(), 1, field);
  for (std::size_t r = 0; r < entries.size(); ++r) m(r, 0) = field.reduce(entries[r]);
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

Scalar Matrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = field_.mul(x, s);
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(rows_, cols.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(rows.size(), cols_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  Matrix m(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw Error(ErrorCode::ShapeMismatch, "matrix sum of incompatible shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw Error(ErrorCode::ShapeMismatch, "matrix difference of incompatible shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_))
    throw Error(ErrorCode::ShapeMismatch, "matrix product of incompatible shapes " +
                                              std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                                              std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  const std::uint64_t p = a.field_.modulus();
  Matrix out(a.rows_, b.cols_, a.field_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const Scalar* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + aik * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j]);
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows, PrimeField field) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(rows, cols, field);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    m.set_block(0, c0, b);
    c0 += b.cols();
  }
  return m;
}

Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, PrimeField field) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols, field);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    m.set_block(r0, 0, b);
    r0 += b.rows();
  }
  return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks, PrimeField field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols, field);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    m.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

RowEchelon rref(const Matrix& input) {
  RowEchelon out{input, {}, 0};
  Matrix& m = out.reduced;
  const PrimeField& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && m(r, c) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
    const Scalar inv = f.inv(m(pivot_row, c));
    for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) = f.mul(m(pivot_row, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      const Scalar factor = m(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(pivot_row, j)));
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Kernel kernel(const Matrix& m) {
  const auto ech = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  Kernel k;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) k.free_columns.push_back(c);
  k.basis = Matrix(m.cols(), k.free_columns.size(), f);
  for (std::size_t j = 0; j < k.free_columns.size(); ++j) {
    const std::size_t fc = k.free_columns[j];
    k.basis(fc, j) = 1;
    for (std::size_t i = 0; i < ech.rank; ++i) k.basis(ech.pivots[i], j) = f.neg(ech.reduced(i, fc));
  }
  return k;
}

Matrix kernel_basis(const Matrix& m) { return kernel(m).basis; }

Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "solve: right-hand side has " + std::to_string(b.rows()) +
                                              " rows, system has " + std::to_string(a.rows()));
  const PrimeField& f = a.field();
  const std::array<Matrix, 2> parts{a, b};
  const auto ech = rref(hstack(parts, a.rows(), f));
  Matrix x(a.cols(), b.cols(), f);
  for (std::size_t i = 0; i < ech.rank; ++i) {
    const std::size_t pc = ech.pivots[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = ech.reduced(i, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows(), m.field()));
}

Quotient quotient(std::size_t ambient, const Matrix& subspace_columns, PrimeField field) {
  Matrix sub = subspace_columns.cols() == 0 ? Matrix(ambient, 0, field) : image_basis(subspace_columns);
  if (sub.rows() != ambient) throw Error(ErrorCode::ShapeMismatch, "quotient: subspace lives elsewhere");
  const std::array<Matrix, 2> parts{sub, Matrix::identity(ambient, field)};
  const auto ech = rref(hstack(parts, ambient, field));
  std::vector<std::size_t> complement;
  for (auto p : ech.pivots)
    if (p >= sub.cols()) complement.push_back(p - sub.cols());
  const std::size_t s = complement.size();
  Matrix section(ambient, s, field);
  for (std::size_t j = 0; j < s; ++j) section(complement[j], j) = 1;
  const std::array<Matrix, 2> basis_parts{sub, section};
  const auto inv = inverse(hstack(basis_parts, ambient, field));
  if (!inv) throw Error(ErrorCode::Internal, "quotient: complement is not a basis");
  return {inv->block(sub.cols(), 0, s, ambient), section};
}

}  // namespace tiltglue
