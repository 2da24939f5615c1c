#pragma once

// Dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace tiltglue {

using Scalar = std::uint32_t;

inline constexpr Scalar kDefaultPrime = 101;

class PrimeField {
 public:
  /// Throws Error(NotPrime) unless p is an odd prime below 2^31.
  explicit PrimeField(Scalar p = kDefaultPrime);

  Scalar modulus() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero element.
  Scalar inv(Scalar a) const;

  /// Representative in (-p/2, p/2], used for human-facing output.
  std::int64_t symmetric(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Scalar p_;
};

bool is_prime(std::uint64_t n);

/// Row-major dense matrix; entries are always canonical representatives 0..p-1.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);

  static Matrix identity(std::size_t n, PrimeField field);
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols, PrimeField field);
  static Matrix column_vector(std::span<const Scalar> entries, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  /// Callers writing through this reference must keep the entry reduced.
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;

  bool is_zero() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }
  Scalar trace() const;

  Matrix transposed() const;
  Matrix scaled(Scalar s) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Scalar>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_{};
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows, PrimeField field);
Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, PrimeField field);
Matrix block_diagonal(std::span<const Matrix> blocks, PrimeField field);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
  std::size_t rank = 0;
};

/// Reduced row-echelon form with first-nonzero pivoting.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct Kernel {
  Matrix basis;                          // cols x k, columns span ker
  std::vector<std::size_t> free_columns;  // basis restricted to these rows is the identity
};

Kernel kernel(const Matrix& m);
/// Columns form a basis of ker m.
Matrix kernel_basis(const Matrix& m);
/// Columns form a basis of the column space of m (pivot columns of m).
Matrix image_basis(const Matrix& m);

/// One solution of a x = b (b may have several columns), or nullopt.
/// Throws Error(ShapeMismatch) when row counts differ.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// A complement of a subspace: `projection` (s x n) has kernel exactly the
/// span of the given columns, `section` (n x s) is a right inverse of it made
/// of standard basis vectors.
struct Quotient {
  Matrix projection;
  Matrix section;
};

Quotient quotient(std::size_t ambient, const Matrix& subspace_columns, PrimeField field);

}  // namespace tiltglue
