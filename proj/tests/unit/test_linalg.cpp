#include <random>

#include "doctest.h"
#include "tiltglue/error.hpp"
#include "tiltglue/linalg.hpp"

using namespace tiltglue;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, PrimeField f, std::mt19937_64& rng) {
  Matrix m(r, c, f);
  std::uniform_int_distribution<Scalar> d(0, f.modulus() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Size of the kernel by enumerating every vector of F_p^cols.
std::size_t brute_kernel_size(const Matrix& m) {
  const Scalar p = m.field().modulus();
  std::vector<Scalar> x(m.cols(), 0);
  std::size_t count = 0;
  while (true) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += static_cast<std::uint64_t>(m(i, j)) * x[j];
      zero = s % p == 0;
    }
    count += zero;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == p) x[k++] = 0;
    if (k == x.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("field arithmetic") {
  PrimeField f(101);
  CHECK(f.mul(f.inv(37), 37) == 1);
  CHECK(f.reduce(-1) == 100);
  CHECK(f.symmetric(100) == -1);
  CHECK(f.pow(3, 100) == 1);  // Fermat
  CHECK_THROWS_AS(PrimeField(100), Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("rref of a known matrix") {
  PrimeField f(7);
  auto m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3, f);
  auto e = rref(m);
  CHECK(e.rank == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}, 3, f));
}

TEST_CASE("kernel dimension agrees with enumeration over F_5") {
  PrimeField f(5);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    Matrix m = random_matrix(r, c, f, rng);
    if (trial % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.block(0, 0, 1, c));  // force a dependency
    const auto k = kernel_basis(m);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < k.cols(); ++i) expected *= 5;
    CHECK(brute_kernel_size(m) == expected);
    CHECK((m * k).is_zero());
    CHECK(rank(m) + k.cols() == c);
    CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("solve and inverse") {
  PrimeField f(101);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(4, 4, f, rng);
    auto inv = inverse(a);
    if (rank(a) == 4) {
      REQUIRE(inv);
      CHECK(a * *inv == Matrix::identity(4, f));
    } else {
      CHECK_FALSE(inv);
    }
    Matrix x = random_matrix(4, 2, f, rng);
    auto sol = solve(a, a * x);
    REQUIRE(sol);
    CHECK(a * *sol == a * x);
  }
  auto singular = Matrix::from_rows({{1, 1}, {1, 1}}, 2, f);
  CHECK_FALSE(solve(singular, Matrix::from_rows({{1}, {0}}, 1, f)));
  CHECK_THROWS_AS(solve(singular, Matrix(3, 1, f)), Error);
}

TEST_CASE("quotient has the subspace as kernel") {
  PrimeField f(11);
  auto sub = Matrix::from_rows({{1, 0}, {1, 0}, {0, 1}, {0, 0}}, 2, f);
  auto q = quotient(4, sub, f);
  CHECK(q.projection.rows() == 2);
  CHECK((q.projection * sub).is_zero());
  CHECK(q.projection * q.section == Matrix::identity(2, f));
}
