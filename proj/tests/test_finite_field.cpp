#include "doctest.h"

#include "vres/error.hpp"
#include "vres/finite_field.hpp"

#include <random>

using namespace vres;

namespace {

FieldMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<Elem>(rng() % f.modulus());
  return m;
}

} // namespace

TEST_CASE("field validation") {
  CHECK_THROWS_AS(PrimeField(2), DomainError);
  CHECK_THROWS_AS(PrimeField(3), DomainError);
  CHECK_THROWS_AS(PrimeField(100), DomainError);
  CHECK_THROWS_AS(PrimeField(32001), DomainError);
  CHECK_NOTHROW(PrimeField(101));
  CHECK_NOTHROW(PrimeField(2147483647u));
  CHECK_THROWS_AS(PrimeField(2147483659u), DomainError);
}

TEST_CASE("field arithmetic") {
  const PrimeField f(101);
  CHECK(f.add(100, 5) == 4);
  CHECK(f.sub(3, 5) == 99);
  CHECK(f.neg(0) == 0);
  CHECK(f.reduce(-1) == 100);
  for (Elem a = 1; a < 101; ++a)
    CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(f.inv(0), DomainError);
  const PrimeField big(2147483647u);
  CHECK(big.mul(2147483646u, 2147483646u) == 1);
}

TEST_CASE("rank and row reduction") {
  const PrimeField f(101);
  FieldMatrix m(f, 3, 3);
  // Rows 1,2,3 / 2,4,6 / 0,1,1
  const Elem vals[9] = {1, 2, 3, 2, 4, 6, 0, 1, 1};
  for (int k = 0; k < 9; ++k)
    m(k / 3, k % 3) = vals[k];
  CHECK(m.rank() == 2);
  CHECK(m.transpose().rank() == 2);
  FieldMatrix r = m;
  CHECK(r.reduce_rows() == std::vector<std::size_t>{0, 1});
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 1) == 0);
  CHECK(r(1, 1) == 1);
  CHECK(r.row(2)[0] == 0);
  CHECK(FieldMatrix(f, 0, 4).rank() == 0);
}

TEST_CASE("left kernel") {
  std::mt19937_64 rng(5);
  const PrimeField f(32003);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 2 + rng() % 8, cols = 1 + rng() % 6, inner = 1 + rng() % 4;
    // Product of random factors has rank at most `inner`.
    const FieldMatrix a = random_matrix(f, rows, inner, rng) * random_matrix(f, inner, cols, rng);
    const FieldMatrix k = a.left_kernel();
    CHECK(k.cols() == rows);
    CHECK(k.rows() + a.rank() == rows);
    CHECK(k.rank() == k.rows());
    CHECK((k * a).is_zero());
  }
}

TEST_CASE("row spaces") {
  const PrimeField f(101);
  FieldMatrix m(f, 2, 4);
  const Elem vals[8] = {1, 1, 0, 2, 0, 3, 1, 1};
  for (int k = 0; k < 8; ++k)
    m(k / 4, k % 4) = vals[k];
  const RowSpace s(m);
  CHECK(s.dim() == 2);
  CHECK(s.ambient() == 4);
  // 2*row0 + 5*row1
  std::vector<Elem> v(4);
  for (int c = 0; c < 4; ++c)
    v[c] = f.add(f.mul(2, m(0, c)), f.mul(5, m(1, c)));
  CHECK(s.contains(v));
  const auto coords = s.coordinates(v);
  std::vector<Elem> rebuilt(4, 0);
  for (std::size_t k = 0; k < s.dim(); ++k)
    for (int c = 0; c < 4; ++c)
      rebuilt[c] = f.add(rebuilt[c], f.mul(coords[k], s.basis()(k, c)));
  CHECK(rebuilt == v);
  CHECK_FALSE(s.contains(std::vector<Elem>{0, 0, 0, 1}));
  const RowSpace zero(f, 4);
  CHECK(zero.dim() == 0);
  CHECK(zero.coordinates(v).empty());
}
