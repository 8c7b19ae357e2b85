#pragma once

// Exact dense linear algebra over a prime field Z/p.

#include <cstdint>
#include <span>
#include <vector>

namespace vres {

using Elem = std::uint32_t;

class PrimeField {
public:
  // p must be prime, at least 101 and below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Elem reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws DomainError on 0.
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class FieldMatrix {
public:
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& rhs) const;
  bool is_zero() const;

  std::size_t rank() const;

  // Reduced row echelon form in place; returns pivot columns, one per
  // nonzero row (the nonzero rows come first).
  std::vector<std::size_t> reduce_rows();

  // Basis of {x : x A = 0}, as rows.
  FieldMatrix left_kernel() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

// A subspace of F^n kept as a reduced row echelon basis. The coordinates of a
// vector of the subspace in this basis are its entries at the pivot columns.
class RowSpace {
public:
  // Row space of m.
  explicit RowSpace(FieldMatrix m);
  // The zero subspace of F^ambient.
  RowSpace(const PrimeField& field, std::size_t ambient);

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return basis_.cols(); }
  const FieldMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Coordinates of v, which must lie in the subspace (unchecked).
  std::vector<Elem> coordinates(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;

private:
  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace vres
