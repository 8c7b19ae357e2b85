#include "vres/finite_field.hpp"

#include "vres/error.hpp"

#include <string>

namespace vres {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  // Characteristics 2 and 3 are excluded along with everything below 101.
  if (p < 101)
    throw DomainError("prime field modulus must be at least 101, got " + std::to_string(p));
  if (p >= (1u << 31))
    throw DomainError("prime field modulus must be below 2^31");
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0)
    throw DomainError("zero has no inverse");
  return pow(a, p_ - 2);
}

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
    throw DomainError("matrix shapes or fields do not match");
  FieldMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Elem a = (*this)(r, k);
      if (a == 0)
        continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out(r, c) = field_.add(out(r, c), field_.mul(a, rhs(k, c)));
    }
  return out;
}

bool FieldMatrix::is_zero() const {
  for (Elem e : data_)
    if (e != 0)
      return false;
  return true;
}

std::vector<std::size_t> FieldMatrix::reduce_rows() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    // Pivot on the first row with a nonzero entry in this column.
    std::size_t r = lead;
    while (r < rows_ && (*this)(r, c) == 0)
      ++r;
    if (r == rows_)
      continue;
    if (r != lead)
      for (std::size_t k = 0; k < cols_; ++k)
        std::swap((*this)(r, k), (*this)(lead, k));
    const Elem scale = field_.inv((*this)(lead, c));
    for (std::size_t k = c; k < cols_; ++k)
      (*this)(lead, k) = field_.mul((*this)(lead, k), scale);
    for (std::size_t other = 0; other < rows_; ++other) {
      if (other == lead)
        continue;
      const Elem f = (*this)(other, c);
      if (f == 0)
        continue;
      const Elem nf = field_.neg(f);
      for (std::size_t k = c; k < cols_; ++k)
        (*this)(other, k) = field_.add((*this)(other, k), field_.mul(nf, (*this)(lead, k)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t FieldMatrix::rank() const {
  FieldMatrix copy = rows_ <= cols_ ? *this : transpose();
  return copy.reduce_rows().size();
}

FieldMatrix FieldMatrix::left_kernel() const {
  // x A = 0  <=>  A^T x^T = 0; read the null space off the RREF of A^T.
  FieldMatrix t = transpose();
  auto pivots = t.reduce_rows();
  std::vector<bool> is_pivot(t.cols_, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  FieldMatrix kernel(field_, t.cols_ - pivots.size(), t.cols_);
  std::size_t k = 0;
  for (std::size_t free = 0; free < t.cols_; ++free) {
    if (is_pivot[free])
      continue;
    kernel(k, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      kernel(k, pivots[r]) = field_.neg(t(r, free));
    ++k;
  }
  return kernel;
}

RowSpace::RowSpace(FieldMatrix m) : basis_(std::move(m)) {
  pivots_ = basis_.reduce_rows();
  FieldMatrix trimmed(basis_.field(), pivots_.size(), basis_.cols());
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    for (std::size_t c = 0; c < basis_.cols(); ++c)
      trimmed(r, c) = basis_(r, c);
  basis_ = std::move(trimmed);
}

RowSpace::RowSpace(const PrimeField& field, std::size_t ambient)
    : basis_(field, 0, ambient) {}

std::vector<Elem> RowSpace::coordinates(std::span<const Elem> v) const {
  std::vector<Elem> coords(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k)
    coords[k] = v[pivots_[k]];
  return coords;
}

bool RowSpace::contains(std::span<const Elem> v) const {
  const auto& f = basis_.field();
  std::vector<Elem> residual(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Elem c = residual[pivots_[k]];
    if (c == 0)
      continue;
    const Elem nc = f.neg(c);
    auto b = basis_.row(k);
    for (std::size_t j = 0; j < residual.size(); ++j)
      residual[j] = f.add(residual[j], f.mul(nc, b[j]));
  }
  for (Elem e : residual)
    if (e != 0)
      return false;
  return true;
}

} // namespace vres
