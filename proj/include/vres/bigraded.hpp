#pragma once

// Generic bigraded Hilbert functions of points in P^1 x P^1, their first and
// second mixed differences, and the multigraded regularity staircase.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vres {

using Int = std::int64_t;

struct BiDegree {
  Int i = 0;
  Int ip = 0;

  friend constexpr auto operator<=>(const BiDegree&, const BiDegree&) = default;

  constexpr BiDegree swapped() const { return {ip, i}; }
};

// (i,i') ⪯ (j,j')
constexpr bool weakly_below(BiDegree a, BiDegree b) {
  return a.i <= b.i && a.ip <= b.ip;
}

// (i,i') ≺ (j,j'): weakly below and different.
constexpr bool strictly_below(BiDegree a, BiDegree b) {
  return weakly_below(a, b) && a != b;
}

std::string to_string(BiDegree d);
std::ostream& operator<<(std::ostream& os, BiDegree d);

enum class TableKind { Hilbert, FirstDifference, SecondDifference };

std::string to_string(TableKind k);

// Dense row-major window [0, rows) x [0, cols) of an integer function on N^2.
class IntTable {
public:
  IntTable(Int rows, Int cols, TableKind kind);
  IntTable(Int rows, Int cols, TableKind kind, std::vector<Int> entries);

  Int rows() const { return rows_; }
  Int cols() const { return cols_; }
  TableKind kind() const { return kind_; }
  const std::vector<Int>& entries() const { return entries_; }

  // Throws DomainError outside the window.
  Int at(Int i, Int ip) const;
  Int at(BiDegree d) const { return at(d.i, d.ip); }
  void set(Int i, Int ip, Int value);

  // Zero for negative indices, DomainError past the high edge.
  Int at_or_zero(Int i, Int ip) const;

  bool contains(Int i, Int ip) const {
    return i >= 0 && ip >= 0 && i < rows_ && ip < cols_;
  }

  friend bool operator==(const IntTable&, const IntTable&) = default;

private:
  Int rows_;
  Int cols_;
  TableKind kind_;
  std::vector<Int> entries_;
};

// min(n, (i+1)(i'+1))
Int generic_hilbert(Int n, BiDegree d);

IntTable generic_hilbert_table(Int n, Int rows, Int cols);

// Mixed difference t(i,i') + t(i-1,i'-1) - t(i,i'-1) - t(i-1,i'), with
// negative indices read as 0. Advances the kind H -> ΔH -> Δ²H.
IntTable difference(const IntTable& t);

// Inverse of difference(): two-dimensional prefix sums. Δ²H -> ΔH -> H.
IntTable partial_sum(const IntTable& t);

// Δ²H on the window [0, n+1]^2, which holds its whole support.
IntTable second_difference_table(Int n);

// One entry of Δ²H without materializing a table. Zero for negative
// coordinates.
Int second_difference_at(Int n, BiDegree d);

struct RegularityRegion {
  Int n = 0;
  // Sorted by increasing i.
  std::vector<BiDegree> minimal_elements;

  bool contains(BiDegree d) const;
  bool is_minimal(BiDegree d) const;
  // A minimal element weakly below d, if d lies in the region.
  std::optional<BiDegree> minimal_below(BiDegree d) const;
};

// (i+1)(i'+1) >= n
bool in_regularity(Int n, BiDegree d);

RegularityRegion regularity_minimal_elements(Int n);

// Minimality test without building the region.
bool is_minimal_regularity_element(Int n, BiDegree d);

// ceil(a / b) for a >= 0, b > 0.
constexpr Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

} // namespace vres
