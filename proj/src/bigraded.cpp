#include "vres/bigraded.hpp"

#include "vres/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace vres {

std::string to_string(BiDegree d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, BiDegree d) {
  return os << '(' << d.i << ',' << d.ip << ')';
}

std::string to_string(TableKind k) {
  switch (k) {
  case TableKind::Hilbert:
    return "H";
  case TableKind::FirstDifference:
    return "dH";
  case TableKind::SecondDifference:
    return "d2H";
  }
  return "?";
}

IntTable::IntTable(Int rows, Int cols, TableKind kind)
    : IntTable(rows, cols, kind, std::vector<Int>(rows > 0 && cols > 0 ? rows * cols : 0)) {}

IntTable::IntTable(Int rows, Int cols, TableKind kind, std::vector<Int> entries)
    : rows_(rows), cols_(cols), kind_(kind), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1)
    throw DomainError("table dimensions must be positive");
  if (static_cast<Int>(entries_.size()) != rows * cols)
    throw DomainError("table entry count does not match rows*cols");
}

Int IntTable::at(Int i, Int ip) const {
  if (!contains(i, ip))
    throw DomainError("table index " + to_string(BiDegree{i, ip}) + " outside " +
                      std::to_string(rows_) + "x" + std::to_string(cols_) + " window");
  return entries_[i * cols_ + ip];
}

void IntTable::set(Int i, Int ip, Int value) {
  if (!contains(i, ip))
    throw DomainError("table index " + to_string(BiDegree{i, ip}) + " outside window");
  entries_[i * cols_ + ip] = value;
}

Int IntTable::at_or_zero(Int i, Int ip) const {
  if (i < 0 || ip < 0)
    return 0;
  return at(i, ip);
}

Int generic_hilbert(Int n, BiDegree d) {
  if (n < 1)
    throw DomainError("point count must be at least 1");
  if (d.i < 0 || d.ip < 0)
    throw DomainError("Hilbert function is indexed by N^2, got " + to_string(d));
  // (i+1)(i'+1) >= n is decided without overflow for large degrees.
  if (d.i + 1 >= n || d.ip + 1 >= n)
    return n;
  return std::min(n, (d.i + 1) * (d.ip + 1));
}

IntTable generic_hilbert_table(Int n, Int rows, Int cols) {
  if (n < 1)
    throw DomainError("point count must be at least 1");
  IntTable t(rows, cols, TableKind::Hilbert);
  for (Int i = 0; i < rows; ++i)
    for (Int ip = 0; ip < cols; ++ip)
      t.set(i, ip, generic_hilbert(n, {i, ip}));
  return t;
}

IntTable difference(const IntTable& t) {
  TableKind next;
  switch (t.kind()) {
  case TableKind::Hilbert:
    next = TableKind::FirstDifference;
    break;
  case TableKind::FirstDifference:
    next = TableKind::SecondDifference;
    break;
  default:
    throw DomainError("only two difference levels are defined");
  }
  IntTable out(t.rows(), t.cols(), next);
  for (Int i = 0; i < t.rows(); ++i)
    for (Int ip = 0; ip < t.cols(); ++ip)
      out.set(i, ip,
              t.at(i, ip) + t.at_or_zero(i - 1, ip - 1) - t.at_or_zero(i, ip - 1) -
                  t.at_or_zero(i - 1, ip));
  return out;
}

IntTable partial_sum(const IntTable& t) {
  TableKind prev;
  switch (t.kind()) {
  case TableKind::SecondDifference:
    prev = TableKind::FirstDifference;
    break;
  case TableKind::FirstDifference:
    prev = TableKind::Hilbert;
    break;
  default:
    throw DomainError("a Hilbert table has no partial-sum preimage here");
  }
  IntTable out(t.rows(), t.cols(), prev);
  for (Int i = 0; i < t.rows(); ++i)
    for (Int ip = 0; ip < t.cols(); ++ip)
      out.set(i, ip,
              t.at(i, ip) + out.at_or_zero(i - 1, ip) + out.at_or_zero(i, ip - 1) -
                  out.at_or_zero(i - 1, ip - 1));
  return out;
}

IntTable second_difference_table(Int n) {
  if (n < 1)
    throw DomainError("point count must be at least 1");
  return difference(difference(generic_hilbert_table(n, n + 2, n + 2)));
}

Int second_difference_at(Int n, BiDegree d) {
  if (n < 1)
    throw DomainError("point count must be at least 1");
  if (d.i < 0 || d.ip < 0)
    return 0;
  static constexpr Int weight[3] = {1, -2, 1};
  Int sum = 0;
  for (Int a = 0; a < 3; ++a) {
    for (Int b = 0; b < 3; ++b) {
      BiDegree e{d.i - a, d.ip - b};
      if (e.i < 0 || e.ip < 0)
        continue;
      sum += weight[a] * weight[b] * generic_hilbert(n, e);
    }
  }
  return sum;
}

bool in_regularity(Int n, BiDegree d) {
  if (d.i < 0 || d.ip < 0)
    return false;
  return generic_hilbert(n, d) == n;
}

bool is_minimal_regularity_element(Int n, BiDegree d) {
  return in_regularity(n, d) && !in_regularity(n, {d.i - 1, d.ip}) &&
         !in_regularity(n, {d.i, d.ip - 1});
}

RegularityRegion regularity_minimal_elements(Int n) {
  if (n < 2)
    throw DomainError("regularity staircase needs at least 2 points");
  RegularityRegion region{n, {}};
  for (Int i = 0; i < n; ++i) {
    Int ip = ceil_div(n, i + 1) - 1;
    // (i-1, i') must fail, otherwise (i,i') is dominated.
    if (i > 0 && i * (ip + 1) >= n)
      continue;
    region.minimal_elements.push_back({i, ip});
  }
  return region;
}

bool RegularityRegion::contains(BiDegree d) const { return in_regularity(n, d); }

bool RegularityRegion::is_minimal(BiDegree d) const {
  return std::binary_search(minimal_elements.begin(), minimal_elements.end(), d);
}

std::optional<BiDegree> RegularityRegion::minimal_below(BiDegree d) const {
  for (const auto& m : minimal_elements)
    if (weakly_below(m, d))
      return m;
  return std::nullopt;
}

} // namespace vres
