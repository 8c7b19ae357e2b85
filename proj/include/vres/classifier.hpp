#pragma once

// Case analysis of Δ²H around a minimal element (i,i') of regularity,
// normalized so that i <= i'. The sign of the corner entry d(i+1,i'+1) and a
// handful of linear discriminants decide whether the virtual resolution of the
// pair is of Hilbert-Burch type (and which of the seven shapes), provably of
// length three, or undecided.

#include "vres/bigraded.hpp"

#include <optional>
#include <string>

namespace vres {

enum class CaseLabel { Case1, Case2_1, Case2_2, Case3_1, Case3_2 };

enum class VerdictKind { HilbertBurch, LengthThree, GapConjectured };

// The seven Hilbert-Burch complex shapes.
enum class Template { A1 = 1, A2, A3, A4, A5, A6, A7 };

struct Verdict {
  VerdictKind kind;
  std::optional<Template> template_id; // set iff kind == HilbertBurch

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(CaseLabel c);
std::string to_string(VerdictKind v);
std::string to_string(Template t);
std::string to_string(const Verdict& v);

struct CaseAnalysis {
  Int n = 0;
  BiDegree elem;        // normalized, elem.i <= elem.ip
  bool swapped = false; // input had i > i'
  CaseLabel case_label = CaseLabel::Case1;
  std::optional<Int> j_prime;
  Int corner = 0; // d(i+1, i'+1)

  Int q_a = 0;  // i(i'+2) - n
  Int q_b1 = 0; // -3n + 3ii' + 4i + i'   (= d(i,i'+1) in Case 3)
  Int q_b2 = 0; // 3n - 3ii' - 2i - 2i'   (= d(i+1,i'+1) in Case 3)
  Int q_c = 0;  // -3n + 3ii' + i + 4i'   (= d(i+1,i') in Cases 2.2 and 3.2)

  Verdict verdict{VerdictKind::HilbertBurch, Template::A1};

  // The element as it was passed in.
  BiDegree original() const { return swapped ? elem.swapped() : elem; }

  // Condition (a): i(i'+2) <= n.
  bool condition_a() const { return q_a <= 0; }
  // Condition (b): i(i'+2) > n, q_b1 <= 0, q_b2 >= 0.
  bool condition_b() const { return q_a > 0 && q_b1 <= 0 && q_b2 >= 0; }
  // n = (i+1)(i'+1), the family with a known Hilbert-Burch resolution.
  bool exact_product() const { return (elem.i + 1) * (elem.ip + 1) == n; }
};

// Least j' with (i+2)(j'+1) >= n, i.e. (i+1, j') is a minimal element.
Int j_prime(Int n, Int i);

// d(i+1, i'+1) from the closed formula; symmetric in (i, i').
Int corner_value(Int n, BiDegree e);

CaseAnalysis classify(Int n, BiDegree e);

// Δ²H restricted to [0, e.i+1] x [0, e.ip+1], computed numerically and checked
// entry by entry against the case's closed-form matrix.
IntTable delta_window(Int n, BiDegree e);

// Message for a degree that is not a minimal element; names a minimal element
// below it when there is one.
std::string non_minimal_message(Int n, BiDegree e);

} // namespace vres
