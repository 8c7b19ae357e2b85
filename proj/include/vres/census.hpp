#pragma once

// Classification of every minimal regularity element over a range of point
// counts, with population statistics.

#include "vres/classifier.hpp"

#include "json.hpp"

#include <array>
#include <string>
#include <vector>

namespace vres {

struct CensusRecord {
  Int n = 0;
  BiDegree elem; // i <= i'
  CaseLabel case_label = CaseLabel::Case1;
  Verdict verdict{VerdictKind::HilbertBurch, Template::A1};
  Int corner = 0;
  Int q_a = 0, q_b1 = 0, q_b2 = 0, q_c = 0;
  bool condition_a = false;
  bool condition_b = false;
  bool exact_product = false;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

CensusRecord make_record(const CaseAnalysis& c);

// One record per minimal element with i <= i', ordered by n then i.
std::vector<CensusRecord> sweep(Int n_min, Int n_max);

struct FamilyCounts {
  Int hilbert_burch = 0;
  Int length_three = 0;
  Int gap = 0;

  Int total() const { return hilbert_burch + length_three + gap; }
  double percent(Int part) const;
};

struct CensusSummary {
  Int n_min = 0;
  Int n_max = 0;
  // Each element with i <= i' counted once.
  FamilyCounts unordered;
  // Each minimal element counted once; off-diagonal elements contribute their
  // mirror image as well.
  FamilyCounts ordered;
  Int condition_a = 0;
  Int condition_b = 0;
  Int exact_product = 0;
  std::array<Int, 7> templates{}; // A1..A7
};

CensusSummary summarize(const std::vector<CensusRecord>& records);

inline constexpr const char* kCensusCsvHeader = "n,i,ip,case,verdict,template,corner,q_a,q_b1,q_b2,q_c";

std::string csv_row(const CensusRecord& r);
nlohmann::json to_json(const CensusRecord& r);
nlohmann::json to_json(const CensusSummary& s);

} // namespace vres
