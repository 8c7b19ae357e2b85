#pragma once

// Predicted Betti tables and virtual resolutions of a pair (S/I_X, e) for a
// minimal regularity element e. Twists are stored as generation degrees
// (a,b) >= 0 and rendered as S(-a,-b).

#include "vres/bigraded.hpp"
#include "vres/classifier.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace vres {

enum class Provenance { TheoremBacked, MRCConditional, OracleMeasured };

std::string to_string(Provenance p);

struct BettiKey {
  int p = 0; // homological degree
  BiDegree deg;

  friend auto operator<=>(const BettiKey&, const BettiKey&) = default;
};

class BettiTable {
public:
  explicit BettiTable(Provenance provenance) : provenance_(provenance) {}

  Provenance provenance() const { return provenance_; }
  const std::map<BettiKey, Int>& entries() const { return entries_; }

  // Adds to the multiplicity; zero is ignored, negative throws.
  void add(int p, BiDegree deg, Int mult);
  Int get(int p, BiDegree deg) const;
  int max_homological_degree() const;

  // Same nonzero entries, ignoring provenance.
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

  // Every twist in degree p >= 1 strictly dominates some twist in degree p-1.
  bool degrees_increase() const;

private:
  Provenance provenance_;
  std::map<BettiKey, Int> entries_;
};

struct Summand {
  BiDegree twist; // generation degree
  Int mult = 0;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct FreeComplex {
  // modules[p] is sorted by twist; modules[0] = {S}.
  std::vector<std::vector<Summand>> modules;
  std::string label;
  bool conditional = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  Int rank(int p) const;

  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;
};

FreeComplex complex_from_betti(const BettiTable& betti, std::string label, bool conditional);
BettiTable betti_of(const FreeComplex& f, Provenance provenance);

// Rules (i)-(iii) on Δ²H in degrees ⪯ e+(1,1). Only valid for Hilbert-Burch
// verdicts; DomainError otherwise.
BettiTable predict_betti_window(Int n, BiDegree e);

// The Hilbert-Burch complex with the closed-form exponents for c's template.
FreeComplex build_template(const CaseAnalysis& c);

// Rules (i)-(iv). Conditional on the minimal resolution conjecture unless the
// verdict is Hilbert-Burch, where the result must equal build_template().
FreeComplex build_mrc_prediction(Int n, BiDegree e);

// The same rules as a Betti table (provenance MRCConditional).
BettiTable predict_betti_mrc(Int n, BiDegree e);

// Minimal generators in every degree: beta_1 = -d for each negative entry of
// Δ²H with a positive entry to its right or below it.
BettiTable predicted_generators(Int n);

// Rank sum zero, and the alternating Hilbert sum equals n on the 3x3 grid of
// degrees starting at the componentwise maximum twist.
bool hilbert_consistency_check(const FreeComplex& f, Int n);

// "0 <- S <- [S(-1,-2)^2 + S(-2,-1)^2] <- S(-2,-2)^3 <- 0"
std::string render(const FreeComplex& f);

nlohmann::json to_json(const FreeComplex& f);
FreeComplex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BettiTable& b);

} // namespace vres
