#pragma once

// Independent check of predicted Betti numbers: random points of P^1 x P^1
// over a prime field, Hilbert functions as ranks of evaluation matrices, and
// Tor_p(S/I_X, k) as homology of the Koszul complex on x0, x1, y0, y1.
//
// The graded piece (S/I_X)_(c,d) is the image of the evaluation map
// S_(c,d) -> F^n, i.e. the row space of evaluation_matrix(X, (c,d)). Multiplying
// by a variable is the entrywise product with its values at the points.

#include "vres/bigraded.hpp"
#include "vres/finite_field.hpp"
#include "vres/resolution.hpp"

#include "json.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace vres {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr int kDefaultRetries = 16;
inline constexpr Int kDefaultOracleMaxPoints = 30;

// ([a0:a1], [b0:b1])
struct ProjectivePoint {
  Elem a0 = 1, a1 = 0, b0 = 1, b1 = 0;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

class PointSet {
public:
  // Throws DomainError on a zero factor or on two equal points of P^1 x P^1.
  PointSet(const PrimeField& field, std::vector<ProjectivePoint> points);

  const PrimeField& field() const { return field_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  Int size() const { return static_cast<Int>(points_.size()); }

  // Values of x0, x1, y0, y1 (variable index 0..3) at every point.
  std::vector<Elem> variable_values(int var) const;

private:
  PrimeField field_;
  std::vector<ProjectivePoint> points_;
};

// Normalized representative of a point of P^1: [1:t] for t < p, [0:1] for t = p.
std::pair<Elem, Elem> projective_line_point(const PrimeField& field, std::uint32_t t);

struct Sample {
  PointSet points;
  int retries_used = 0;
  std::uint64_t seed = 0;
};

// Produces candidate points for one sampling attempt.
using PointProposer =
    std::function<std::vector<ProjectivePoint>(Int n, std::mt19937_64& rng, int attempt)>;

// Draws n points and keeps the first draw whose Hilbert function is generic
// on [0, n+1]^2 and whose minimal generators sit where Δ²H says they should.
// Throws GenericityExhausted after max_retries rejected draws, DomainError
// when p <= 4n^2.
Sample sample_points(Int n, const PrimeField& field, std::uint64_t seed, int max_retries,
                     const PointProposer& proposer = {});

// Reason a point set fails the genericity screen, if it does.
std::optional<std::string> genericity_failure(const PointSet& points);

// Rows: monomials x0^a x1^(c-a) y0^e y1^(d-e) in lexicographic (a, e) order.
// Columns: points.
FieldMatrix evaluation_matrix(const PointSet& points, BiDegree d);

Int measured_hilbert(const PointSet& points, BiDegree d);

// Graded pieces of S/I_X, cached by degree.
class QuotientRing {
public:
  explicit QuotientRing(const PointSet& points);

  const PointSet& points() const { return points_; }
  const RowSpace& piece(BiDegree d);

  // Matrix of multiplication by variable var from degree d to d + deg(var),
  // in the bases of the two pieces (rows: target, columns: source).
  FieldMatrix multiplication(int var, BiDegree d);

private:
  const PointSet& points_;
  std::vector<std::vector<Elem>> values_;
  std::map<BiDegree, RowSpace> pieces_;
};

// The Koszul complex K(x0,x1,y0,y1) ⊗ S/I_X in one bidegree. K_p is the sum,
// over subsets T of size p, of (S/I_X)_(deg - deg T). For T = {t1 < ... < tp}
// the differential sends e_T ⊗ f to sum_k (-1)^(k+1) e_(T - tk) ⊗ v_tk f.
class KoszulComplex {
public:
  KoszulComplex(QuotientRing& ring, BiDegree degree);

  std::size_t dim(int p) const;
  // K_p -> K_{p-1} for 1 <= p <= 4.
  FieldMatrix differential(int p) const;
  // dim H_p for 0 <= p <= 4.
  Int homology(int p) const;

private:
  QuotientRing& ring_;
  BiDegree degree_;
  // For each p, subsets of size p (bitmasks over the 4 variables) and the
  // offset of each summand within K_p.
  std::vector<std::vector<unsigned>> subsets_;
  std::vector<std::map<unsigned, std::size_t>> offsets_;
  std::vector<std::size_t> dims_;
};

struct MeasuredBetti {
  BiDegree window;
  BettiTable betti{Provenance::OracleMeasured};
  std::uint64_t seed = 0;
  int retries_used = 0;
};

// Tor_p(S/I_X, k)_(a,b) for all (a,b) ⪯ window and p = 0..3. Throws
// ConsistencyError if Tor_4 is nonzero.
MeasuredBetti koszul_betti(const PointSet& points, BiDegree window);

struct BettiMismatch {
  int p;
  BiDegree deg;
  Int measured;
  Int predicted;
};

struct VerifyReport {
  Int n = 0;
  BiDegree elem;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  Verdict verdict{VerdictKind::HilbertBurch, std::nullopt};
  MeasuredBetti measured;
  BettiTable predicted{Provenance::TheoremBacked};
  bool conditional = false; // predicted relies on the minimal resolution conjecture
  bool agree = false;
  bool residuals_zero = false;
  std::vector<BettiMismatch> mismatches;
  // beta_0 - beta_1 + beta_2 - beta_3 - d at every degree with a nonzero residual.
  std::map<BiDegree, Int> residuals;
  int retries = 0;
};

// Hilbert-Burch verdicts compare the whole window against rules (i)-(iii);
// length-three verdicts check beta_3 at the corner is positive; the remaining
// case compares against the conjecture-conditional prediction.
VerifyReport verify_prediction(Int n, BiDegree e, const PrimeField& field, std::uint64_t seed,
                               int max_retries = kDefaultRetries,
                               Int max_points = kDefaultOracleMaxPoints);

nlohmann::json to_json(const VerifyReport& r);

} // namespace vres
