#include "vres/oracle.hpp"

#include "vres/classifier.hpp"
#include "vres/error.hpp"

#include <bit>
#include <sstream>

namespace vres {

namespace {

bool same_point_of_line(const PrimeField& f, Elem a0, Elem a1, Elem c0, Elem c1) {
  return f.mul(a0, c1) == f.mul(a1, c0);
}

// Bidegree of a product of the variables in mask (bits 0,1: x0,x1; 2,3: y0,y1).
BiDegree mask_degree(unsigned mask) {
  return {std::popcount(mask & 0b0011u), std::popcount(mask & 0b1100u)};
}

BiDegree variable_degree(int var) { return var < 2 ? BiDegree{1, 0} : BiDegree{0, 1}; }

BiDegree minus(BiDegree a, BiDegree b) { return {a.i - b.i, a.ip - b.ip}; }

} // namespace

PointSet::PointSet(const PrimeField& field, std::vector<ProjectivePoint> points)
    : field_(field), points_(std::move(points)) {
  for (auto& pt : points_) {
    pt = {pt.a0 % field_.modulus(), pt.a1 % field_.modulus(), pt.b0 % field_.modulus(),
          pt.b1 % field_.modulus()};
    if ((pt.a0 == 0 && pt.a1 == 0) || (pt.b0 == 0 && pt.b1 == 0))
      throw DomainError("a point of P^1 cannot have both coordinates zero");
  }
  for (std::size_t k = 0; k < points_.size(); ++k)
    for (std::size_t l = k + 1; l < points_.size(); ++l) {
      const auto& u = points_[k];
      const auto& v = points_[l];
      if (same_point_of_line(field_, u.a0, u.a1, v.a0, v.a1) &&
          same_point_of_line(field_, u.b0, u.b1, v.b0, v.b1))
        throw DomainError("repeated point: entries " + std::to_string(k) + " and " +
                          std::to_string(l));
    }
}

std::vector<Elem> PointSet::variable_values(int var) const {
  std::vector<Elem> out;
  out.reserve(points_.size());
  for (const auto& pt : points_) {
    switch (var) {
    case 0:
      out.push_back(pt.a0);
      break;
    case 1:
      out.push_back(pt.a1);
      break;
    case 2:
      out.push_back(pt.b0);
      break;
    default:
      out.push_back(pt.b1);
    }
  }
  return out;
}

std::pair<Elem, Elem> projective_line_point(const PrimeField& field, std::uint32_t t) {
  if (t >= field.modulus())
    return {0, 1};
  return {1, t};
}

FieldMatrix evaluation_matrix(const PointSet& points, BiDegree d) {
  if (d.i < 0 || d.ip < 0)
    throw DomainError("evaluation matrix needs a degree in N^2, got " + to_string(d));
  const auto& f = points.field();
  const auto n = static_cast<std::size_t>(points.size());
  FieldMatrix m(f, static_cast<std::size_t>((d.i + 1) * (d.ip + 1)), n);
  for (std::size_t col = 0; col < n; ++col) {
    const auto& pt = points.points()[col];
    std::size_t row = 0;
    for (Int a = 0; a <= d.i; ++a) {
      const Elem xpart = f.mul(f.pow(pt.a0, a), f.pow(pt.a1, d.i - a));
      for (Int e = 0; e <= d.ip; ++e) {
        const Elem ypart = f.mul(f.pow(pt.b0, e), f.pow(pt.b1, d.ip - e));
        m(row++, col) = f.mul(xpart, ypart);
      }
    }
  }
  return m;
}

Int measured_hilbert(const PointSet& points, BiDegree d) {
  return static_cast<Int>(evaluation_matrix(points, d).rank());
}

QuotientRing::QuotientRing(const PointSet& points) : points_(points) {
  for (int v = 0; v < 4; ++v)
    values_.push_back(points.variable_values(v));
}

const RowSpace& QuotientRing::piece(BiDegree d) {
  auto it = pieces_.find(d);
  if (it != pieces_.end())
    return it->second;
  if (d.i < 0 || d.ip < 0)
    return pieces_
        .emplace(d, RowSpace(points_.field(), static_cast<std::size_t>(points_.size())))
        .first->second;
  return pieces_.emplace(d, RowSpace(evaluation_matrix(points_, d))).first->second;
}

FieldMatrix QuotientRing::multiplication(int var, BiDegree d) {
  const auto& f = points_.field();
  const BiDegree target_deg{d.i + variable_degree(var).i, d.ip + variable_degree(var).ip};
  // std::map keeps references stable across later insertions.
  const RowSpace& source = piece(d);
  const RowSpace& target = piece(target_deg);
  FieldMatrix m(f, target.dim(), source.dim());
  std::vector<Elem> product(source.ambient());
  for (std::size_t k = 0; k < source.dim(); ++k) {
    auto row = source.basis().row(k);
    for (std::size_t j = 0; j < product.size(); ++j)
      product[j] = f.mul(row[j], values_[var][j]);
    auto coords = target.coordinates(product);
    for (std::size_t r = 0; r < coords.size(); ++r)
      m(r, k) = coords[r];
  }
  return m;
}

KoszulComplex::KoszulComplex(QuotientRing& ring, BiDegree degree)
    : ring_(ring), degree_(degree), subsets_(5), offsets_(5), dims_(5, 0) {
  for (unsigned mask = 0; mask < 16; ++mask)
    subsets_[std::popcount(mask)].push_back(mask);
  for (int p = 0; p <= 4; ++p) {
    std::size_t offset = 0;
    for (unsigned mask : subsets_[p]) {
      offsets_[p][mask] = offset;
      offset += ring_.piece(minus(degree_, mask_degree(mask))).dim();
    }
    dims_[p] = offset;
  }
}

std::size_t KoszulComplex::dim(int p) const {
  return p < 0 || p > 4 ? 0 : dims_[p];
}

FieldMatrix KoszulComplex::differential(int p) const {
  if (p < 1 || p > 4)
    throw DomainError("Koszul differential index must be in 1..4");
  const auto& f = ring_.points().field();
  FieldMatrix d(f, dims_[p - 1], dims_[p]);
  for (unsigned mask : subsets_[p]) {
    const BiDegree source_deg = minus(degree_, mask_degree(mask));
    const std::size_t col0 = offsets_[p].at(mask);
    int k = 0; // position of the removed variable within T, 0-based
    for (int var = 0; var < 4; ++var) {
      if (!(mask & (1u << var)))
        continue;
      const Elem sign = k % 2 == 0 ? 1 : f.neg(1);
      ++k;
      const unsigned face = mask & ~(1u << var);
      const std::size_t row0 = offsets_[p - 1].at(face);
      FieldMatrix mult = ring_.multiplication(var, source_deg);
      for (std::size_t r = 0; r < mult.rows(); ++r)
        for (std::size_t c = 0; c < mult.cols(); ++c)
          d(row0 + r, col0 + c) = f.mul(sign, mult(r, c));
    }
  }
  return d;
}

Int KoszulComplex::homology(int p) const {
  if (p < 0 || p > 4)
    return 0;
  const Int outgoing = p >= 1 ? static_cast<Int>(differential(p).rank()) : 0;
  const Int incoming = p <= 3 ? static_cast<Int>(differential(p + 1).rank()) : 0;
  return static_cast<Int>(dims_[p]) - outgoing - incoming;
}

MeasuredBetti koszul_betti(const PointSet& points, BiDegree window) {
  if (window.i < 0 || window.ip < 0)
    throw DomainError("Koszul window must lie in N^2");
  QuotientRing ring(points);
  MeasuredBetti out;
  out.window = window;
  for (Int a = 0; a <= window.i; ++a) {
    for (Int b = 0; b <= window.ip; ++b) {
      KoszulComplex k(ring, {a, b});
      Int ranks[6] = {0, 0, 0, 0, 0, 0};
      for (int p = 1; p <= 4; ++p)
        ranks[p] = static_cast<Int>(k.differential(p).rank());
      for (int p = 0; p <= 4; ++p) {
        const Int beta = static_cast<Int>(k.dim(p)) - ranks[p] - ranks[p + 1];
        if (p == 4 && beta != 0)
          throw ConsistencyError("nonzero Tor_4 at " + to_string(BiDegree{a, b}));
        if (p < 4)
          out.betti.add(p, {a, b}, beta);
      }
    }
  }
  return out;
}

std::optional<std::string> genericity_failure(const PointSet& points) {
  const Int n = points.size();
  for (Int c = 0; c <= n + 1; ++c)
    for (Int d = 0; d <= n + 1; ++d) {
      const Int got = measured_hilbert(points, {c, d});
      const Int want = generic_hilbert(n, {c, d});
      if (got != want) {
        std::ostringstream os;
        os << "H" << BiDegree{c, d} << " = " << got << ", generic value " << want;
        return os.str();
      }
    }

  // Minimal generators. With a generic Hilbert function, a degree (a,b) whose
  // Koszul terms K_0..K_2 only involve pieces equal to F^n has Tor_1 = 0: the
  // complex splits into per-point Koszul complexes on nonzero scalars.
  const BettiTable predicted = predicted_generators(n);
  QuotientRing ring(points);
  for (Int a = 0; a <= n + 1; ++a)
    for (Int b = 0; b <= n + 1; ++b) {
      const bool stable = a >= 2 && b >= 2 && in_regularity(n, {a - 2, b}) &&
                          in_regularity(n, {a - 1, b - 1}) && in_regularity(n, {a, b - 2});
      const Int got = stable ? 0 : KoszulComplex(ring, {a, b}).homology(1);
      const Int want = predicted.get(1, {a, b});
      if (got != want) {
        std::ostringstream os;
        os << "beta_1" << BiDegree{a, b} << " = " << got << ", expected " << want;
        return os.str();
      }
    }
  return std::nullopt;
}

Sample sample_points(Int n, const PrimeField& field, std::uint64_t seed, int max_retries,
                     const PointProposer& proposer) {
  if (n < 2)
    throw DomainError("sampling needs at least 2 points");
  const auto p = static_cast<Int>(field.modulus());
  if (p <= 4 * n * n)
    throw DomainError("prime " + std::to_string(p) + " is too small for " + std::to_string(n) +
                      " points; need p > 4n^2 = " + std::to_string(4 * n * n));
  if (max_retries < 0)
    throw DomainError("retry budget must be nonnegative");

  std::mt19937_64 rng(seed);
  auto random_points = [&](Int count, std::mt19937_64& g, int) {
    std::vector<ProjectivePoint> pts;
    for (Int k = 0; k < count; ++k) {
      auto [a0, a1] = projective_line_point(field, static_cast<std::uint32_t>(g() % (p + 1)));
      auto [b0, b1] = projective_line_point(field, static_cast<std::uint32_t>(g() % (p + 1)));
      pts.push_back({a0, a1, b0, b1});
    }
    return pts;
  };

  std::string last_failure;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    auto candidate = proposer ? proposer(n, rng, attempt) : random_points(n, rng, attempt);
    if (static_cast<Int>(candidate.size()) != n)
      throw DomainError("point proposer returned the wrong number of points");
    std::optional<PointSet> pts;
    try {
      pts.emplace(field, std::move(candidate));
    } catch (const DomainError& e) {
      last_failure = e.what();
      continue;
    }
    if (auto failure = genericity_failure(*pts)) {
      last_failure = *failure;
      continue;
    }
    return {std::move(*pts), attempt, seed};
  }
  throw GenericityExhausted("no generic sample of " + std::to_string(n) + " points after " +
                            std::to_string(max_retries + 1) +
                            " attempts; last failure: " + last_failure);
}

VerifyReport verify_prediction(Int n, BiDegree e, const PrimeField& field, std::uint64_t seed,
                               int max_retries, Int max_points) {
  if (n > max_points)
    throw DomainError("oracle verification is limited to n <= " + std::to_string(max_points));
  const CaseAnalysis c = classify(n, e);
  const Sample sample = sample_points(n, field, seed, max_retries);
  const BiDegree corner{e.i + 1, e.ip + 1};

  VerifyReport r;
  r.n = n;
  r.elem = e;
  r.seed = seed;
  r.prime = field.modulus();
  r.verdict = c.verdict;
  r.retries = sample.retries_used;
  r.measured = koszul_betti(sample.points, corner);
  r.measured.seed = seed;
  r.measured.retries_used = sample.retries_used;

  if (c.verdict.kind == VerdictKind::HilbertBurch) {
    r.predicted = predict_betti_window(n, e);
  } else {
    r.predicted = predict_betti_mrc(n, e);
    r.conditional = true;
  }

  for (Int a = 0; a <= corner.i; ++a)
    for (Int b = 0; b <= corner.ip; ++b) {
      const BiDegree t{a, b};
      Int alternating = 0;
      for (int p = 0; p <= 3; ++p) {
        const Int got = r.measured.betti.get(p, t);
        const Int want = r.predicted.get(p, t);
        if (got != want)
          r.mismatches.push_back({p, t, got, want});
        alternating += (p % 2 == 0 ? 1 : -1) * got;
      }
      const Int residual = alternating - second_difference_at(n, t);
      if (residual != 0)
        r.residuals[t] = residual;
    }
  r.residuals_zero = r.residuals.empty();
  if (c.verdict.kind == VerdictKind::LengthThree)
    r.agree = r.measured.betti.get(3, corner) > 0;
  else
    r.agree = r.mismatches.empty();
  return r;
}

namespace {

nlohmann::json betti_json(const BettiTable& b) { return to_json(b); }

} // namespace

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"p", m.p},
                          {"twist", {m.deg.i, m.deg.ip}},
                          {"measured", m.measured},
                          {"predicted", m.predicted}});
  nlohmann::json residuals = nlohmann::json::array();
  for (const auto& [deg, value] : r.residuals)
    residuals.push_back({{"twist", {deg.i, deg.ip}}, {"residual", value}});
  const BiDegree corner{r.elem.i + 1, r.elem.ip + 1};
  nlohmann::json measured = betti_json(r.measured.betti);
  measured["window"] = {r.measured.window.i, r.measured.window.ip};
  return {{"n", r.n},
          {"elem", {r.elem.i, r.elem.ip}},
          {"seed", r.seed},
          {"p", r.prime},
          {"verdict", to_string(r.verdict)},
          {"measured", std::move(measured)},
          {"predicted", betti_json(r.predicted)},
          {"conditional", r.conditional},
          {"agree", r.agree},
          {"residuals_zero", r.residuals_zero},
          {"residuals", std::move(residuals)},
          {"mismatches", std::move(mismatches)},
          {"beta3_corner", r.measured.betti.get(3, corner)},
          {"retries", r.retries}};
}

} // namespace vres
