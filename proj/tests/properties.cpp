#include "properties.hpp"

#include "oracles.hpp"

#include "vres/classifier.hpp"
#include "vres/error.hpp"
#include "vres/oracle.hpp"
#include "vres/resolution.hpp"

#include <random>
#include <sstream>

namespace props {

using namespace vres;

namespace {

template <class... Args> Result fail(Int checked, Args&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return {false, checked, os.str()};
}

oracle::Betti as_oracle(const BettiTable& b) {
  oracle::Betti out;
  for (const auto& [key, mult] : b.entries())
    out[{key.p, {key.deg.i, key.deg.ip}}] = mult;
  return out;
}

std::string describe(const oracle::Betti& b) {
  std::ostringstream os;
  for (const auto& [key, mult] : b)
    os << " b" << key.first << "(" << key.second.first << "," << key.second.second
       << ")=" << mult;
  return os.str();
}

// Minimal elements with i <= i'.
std::vector<BiDegree> half(Int n) {
  std::vector<BiDegree> out;
  for (const auto& e : regularity_minimal_elements(n).minimal_elements)
    if (e.i <= e.ip)
      out.push_back(e);
  return out;
}

} // namespace

Result symmetry(Int n_max) {
  Result r;
  for (Int n = 1; n <= n_max; ++n) {
    const IntTable t = second_difference_table(n);
    for (Int i = 0; i < t.rows(); ++i)
      for (Int ip = i + 1; ip < t.cols(); ++ip)
        if (t.at(i, ip) != t.at(ip, i))
          return fail(r.checked, "n=", n, ": d(", i, ",", ip, ") != d(", ip, ",", i, ")");
    ++r.checked;
  }
  return r;
}

Result reconstruction(Int n_max) {
  Result r;
  for (Int n = 1; n <= n_max; ++n) {
    const IntTable d = second_difference_table(n);
    // Running rectangle sums of the library table against the reference H.
    std::vector<Int> prefix(static_cast<std::size_t>(d.rows() * d.cols()), 0);
    auto at = [&](Int i, Int ip) -> Int {
      return i < 0 || ip < 0 ? 0 : prefix[static_cast<std::size_t>(i * d.cols() + ip)];
    };
    for (Int i = 0; i < d.rows(); ++i)
      for (Int ip = 0; ip < d.cols(); ++ip) {
        if (d.at(i, ip) != oracle::d2(n, i, ip))
          return fail(r.checked, "n=", n, ": d(", i, ",", ip, ")=", d.at(i, ip),
                      ", stencil gives ", oracle::d2(n, i, ip));
        prefix[static_cast<std::size_t>(i * d.cols() + ip)] =
            d.at(i, ip) + at(i - 1, ip) + at(i, ip - 1) - at(i - 1, ip - 1);
      }
    // The rectangle sum of Δ²H is ΔH; summing again recovers H.
    std::vector<Int> h(prefix.size(), 0);
    auto hat = [&](Int i, Int ip) -> Int {
      return i < 0 || ip < 0 ? 0 : h[static_cast<std::size_t>(i * d.cols() + ip)];
    };
    for (Int i = 0; i < d.rows(); ++i)
      for (Int ip = 0; ip < d.cols(); ++ip) {
        h[static_cast<std::size_t>(i * d.cols() + ip)] =
            at(i, ip) + hat(i - 1, ip) + hat(i, ip - 1) - hat(i - 1, ip - 1);
        if (hat(i, ip) != oracle::hilbert(n, i, ip))
          return fail(r.checked, "n=", n, ": double prefix sum at (", i, ",", ip, ") is ",
                      hat(i, ip));
      }
    if (partial_sum(partial_sum(d)) != generic_hilbert_table(n, n + 2, n + 2))
      return fail(r.checked, "n=", n, ": partial_sum twice does not give H");
    ++r.checked;
  }
  return r;
}

Result first_nonzero_negative(Int n_max) {
  Result r;
  for (Int n = 1; n <= n_max; ++n) {
    const IntTable d = second_difference_table(n);
    for (int transpose = 0; transpose < 2; ++transpose)
      for (Int line = 0; line < d.rows(); ++line)
        for (Int k = 0; k < d.cols(); ++k) {
          const Int i = transpose ? k : line;
          const Int ip = transpose ? line : k;
          if (i == 0 && ip == 0)
            continue;
          const Int v = d.at(i, ip);
          if (v == 0)
            continue;
          if (v > 0)
            return fail(r.checked, "n=", n, ": first nonzero of ", transpose ? "column " : "row ",
                        line, " is ", v, " at (", i, ",", ip, ")");
          break;
        }
    ++r.checked;
  }
  return r;
}

Result antichain(Int n_max, Int brute_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n) {
    const auto region = regularity_minimal_elements(n);
    const auto& m = region.minimal_elements;
    Int half_count = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      const BiDegree e = m[k];
      if (!oracle::in_reg(n, e.i, e.ip) || oracle::in_reg(n, e.i - 1, e.ip) ||
          oracle::in_reg(n, e.i, e.ip - 1))
        return fail(r.checked, "n=", n, ": ", to_string(e), " is not minimal");
      if (k > 0 && !(m[k - 1].i < e.i && m[k - 1].ip > e.ip))
        return fail(r.checked, "n=", n, ": not a sorted antichain at ", to_string(e));
      if (!region.is_minimal(e.swapped()))
        return fail(r.checked, "n=", n, ": mirror of ", to_string(e), " missing");
      half_count += e.i <= e.ip;
    }
    Int root = 0;
    while (root * root < n)
      ++root;
    if (half_count > root + 1)
      return fail(r.checked, "n=", n, ": ", half_count, " elements with i <= i'");
    if (n <= brute_max) {
      const auto brute = oracle::minimal_elements(n);
      if (brute.size() != m.size())
        return fail(r.checked, "n=", n, ": full scan finds ", brute.size(), " elements");
      for (std::size_t k = 0; k < m.size(); ++k)
        if (brute[k] != std::pair{m[k].i, m[k].ip})
          return fail(r.checked, "n=", n, ": full scan disagrees at ", to_string(m[k]));
      // Every element of the region dominates a minimal one.
      for (Int i = 0; i <= n; ++i)
        for (Int ip = 0; ip <= n; ++ip)
          if (oracle::in_reg(n, i, ip) && !region.minimal_below({i, ip}))
            return fail(r.checked, "n=", n, ": (", i, ",", ip, ") dominates nothing");
    }
    ++r.checked;
  }
  return r;
}

Result totality_and_signs(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n) {
    for (const auto& e : regularity_minimal_elements(n).minimal_elements) {
      const CaseAnalysis c = classify(n, e);
      const Int i = c.elem.i, ip = c.elem.ip;
      const bool a = i * (ip + 2) <= n;
      const bool b1 = -3 * n + 3 * i * ip + 4 * i + ip <= 0;
      const bool b2 = 3 * n - 3 * i * ip - 2 * i - 2 * ip >= 0;
      VerdictKind want = VerdictKind::HilbertBurch;
      if (!a && !b2)
        want = VerdictKind::LengthThree;
      else if (!a && !b1)
        want = VerdictKind::GapConjectured;
      if (c.verdict.kind != want)
        return fail(r.checked, "n=", n, " ", to_string(e), ": verdict ", to_string(c.verdict));
      if ((c.verdict.kind == VerdictKind::HilbertBurch) != c.verdict.template_id.has_value())
        return fail(r.checked, "n=", n, " ", to_string(e), ": template presence");
      const Int corner = corner_value(n, e);
      if (corner != c.corner)
        return fail(r.checked, "n=", n, " ", to_string(e), ": corner field");
      if ((corner >= 0) != (a || b2))
        return fail(r.checked, "n=", n, " ", to_string(e), ": corner sign ", corner);
      const bool case3 =
          c.case_label == CaseLabel::Case3_1 || c.case_label == CaseLabel::Case3_2;
      if (case3 != !a)
        return fail(r.checked, "n=", n, " ", to_string(e), ": case label");
      if (case3 && ip >= 2 * i)
        return fail(r.checked, "n=", n, " ", to_string(e), ": Case 3 with i' >= 2i");
      if (c.j_prime && *c.j_prime != oracle::j_prime(n, i))
        return fail(r.checked, "n=", n, " ", to_string(e), ": j'");
      ++r.checked;
    }
  }
  return r;
}

Result corner_consistency(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : regularity_minimal_elements(n).minimal_elements) {
      const CaseAnalysis c = classify(n, e);
      const BiDegree corner = c.original();
      if (c.corner != oracle::d2(n, corner.i + 1, corner.ip + 1))
        return fail(r.checked, "n=", n, " ", to_string(e), ": corner ", c.corner);
      IntTable w(1, 1, TableKind::SecondDifference);
      try {
        w = delta_window(n, e);
      } catch (const ConsistencyError& ex) {
        return fail(r.checked, ex.what());
      }
      for (Int i = 0; i < w.rows(); ++i)
        for (Int ip = 0; ip < w.cols(); ++ip)
          if (w.at(i, ip) != oracle::d2(n, i, ip))
            return fail(r.checked, "n=", n, " ", to_string(e), ": window entry (", i, ",", ip,
                        ")");
      ++r.checked;
    }
  return r;
}

Result length_three_sign(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : half(n)) {
      const CaseAnalysis c = classify(n, e);
      if (c.verdict.kind != VerdictKind::LengthThree)
        continue;
      if (oracle::d2(n, e.i, e.ip + 1) <= 0)
        return fail(r.checked, "n=", n, " ", to_string(e), ": d(i,i'+1) = ",
                    oracle::d2(n, e.i, e.ip + 1));
      if (oracle::d2(n, e.i + 1, e.ip + 1) >= 0)
        return fail(r.checked, "n=", n, " ", to_string(e), ": corner not negative");
      ++r.checked;
    }
  return r;
}

Result reflection(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : half(n)) {
      const CaseAnalysis c = classify(n, e);
      const CaseAnalysis m = classify(n, e.swapped());
      const bool diagonal = e.i == e.ip;
      if (c.case_label != m.case_label || c.verdict != m.verdict || c.corner != m.corner ||
          c.elem != m.elem || c.swapped || m.swapped != !diagonal)
        return fail(r.checked, "n=", n, " ", to_string(e), ": reflection changes the analysis");
      if (c.verdict.kind == VerdictKind::HilbertBurch) {
        const FreeComplex f = build_template(c);
        const FreeComplex g = build_template(m);
        BettiTable reflected(Provenance::TheoremBacked);
        const BettiTable original = betti_of(f, Provenance::TheoremBacked);
        for (const auto& [key, mult] : original.entries())
          reflected.add(key.p, key.deg.swapped(), mult);
        if (!reflected.same_entries(betti_of(g, Provenance::TheoremBacked)))
          return fail(r.checked, "n=", n, " ", to_string(e), ": mirrored template differs");
      }
      ++r.checked;
    }
  return r;
}

Result template_rule_equivalence(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : regularity_minimal_elements(n).minimal_elements) {
      const CaseAnalysis c = classify(n, e);
      if (c.verdict.kind != VerdictKind::HilbertBurch)
        continue;
      const auto brute = oracle::rules(n, e.i + 1, e.ip + 1, false);
      const auto templ = as_oracle(betti_of(build_template(c), Provenance::TheoremBacked));
      const auto window = as_oracle(predict_betti_window(n, e));
      if (templ != brute || window != brute)
        return fail(r.checked, "n=", n, " ", to_string(e), " ", to_string(c.verdict),
                    ": template", describe(templ), " | rules", describe(brute));
      ++r.checked;
    }
  return r;
}

Result hilbert_consistency(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : regularity_minimal_elements(n).minimal_elements) {
      const CaseAnalysis c = classify(n, e);
      std::vector<FreeComplex> emitted{build_mrc_prediction(n, e)};
      if (c.verdict.kind == VerdictKind::HilbertBurch)
        emitted.push_back(build_template(c));
      for (const auto& f : emitted) {
        if (!hilbert_consistency_check(f, n))
          return fail(r.checked, "n=", n, " ", to_string(e), ": ", render(f));
        ++r.checked;
      }
      // Alternating sums of the conditional prediction reproduce Δ²H.
      const BettiTable b = predict_betti_mrc(n, e);
      for (Int i = 0; i <= e.i + 1; ++i)
        for (Int ip = 0; ip <= e.ip + 1; ++ip) {
          const BiDegree t{i, ip};
          const Int sum = b.get(0, t) - b.get(1, t) + b.get(2, t) - b.get(3, t);
          if (sum != oracle::d2(n, i, ip))
            return fail(r.checked, "n=", n, " ", to_string(e), ": alternating sum at ",
                        to_string(t));
        }
    }
  return r;
}

Result exponent_nonnegativity(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : half(n)) {
      const CaseAnalysis c = classify(n, e);
      if (c.verdict.kind != VerdictKind::HilbertBurch)
        continue;
      try {
        const FreeComplex f = build_template(c);
        if (f.length() != 2)
          return fail(r.checked, "n=", n, " ", to_string(e), ": length ", f.length());
      } catch (const ConsistencyError& ex) {
        return fail(r.checked, ex.what());
      }
      ++r.checked;
    }
  return r;
}

Result first_positive_law(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : regularity_minimal_elements(n).minimal_elements) {
      if (classify(n, e).verdict.kind != VerdictKind::HilbertBurch)
        continue;
      const BettiTable predicted = predict_betti_window(n, e);
      for (const auto& [key, mult] : predicted.entries()) {
        if (key.p != 2)
          continue;
        auto first_positive_in_row = [&] {
          for (Int s = 0; s < key.deg.ip; ++s)
            if (oracle::d2(n, key.deg.i, s) > 0 && !(key.deg.i == 0 && s == 0))
              return false;
          return true;
        };
        auto first_positive_in_column = [&] {
          for (Int s = 0; s < key.deg.i; ++s)
            if (oracle::d2(n, s, key.deg.ip) > 0 && !(s == 0 && key.deg.ip == 0))
              return false;
          return true;
        };
        if (!first_positive_in_row() && !first_positive_in_column())
          return fail(r.checked, "n=", n, " ", to_string(e), ": beta_2 at ", to_string(key.deg),
                      " follows earlier positives in its row and column");
        ++r.checked;
      }
    }
  return r;
}

Result degree_increase(Int n_max) {
  Result r;
  for (Int n = 2; n <= n_max; ++n)
    for (const auto& e : regularity_minimal_elements(n).minimal_elements) {
      const CaseAnalysis c = classify(n, e);
      const FreeComplex f = c.verdict.kind == VerdictKind::HilbertBurch
                                ? build_template(c)
                                : build_mrc_prediction(n, e);
      if (!betti_of(f, Provenance::TheoremBacked).degrees_increase())
        return fail(r.checked, "n=", n, " ", to_string(e), ": ", render(f));
      ++r.checked;
    }
  return r;
}

Result koszul_d_squared(Int n, BiDegree bound, std::uint64_t seed) {
  Result r;
  const PrimeField field(kDefaultPrime);
  const Sample s = sample_points(n, field, seed, kDefaultRetries);
  QuotientRing ring(s.points);
  for (Int a = 0; a <= bound.i; ++a)
    for (Int b = 0; b <= bound.ip; ++b) {
      const KoszulComplex k(ring, {a, b});
      for (int p = 2; p <= 4; ++p) {
        const FieldMatrix prod = k.differential(p - 1) * k.differential(p);
        if (!prod.is_zero())
          return fail(r.checked, "d_", p - 1, " d_", p, " != 0 in degree (", a, ",", b, ")");
        ++r.checked;
      }
    }
  return r;
}

Result oracle_random_pairs(int count, Int n_lo, Int n_hi, std::uint64_t seed) {
  Result r;
  std::mt19937_64 rng(seed);
  const PrimeField field(kDefaultPrime);
  std::ostringstream log;
  for (int k = 0; k < count; ++k) {
    const Int n = n_lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(n_hi - n_lo + 1));
    const RegularityRegion region = regularity_minimal_elements(n);
    const auto& m = region.minimal_elements;
    const BiDegree e = m[rng() % m.size()];
    const std::uint64_t sample_seed = rng();
    const VerifyReport rep = verify_prediction(n, e, field, sample_seed);
    log << "  n=" << n << " e=" << to_string(e) << " " << to_string(rep.verdict)
        << " seed=" << sample_seed << " retries=" << rep.retries
        << (rep.agree && rep.residuals_zero ? " ok" : " MISMATCH") << "\n";
    if (!rep.agree || !rep.residuals_zero) {
      r.ok = false;
      for (const auto& mm : rep.mismatches)
        log << "    beta_" << mm.p << to_string(mm.deg) << ": measured " << mm.measured
            << ", predicted " << mm.predicted << "\n";
    }
    ++r.checked;
  }
  r.detail = log.str();
  return r;
}

Result oracle_row_laws(Int n_lo, Int n_hi, std::uint64_t seed) {
  Result r;
  const PrimeField field(kDefaultPrime);
  for (Int n = n_lo; n <= n_hi; ++n) {
    const Sample s = sample_points(n, field, seed + static_cast<std::uint64_t>(n), kDefaultRetries);
    const MeasuredBetti m = koszul_betti(s.points, {n + 1, n + 1});
    for (Int a = 0; a <= n + 1; ++a)
      for (Int b = 0; b <= n + 1; ++b) {
        const BiDegree t{a, b};
        const Int sum = m.betti.get(0, t) - m.betti.get(1, t) + m.betti.get(2, t) -
                        m.betti.get(3, t);
        if (sum != oracle::d2(n, a, b))
          return fail(r.checked, "n=", n, ": alternating sum at ", to_string(t));
      }
    for (int transpose = 0; transpose < 2; ++transpose)
      for (Int line = 0; line <= n + 1; ++line) {
        bool seen_nonzero = false, seen_positive = false;
        for (Int k = 0; k <= n + 1; ++k) {
          const BiDegree t = transpose ? BiDegree{k, line} : BiDegree{line, k};
          if (t == BiDegree{0, 0})
            continue;
          const Int d = oracle::d2(n, t.i, t.ip);
          if (d != 0 && !seen_nonzero) {
            seen_nonzero = true;
            if (d >= 0 || m.betti.get(1, t) != -d)
              return fail(r.checked, "n=", n, ": first nonzero at ", to_string(t), " is ", d,
                          ", beta_1 ", m.betti.get(1, t));
          }
          if (d > 0 && !seen_positive) {
            seen_positive = true;
            if (m.betti.get(2, t) != d)
              return fail(r.checked, "n=", n, ": first positive at ", to_string(t), " is ", d,
                          ", beta_2 ", m.betti.get(2, t));
          }
        }
      }
    ++r.checked;
  }
  return r;
}

} // namespace props
