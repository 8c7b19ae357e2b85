#include "vres/resolution.hpp"

#include "vres/error.hpp"

#include <algorithm>
#include <sstream>

namespace vres {

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::TheoremBacked:
    return "TheoremBacked";
  case Provenance::MRCConditional:
    return "MRCConditional";
  case Provenance::OracleMeasured:
    return "OracleMeasured";
  }
  return "?";
}

void BettiTable::add(int p, BiDegree deg, Int mult) {
  if (mult < 0)
    throw DomainError("negative Betti multiplicity at " + to_string(deg));
  if (mult == 0)
    return;
  entries_[{p, deg}] += mult;
}

Int BettiTable::get(int p, BiDegree deg) const {
  auto it = entries_.find({p, deg});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_homological_degree() const {
  int m = 0;
  for (const auto& [key, mult] : entries_)
    m = std::max(m, key.p);
  return m;
}

bool BettiTable::degrees_increase() const {
  for (const auto& [key, mult] : entries_) {
    if (key.p == 0)
      continue;
    bool dominates = false;
    for (const auto& [lower, m2] : entries_)
      if (lower.p == key.p - 1 && strictly_below(lower.deg, key.deg))
        dominates = true;
    if (!dominates)
      return false;
  }
  return true;
}

Int FreeComplex::rank(int p) const {
  if (p < 0 || p >= static_cast<int>(modules.size()))
    return 0;
  Int r = 0;
  for (const auto& s : modules[p])
    r += s.mult;
  return r;
}

FreeComplex complex_from_betti(const BettiTable& betti, std::string label, bool conditional) {
  FreeComplex f;
  f.label = std::move(label);
  f.conditional = conditional;
  f.modules.resize(betti.max_homological_degree() + 1);
  // std::map order keeps each module sorted by twist.
  for (const auto& [key, mult] : betti.entries())
    f.modules[key.p].push_back({key.deg, mult});
  return f;
}

BettiTable betti_of(const FreeComplex& f, Provenance provenance) {
  BettiTable b(provenance);
  for (int p = 0; p < static_cast<int>(f.modules.size()); ++p)
    for (const auto& s : f.modules[p])
      b.add(p, s.twist, s.mult);
  return b;
}

namespace {

// Δ² vanishes past index n+1, so scans stop there.
bool positive_right_or_below(Int n, BiDegree d) {
  for (Int s = d.ip + 1; s <= n + 1; ++s)
    if (second_difference_at(n, {d.i, s}) > 0)
      return true;
  for (Int r = d.i + 1; r <= n + 1; ++r)
    if (second_difference_at(n, {r, d.ip}) > 0)
      return true;
  return false;
}

bool positive_strictly_below(Int n, BiDegree d) {
  for (Int r = 0; r <= d.i; ++r)
    for (Int s = 0; s <= d.ip; ++s) {
      BiDegree t{r, s};
      if (t == BiDegree{0, 0} || t == d)
        continue;
      if (second_difference_at(n, t) > 0)
        return true;
    }
  return false;
}

// Rules (i)-(iii), and (iv) when requested. A negative entry that satisfies
// rule (ii) is a minimal generator regardless of the conjecture, so (iv) is
// only consulted when (ii) does not fire.
BettiTable read_betti_from_delta(Int n, BiDegree e, bool with_rule_iv, Provenance prov) {
  BettiTable b(prov);
  const BiDegree corner{e.i + 1, e.ip + 1};
  for (Int r = 0; r <= corner.i; ++r) {
    for (Int s = 0; s <= corner.ip; ++s) {
      const BiDegree t{r, s};
      const Int d = second_difference_at(n, t);
      if (t == BiDegree{0, 0}) {
        b.add(0, t, d);
      } else if (d > 0) {
        b.add(2, t, d);
      } else if (d < 0) {
        if (positive_right_or_below(n, t))
          b.add(1, t, -d);
        else if (with_rule_iv && positive_strictly_below(n, t))
          b.add(3, t, -d);
      }
    }
  }
  return b;
}

struct TemplateTerm {
  int p;
  Int di, dip; // offset from (i, i')
  Int exponent;
};

std::vector<TemplateTerm> template_terms(const CaseAnalysis& c) {
  const Int n = c.n, i = c.elem.i, ip = c.elem.ip, ii = i * ip;
  const Int gen_ii = -n + ii + i + ip + 1;   // S(-i,-i')
  const Int gen_i_ip1_ab = n - ii - ip;      // S(-i,-i'-1), cases 1-2
  const Int gen_i_ip1_c3 = 3 * n - 3 * ii - 4 * i - ip;
  const Int gen_im1_ip1 = -n + ii + 2 * i;   // S(-i+1,-i'-1)
  const Int gen_ip1_ipm1 = -n + ii + 2 * ip; // S(-i-1,-i'+1), j' = i'-1
  const Int gen_ip1_ip = 3 * n - 3 * ii - i - 4 * ip;
  const Int syz_ip1_ip_pos = -3 * n + 3 * ii + i + 4 * ip;
  const Int syz_corner_ab = 2 * (n - ii - ip);
  const Int syz_corner_c3 = 3 * n - 3 * ii - 2 * i - 2 * ip;

  switch (*c.verdict.template_id) {
  case Template::A1:
    return {{1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_ab},
            {1, 1, 0, n - ii - i},
            {2, 1, 1, n - ii}};
  case Template::A2: {
    const Int jp = *c.j_prime;
    return {{1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_ab},
            {1, 1, jp - ip, -n + i * jp + i + 2 * jp + 2},
            {1, 1, jp + 1 - ip, n - i * jp - 2 * jp},
            {2, 1, 0, 2 * gen_ii},
            {2, 1, 1, syz_corner_ab}};
  }
  case Template::A3:
    return {{1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_ab},
            {1, 1, -1, gen_ip1_ipm1},
            {1, 1, 0, gen_ip1_ip},
            {2, 1, 1, syz_corner_ab}};
  case Template::A4:
    return {{1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_ab},
            {1, 1, -1, gen_ip1_ipm1},
            {2, 1, 0, syz_ip1_ip_pos},
            {2, 1, 1, syz_corner_ab}};
  case Template::A5:
    return {{1, -1, 1, gen_im1_ip1},
            {1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_c3},
            {1, 1, -2, -n + ii - i + 2 * ip - 2},
            {1, 1, -1, n - ii + 2 * i - 2 * ip + 4},
            {2, 1, 0, 2 * gen_ii},
            {2, 1, 1, syz_corner_c3}};
  case Template::A6:
    return {{1, -1, 1, gen_im1_ip1},
            {1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_c3},
            {1, 1, -1, gen_ip1_ipm1},
            {1, 1, 0, gen_ip1_ip},
            {2, 1, 1, syz_corner_c3}};
  case Template::A7:
    return {{1, -1, 1, gen_im1_ip1},
            {1, 0, 0, gen_ii},
            {1, 0, 1, gen_i_ip1_c3},
            {1, 1, -1, gen_ip1_ipm1},
            {2, 1, 0, syz_ip1_ip_pos},
            {2, 1, 1, syz_corner_c3}};
  }
  throw ConsistencyError("unknown template");
}

void require_hilbert_burch(const CaseAnalysis& c) {
  if (c.verdict.kind != VerdictKind::HilbertBurch)
    throw DomainError("rules (i)-(iii) are only established for Hilbert-Burch verdicts; " +
                      to_string(c.elem) + " at n=" + std::to_string(c.n) + " is " +
                      to_string(c.verdict));
}

} // namespace

BettiTable predict_betti_window(Int n, BiDegree e) {
  require_hilbert_burch(classify(n, e));
  return read_betti_from_delta(n, e, false, Provenance::TheoremBacked);
}

BettiTable predict_betti_mrc(Int n, BiDegree e) {
  classify(n, e); // validates e
  return read_betti_from_delta(n, e, true, Provenance::MRCConditional);
}

BettiTable predicted_generators(Int n) {
  if (n < 1)
    throw DomainError("point count must be at least 1");
  BettiTable b(Provenance::TheoremBacked);
  const IntTable delta = second_difference_table(n);
  for (Int r = 0; r < delta.rows(); ++r)
    for (Int s = 0; s < delta.cols(); ++s)
      if (delta.at(r, s) < 0 && positive_right_or_below(n, {r, s}))
        b.add(1, {r, s}, -delta.at(r, s));
  return b;
}

FreeComplex build_template(const CaseAnalysis& c) {
  require_hilbert_burch(c);
  BettiTable b(Provenance::TheoremBacked);
  b.add(0, {0, 0}, 1);
  for (const auto& term : template_terms(c)) {
    if (term.exponent < 0)
      throw ConsistencyError(to_string(*c.verdict.template_id) + " exponent " +
                             std::to_string(term.exponent) + " is negative at n=" +
                             std::to_string(c.n) + ", " + to_string(c.elem));
    BiDegree twist{c.elem.i + term.di, c.elem.ip + term.dip};
    b.add(term.p, c.swapped ? twist.swapped() : twist, term.exponent);
  }
  return complex_from_betti(b, to_string(*c.verdict.template_id), false);
}

FreeComplex build_mrc_prediction(Int n, BiDegree e) {
  const CaseAnalysis c = classify(n, e);
  FreeComplex f = complex_from_betti(predict_betti_mrc(n, e), "mrc", true);
  if (c.verdict.kind != VerdictKind::HilbertBurch)
    return f;
  FreeComplex t = build_template(c);
  if (t.modules != f.modules)
    throw ConsistencyError("rule-based prediction differs from " + t.label + " at n=" +
                           std::to_string(n) + ", " + to_string(e) + ": " + render(f) +
                           " vs " + render(t));
  return t;
}

bool hilbert_consistency_check(const FreeComplex& f, Int n) {
  if (f.length() < 2 || f.length() > 3)
    return false;
  if (f.modules[0] != std::vector<Summand>{{{0, 0}, 1}})
    return false;
  Int rank_sum = 0;
  BiDegree top{0, 0};
  for (int p = 0; p <= f.length(); ++p) {
    for (const auto& s : f.modules[p]) {
      if (s.mult <= 0 || s.twist.i < 0 || s.twist.ip < 0)
        return false;
      top.i = std::max(top.i, s.twist.i);
      top.ip = std::max(top.ip, s.twist.ip);
    }
    rank_sum += (p % 2 == 0 ? 1 : -1) * f.rank(p);
  }
  if (rank_sum != 0)
    return false;
  for (Int a = top.i; a <= top.i + 2; ++a) {
    for (Int b = top.ip; b <= top.ip + 2; ++b) {
      Int sum = 0;
      for (int p = 0; p <= f.length(); ++p)
        for (const auto& s : f.modules[p])
          sum += (p % 2 == 0 ? 1 : -1) * s.mult * (a - s.twist.i + 1) * (b - s.twist.ip + 1);
      if (sum != n)
        return false;
    }
  }
  return true;
}

namespace {

std::string render_twist(BiDegree t) {
  auto coord = [](Int v) { return v == 0 ? std::string("0") : "-" + std::to_string(v); };
  if (t == BiDegree{0, 0})
    return "S";
  return "S(" + coord(t.i) + "," + coord(t.ip) + ")";
}

} // namespace

std::string render(const FreeComplex& f) {
  std::ostringstream os;
  os << "0";
  for (const auto& module : f.modules) {
    os << " <- ";
    if (module.size() > 1)
      os << '[';
    for (std::size_t k = 0; k < module.size(); ++k) {
      if (k > 0)
        os << " + ";
      os << render_twist(module[k].twist);
      if (module[k].mult != 1)
        os << '^' << module[k].mult;
    }
    if (module.size() > 1)
      os << ']';
  }
  os << " <- 0";
  return os.str();
}

nlohmann::json to_json(const FreeComplex& f) {
  nlohmann::json modules = nlohmann::json::array();
  for (const auto& module : f.modules) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& s : module)
      m.push_back({{"twist", {s.twist.i, s.twist.ip}}, {"mult", s.mult}});
    modules.push_back(std::move(m));
  }
  return {{"length", f.length()},
          {"modules", std::move(modules)},
          {"label", f.label},
          {"conditional", f.conditional}};
}

FreeComplex complex_from_json(const nlohmann::json& j) {
  FreeComplex f;
  f.label = j.at("label").get<std::string>();
  f.conditional = j.at("conditional").get<bool>();
  for (const auto& m : j.at("modules")) {
    std::vector<Summand> module;
    for (const auto& s : m) {
      const auto& t = s.at("twist");
      module.push_back({{t.at(0).get<Int>(), t.at(1).get<Int>()}, s.at("mult").get<Int>()});
    }
    f.modules.push_back(std::move(module));
  }
  if (j.at("length").get<int>() != f.length())
    throw DomainError("complex JSON length does not match its module count");
  return f;
}

nlohmann::json to_json(const BettiTable& b) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, mult] : b.entries())
    entries.push_back({{"p", key.p}, {"twist", {key.deg.i, key.deg.ip}}, {"mult", mult}});
  return {{"provenance", to_string(b.provenance())}, {"entries", std::move(entries)}};
}

} // namespace vres
