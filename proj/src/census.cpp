#include "vres/census.hpp"

#include "vres/error.hpp"

#include <sstream>

namespace vres {

CensusRecord make_record(const CaseAnalysis& c) {
  CensusRecord r;
  r.n = c.n;
  r.elem = c.elem;
  r.case_label = c.case_label;
  r.verdict = c.verdict;
  r.corner = c.corner;
  r.q_a = c.q_a;
  r.q_b1 = c.q_b1;
  r.q_b2 = c.q_b2;
  r.q_c = c.q_c;
  r.condition_a = c.condition_a();
  r.condition_b = c.condition_b();
  r.exact_product = c.exact_product();
  return r;
}

std::vector<CensusRecord> sweep(Int n_min, Int n_max) {
  if (n_min < 2 || n_min > n_max)
    throw DomainError("census range needs 2 <= min <= max, got " + std::to_string(n_min) + ".." +
                      std::to_string(n_max));
  std::vector<CensusRecord> out;
  for (Int n = n_min; n <= n_max; ++n) {
    const RegularityRegion region = regularity_minimal_elements(n);
    for (const auto& e : region.minimal_elements)
      if (e.i <= e.ip)
        out.push_back(make_record(classify(n, e)));
  }
  return out;
}

double FamilyCounts::percent(Int part) const {
  const Int t = total();
  return t == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(t);
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
  if (records.empty())
    throw DomainError("cannot summarize an empty census");
  CensusSummary s;
  s.n_min = records.front().n;
  s.n_max = records.front().n;
  for (const auto& r : records) {
    s.n_min = std::min(s.n_min, r.n);
    s.n_max = std::max(s.n_max, r.n);
    const Int weight = r.elem.i == r.elem.ip ? 1 : 2;
    switch (r.verdict.kind) {
    case VerdictKind::HilbertBurch:
      ++s.unordered.hilbert_burch;
      s.ordered.hilbert_burch += weight;
      s.templates[static_cast<int>(*r.verdict.template_id) - 1]++;
      break;
    case VerdictKind::LengthThree:
      ++s.unordered.length_three;
      s.ordered.length_three += weight;
      break;
    case VerdictKind::GapConjectured:
      ++s.unordered.gap;
      s.ordered.gap += weight;
      break;
    }
    s.condition_a += r.condition_a;
    s.condition_b += r.condition_b;
    s.exact_product += r.exact_product;
  }
  return s;
}

std::string csv_row(const CensusRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.elem.i << ',' << r.elem.ip << ',' << to_string(r.case_label) << ','
     << to_string(r.verdict.kind) << ','
     << (r.verdict.template_id ? to_string(*r.verdict.template_id) : "") << ',' << r.corner
     << ',' << r.q_a << ',' << r.q_b1 << ',' << r.q_b2 << ',' << r.q_c;
  return os.str();
}

nlohmann::json to_json(const CensusRecord& r) {
  return {{"n", r.n},
          {"i", r.elem.i},
          {"ip", r.elem.ip},
          {"case", to_string(r.case_label)},
          {"verdict", to_string(r.verdict.kind)},
          {"template", r.verdict.template_id ? nlohmann::json(to_string(*r.verdict.template_id))
                                             : nlohmann::json(nullptr)},
          {"corner", r.corner},
          {"q_a", r.q_a},
          {"q_b1", r.q_b1},
          {"q_b2", r.q_b2},
          {"q_c", r.q_c}};
}

namespace {

nlohmann::json family_json(const FamilyCounts& c) {
  return {{"total", c.total()},
          {"HilbertBurch", {{"count", c.hilbert_burch}, {"percent", c.percent(c.hilbert_burch)}}},
          {"LengthThree", {{"count", c.length_three}, {"percent", c.percent(c.length_three)}}},
          {"GapConjectured", {{"count", c.gap}, {"percent", c.percent(c.gap)}}}};
}

} // namespace

nlohmann::json to_json(const CensusSummary& s) {
  nlohmann::json templates = nlohmann::json::object();
  for (int t = 0; t < 7; ++t)
    templates[to_string(static_cast<Template>(t + 1))] = s.templates[t];
  return {{"n_min", s.n_min},
          {"n_max", s.n_max},
          {"unordered", family_json(s.unordered)},
          {"ordered", family_json(s.ordered)},
          {"condition_a", s.condition_a},
          {"condition_b", s.condition_b},
          {"exact_product", s.exact_product},
          {"templates", std::move(templates)}};
}

} // namespace vres
