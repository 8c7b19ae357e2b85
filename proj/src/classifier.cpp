#include "vres/classifier.hpp"

#include "vres/error.hpp"

#include <map>

namespace vres {

std::string to_string(CaseLabel c) {
  switch (c) {
  case CaseLabel::Case1:
    return "Case1";
  case CaseLabel::Case2_1:
    return "Case2_1";
  case CaseLabel::Case2_2:
    return "Case2_2";
  case CaseLabel::Case3_1:
    return "Case3_1";
  case CaseLabel::Case3_2:
    return "Case3_2";
  }
  return "?";
}

std::string to_string(VerdictKind v) {
  switch (v) {
  case VerdictKind::HilbertBurch:
    return "HilbertBurch";
  case VerdictKind::LengthThree:
    return "LengthThree";
  case VerdictKind::GapConjectured:
    return "GapConjectured";
  }
  return "?";
}

std::string to_string(Template t) { return "A" + std::to_string(static_cast<int>(t)); }

std::string to_string(const Verdict& v) {
  if (v.kind == VerdictKind::HilbertBurch && v.template_id)
    return "HilbertBurch(" + to_string(*v.template_id) + ")";
  return to_string(v.kind);
}

std::string non_minimal_message(Int n, BiDegree e) {
  std::string msg = to_string(e) + " is not a minimal element of regularity for n=" +
                    std::to_string(n);
  if (!in_regularity(n, e))
    return msg + "; it is not in the regularity region";
  auto region = regularity_minimal_elements(n);
  if (auto m = region.minimal_below(e))
    msg += "; " + to_string(*m) + " is minimal and ⪯ " + to_string(e);
  return msg;
}

namespace {

void require_minimal(Int n, BiDegree e) {
  if (n < 2)
    throw DomainError("classification needs at least 2 points");
  if (!is_minimal_regularity_element(n, e))
    throw DomainError(non_minimal_message(n, e));
}

} // namespace

Int j_prime(Int n, Int i) {
  if (n < 2 || i < 0)
    throw DomainError("j' needs n >= 2 and i >= 0");
  return ceil_div(n, i + 2) - 1;
}

Int corner_value(Int n, BiDegree e) {
  require_minimal(n, e);
  const Int i = e.i, ip = e.ip;
  return n + i * ip - 2 * i * (ip + 1) - 2 * (i + 1) * ip + std::min(i * (ip + 2), n) +
         std::min((i + 2) * ip, n);
}

CaseAnalysis classify(Int n, BiDegree e) {
  require_minimal(n, e);
  CaseAnalysis c;
  c.n = n;
  c.swapped = e.i > e.ip;
  c.elem = c.swapped ? e.swapped() : e;
  const Int i = c.elem.i, ip = c.elem.ip;

  c.q_a = i * (ip + 2) - n;
  c.q_b1 = -3 * n + 3 * i * ip + 4 * i + ip;
  c.q_b2 = 3 * n - 3 * i * ip - 2 * i - 2 * ip;
  c.q_c = -3 * n + 3 * i * ip + i + 4 * ip;
  c.corner = corner_value(n, c.elem);

  const Int jp = j_prime(n, i);
  if (c.q_a <= 0 && (i + 2) * ip <= n) {
    c.case_label = CaseLabel::Case1;
    c.verdict = {VerdictKind::HilbertBurch, Template::A1};
    return c;
  }
  c.j_prime = jp;
  if (c.q_a <= 0) {
    if (jp < ip - 1) {
      c.case_label = CaseLabel::Case2_1;
      c.verdict = {VerdictKind::HilbertBurch, Template::A2};
    } else if (jp == ip - 1) {
      c.case_label = CaseLabel::Case2_2;
      c.verdict = {VerdictKind::HilbertBurch, c.q_c <= 0 ? Template::A3 : Template::A4};
    } else {
      throw ConsistencyError("Case 2 with j' >= i' at n=" + std::to_string(n) + ", " +
                             to_string(c.elem));
    }
    return c;
  }

  if (jp == ip - 2)
    c.case_label = CaseLabel::Case3_1;
  else if (jp == ip - 1)
    c.case_label = CaseLabel::Case3_2;
  else
    throw ConsistencyError("Case 3 requires j' in {i'-2, i'-1}; got j'=" + std::to_string(jp) +
                           " at n=" + std::to_string(n) + ", " + to_string(c.elem));
  if (ip >= 2 * i)
    throw ConsistencyError("Case 3 requires i' < 2i at " + to_string(c.elem));

  if (c.q_b2 < 0) {
    c.verdict = {VerdictKind::LengthThree, std::nullopt};
  } else if (c.q_b1 <= 0) {
    if (c.case_label == CaseLabel::Case3_1)
      c.verdict = {VerdictKind::HilbertBurch, Template::A5};
    else
      c.verdict = {VerdictKind::HilbertBurch, c.q_c <= 0 ? Template::A6 : Template::A7};
  } else {
    c.verdict = {VerdictKind::GapConjectured, std::nullopt};
  }
  return c;
}

namespace {

// Nonzero entries of Δ²H in [0,i+1]x[0,i'+1] as given by the case matrices,
// in normalized coordinates.
std::map<BiDegree, Int> closed_form_window(const CaseAnalysis& c) {
  const Int n = c.n, i = c.elem.i, ip = c.elem.ip;
  const Int ii = i * ip;
  std::map<BiDegree, Int> m;
  auto put = [&](Int r, Int s, Int v) {
    if (v != 0)
      m[{r, s}] += v;
  };
  put(0, 0, 1);
  put(i, ip, n - ii - i - ip - 1);
  switch (c.case_label) {
  case CaseLabel::Case1:
    put(i, ip + 1, -n + ii + ip);
    put(i + 1, ip, -n + ii + i);
    put(i + 1, ip + 1, n - ii);
    break;
  case CaseLabel::Case2_1: {
    const Int jp = *c.j_prime;
    put(i, ip + 1, -n + ii + ip);
    put(i + 1, jp, n - i * jp - i - 2 * jp - 2);
    put(i + 1, jp + 1, -n + i * jp + 2 * jp);
    put(i + 1, ip, -2 * n + 2 * ii + 2 * i + 2 * ip + 2);
    put(i + 1, ip + 1, 2 * (n - ii - ip));
    break;
  }
  case CaseLabel::Case2_2:
    put(i, ip + 1, -n + ii + ip);
    put(i + 1, ip - 1, n - ii - 2 * ip);
    put(i + 1, ip, -3 * n + 3 * ii + i + 4 * ip);
    put(i + 1, ip + 1, 2 * (n - ii - ip));
    break;
  case CaseLabel::Case3_1:
    put(i - 1, ip + 1, n - ii - 2 * i);
    put(i, ip + 1, -3 * n + 3 * ii + 4 * i + ip);
    put(i + 1, ip - 2, n - ii + i - 2 * ip + 2);
    put(i + 1, ip - 1, -n + ii - 2 * i + 2 * ip - 4);
    put(i + 1, ip, -2 * n + 2 * ii + 2 * i + 2 * ip + 2);
    put(i + 1, ip + 1, 3 * n - 3 * ii - 2 * i - 2 * ip);
    break;
  case CaseLabel::Case3_2:
    put(i - 1, ip + 1, n - ii - 2 * i);
    put(i, ip + 1, -3 * n + 3 * ii + 4 * i + ip);
    put(i + 1, ip - 1, n - ii - 2 * ip);
    put(i + 1, ip, -3 * n + 3 * ii + i + 4 * ip);
    put(i + 1, ip + 1, 3 * n - 3 * ii - 2 * i - 2 * ip);
    break;
  }
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

} // namespace

IntTable delta_window(Int n, BiDegree e) {
  const CaseAnalysis c = classify(n, e);
  const BiDegree corner{e.i + 1, e.ip + 1};
  IntTable window(corner.i + 1, corner.ip + 1, TableKind::SecondDifference);
  for (Int r = 0; r <= corner.i; ++r)
    for (Int s = 0; s <= corner.ip; ++s)
      window.set(r, s, second_difference_at(n, {r, s}));

  const auto expected = closed_form_window(c);
  for (Int r = 0; r <= corner.i; ++r) {
    for (Int s = 0; s <= corner.ip; ++s) {
      BiDegree normalized = c.swapped ? BiDegree{s, r} : BiDegree{r, s};
      auto it = expected.find(normalized);
      Int want = it == expected.end() ? 0 : it->second;
      if (window.at(r, s) != want)
        throw ConsistencyError("Δ²H at " + to_string(BiDegree{r, s}) + " is " +
                               std::to_string(window.at(r, s)) + " but " +
                               to_string(c.case_label) + " predicts " + std::to_string(want) +
                               " (n=" + std::to_string(n) + ")");
    }
  }
  return window;
}

} // namespace vres
