#include "vres/cli.hpp"

#include "vres/census.hpp"
#include "vres/classifier.hpp"
#include "vres/error.hpp"
#include "vres/oracle.hpp"
#include "vres/resolution.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>

namespace vres {

namespace {

using nlohmann::json;

const char* kConditionalBanner =
    "CONDITIONAL: assumes the minimal resolution conjecture (no ghost terms)";

struct Options {
  Int n = 0;
  Int rows = -1;
  Int cols = -1;
  int level = 0;
  std::string format = "plain";
  Int i = 0;
  Int ip = 0;
  bool mrc = false;
  Int min = 2;
  Int max = 2;
  std::optional<std::uint32_t> prime;
  std::optional<int> retries;
  std::uint64_t seed = 1;
};

// Value of an integer environment variable, if set.
template <class T> std::optional<T> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0')
    return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 0)
      throw std::invalid_argument(raw);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be a nonnegative integer, got '" + raw + "'");
  }
}

void print_table(std::ostream& out, const IntTable& t) {
  Int width = 1;
  for (Int v : t.entries())
    width = std::max<Int>(width, static_cast<Int>(std::to_string(v).size()));
  for (Int r = 0; r < t.rows(); ++r) {
    for (Int c = 0; c < t.cols(); ++c)
      out << (c ? " " : "") << std::setw(static_cast<int>(width)) << t.at(r, c);
    out << '\n';
  }
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  if (o.n < 1)
    throw DomainError("--n must be at least 1");
  const Int rows = o.rows < 0 ? o.n + 2 : o.rows;
  const Int cols = o.cols < 0 ? o.n + 2 : o.cols;
  if (rows < 1 || cols < 1)
    throw DomainError("--rows and --cols must be positive");
  IntTable t = generic_hilbert_table(o.n, rows, cols);
  for (int k = 0; k < o.level; ++k)
    t = difference(t);

  if (o.format == "json") {
    json rows_json = json::array();
    for (Int r = 0; r < rows; ++r) {
      json row = json::array();
      for (Int c = 0; c < cols; ++c)
        row.push_back(t.at(r, c));
      rows_json.push_back(std::move(row));
    }
    out << json{{"n", o.n}, {"kind", to_string(t.kind())}, {"rows", rows}, {"cols", cols},
                {"entries", std::move(rows_json)}}
               .dump()
        << '\n';
  } else if (o.format == "csv") {
    for (Int r = 0; r < rows; ++r) {
      for (Int c = 0; c < cols; ++c)
        out << (c ? "," : "") << t.at(r, c);
      out << '\n';
    }
  } else {
    print_table(out, t);
  }
  return kExitOk;
}

std::vector<std::string> markers(const CaseAnalysis& c) {
  std::vector<std::string> m;
  if (c.exact_product())
    m.push_back("exact-product");
  if (c.condition_a())
    m.push_back("a");
  if (c.condition_b())
    m.push_back("b");
  if (c.verdict.kind == VerdictKind::LengthThree)
    m.push_back("length-three");
  if (c.verdict.kind == VerdictKind::GapConjectured)
    m.push_back("gap");
  return m;
}

int cmd_reg(const Options& o, std::ostream& out) {
  if (o.n < 2)
    throw DomainError("--n must be at least 2");
  const RegularityRegion region = regularity_minimal_elements(o.n);

  if (o.format == "csv") {
    out << kCensusCsvHeader << '\n';
    for (const auto& e : region.minimal_elements)
      if (e.i <= e.ip)
        out << csv_row(make_record(classify(o.n, e))) << '\n';
    return kExitOk;
  }

  json elements = json::array();
  json figure = json::array();
  Int count = 0;
  for (const auto& e : region.minimal_elements) {
    const CaseAnalysis c = classify(o.n, e);
    const auto m = markers(c);
    elements.push_back({{"i", e.i}, {"ip", e.ip}, {"verdict", to_string(c.verdict)},
                        {"markers", m}});
    if (e.i <= e.ip) {
      ++count;
      figure.push_back({{"x", e.i}, {"y", e.ip}, {"marker", m.front()}});
    }
  }

  if (o.format == "json") {
    out << json{{"n", o.n}, {"minimal_elements", std::move(elements)},
                {"count_i_le_ip", count}, {"figure", std::move(figure)}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "minimal elements of regularity for n=" << o.n << " (" << count << " with i <= i')\n";
  for (const auto& el : elements) {
    out << "(" << el["i"].get<Int>() << "," << el["ip"].get<Int>() << ")  "
        << el["verdict"].get<std::string>();
    std::string sep = "  [";
    for (const auto& m : el["markers"]) {
      out << sep << m.get<std::string>();
      sep = ", ";
    }
    out << "]\n";
  }
  return kExitOk;
}

int cmd_vres(const Options& o, std::ostream& out, std::ostream& err) {
  const CaseAnalysis c = classify(o.n, {o.i, o.ip});
  FreeComplex f;
  if (c.verdict.kind == VerdictKind::HilbertBurch) {
    f = build_template(c);
  } else if (!o.mrc) {
    err << "verdict for " << to_string(BiDegree{o.i, o.ip}) << " at n=" << o.n << " is "
        << to_string(c.verdict)
        << "; the predicted complex is conditional, pass --mrc to print it\n";
    return kExitConditional;
  } else {
    f = build_mrc_prediction(o.n, {o.i, o.ip});
  }

  if (o.format == "json") {
    json j = to_json(f);
    j["n"] = o.n;
    j["elem"] = {o.i, o.ip};
    j["case"] = to_string(c.case_label);
    j["verdict"] = to_string(c.verdict);
    j["rendered"] = render(f);
    if (f.conditional)
      err << kConditionalBanner << '\n';
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (f.conditional)
    out << kConditionalBanner << '\n';
  out << render(f) << '\n';
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  const auto records = sweep(o.min, o.max);
  if (o.format == "csv") {
    out << kCensusCsvHeader << '\n';
    for (const auto& r : records)
      out << csv_row(r) << '\n';
    return kExitOk;
  }
  const CensusSummary s = summarize(records);
  if (o.format == "json") {
    out << to_json(s).dump() << '\n';
    return kExitOk;
  }
  auto line = [&](const char* name, Int part, const FamilyCounts& fc) {
    out << "  " << std::left << std::setw(16) << name << std::right << std::setw(9) << part
        << "  " << std::fixed << std::setprecision(2) << fc.percent(part) << "%\n";
  };
  auto block = [&](const char* title, const FamilyCounts& fc) {
    out << title << " (" << fc.total() << " elements)\n";
    line("HilbertBurch", fc.hilbert_burch, fc);
    line("LengthThree", fc.length_three, fc);
    line("GapConjectured", fc.gap, fc);
  };
  out << "n = " << s.n_min << ".." << s.n_max << '\n';
  block("i <= i'", s.unordered);
  block("ordered pairs", s.ordered);
  out << "condition (a): " << s.condition_a << ", condition (b): " << s.condition_b
      << ", n = (i+1)(i'+1): " << s.exact_product << '\n';
  out << "templates:";
  for (int t = 0; t < 7; ++t)
    out << " A" << t + 1 << "=" << s.templates[t];
  out << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto prime = o.prime ? *o.prime : env_number<std::uint32_t>("VRES_PRIME").value_or(kDefaultPrime);
  const int retries = o.retries ? *o.retries : env_number<int>("VRES_RETRIES").value_or(kDefaultRetries);
  const PrimeField field(prime);
  const VerifyReport r = verify_prediction(o.n, {o.i, o.ip}, field, o.seed, retries);

  if (r.conditional)
    (o.format == "json" ? err : out) << kConditionalBanner << '\n';
  if (o.format == "json") {
    out << to_json(r).dump() << '\n';
    return kExitOk;
  }
  const BiDegree corner{o.i + 1, o.ip + 1};
  out << "n=" << r.n << " elem=" << r.elem << " verdict=" << to_string(r.verdict) << " p=" << r.prime
      << " seed=" << r.seed << " retries=" << r.retries << '\n';
  out << "measured:";
  for (const auto& [key, mult] : r.measured.betti.entries())
    out << " b" << key.p << key.deg << "=" << mult;
  out << '\n' << "predicted:";
  for (const auto& [key, mult] : r.predicted.entries())
    out << " b" << key.p << key.deg << "=" << mult;
  out << '\n';
  out << "beta_3" << corner << " = " << r.measured.betti.get(3, corner) << '\n';
  out << "agree: " << (r.agree ? "true" : "false")
      << ", residuals zero: " << (r.residuals_zero ? "true" : "false") << '\n';
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual resolutions of generic points in P^1 x P^1", "vres"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"plain", "json", "csv"};

  auto* hilbert = app.add_subcommand("hilbert", "Generic Hilbert function and its differences");
  hilbert->add_option("--n", o.n, "number of points")->required();
  hilbert->add_option("--rows", o.rows, "window rows (default n+2)");
  hilbert->add_option("--cols", o.cols, "window columns (default n+2)");
  hilbert->add_option("--level", o.level, "0: H, 1: first difference, 2: second difference")
      ->check(CLI::Range(0, 2));
  hilbert->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* reg = app.add_subcommand("reg", "Minimal elements of regularity");
  reg->add_option("--n", o.n, "number of points")->required();
  reg->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* vres = app.add_subcommand("vres", "Virtual resolution of the pair (S/I_X, (i,i'))");
  vres->add_option("--n", o.n, "number of points")->required();
  vres->add_option("--i", o.i)->required();
  vres->add_option("--ip", o.ip)->required();
  vres->add_flag("--mrc", o.mrc, "allow conjecture-conditional complexes");
  vres->add_option("--format", o.format)->check(CLI::IsMember({"plain", "json"}));

  auto* census = app.add_subcommand("census", "Classify every minimal element for a range of n");
  census->add_option("--min", o.min)->required();
  census->add_option("--max", o.max)->required();
  census->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Compare predicted Betti numbers with Koszul homology");
  verify->add_option("--n", o.n, "number of points")->required();
  verify->add_option("--i", o.i)->required();
  verify->add_option("--ip", o.ip)->required();
  verify->add_option("--prime", o.prime, "field characteristic (env VRES_PRIME)");
  verify->add_option("--seed", o.seed, "sampling seed");
  verify->add_option("--retries", o.retries, "resampling budget (env VRES_RETRIES)");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"plain", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (hilbert->parsed())
      return cmd_hilbert(o, out);
    if (reg->parsed())
      return cmd_reg(o, out);
    if (vres->parsed())
      return cmd_vres(o, out, err);
    if (census->parsed())
      return cmd_census(o, out);
    return cmd_verify(o, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GenericityExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitGenericity;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

} // namespace vres
