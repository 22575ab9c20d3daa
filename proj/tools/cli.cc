// Copyright 2026 The rtwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rtwalk/bounds.h"
#include "rtwalk/mixing.h"
#include "rtwalk/montecarlo.h"
#include "rtwalk/numeric.h"
#include "rtwalk/restriction.h"
#include "rtwalk/spectrum.h"
#include "rtwalk/verify.h"

#ifndef RTWALK_VERSION
#define RTWALK_VERSION "unknown"
#endif

namespace rtwalk::cli {
namespace {

namespace bmp = boost::multiprecision;
using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string Str(const Real& x, int digits = 20) { return rtwalk::ToString(x, digits); }

// Always "num/den", integers included.
std::string RationalString(const Rational& x) {
  return bmp::numerator(x).str() + "/" + bmp::denominator(x).str();
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::int64_t ParseInt(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  return v;
}

// --- shared option groups -------------------------------------------------

struct VectorArgs {
  int n = 0;
  int f = 0;
  int g = 0;
  std::string b;
  CLI::Option* n_opt = nullptr;
  CLI::Option* f_opt = nullptr;
  CLI::Option* g_opt = nullptr;
  CLI::Option* b_opt = nullptr;
};

struct OutputArgs {
  std::string out;
  std::string format = "csv";
  std::string config;
  std::int64_t cap = 0;
};

void AddVectorOptions(CLI::App* sub, VectorArgs& v) {
  v.n_opt = sub->add_option("--n", v.n, "Number of rows (two-step form)");
  v.f_opt = sub->add_option("--f", v.f, "Rows 1..f take any value");
  v.g_opt = sub->add_option("--g", v.g, "Rows f+1..n need values above g");
  v.b_opt = sub->add_option("--b", v.b, "Restriction vector, e.g. 1,1,1,2,3");
}

void AddOutputOptions(CLI::App* sub, OutputArgs& o) {
  sub->add_option("--out", o.out, "Output file (stdout when absent)");
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--cap", o.cap, "Enumeration cap (default from RTWALK_CAP)");
  sub->add_option("--config", o.config, "JSON file whose keys mirror the flag names");
}

bool HasTwoStepFlags(const VectorArgs& v) {
  return v.n_opt->count() || v.f_opt->count() || v.g_opt->count();
}

RestrictionVector ResolveVector(const VectorArgs& v) {
  const bool two_step = HasTwoStepFlags(v);
  if (v.b_opt->count() && two_step) throw UsageError("give either --b or --n/--f/--g, not both");
  if (v.b_opt->count()) {
    const RestrictionVector q = RestrictionVector::Parse(v.b);
    if (const int row = q.FirstViolation(); row != 0) {
      throw UsageError("the permutation set of " + q.ToString() + " is empty: b_" +
                       std::to_string(row) + " = " + std::to_string(q.b(row)) + " > " +
                       std::to_string(row) + ", so row " + std::to_string(row) +
                       " has no admissible value left");
    }
    return RestrictionVector::Create(q.values());
  }
  if (!(v.n_opt->count() && v.f_opt->count() && v.g_opt->count())) {
    throw UsageError("need --b or all of --n, --f, --g");
  }
  return TwoStepVector({v.n, v.f, v.g});
}

TwoStepParams ResolveParams(const VectorArgs& v) {
  const RestrictionVector b = ResolveVector(v);
  if (HasTwoStepFlags(v)) return {v.n, v.f, v.g};
  const auto p = b.AsTwoStep();
  if (!p) throw UsageError(b.ToString() + " is not of the form (1^f, (g+1)^(n-f))");
  return *p;
}

std::int64_t ResolveCap(const OutputArgs& o, std::int64_t fallback) {
  if (o.cap < 0) throw UsageError("--cap must be positive");
  if (o.cap > 0) return o.cap;
  return CapFromEnvironment(fallback);
}

Json ParamsJson(const TwoStepParams& p) { return Json{{"n", p.n}, {"f", p.f}, {"g", p.g}}; }

Json VectorJson(const RestrictionVector& b) {
  Json j{{"b", b.values()}};
  if (const auto p = b.AsTwoStep()) j["two_step"] = ParamsJson(*p);
  return j;
}

// Fills options the command line left unset from a flat JSON object.
void ApplyConfig(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw UsageError("config key '" + key + "' is not an option of '" + sub->get_name() + "'");
    }
    if (opt->count() > 0) continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_array()) {
      for (const auto& item : value) {
        if (!text.empty()) text += ',';
        text += item.is_string() ? item.get<std::string>() : item.dump();
      }
    } else if (value.is_boolean()) {
      text = value.get<bool>() ? "true" : "false";
    } else {
      text = value.dump();
    }
    opt->add_result(text);
    opt->run_callback();
  }
}

// Where a command's data and summary go.
class Sink {
 public:
  Sink(const OutputArgs& o, std::ostream& out, std::ostream& err)
      : args_(o), stdout_(out), stderr_(err) {}

  std::ostream& summary() { return args_.out.empty() ? stderr_ : stdout_; }

  // JSON: manifest embedded. CSV: manifest in a sidecar next to --out.
  void Write(Json manifest, const Json& body, const std::function<void(std::ostream&)>& csv) {
    Json outputs = Json::array();
    if (!args_.out.empty()) {
      outputs.push_back(args_.out);
      if (args_.format == "csv") outputs.push_back(SidecarPath());
    }
    manifest["outputs"] = outputs;
    std::ofstream file;
    if (!args_.out.empty()) {
      file.open(args_.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + args_.out + "' for writing");
    }
    std::ostream& data = args_.out.empty() ? stdout_ : file;
    if (args_.format == "json") {
      Json doc{{"manifest", manifest}};
      for (const auto& [key, value] : body.items()) doc[key] = value;
      data << doc.dump(2) << '\n';
    } else {
      csv(data);
      if (!args_.out.empty()) {
        std::ofstream side(SidecarPath(), std::ios::binary);
        if (!side) throw std::runtime_error("cannot open '" + SidecarPath() + "' for writing");
        side << manifest.dump(2) << '\n';
      }
    }
    data.flush();
    if (!data) throw std::runtime_error("write failed");
  }

 private:
  std::string SidecarPath() const { return args_.out + ".manifest.json"; }

  const OutputArgs& args_;
  std::ostream& stdout_;
  std::ostream& stderr_;
};

Json Manifest(const std::string& command, Json parameters) {
  return Json{{"command", command},
              {"version", RTWALK_VERSION},
              {"parameters", std::move(parameters)}};
}

void WriteCurvesCsv(std::ostream& out, const std::vector<DistanceCurve>& curves) {
  out << "t,value,kind\n";
  for (const auto& curve : curves) {
    for (const auto& point : curve.points) {
      out << point.t << ',' << Str(point.value) << ',' << ToString(curve.kind) << '\n';
    }
  }
}

Json CurvesJson(const std::vector<DistanceCurve>& curves) {
  Json list = Json::array();
  for (const auto& curve : curves) {
    Json c{{"kind", ToString(curve.kind)}};
    if (!curve.error.empty()) {
      c["error"] = curve.error;
      c["cap_exceeded"] = curve.cap_exceeded;
    }
    Json points = Json::array();
    for (const auto& p : curve.points) points.push_back({{"t", p.t}, {"value", Str(p.value)}});
    c["points"] = points;
    list.push_back(c);
  }
  return list;
}

// Exit code for curves that failed: 3 if any hit a cap, 2 for other errors.
int CurveStatus(const std::vector<DistanceCurve>& curves, std::ostream& err) {
  int status = kExitOk;
  for (const auto& curve : curves) {
    if (curve.error.empty()) continue;
    err << "error: " << ToString(curve.kind) << ": " << curve.error << '\n';
    status = std::max(status, curve.cap_exceeded ? kExitCap : kExitUsage);
  }
  return status;
}

std::vector<CurveKind> ParseCurveList(const std::string& text) {
  std::vector<CurveKind> kinds;
  for (const auto& item : SplitList(text)) kinds.push_back(ParseCurveKind(item));
  if (kinds.empty()) throw UsageError("--curves is empty");
  return kinds;
}

std::string CurveListString(const std::vector<CurveKind>& kinds) {
  std::string s;
  for (CurveKind k : kinds) s += (s.empty() ? "" : ",") + ToString(k);
  return s;
}

// --- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  VectorArgs v;
  OutputArgs o;
  bool per_chain = false;
};

int RunSpectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  const RestrictionVector b = ResolveVector(a.v);
  const std::int64_t cap = ResolveCap(a.o, kDefaultChainCap);
  const Spectrum s = FullSpectrum(b, cap);
  const auto merged = s.Merged();
  const BigInt size = CountPermutations(b);
  const auto second = s.SecondEigenvalue();

  Json summary{{"size", size.str()},
               {"delta", s.delta},
               {"total_dim", s.total_dim.str()},
               {"chains", s.lines.size()},
               {"distinct_eigenvalues", merged.size()},
               {"max_eig_u", merged.front().eig_u}};
  summary["second_eig_u"] = second ? Json(*second) : Json(nullptr);

  Json lines = Json::array();
  if (a.per_chain) {
    for (const auto& line : s.lines) {
      lines.push_back({{"chain", line.chain.ToString()},
                       {"eig_u", line.eig_u},
                       {"eig_p", RationalString(line.eig_p)},
                       {"dim", line.dim.str()}});
    }
  } else {
    for (const auto& line : merged) {
      lines.push_back({{"eig_u", line.eig_u},
                       {"eig_p", RationalString(line.eig_p)},
                       {"dim", line.dim.str()},
                       {"chains", line.chains}});
    }
  }
  Json params = VectorJson(b);
  params["per_chain"] = a.per_chain;
  params["cap"] = cap;

  Sink sink(a.o, out, err);
  sink.Write(Manifest("spectrum", params), Json{{"summary", summary}, {"spectrum", lines}},
             [&](std::ostream& os) { WriteSpectrumCsv(s, os, a.per_chain); });
  auto& sum = sink.summary();
  sum << "b = " << b.ToString() << "\n|S_M| = " << size << "\nDelta = " << s.delta
      << "\ntotal dimension = " << s.total_dim << "\nmax eigenvalue = " << merged.front().eig_u
      << "\nsecond eigenvalue = " << (second ? std::to_string(*second) : std::string("none"))
      << '\n';
  return kExitOk;
}

// --- bounds ---------------------------------------------------------------

struct BoundsArgs {
  VectorArgs v;
  OutputArgs o;
  std::vector<double> c{0.0};
  std::string t_grid;
  std::string curves;
  bool rigorous = false;
};

int RunBounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  const TwoStepParams p = ResolveParams(a.v);
  p.Validate();
  if (p.f < 2 || p.f == p.n) throw UsageError("bounds need 2 <= f < n");
  UpperBoundOptions options;
  options.small_remainder_everywhere = a.rigorous;
  const Real r = Real(p.g) / Real(p.f);

  Json reports = Json::array();
  std::vector<std::int64_t> default_grid;
  std::ostringstream text;
  for (double c : a.c) {
    const TheoremTimes times = CutoffTimes(p, Real(c));
    const auto up = static_cast<std::int64_t>(bmp::ceil(times.t_chi_upper));
    // Negative when c exceeds log f + log g; no lower-term point then.
    const auto lo = static_cast<std::int64_t>(bmp::ceil(times.t_chi_lower));
    if (lo >= 0) default_grid.push_back(lo);
    default_grid.push_back(up);
    const ChiUpperBoundReport upper = ChiUpperBound(p, up, options);
    const Real lower = lo >= 0 ? bmp::sqrt(ChiLowerTerm(p, lo)) : Real(0);
    Json rep{{"c", c},
             {"denominator", times.denominator},
             {"window", Str(times.window)},
             {"t_chi_upper", Str(times.t_chi_upper)},
             {"t_chi_lower", Str(times.t_chi_lower)},
             {"t_tv_lower", Str(times.t_tv_lower)},
             {"t_fast_mix", Str(times.t_fast_mix)},
             {"chi_upper",
              {{"t", up},
               {"chi", Str(upper.chi)},
               {"chi_sq", Str(upper.chi_sq)},
               {"q1", Str(upper.q1)},
               {"q2", Str(upper.q2)},
               {"q3", Str(upper.q3)},
               {"cells", upper.cells},
               {"chi_closed", Str(upper.chi_closed)},
               {"log_q1_closed", Str(upper.log_q1_closed)},
               {"q2_closed", Str(upper.q2_closed)},
               {"q3_closed", Str(upper.q3_closed)}}},
             {"tv_lower_bound", Str(TvLowerBoundValue(r, Real(c)))}};
    rep["chi_lower"] = lo >= 0 ? Json{{"t", lo}, {"sqrt_lower_term", Str(lower)}} : Json(nullptr);
    text << "c = " << c << ": t_chi_lower = " << Str(times.t_chi_lower)
         << ", t_chi_upper = " << Str(times.t_chi_upper) << ", window = " << Str(times.window)
         << "\n  evaluator at t = " << up << ": " << Str(upper.chi)
         << " (closed form " << Str(upper.chi_closed) << ")"
         << "\n  sqrt lower term at t = " << lo << ": "
         << (lo >= 0 ? Str(lower) : std::string("n/a (t < 0)"))
         << "\n  tv lower bound: " << Str(TvLowerBoundValue(r, Real(c))) << '\n';
    if (p.g == 1) {
      const auto k = static_cast<std::int64_t>(bmp::ceil(2 * times.t_fast_mix));
      rep["fast_mix"] = {{"t_fast_mix", Str(times.t_fast_mix)},
                         {"k", k},
                         {"lower_bound", Str(FastMixNoCutoffLower(p, k))}};
      const auto k1 = static_cast<std::int64_t>(bmp::ceil(times.t_fast_mix));
      default_grid.push_back(k1);
      default_grid.push_back(k);
      text << "  t_fast_mix = " << Str(times.t_fast_mix) << ", no-cutoff lower bound at k = "
           << k << ": " << Str(FastMixNoCutoffLower(p, k)) << '\n';
    }
    reports.push_back(rep);
  }
  const auto fixed = StationarySmallFixedPointProb(p);

  SweepSpec spec;
  spec.b = TwoStepVector(p);
  spec.upper_bound = options;
  if (a.t_grid.empty()) {
    std::sort(default_grid.begin(), default_grid.end());
    default_grid.erase(std::unique(default_grid.begin(), default_grid.end()), default_grid.end());
    spec.t_grid = default_grid;
  } else {
    spec.t_grid = ParseTimeGrid(a.t_grid);
  }
  if (a.curves.empty()) {
    spec.kinds = {CurveKind::kChiUpperBound, CurveKind::kChiLowerTerm, CurveKind::kTvLowerBound};
    if (p.g == 1) spec.kinds.push_back(CurveKind::kTvFastMixLower);
  } else {
    spec.kinds = ParseCurveList(a.curves);
  }
  const auto curves = Sweep(spec);

  Json params = ParamsJson(p);
  params["c"] = a.c;
  params["t_grid"] = spec.t_grid;
  params["curves"] = CurveListString(spec.kinds);
  params["rigorous"] = a.rigorous;
  Json body{{"params", ParamsJson(p)},
            {"grid", spec.t_grid},
            {"theorem_times", reports},
            {"stationary_small_fixed_point",
             {{"exact", RationalString(fixed.exact)},
              {"approximation", Str(fixed.approximation)}}},
            {"curves", CurvesJson(curves)}};
  Sink sink(a.o, out, err);
  sink.Write(Manifest("bounds", params), body,
             [&](std::ostream& os) { WriteCurvesCsv(os, curves); });
  sink.summary() << "params " << p.ToString() << ", N = " << TwoStepDenominator(p) << '\n'
                 << text.str() << "stationary P(small fixed point) = "
                 << RationalString(fixed.exact) << " ~ " << Str(fixed.approximation) << '\n';
  return CurveStatus(curves, err);
}

// --- distance -------------------------------------------------------------

struct DistanceArgs {
  VectorArgs v;
  OutputArgs o;
  std::string t_grid;
  std::int64_t t = -1;
  std::string kind = "lazy";
  std::string curves;
  std::string start;
};

int RunDistance(const DistanceArgs& a, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.b = ResolveVector(a.v);
  spec.chain = ParseChainKind(a.kind);
  spec.matrix_cap = ResolveCap(a.o, kDefaultMatrixCap);
  spec.chain_cap = ResolveCap(a.o, kDefaultChainCap);
  if (!a.t_grid.empty()) {
    spec.t_grid = ParseTimeGrid(a.t_grid);
  } else if (a.t >= 0) {
    for (std::int64_t t = 0; t <= a.t; ++t) spec.t_grid.push_back(t);
  } else {
    throw UsageError("need --t or --t-grid");
  }
  if (!a.start.empty()) {
    spec.start = ParsePermutation(a.start);
    if (!IsMember(spec.b, spec.start)) {
      throw UsageError("start " + a.start + " is not in the permutation set");
    }
  }
  if (a.curves.empty()) {
    spec.kinds = {CurveKind::kTvExact, CurveKind::kChiExact};
  } else {
    spec.kinds = ParseCurveList(a.curves);
  }
  const auto curves = Sweep(spec);

  Json params = VectorJson(spec.b);
  params["kind"] = a.kind;
  params["t_grid"] = spec.t_grid;
  params["curves"] = CurveListString(spec.kinds);
  params["start"] = FormatPermutation(spec.start.empty() ? Identity(spec.b.n()) : spec.start);
  params["matrix_cap"] = spec.matrix_cap;
  params["chain_cap"] = spec.chain_cap;
  Sink sink(a.o, out, err);
  sink.Write(Manifest("distance", params),
             Json{{"params", VectorJson(spec.b)},
                  {"kind", a.kind},
                  {"grid", spec.t_grid},
                  {"curves", CurvesJson(curves)}},
             [&](std::ostream& os) { WriteCurvesCsv(os, curves); });
  return CurveStatus(curves, err);
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  VectorArgs v;
  OutputArgs o;
  std::int64_t t = -1;
  std::string t_grid;
  std::int64_t reps = 1000;
  std::uint64_t seed = 0;
  std::string rule = "direct";
  std::string statistics;
  std::string start;
  int workers = 0;
};

int RunSimulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  SimulationConfig config;
  config.b = ResolveVector(a.v);
  if (a.reps < 1) throw UsageError("--reps must be at least 1");
  if (a.workers < 0) throw UsageError("--workers must be nonnegative");
  if (!a.t_grid.empty()) {
    config.times = ParseTimeGrid(a.t_grid);
  } else if (a.t >= 0) {
    config.times = {a.t};
  } else {
    throw UsageError("need --t or --t-grid");
  }
  config.reps = a.reps;
  config.seed = a.seed;
  config.rule = ParseStepRule(a.rule);
  config.workers = a.workers;
  if (!a.statistics.empty()) {
    config.statistics.clear();
    for (const auto& name : SplitList(a.statistics)) {
      config.statistics.push_back(ParseStatistic(name));
    }
  }
  if (!a.start.empty()) config.start = ParsePermutation(a.start);
  const StatisticSeries series = RunStatistics(config);

  Json params = VectorJson(config.b);
  params["t_grid"] = series.times;
  params["reps"] = a.reps;
  params["rule"] = ToString(config.rule);
  Json stats = Json::array();
  for (Statistic s : series.statistics) stats.push_back(ToString(s));
  params["statistics"] = stats;
  params["start"] = FormatPermutation(config.start.empty() ? Identity(config.b.n()) : config.start);
  params["workers"] = a.workers;
  Json manifest = Manifest("simulate", params);
  manifest["seed"] = a.seed;

  Json rows = Json::array();
  for (std::size_t s = 0; s < series.statistics.size(); ++s) {
    for (const auto& r : series.rows[s]) {
      rows.push_back({{"t", r.t},
                      {"statistic", ToString(r.statistic)},
                      {"mean", Str(r.mean)},
                      {"ci99", Str(r.ci99)},
                      {"variance", Str(r.variance)},
                      {"count", r.count}});
    }
  }
  Json body{{"series", rows}};
  std::ostringstream text;
  if (const auto p = config.b.AsTwoStep(); p && p->f < p->n) {
    const auto fixed = StationarySmallFixedPointProb(*p);
    body["reference"] = {{"stationary_in_A", RationalString(fixed.exact)}};
    text << "stationary P(in_A) = " << RationalString(fixed.exact) << " ~ "
         << Str(ToReal(fixed.exact), 8) << '\n';
    if (p->g == 1) {
      const Real q = 1 - Real(2 * p->f - 1) / Real(TwoStepDenominator(*p));
      Json tail = Json::array();
      for (std::int64_t t : series.times) {
        tail.push_back({{"t", t}, {"p_first_column_unused", Str(bmp::pow(q, Real(t)))}});
      }
      body["reference"]["first_column_tail"] = tail;
    }
  }
  for (std::size_t s = 0; s < series.statistics.size(); ++s) {
    for (const auto& r : series.rows[s]) {
      text << "t = " << r.t << "  " << ToString(r.statistic) << " = " << Str(r.mean, 8)
           << " +- " << Str(r.ci99, 3) << '\n';
    }
  }
  Sink sink(a.o, out, err);
  sink.Write(manifest, body, [&](std::ostream& os) { series.WriteCsv(os); });
  sink.summary() << text.str();
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  OutputArgs o;
  std::string level = "quick";
};

int RunVerify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const VerifyLevel level = ParseVerifyLevel(a.level);
  const auto results = RunVerification(level);
  bool ok = true;
  Json checks = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  Sink sink(a.o, out, err);
  sink.Write(Manifest("verify", Json{{"level", a.level}}),
             Json{{"passed", ok}, {"checks", checks}}, [&](std::ostream& os) {
               os << "check,result,detail\n";
               for (const auto& r : results) {
                 os << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ",\"" << r.detail
                    << "\"\n";
               }
             });
  for (const auto& r : results) {
    sink.summary() << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed
                   << std::setprecision(2) << r.seconds << " s)"
                   << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
  }
  sink.summary().unsetf(std::ios::floatfield);
  return ok ? kExitOk : kExitCheckFailed;
}

// --- probe ----------------------------------------------------------------

struct ProbeArgs {
  VectorArgs v;
  OutputArgs o;
  std::int64_t t = 6;
  std::string kind = "lazy";
  std::vector<std::string> candidates;
};

int RunProbe(const ProbeArgs& a, std::ostream& out, std::ostream& err) {
  const RestrictionVector b = ResolveVector(a.v);
  const ChainKind kind = ParseChainKind(a.kind);
  if (a.t < 0) throw UsageError("--t must be nonnegative");
  std::vector<Permutation> candidates;
  for (const auto& c : a.candidates) candidates.push_back(ParsePermutation(c));
  const std::int64_t cap = ResolveCap(a.o, kDefaultMatrixCap);
  const ProbeResult result = VertexTransitivityProbe(b, a.t, kind, candidates, cap);

  Json body{{"transitive_consistent", result.transitive_consistent}};
  if (result.witness) {
    const auto& w = *result.witness;
    body["witness"] = {{"sigma", FormatPermutation(w.sigma)},
                       {"tau", FormatPermutation(w.tau)},
                       {"t", w.t},
                       {"p_sigma", RationalString(w.p_sigma)},
                       {"p_tau", RationalString(w.p_tau)}};
  }
  Json params = VectorJson(b);
  params["t"] = a.t;
  params["kind"] = a.kind;
  params["candidates"] = a.candidates;
  params["cap"] = cap;
  Sink sink(a.o, out, err);
  sink.Write(Manifest("probe", params), body, [&](std::ostream& os) {
    os << "transitive_consistent,sigma,tau,t,p_sigma,p_tau\n";
    os << (result.transitive_consistent ? "true" : "false");
    if (result.witness) {
      const auto& w = *result.witness;
      os << ',' << FormatPermutation(w.sigma) << ',' << FormatPermutation(w.tau) << ',' << w.t
         << ',' << RationalString(w.p_sigma) << ',' << RationalString(w.p_tau);
    } else {
      os << ",,,,,";
    }
    os << '\n';
  });
  if (result.witness) {
    const auto& w = *result.witness;
    sink.summary() << "not vertex transitive: P^" << w.t << "(" << FormatPermutation(w.sigma)
                   << ") = " << RationalString(w.p_sigma) << " but P^" << w.t << "("
                   << FormatPermutation(w.tau) << ") = " << RationalString(w.p_tau) << '\n';
  } else {
    sink.summary() << "return probabilities agree up to t = " << a.t << '\n';
  }
  return kExitOk;
}

}  // namespace

std::vector<std::int64_t> ParseTimeGrid(const std::string& text) {
  std::vector<std::int64_t> grid;
  for (const auto& item : SplitList(text)) {
    if (item.find(':') == std::string::npos) {
      grid.push_back(ParseInt(item, "t-grid"));
      continue;
    }
    std::vector<std::string> parts;
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("t-grid range must be start:stop:step");
    const std::int64_t start = ParseInt(parts[0], "t-grid");
    const std::int64_t stop = ParseInt(parts[1], "t-grid");
    const std::int64_t step = ParseInt(parts[2], "t-grid");
    if (step <= 0) throw UsageError("t-grid step must be positive");
    if ((stop - start) / step > 10'000'000) throw UsageError("t-grid range too long");
    for (std::int64_t t = start; t <= stop; t += step) grid.push_back(t);
  }
  if (grid.empty()) throw UsageError("t-grid is empty");
  for (std::int64_t t : grid) {
    if (t < 0) throw UsageError("t-grid entries must be nonnegative");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random transpositions on restricted permutations", "rtwalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RTWALK_VERSION);

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact spectrum via b-partitions");
  AddVectorOptions(spectrum_cmd, spectrum.v);
  AddOutputOptions(spectrum_cmd, spectrum.o);
  spectrum_cmd->add_flag("--per-chain", spectrum.per_chain, "One row per chain");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Cutoff times and bound curves (two-step)");
  AddVectorOptions(bounds_cmd, bounds.v);
  AddOutputOptions(bounds_cmd, bounds.o);
  bounds_cmd->add_option("--c", bounds.c, "Window offsets c")->delimiter(',');
  bounds_cmd->add_option("--t-grid", bounds.t_grid, "Times, e.g. 0:1000:50");
  bounds_cmd->add_option("--curves", bounds.curves, "Curve kinds, comma separated");
  bounds_cmd->add_flag("--rigorous", bounds.rigorous,
                       "Use the small-remainder eigenvalue bound on every cell");

  DistanceArgs distance;
  auto* distance_cmd = app.add_subcommand("distance", "Exact distance curves (small n)");
  AddVectorOptions(distance_cmd, distance.v);
  AddOutputOptions(distance_cmd, distance.o);
  distance_cmd->add_option("--t", distance.t, "Curve over t = 0..T");
  distance_cmd->add_option("--t-grid", distance.t_grid, "Times, e.g. 0,1,2,10:50:10");
  distance_cmd->add_option("--kind", distance.kind, "lazy or uniform")
      ->check(CLI::IsMember({"lazy", "uniform"}));
  distance_cmd->add_option("--curves", distance.curves, "Curve kinds, comma separated");
  distance_cmd->add_option("--start", distance.start, "Start permutation (identity)");

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo statistics");
  AddVectorOptions(simulate_cmd, simulate.v);
  AddOutputOptions(simulate_cmd, simulate.o);
  simulate_cmd->add_option("--t", simulate.t, "Record at this time only");
  simulate_cmd->add_option("--t-grid", simulate.t_grid, "Times to record");
  simulate_cmd->add_option("--reps", simulate.reps, "Trajectories");
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed");
  simulate_cmd->add_option("--rule", simulate.rule, "direct or rejection")
      ->check(CLI::IsMember({"direct", "rejection"}));
  simulate_cmd->add_option("--statistics", simulate.statistics, "Statistic names");
  simulate_cmd->add_option("--start", simulate.start, "Start permutation (identity)");
  simulate_cmd->add_option("--workers", simulate.workers, "Threads (0 = all cores)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in oracle checks");
  AddOutputOptions(verify_cmd, verify.o);
  verify_cmd->add_option("--level", verify.level, "quick or full");

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "Compare return probabilities across states");
  AddVectorOptions(probe_cmd, probe.v);
  AddOutputOptions(probe_cmd, probe.o);
  probe_cmd->add_option("--t", probe.t, "Largest t compared");
  probe_cmd->add_option("--kind", probe.kind, "lazy or uniform")
      ->check(CLI::IsMember({"lazy", "uniform"}));
  probe_cmd->add_option("--candidates", probe.candidates, "States to compare (default all)")
      ->delimiter(',');

  const std::vector<std::pair<CLI::App*, std::string*>> configs{
      {spectrum_cmd, &spectrum.o.config}, {bounds_cmd, &bounds.o.config},
      {distance_cmd, &distance.o.config}, {simulate_cmd, &simulate.o.config},
      {verify_cmd, &verify.o.config},     {probe_cmd, &probe.o.config}};

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
    for (const auto& [cmd, path] : configs) {
      if (cmd->parsed() && !path->empty()) ApplyConfig(cmd, *path);
    }
    if (spectrum_cmd->parsed()) return RunSpectrum(spectrum, out, err);
    if (bounds_cmd->parsed()) return RunBounds(bounds, out, err);
    if (distance_cmd->parsed()) return RunDistance(distance, out, err);
    if (simulate_cmd->parsed()) return RunSimulate(simulate, out, err);
    if (verify_cmd->parsed()) return RunVerify(verify, out, err);
    if (probe_cmd->parsed()) return RunProbe(probe, out, err);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise --cap or RTWALK_CAP)\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace rtwalk::cli
