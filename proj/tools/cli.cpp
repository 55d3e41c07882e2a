#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "powerpoly/catalog.hpp"
#include "powerpoly/errors.hpp"
#include "powerpoly/indices.hpp"
#include "powerpoly/integer_reps.hpp"
#include "powerpoly/json_io.hpp"
#include "powerpoly/polytope.hpp"

namespace powerpoly::cli {

namespace {

constexpr int kDefaultPrecision = 6;
constexpr const char* kMcHint = "use `powerpoly mc` for a Monte Carlo estimate";

struct Options {
  std::string game;
  std::string kind;
  int precision = -1;
  bool json = false;
  bool csv = false;
  bool verbose = false;
  bool dummy_revealing = false;
  bool axioms = false;
  bool vertices = false;
  bool volume = false;
  bool moments = false;
  bool with_quota = false;
  std::int64_t total = 0;
  std::string convergence;
  std::size_t max_voters = kCatalogMaxVoters;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

int resolve_precision(int flag) {
  if (flag >= 0) return flag;
  if (const char* env = std::getenv("POWERPOLY_PRECISION"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 100) {
      throw InputError("POWERPOLY_PRECISION must be an integer in [0, 100], got '" + std::string(env) + "'");
    }
    return static_cast<int>(v);
  }
  return kDefaultPrecision;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string point_str(const RatVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out.push_back(',');
    out += x[i].str();
  }
  return out + ")";
}

void warn_scale(const WeightedGame& g, bool representation, std::ostream& err) {
  const std::size_t limit = representation ? kGuaranteedRepresentationVoters : kGuaranteedWeightVoters;
  if (g.size() > limit) {
    err << "warning: exact " << (representation ? "representation" : "weight") << " polytope for " << g.size()
        << " voters may be slow; " << kMcHint << "\n";
  }
}

bool is_rep_kind(const std::string& kind) {
  if (kind == "weight") return false;
  if (kind == "rep") return true;
  throw InputError("polytope kind must be 'weight' or 'rep', got '" + kind + "'");
}

int cmd_index(const Options& o, std::ostream& out, std::ostream& err) {
  const WeightedGame g = WeightedGame::parse(o.game);
  const IndexKind kind = parse_index_kind(o.kind);
  if (kind != IndexKind::kShapleyShubik) warn_scale(g, kind == IndexKind::kAverageRepresentation, err);
  const int places = resolve_precision(o.precision);
  const IndexVector x = o.dummy_revealing ? dummy_revealing(kind, g) : compute_index(kind, g);
  std::optional<AxiomReport> report;
  if (o.axioms) report = check_axioms(g, x);

  if (o.json) {
    out << index_to_json(g, x, places, report).dump(2) << "\n";
    return kOk;
  }
  out << join(x.values) << "\n";
  if (o.verbose) {
    out << "decimals: " << join_decimal(x.values, places) << "\n";
    if (x.avg_quota) out << "avg_quota: " << x.avg_quota->str() << " (" << x.avg_quota->to_decimal(places) << ")\n";
  }
  if (report) {
    out << "symmetric: " << yes_no(report->symmetric) << "\n"
        << "positive: " << yes_no(report->positive) << "\n"
        << "efficient: " << yes_no(report->efficient) << "\n"
        << "dummy_property: " << (report->has_dummies ? yes_no(report->dummy_property) : "n/a") << "\n"
        << "representation_compatible: " << yes_no(report->representation_compatible) << "\n";
  }
  return kOk;
}

int cmd_polytope(const Options& o, std::ostream& out, std::ostream& err) {
  const WeightedGame g = WeightedGame::parse(o.game);
  const bool rep = is_rep_kind(o.kind);
  warn_scale(g, rep, err);
  const HPolytope p = rep ? build_representation_polytope(g) : build_weight_polytope(g);
  const Integrals integrals = integrate(p);
  if (o.json) {
    out << polytope_to_json(p, integrals).dump(2) << "\n";
    return kOk;
  }
  const bool all = !o.vertices && !o.volume && !o.moments;
  if (all || o.vertices) {
    std::string line;
    for (const auto& v : integrals.vertices) {
      if (!line.empty()) line.push_back(' ');
      line += point_str(v.coords);
    }
    out << line << "\n";
  }
  if (all || o.volume) out << integrals.volume.str() << "\n";
  if (all || o.moments) out << join(integrals.moments) << "\n";
  return kOk;
}

std::vector<std::int64_t> parse_totals(const std::string& text) {
  std::vector<std::int64_t> totals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty entry in --convergence list");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad total '" + item + "' in --convergence list");
    }
    if (used != item.size() || v < 1) throw InputError("bad total '" + item + "' in --convergence list");
    totals.push_back(v);
  }
  if (totals.empty()) throw InputError("--convergence needs at least one total");
  if (!std::is_sorted(totals.begin(), totals.end())) {
    throw InputError("--convergence totals must be ascending");
  }
  return totals;
}

void write_convergence_csv(const ConvergenceTable& t, std::size_t n, int places, std::ostream& out) {
  out << "total,count";
  for (std::size_t i = 0; i < n; ++i) out << ",avg_" << (i + 1);
  out << ",l1_to_limit\n";
  for (const auto& r : t.rows) {
    out << r.summary.total << "," << r.summary.count;
    for (std::size_t i = 0; i < n; ++i) {
      out << "," << (r.summary.count ? r.summary.average[i].to_decimal(places) : std::string());
    }
    out << "," << (r.summary.count ? r.l1_to_limit.to_decimal(places) : std::string()) << "\n";
  }
}

int cmd_intreps(const Options& o, std::ostream& out, std::ostream&) {
  const WeightedGame g = WeightedGame::parse(o.game);
  const int places = resolve_precision(o.precision);
  if (o.json && o.csv) throw InputError("--json and --csv are mutually exclusive");

  if (!o.convergence.empty()) {
    const auto totals = parse_totals(o.convergence);
    const ConvergenceTable t = convergence_experiment(g, totals, o.with_quota);
    if (o.json) {
      out << convergence_to_json(g, t, places).dump(2) << "\n";
      return kOk;
    }
    if (!o.csv) out << "# limit " << to_string(t.limit.kind) << " " << join(t.limit.values) << "\n";
    write_convergence_csv(t, g.size(), places, out);
    return kOk;
  }

  if (o.total < 1) throw InputError("intreps needs --total T (T >= 1) or --convergence LIST");
  const GridSummary s =
      o.with_quota ? enumerate_integer_representations(g, o.total) : enumerate_integer_feasible_weights(g, o.total);
  if (o.json) {
    out << grid_summary_to_json(s, places).dump(2) << "\n";
    return kOk;
  }
  if (o.csv) {
    out << "total,count";
    for (std::size_t i = 0; i < g.size(); ++i) out << ",avg_" << (i + 1);
    out << "\n" << s.total << "," << s.count;
    for (std::size_t i = 0; i < g.size(); ++i) out << "," << (s.count ? s.average[i].to_decimal(places) : "");
    out << "\n";
    return kOk;
  }
  out << "total " << s.total << "\n" << "count " << s.count << "\n";
  if (s.count) {
    out << "average " << join(s.average) << "\n" << "decimals " << join_decimal(s.average, places) << "\n";
    if (s.avg_quota) out << "avg_quota " << s.avg_quota->str() << "\n";
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
  const int places = resolve_precision(o.precision);
  const auto rows = compute_table(o.max_voters);
  if (o.json) {
    out << table_to_json(rows, places).dump(2) << "\n";
    return kOk;
  }
  for (const auto& r : rows) {
    out << r.game << " avg-weight=" << point_str(r.avg_weight.values) << " avg-rep=" << point_str(r.avg_rep.values);
    if (o.verbose) out << " avg-quota=" << r.avg_rep.avg_quota->str();
    out << "\n";
  }
  return kOk;
}

int cmd_mc(const Options& o, std::ostream& out, std::ostream&) {
  const WeightedGame g = WeightedGame::parse(o.game);
  const bool rep = is_rep_kind(o.kind);
  const int places = resolve_precision(o.precision);
  const HPolytope p = rep ? build_representation_polytope(g) : build_weight_polytope(g);
  const McEstimate est = estimate_centroid_mc(p, o.samples, o.seed);

  // chart (q?, w_1..w_{n-1}) -> full weight vector; w_n by efficiency
  const std::size_t offset = rep ? 1 : 0;
  std::vector<double> weights(g.size()), errors(g.size());
  double rest = 1.0, rest_var = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    weights[i] = est.mean[offset + i];
    errors[i] = est.standard_error[offset + i];
    rest -= weights[i];
    rest_var += errors[i] * errors[i];
  }
  weights.back() = rest;
  // conservative: ignores the negative covariance between chart coordinates
  errors.back() = std::sqrt(rest_var);

  auto fmt = [places](double v) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(places);
    ss << v;
    return ss.str();
  };
  if (o.json) {
    Json j{{"game", g.str()},
           {"kind", rep ? "rep" : "weight"},
           {"samples", est.samples},
           {"accepted", est.accepted},
           {"seed", o.seed},
           {"values", weights},
           {"standard_errors", errors}};
    if (rep) {
      j["avg_quota"] = est.mean[0];
      j["avg_quota_standard_error"] = est.standard_error[0];
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  std::string vals, errs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vals += (i ? " " : "") + fmt(weights[i]);
    errs += (i ? " " : "") + fmt(errors[i]);
  }
  out << vals << "\n" << "stderr " << errs << "\n" << "accepted " << est.accepted << "/" << est.samples << "\n";
  if (rep) out << "avg_quota " << fmt(est.mean[0]) << " +- " << fmt(est.standard_error[0]) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power indices for weighted majority games", "powerpoly"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "Decimal places (default $POWERPOLY_PRECISION or 6)")
        ->check(CLI::Range(0, 100));
  };

  auto* index = app.add_subcommand("index", "Compute a power index");
  index->add_option("--game", o.game, "Game as \"[q; w1, ..., wn]\"")->required();
  index->add_option("--kind", o.kind, "ssi | avg-weight | avg-rep")->required();
  index->add_flag("--dummy-revealing", o.dummy_revealing, "Recompute on the dummy-reduced game");
  index->add_flag("--axioms", o.axioms, "Report symmetry, positivity, efficiency, dummy, compatibility");
  index->add_flag("--json", o.json, "JSON output");
  index->add_flag("--verbose", o.verbose, "Also print decimals and the average quota");
  add_common(index);

  auto* polytope = app.add_subcommand("polytope", "Inspect the weight or representation polytope");
  polytope->add_option("--game", o.game, "Game as \"[q; w1, ..., wn]\"")->required();
  polytope->add_option("--kind", o.kind, "weight | rep")->required();
  polytope->add_flag("--vertices", o.vertices, "Print vertices");
  polytope->add_flag("--volume", o.volume, "Print the volume");
  polytope->add_flag("--moments", o.moments, "Print first moments");
  polytope->add_flag("--json", o.json, "JSON output");

  auto* intreps = app.add_subcommand("intreps", "Enumerate integer weights or representations");
  intreps->add_option("--game", o.game, "Game as \"[q; w1, ..., wn]\"")->required();
  intreps->add_option("--total", o.total, "Weight total");
  intreps->add_flag("--with-quota", o.with_quota, "Count (quota, weights) pairs");
  intreps->add_option("--convergence", o.convergence, "Comma separated ascending totals");
  intreps->add_flag("--json", o.json, "JSON output");
  intreps->add_flag("--csv", o.csv, "CSV output");
  add_common(intreps);

  auto* table = app.add_subcommand("table", "Both average indices for the built-in small games");
  table->add_option("--max-voters", o.max_voters, "Largest voter count to include");
  table->add_flag("--json", o.json, "JSON output");
  table->add_flag("--verbose", o.verbose, "Also print the average quota");
  add_common(table);

  auto* mc = app.add_subcommand("mc", "Monte Carlo centroid estimate of a game polytope");
  mc->add_option("--game", o.game, "Game as \"[q; w1, ..., wn]\"")->required();
  mc->add_option("--kind", o.kind, "weight | rep")->required();
  mc->add_option("--samples", o.samples, "Number of samples")->check(CLI::PositiveNumber);
  mc->add_option("--seed", o.seed, "Generator seed")->required();
  mc->add_flag("--json", o.json, "JSON output");
  add_common(mc);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (index->parsed()) return cmd_index(o, out, err);
    if (polytope->parsed()) return cmd_polytope(o, out, err);
    if (intreps->parsed()) return cmd_intreps(o, out, err);
    if (table->parsed()) return cmd_table(o, out, err);
    if (mc->parsed()) return cmd_mc(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ScaleError& e) {
    err << "error: " << e.what() << "\n" << "hint: " << kMcHint << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace powerpoly::cli
