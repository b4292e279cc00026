#include "maxties/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "maxties/approximants.hpp"
#include "maxties/bounds_continuous.hpp"
#include "maxties/bounds_discrete.hpp"
#include "maxties/errors.hpp"
#include "maxties/maxima_discrete.hpp"
#include "maxties/montecarlo.hpp"

namespace maxties {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  std::string target;  // theorem, figure name or simulated quantity
  std::string law = "geometric";
  LawFlags law_flags;
  std::int64_t ell = 1;
  std::optional<double> a;
  std::optional<double> eq;
  std::optional<double> eq2;
  double tol = kDefaultTol;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t mc_samples = 0;
  bool raw = false;
  unsigned workers = 1;
  double fault_factor = 1.0;
  double grid_min = 0.0;
  double grid_max = 0.0;
  int points = 0;
};

std::string format_raw(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double round_half_away(double x, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::copysign(std::floor(std::abs(x) * scale + 0.5) / scale, x);
}

std::string format_rounded(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", round_half_away(x, 3));
  return buf;
}

std::string format_value(double x, bool raw) { return raw ? format_raw(x) : format_rounded(x); }

/// Evaluates fn(0..count-1) on up to `workers` threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

DiscreteLaw require_discrete(const AnyLaw& law) {
  if (const auto* d = std::get_if<DiscreteLaw>(&law)) return *d;
  throw DomainError("this command needs a discrete law (geometric or tabulated)");
}

ContinuousLaw require_continuous(const AnyLaw& law) {
  if (const auto* c = std::get_if<ContinuousLaw>(&law)) return *c;
  throw DomainError("this command needs a continuous law (gumbel or uniform)");
}

std::int64_t require_n(const RunConfig& cfg) {
  if (!cfg.law_flags.n) throw DomainError("--n is required");
  return *cfg.law_flags.n;
}

double require_a(const RunConfig& cfg) {
  if (!cfg.a) throw DomainError("--a is required");
  return *cfg.a;
}

AnyLaw config_law(const RunConfig& cfg) { return parse_law(law_descriptor_from_arg(cfg.law), cfg.law_flags); }

// ---- bound ---------------------------------------------------------------

BoundReport evaluate_bound(const RunConfig& cfg) {
  const std::string& thm = cfg.target;
  if (thm == "thm4") {
    if (!cfg.eq || !cfg.eq2) throw DomainError("thm4 needs --eq and --eq2");
    return thm4_bound(MixedBinomialSpec(require_n(cfg), cfg.ell, *cfg.eq, *cfg.eq2));
  }
  const AnyLaw law = config_law(cfg);
  if (thm == "thm3") {
    return thm3_bound(NearOrderSpec(require_continuous(law), require_n(cfg), cfg.ell, require_a(cfg)),
                      std::max(cfg.tol, 1e-10));
  }
  const KnSpec spec(require_discrete(law), require_n(cfg));
  if (thm == "thm1a") return thm1a_bound(spec, cfg.tol);
  if (thm == "thm1b") return thm1b_bound(spec, cfg.tol);
  return thm2_poisson_bound(spec, cfg.tol);
}

std::string cmd_bound(const RunConfig& cfg) {
  const BoundReport r = evaluate_bound(cfg);
  const double shown = cfg.raw ? r.bound : round_half_away(r.bound, 3);
  if (cfg.format == "json") {
    json doc;
    doc["theorem"] = r.theorem;
    doc["bound"] = shown;
    doc["informative"] = r.informative;
    doc["params"] = r.params;
    doc["moments"] = r.moments;
    doc["truncation_error"] = r.truncation_error;
    return doc.dump(2) + "\n";
  }
  std::string header = "theorem,bound,informative,truncation_error";
  std::string row = r.theorem + "," + format_value(r.bound, cfg.raw) + "," + (r.informative ? "true" : "false") +
                    "," + format_raw(r.truncation_error);
  for (const auto& [k, v] : r.params) {
    header += "," + k;
    row += "," + format_raw(v);
  }
  for (const auto& [k, v] : r.moments) {
    header += "," + k;
    row += "," + format_raw(v);
  }
  return header + "\n" + row + "\n";
}

// ---- table1 --------------------------------------------------------------

const std::vector<double> kTableMu = {100, 300, 500, 700, 900};
const std::vector<std::int64_t> kTableN = {100000, 1000000, 10000000, 100000000, 1000000000};

std::string cmd_table1(const RunConfig& cfg) {
  const std::size_t cols = kTableN.size();
  const auto bounds = parallel_map<double>(kTableMu.size() * cols, cfg.workers, [&](std::size_t i) {
    const double mu = kTableMu[i / cols];
    const std::int64_t n = kTableN[i % cols];
    return thm2_poisson_bound(KnSpec(make_geometric_complement(mu / static_cast<double>(n)), n), cfg.tol).bound;
  });
  auto cell = [&](double b) { return cfg.raw ? format_raw(b) : (b > 1.0 ? std::string("---") : format_rounded(b)); };
  if (cfg.format == "json") {
    json doc;
    doc["mu"] = kTableMu;
    doc["n"] = kTableN;
    json rows = json::array();
    for (std::size_t r = 0; r < kTableMu.size(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < cols; ++c) row.push_back(cell(bounds[r * cols + c]));
      rows.push_back(row);
    }
    doc["cells"] = rows;
    return doc.dump(2) + "\n";
  }
  std::string doc = "mu";
  for (auto n : kTableN) doc += "," + std::to_string(n);
  doc += "\n";
  for (std::size_t r = 0; r < kTableMu.size(); ++r) {
    doc += std::to_string(static_cast<int>(kTableMu[r]));
    for (std::size_t c = 0; c < cols; ++c) doc += "," + cell(bounds[r * cols + c]);
    doc += "\n";
  }
  return doc;
}

// ---- figure --------------------------------------------------------------

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw DomainError("--points must be >= 1");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return g;
}

std::string emit_columns(const RunConfig& cfg, const std::vector<std::string>& names,
                         const std::vector<std::vector<double>>& rows) {
  if (cfg.format == "json") {
    json doc = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t c = 0; c < names.size(); ++c) obj[names[c]] = row[c];
      doc.push_back(obj);
    }
    return doc.dump(2) + "\n";
  }
  std::string doc;
  for (std::size_t c = 0; c < names.size(); ++c) doc += (c ? "," : "") + names[c];
  doc += "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) doc += (c ? "," : "") + format_raw(row[c]);
    doc += "\n";
  }
  return doc;
}

std::string cmd_figure(const RunConfig& cfg) {
  if (cfg.target == "fig1") {
    const std::int64_t n = cfg.law_flags.n.value_or(20);
    const auto ps = linear_grid(cfg.grid_min > 0 ? cfg.grid_min : 0.05, cfg.grid_max > 0 ? cfg.grid_max : 0.95,
                                cfg.points > 0 ? cfg.points : 19);
    const auto bounds = parallel_map<double>(ps.size(), cfg.workers, [&](std::size_t i) {
      return thm1a_bound(KnSpec(make_geometric(ps[i]), n), cfg.tol).bound;
    });
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < ps.size(); ++i) rows.push_back({ps[i], bounds[i]});
    return emit_columns(cfg, {"p", "thm1a_bound"}, rows);
  }
  const auto as = linear_grid(cfg.grid_min, cfg.grid_max > 0 ? cfg.grid_max : 2.0, cfg.points > 0 ? cfg.points : 41);
  std::vector<std::vector<double>> rows;
  for (double a : as) rows.push_back({a, gumbel_eq6_bound(20, a), gumbel_eq6_bound(100, a)});
  return emit_columns(cfg, {"a", "bound_n20", "bound_n100"}, rows);
}

// ---- verify --------------------------------------------------------------

struct CheckRow {
  std::string check;
  std::string point;
  double bound = 0.0;
  double reference = 0.0;  // certified TV upper end, or empirical estimate minus radius
  bool pass = false;
};

std::string discrete_label(double p, std::int64_t n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "geometric p=%g n=%lld", p, static_cast<long long>(n));
  return buf;
}

const std::vector<double> kVerifyP = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
const std::vector<std::int64_t> kVerifyN = {5, 10, 20, 50};

struct ContinuousPoint {
  std::string kind;
  std::int64_t n;
  std::int64_t ell;
  double a;
};

const std::vector<ContinuousPoint> kVerifyContinuous = {
    {"uniform", 8, 1, 0.05}, {"uniform", 10, 2, 0.1}, {"gumbel", 10, 1, 0.5}, {"gumbel", 12, 2, 0.3}};

std::vector<CheckRow> verify_discrete_point(const RunConfig& cfg, double p, std::int64_t n) {
  constexpr double tail_tol = 1e-12;
  const KnSpec spec(make_geometric(p), n);
  const TruncatedPMF kn = kn_full_pmf(spec, tail_tol);
  const KnMoments m = kn_moments(spec, cfg.tol);
  const std::string label = discrete_label(p, n);
  std::vector<CheckRow> rows;
  auto add = [&](const std::string& name, double bound, const TruncatedPMF& approx) {
    const TvInterval tv = tv_distance(kn, approx);
    rows.push_back({name, label, bound, tv.hi, bound >= tv.hi});
  };
  const BoundReport a = thm1a_bound(spec, cfg.tol);
  const TruncatedPMF log_alpha = logarithmic_law(a.params.at("alpha"), tail_tol);
  add("thm1a", a.bound * cfg.fault_factor, log_alpha);
  if (n >= 4) {
    const BoundReport b = thm1b_bound(m);
    add("thm1b", b.bound * cfg.fault_factor, logarithmic_law(b.params.at("beta"), tail_tol));
  }
  const BoundReport c = thm2_poisson_bound(m);
  add("thm2", c.bound * cfg.fault_factor, poisson_law(c.params.at("lambda"), tail_tol));
  if (cfg.mc_samples > 0) {
    const EmpiricalPMF emp = simulate([&spec](RngStream& rng) { return sample_kn(spec, rng); }, cfg.mc_samples,
                                      cfg.seed, cfg.workers);
    const double estimate = empirical_tv(emp, log_alpha).estimate;
    const double radius = empirical_tv(emp, kn).radius;
    const double bound = a.bound * cfg.fault_factor;
    rows.push_back({"thm1a_mc", label, bound, estimate - radius, estimate <= bound + radius});
  }
  return rows;
}

std::vector<CheckRow> verify_continuous_point(const RunConfig& cfg, const ContinuousPoint& pt) {
  const ContinuousLaw law = pt.kind == "uniform" ? make_uniform(1.0) : make_gumbel();
  const NearOrderSpec spec(law, pt.n, pt.ell, pt.a);
  const BoundReport r = thm3_bound(spec);
  const TruncatedPMF exact = near_order_count_pmf(spec);
  const TruncatedPMF nb = negbin_law(static_cast<double>(pt.ell), r.params.at("beta"), 1e-12);
  const TvInterval tv = tv_distance(exact, nb);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s n=%lld ell=%lld a=%g", pt.kind.c_str(), static_cast<long long>(pt.n),
                static_cast<long long>(pt.ell), pt.a);
  std::vector<CheckRow> rows;
  const double bound = r.bound * cfg.fault_factor;
  rows.push_back({"thm3", buf, bound, tv.hi, bound >= tv.hi});
  if (cfg.mc_samples > 0) {
    const EmpiricalPMF emp = simulate([&spec](RngStream& rng) { return sample_kn_al(spec, rng); }, cfg.mc_samples,
                                      cfg.seed, cfg.workers);
    const double estimate = empirical_tv(emp, nb).estimate;
    const double radius = empirical_tv(emp, exact).radius;
    rows.push_back({"thm3_mc", buf, bound, estimate - radius, estimate <= bound + radius});
  }
  return rows;
}

std::string cmd_verify(const RunConfig& cfg, bool& all_pass) {
  const std::size_t discrete = kVerifyP.size() * kVerifyN.size();
  const std::size_t total = discrete + kVerifyContinuous.size();
  RunConfig inner = cfg;
  inner.workers = 1;  // parallelism is across grid points
  const auto groups = parallel_map<std::vector<CheckRow>>(total, cfg.workers, [&](std::size_t i) {
    if (i < discrete) return verify_discrete_point(inner, kVerifyP[i / kVerifyN.size()], kVerifyN[i % kVerifyN.size()]);
    return verify_continuous_point(inner, kVerifyContinuous[i - discrete]);
  });
  all_pass = true;
  std::vector<CheckRow> rows;
  for (const auto& g : groups) rows.insert(rows.end(), g.begin(), g.end());
  for (const auto& r : rows) all_pass = all_pass && r.pass;
  if (cfg.format == "json") {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"check", r.check}, {"point", r.point}, {"bound", r.bound}, {"reference", r.reference},
                     {"status", r.pass ? "pass" : "fail"}});
    }
    return doc.dump(2) + "\n";
  }
  std::string doc = "check,point,bound,reference,status\n";
  for (const auto& r : rows) {
    doc += r.check + "," + r.point + "," + format_raw(r.bound) + "," + format_raw(r.reference) + "," +
           (r.pass ? "pass" : "fail") + "\n";
  }
  return doc;
}

// ---- simulate ------------------------------------------------------------

std::string cmd_simulate(const RunConfig& cfg) {
  const AnyLaw law = config_law(cfg);
  const std::int64_t n = require_n(cfg);
  Sampler sampler;
  if (cfg.target == "kn_al") {
    sampler = [spec = NearOrderSpec(require_continuous(law), n, cfg.ell, require_a(cfg))](RngStream& rng) {
      return sample_kn_al(spec, rng);
    };
  } else if (cfg.target == "kn_star") {
    sampler = [s = std::make_shared<KnStarSampler>(KnSpec(require_discrete(law), n), cfg.tol)](RngStream& rng) {
      return (*s)(rng);
    };
  } else {
    sampler = [spec = KnSpec(require_discrete(law), n)](RngStream& rng) { return sample_kn(spec, rng); };
  }
  const EmpiricalPMF emp = simulate(sampler, cfg.mc_samples, cfg.seed, cfg.workers);
  if (cfg.format == "json") {
    json doc;
    doc["samples"] = emp.sample_size();
    doc["seed"] = cfg.seed;
    json counts = json::array();
    for (const auto& [k, c] : emp.counts()) counts.push_back({{"k", k}, {"count", c}});
    doc["counts"] = counts;
    return doc.dump(2) + "\n";
  }
  std::string doc = "k,count,frequency\n";
  for (const auto& [k, c] : emp.counts()) {
    doc += std::to_string(k) + "," + std::to_string(c) + "," + format_raw(emp.frequency(k)) + "\n";
  }
  return doc;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string(kSeedEnvVar) + " must be a non-negative integer");
    }
  }
  return kDefaultSeed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "Series truncation tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "Write the document to this file instead of stdout");
  sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
}

void add_law(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--law", cfg.law, "Law: geometric, tabulated, gumbel, uniform, inline JSON or @file.json");
  sub->add_option("--p", cfg.law_flags.p, "Geometric success probability");
  sub->add_option("--mu", cfg.law_flags.mu, "Geometric with p = 1 - mu/n");
  sub->add_option("--b", cfg.law_flags.b, "Uniform(0, b) upper end");
  sub->add_option("--n", cfg.law_flags.n, "Sample size")->check(CLI::PositiveNumber);
}

void write_document(const RunConfig& cfg, const std::string& doc, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open --out file " + cfg.out_path);
  file << doc;
}

}  // namespace

nlohmann::json law_descriptor_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("cannot read law file " + arg.substr(1));
    return json::parse(in);
  }
  return json{{"kind", arg}};
}

AnyLaw parse_law(const nlohmann::json& descriptor, const LawFlags& flags) {
  if (!descriptor.is_object() || !descriptor.contains("kind")) throw DomainError("law descriptor needs a \"kind\"");
  const std::string kind = descriptor.at("kind").get<std::string>();
  auto number = [&](const char* key, const std::optional<double>& fallback) -> std::optional<double> {
    if (descriptor.contains(key)) return descriptor.at(key).get<double>();
    return fallback;
  };
  if (kind == "geometric") {
    if (const auto p = number("p", flags.p)) return make_geometric(*p);
    if (const auto mu = number("mu", flags.mu)) {
      if (!flags.n) throw DomainError("geometric with mu needs --n");
      return make_geometric_complement(*mu / static_cast<double>(*flags.n));
    }
    throw DomainError("geometric law needs p or mu");
  }
  if (kind == "tabulated") {
    if (!descriptor.contains("weights")) throw DomainError("tabulated law needs \"weights\"");
    const auto weights = descriptor.at("weights").get<std::vector<double>>();
    return make_tabulated(weights);
  }
  if (kind == "gumbel") return make_gumbel();
  if (kind == "uniform") {
    const auto b = number("b", flags.b);
    if (!b) throw DomainError("uniform law needs b");
    return make_uniform(*b);
  }
  throw DomainError("unknown law kind \"" + kind + "\"");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bounds and simulations for ties at the sample maximum and near order statistics", "maxties"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "Evaluate one bound");
  bound->add_option("theorem", cfg.target, "thm1a, thm1b, thm2, thm3 or thm4")
      ->required()
      ->check(CLI::IsMember({"thm1a", "thm1b", "thm2", "thm3", "thm4"}));
  add_law(bound, cfg);
  bound->add_option("--ell", cfg.ell, "Order statistic index (thm3, thm4)");
  bound->add_option("--a", cfg.a, "Distance below the order statistic (thm3)");
  bound->add_option("--eq", cfg.eq, "E[Q] of the mixing law (thm4)");
  bound->add_option("--eq2", cfg.eq2, "E[Q^2] of the mixing law (thm4)");
  bound->add_flag("--raw", cfg.raw, "Full precision instead of 3-decimal rounding");

  auto* table = app.add_subcommand("table1", "Poisson bounds for geometric laws with p = 1 - mu/n");
  table->add_flag("--raw", cfg.raw, "Full precision, no dash cells");

  auto* figure = app.add_subcommand("figure", "Plot data: fig1 (thm1a over p) or fig2 (Gumbel, over a)");
  figure->add_option("which", cfg.target)->required()->check(CLI::IsMember({"fig1", "fig2"}));
  figure->add_option("--n", cfg.law_flags.n, "Sample size for fig1 (default 20)");
  figure->add_option("--min", cfg.grid_min, "Grid start (fig1 p: 0.05, fig2 a: 0)");
  figure->add_option("--max", cfg.grid_max, "Grid end (fig1 p: 0.95, fig2 a: 2)");
  figure->add_option("--points", cfg.points, "Grid size (fig1: 19, fig2: 41)");

  auto* verify = app.add_subcommand("verify", "Check bounds against exact and simulated total variation");
  cfg.mc_samples = 20000;
  verify->add_option("--mc-samples", cfg.mc_samples, "Monte-Carlo samples per grid point (0 skips)");
  verify->add_option("--inject-fault", cfg.fault_factor, "Multiply every bound (negative control)")->group("");

  auto* sim = app.add_subcommand("simulate", "Empirical law of K_n, K_n* or the near-order count");
  sim->add_option("quantity", cfg.target)->required()->check(CLI::IsMember({"kn", "kn_star", "kn_al"}));
  add_law(sim, cfg);
  sim->add_option("--ell", cfg.ell, "Order statistic index (kn_al)");
  sim->add_option("--a", cfg.a, "Distance below the order statistic (kn_al)");
  sim->add_option("--mc-samples", cfg.mc_samples, "Number of draws");

  for (auto* sub : {bound, table, figure, verify, sim}) add_common(sub, cfg);
  for (auto* sub : {verify, sim}) sub->add_option("--seed", cfg.seed, "RNG seed (default from MAXTIES_SEED)");

  try {
    cfg.seed = default_seed();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string doc;
    int code = kExitOk;
    if (bound->parsed()) {
      doc = cmd_bound(cfg);
    } else if (table->parsed()) {
      doc = cmd_table1(cfg);
    } else if (figure->parsed()) {
      doc = cmd_figure(cfg);
    } else if (verify->parsed()) {
      bool all_pass = false;
      doc = cmd_verify(cfg, all_pass);
      if (!all_pass) code = kExitVerifyFailed;
    } else {
      doc = cmd_simulate(cfg);
    }
    write_document(cfg, doc, out);
    if (code == kExitVerifyFailed) err << "verification failed\n";
    return code;
  } catch (const DegenerateParameterError& e) {
    err << "degenerate parameter: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (achieved " << format_raw(e.achieved()) << ")\n";
    return kExitNumeric;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: bad law descriptor: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace maxties
