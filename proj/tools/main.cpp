#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "surface_census/enumerate.hpp"
#include "surface_census/errors.hpp"
#include "surface_census/exact.hpp"
#include "surface_census/io.hpp"
#include "surface_census/montecarlo.hpp"
#include "surface_census/stats.hpp"
#include "surface_census/surface.hpp"

namespace sc = surface_census;

namespace {

constexpr int kMaxExactOrder = 16;

struct Options {
  int n = 0;
  int k = 3;
  int l = 4;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = not set; resolved from env or defaulted to 1
  std::string out;
  std::string format = "json";
  std::string law = "glued";
  std::string config_path;
  bool quick = false;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path,
                  "JSON file with defaults for the flags below (flags win)");
  cmd->add_option("--out", opt.out, "write the report here instead of stdout");
  cmd->add_option("--format", opt.format, "json or csv (default json)");
}

// Fills every option the command line left untouched from the config file.
void merge_config(const CLI::App& cmd, Options& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in)
    throw sc::InvalidParams("cannot read config file " + opt.config_path);
  sc::Json cfg;
  try {
    cfg = sc::Json::parse(in);
  } catch (const sc::Json::exception& e) {
    throw sc::InvalidParams("config file " + opt.config_path + ": " + e.what());
  }
  auto take = [&](const char* flag, const char* key, auto& target) {
    if (cmd.count(flag) == 0 && cfg.contains(key)) {
      try {
        target = cfg.at(key).get<std::decay_t<decltype(target)>>();
      } catch (const sc::Json::exception&) {
        throw sc::InvalidParams(std::string("config key '") + key +
                                "' has the wrong type");
      }
    }
  };
  take("--n", "n", opt.n);
  take("--k", "k", opt.k);
  take("--l", "l", opt.l);
  take("--samples", "samples", opt.samples);
  take("--seed", "seed", opt.seed);
  take("--threads", "threads", opt.threads);
  take("--out", "out", opt.out);
  take("--format", "format", opt.format);
  take("--law", "law", opt.law);
}

void resolve_threads(Options& opt) {
  if (opt.threads != 0) {
    if (opt.threads < 0) throw sc::InvalidParams("threads must be positive");
    return;
  }
  if (const char* env = std::getenv("SURFACE_CENSUS_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw sc::InvalidParams(
          "SURFACE_CENSUS_THREADS must be a positive integer, got '" +
          std::string(env) + "'");
    opt.threads = static_cast<int>(value);
    return;
  }
  opt.threads = 1;
}

void require_n(const Options& opt) {
  if (opt.n <= 0)
    throw sc::InvalidParams("missing --n (or a config file providing it)");
}

void check_format(const Options& opt) {
  if (opt.format != "json" && opt.format != "csv")
    throw sc::InvalidParams("format must be json or csv, got '" + opt.format +
                            "'");
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty())
    std::cout << text;
  else
    sc::write_text_file(opt.out, text);
}

std::string dump(const sc::Json& report) { return report.dump(2) + "\n"; }

// ---- csv helpers (shared section,key,value layout) ----

class CsvBuilder {
 public:
  CsvBuilder() : text_("section,key,value\n") {}

  void row(const std::string& section, const std::string& key,
           const std::string& value) {
    text_ += sc::csv_field(section);
    text_ += ',';
    text_ += sc::csv_field(key);
    text_ += ',';
    text_ += sc::csv_field(value);
    text_ += '\n';
  }

  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

sc::Json decimal_array(const std::vector<sc::Rational>& values) {
  sc::Json arr = sc::Json::array();
  for (const auto& value : values) arr.push_back(sc::to_double(value));
  return arr;
}

// ---- subcommands ----

int cmd_sample(const Options& opt) {
  require_n(opt);
  check_format(opt);
  if (opt.samples == 0) throw sc::InvalidParams("samples must be positive");
  const sc::SurfaceParams params = sc::validate_params(opt.n, opt.k);

  sc::RunConfig config;
  config.n = opt.n;
  config.k = opt.k;
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.threads = opt.threads;
  const sc::McResult result = sc::run_mc(config);

  if (opt.format == "json") {
    emit(opt, dump(sc::sample_report_json(config, result, params)));
  } else {
    emit(opt, sc::sample_report_csv(config, result, params));
  }
  return 0;
}

int cmd_exact(const Options& opt) {
  require_n(opt);
  check_format(opt);
  if (opt.l < 1 || opt.l > kMaxExactOrder)
    throw sc::InvalidParams("moment order must be in 1.." +
                            std::to_string(kMaxExactOrder) + ", got " +
                            std::to_string(opt.l));
  if (opt.n < 3)
    throw sc::InvalidParams(
        "the alternating-group law needs n >= 3, got n = " +
        std::to_string(opt.n));

  const sc::MomentSet symmetric =
      sc::moment_set_from_factorial(sc::factorial_moments_sigma(opt.n, opt.l));
  const sc::MomentSet alternating =
      sc::moment_set_from_factorial(sc::factorial_moments_tau(opt.n, opt.l));
  const sc::AsymptoticMoments asymptotic =
      sc::asymptotic_moments(static_cast<double>(opt.n), std::min(opt.l, 4));

  if (opt.format == "json") {
    auto with_decimals = [&](const sc::MomentSet& set) {
      sc::Json out = sc::to_json(set);
      out["factorial_decimal"] = decimal_array(set.factorial);
      out["raw_decimal"] = decimal_array(set.raw);
      out["central_decimal"] = decimal_array(set.central);
      return out;
    };
    sc::Json report = sc::Json::object();
    report["command"] = "exact";
    report["n"] = opt.n;
    report["order"] = opt.l;
    report["symmetric"] = with_decimals(symmetric);
    report["alternating"] = with_decimals(alternating);
    report["asymptotic"] = sc::to_json(asymptotic);
    emit(opt, dump(report));
    return 0;
  }

  CsvBuilder csv;
  auto rows = [&](const std::string& group, const sc::MomentSet& set) {
    for (int m = 1; m <= set.order; ++m) {
      const std::string suffix = std::to_string(m);
      csv.row(group, "factorial" + suffix,
              sc::rational_to_string(set.factorial[m - 1]));
      csv.row(group, "raw" + suffix, sc::rational_to_string(set.raw[m - 1]));
      csv.row(group, "central" + suffix,
              sc::rational_to_string(set.central[m - 1]));
      csv.row(group + "_decimal", "factorial" + suffix,
              sc::double_to_string(sc::to_double(set.factorial[m - 1])));
      csv.row(group + "_decimal", "raw" + suffix,
              sc::double_to_string(sc::to_double(set.raw[m - 1])));
      csv.row(group + "_decimal", "central" + suffix,
              sc::double_to_string(sc::to_double(set.central[m - 1])));
    }
  };
  csv.row("params", "n", std::to_string(opt.n));
  csv.row("params", "order", std::to_string(opt.l));
  rows("symmetric", symmetric);
  rows("alternating", alternating);
  const char* labels[] = {"mean", "central2", "central3", "central4"};
  for (std::size_t i = 0; i < asymptotic.entries.size(); ++i)
    csv.row("asymptotic", labels[i],
            sc::double_to_string(asymptotic.entries[i].value));
  emit(opt, csv.str());
  return 0;
}

int cmd_enumerate(const Options& opt) {
  require_n(opt);
  check_format(opt);
  if (opt.law != "glued" && opt.law != "alternating")
    throw sc::InvalidParams("law must be glued or alternating, got '" +
                            opt.law + "'");

  sc::DistributionPair pair;
  std::optional<int> k;
  if (opt.law == "glued") {
    pair = sc::exact_ab_distribution(opt.n, opt.k);
    k = opt.k;
  } else {
    pair = sc::exact_tau_distribution(opt.n);
  }

  if (opt.format == "json") {
    sc::Json report = sc::Json::object();
    report["command"] = "enumerate";
    report["law"] = opt.law;
    report["cycles"] = sc::to_json(pair.cycles, k);
    report["classes"] = sc::to_json(pair.classes);
    emit(opt, dump(report));
    return 0;
  }

  CsvBuilder csv;
  csv.row("params", "n", std::to_string(opt.n));
  if (k) csv.row("params", "k", std::to_string(*k));
  csv.row("params", "law", opt.law);
  for (const auto& [t, p] : pair.cycles.probs)
    csv.row("cycle_probs", std::to_string(t), sc::rational_to_string(p));
  for (const auto& [type, p] : pair.classes.probs) {
    std::string key;
    for (std::size_t i = 0; i < type.parts.size(); ++i) {
      if (i > 0) key += '+';
      key += std::to_string(type.parts[i]);
    }
    csv.row("class_probs", key, sc::rational_to_string(p));
  }
  emit(opt, csv.str());
  return 0;
}

int cmd_tv(const Options& opt) {
  require_n(opt);
  check_format(opt);
  const sc::Rational tv = sc::tv_distance(opt.n, opt.k);
  if (opt.format == "json") {
    sc::Json report = sc::Json::object();
    report["command"] = "tv";
    report["n"] = opt.n;
    report["k"] = opt.k;
    report["tv"] = sc::rational_to_string(tv);
    report["tv_decimal"] = sc::to_double(tv);
    emit(opt, dump(report));
    return 0;
  }
  CsvBuilder csv;
  csv.row("params", "n", std::to_string(opt.n));
  csv.row("params", "k", std::to_string(opt.k));
  csv.row("tv", "rational", sc::rational_to_string(tv));
  csv.row("tv", "decimal", sc::double_to_string(sc::to_double(tv)));
  emit(opt, csv.str());
  return 0;
}

int cmd_tails(const Options& opt) {
  require_n(opt);
  check_format(opt);
  const sc::DistributionPair pair = sc::exact_ab_distribution(opt.n, opt.k);
  const int max_t = pair.cycles.probs.rbegin()->first;

  if (opt.format == "json") {
    sc::Json rows = sc::Json::array();
    for (int t = 1; t <= max_t; ++t) {
      const sc::Rational exact = pair.cycles.tail(t);
      const sc::Rational bound = sc::tail_bound_ab(opt.n, t);
      sc::Json row = sc::Json::object();
      row["t"] = t;
      row["exact"] = sc::rational_to_string(exact);
      row["exact_decimal"] = sc::to_double(exact);
      row["bound"] = sc::rational_to_string(bound);
      row["bound_decimal"] = sc::to_double(bound);
      row["holds"] = exact <= bound;
      rows.push_back(std::move(row));
    }
    sc::Json report = sc::Json::object();
    report["command"] = "tails";
    report["n"] = opt.n;
    report["k"] = opt.k;
    report["rows"] = std::move(rows);
    emit(opt, dump(report));
    return 0;
  }

  CsvBuilder csv;
  csv.row("params", "n", std::to_string(opt.n));
  csv.row("params", "k", std::to_string(opt.k));
  for (int t = 1; t <= max_t; ++t) {
    const sc::Rational exact = pair.cycles.tail(t);
    const sc::Rational bound = sc::tail_bound_ab(opt.n, t);
    csv.row("exact", std::to_string(t), sc::rational_to_string(exact));
    csv.row("bound", std::to_string(t), sc::rational_to_string(bound));
    csv.row("holds", std::to_string(t), exact <= bound ? "true" : "false");
  }
  emit(opt, csv.str());
  return 0;
}

// ---- verify ----

struct CheckOutcome {
  std::string name;
  std::string error;  // empty = passed
};

CheckOutcome run_check(const std::string& name,
                       const std::function<std::string()>& body) {
  CheckOutcome outcome;
  outcome.name = name;
  try {
    outcome.error = body();
  } catch (const std::exception& e) {
    outcome.error = e.what();
  }
  return outcome;
}

std::string check_gf_identities(bool quick) {
  const int max_n = quick ? 60 : 200;
  for (int n = 1; n <= max_n; ++n) {
    if (sc::g_sigma(n)(2) != sc::Rational(n + 1))
      return "symmetric generating function misses n+1 at x=2, n=" +
             std::to_string(n);
    if (n >= 3 && sc::g_tau(n)(2) != sc::Rational(n + 1))
      return "alternating generating function misses n+1 at x=2, n=" +
             std::to_string(n);
  }
  return "";
}

std::string check_moment_routes(bool quick) {
  const int max_n = quick ? 20 : 30;
  for (int n = 1; n <= max_n; ++n) {
    const auto via_indicator = sc::factorial_moments_sigma(n, 4);
    const auto via_gf = sc::factorial_moments_from_gf(sc::g_sigma(n), 4);
    if (via_indicator != via_gf)
      return "cycle-indicator and coefficient routes disagree at n = " +
             std::to_string(n);
  }
  return "";
}

std::string check_tau_routes(bool quick) {
  const int max_n = quick ? 9 : 11;
  for (int n = 3; n <= max_n; ++n) {
    const auto via_gf = sc::factorial_moments_tau(n, 4);
    const auto via_classes =
        sc::brute_moments(sc::exact_tau_distribution(n).cycles, 4).factorial;
    if (via_gf != via_classes)
      return "polynomial and class-enumeration routes disagree at n = " +
             std::to_string(n);
  }
  return "";
}

std::string check_tail_dominance(bool quick) {
  std::vector<std::pair<int, int>> cases = {{6, 3}, {8, 4}};
  if (!quick) {
    cases.emplace_back(12, 3);
    cases.emplace_back(12, 6);
  }
  for (const auto& [n, k] : cases) {
    const sc::DistributionPair pair = sc::exact_ab_distribution(n, k);
    sc::Rational mass = 0;
    for (const auto& [t, p] : pair.cycles.probs) mass += p;
    if (mass != 1)
      return "distribution mass != 1 at (" + std::to_string(n) + "," +
             std::to_string(k) + ")";
    for (int t = 1; t <= n; ++t) {
      if (pair.cycles.tail(t) > sc::tail_bound_ab(n, t))
        return "tail bound violated at (" + std::to_string(n) + "," +
               std::to_string(k) + "), t = " + std::to_string(t);
    }
  }
  return "";
}

std::string check_glue_traces(bool quick) {
  std::vector<std::pair<int, int>> cases = {{60, 3}, {60, 4}};
  if (!quick) {
    cases.emplace_back(600, 3);
    cases.emplace_back(600, 4);
  }
  const int runs = quick ? 500 : 2500;
  sc::Rng rng(20240817);
  for (const auto& [n, k] : cases) {
    const int parity = (n / 2 + (k - 1) * (n / k)) % 2;
    for (int r = 0; r < runs; ++r) {
      const sc::HeadRule rule =
          r % 2 == 0 ? sc::HeadRule::kLowestLabel : sc::HeadRule::kRandom;
      const sc::GlueTrace trace = sc::instrumented_glue(n, k, rng, rule);
      if ((n - trace.final_cycles) % 2 != parity)
        return "cycle-count parity violated at (" + std::to_string(n) + "," +
               std::to_string(k) + ")";
    }
  }
  return "";
}

std::string check_sampler_agreement() {
  const int n = 12;
  const int k = 3;
  sc::Rng rng_fast(99);
  sc::Rng rng_slow(99);
  sc::Rng rng_glue(99);
  sc::CycleSampler sampler(n, k);
  const sc::Permutation beta = sc::make_beta(n, k);
  for (int draw = 0; draw < 300; ++draw) {
    const int fast = sampler.sample(rng_fast);
    const int slow =
        sc::cycle_count(sc::compose(sc::sample_matching(n, rng_slow), beta));
    const sc::GlueTrace trace = sc::instrumented_glue(n, k, rng_glue);
    if (fast != slow || trace.final_cycles != slow)
      return "samplers disagree on draw " + std::to_string(draw);
  }
  return "";
}

std::string check_tv_range() {
  const sc::Rational tv = sc::tv_distance(12, 3);
  if (tv < 0 || tv > 1) return "tv(12,3) outside [0,1]";
  return "";
}

std::string check_sample_distribution() {
  sc::RunConfig config;
  config.n = 12;
  config.k = 3;
  config.samples = 200000;
  config.seed = 42;
  config.threads = 4;
  const sc::McResult result = sc::run_mc(config);
  const auto exact = sc::exact_ab_distribution(12, 3).cycles;
  const sc::ChiSquareResult test =
      sc::chi_square_vs_exact(result.histogram, exact);
  if (test.p_value <= 1e-3)
    return "chi-square p = " + sc::double_to_string(test.p_value) +
           " at (12,3)";
  return "";
}

int cmd_verify(const Options& opt) {
  const bool quick = opt.quick;
  std::vector<CheckOutcome> outcomes;
  outcomes.push_back(run_check("generating-function identities",
                               [&] { return check_gf_identities(quick); }));
  outcomes.push_back(run_check("symmetric moment routes agree",
                               [&] { return check_moment_routes(quick); }));
  outcomes.push_back(run_check("alternating moment routes agree",
                               [&] { return check_tau_routes(quick); }));
  outcomes.push_back(run_check("exact tails dominated by bound",
                               [&] { return check_tail_dominance(quick); }));
  outcomes.push_back(run_check("glue traces keep their invariants",
                               [&] { return check_glue_traces(quick); }));
  outcomes.push_back(
      run_check("samplers agree pointwise", check_sampler_agreement));
  if (!quick) {
    outcomes.push_back(run_check("tv distance in range", check_tv_range));
    outcomes.push_back(run_check("sampled law matches enumeration",
                                 check_sample_distribution));
  }

  std::string text;
  bool failed = false;
  for (const auto& outcome : outcomes) {
    if (outcome.error.empty()) {
      text += "ok   " + outcome.name + "\n";
    } else {
      failed = true;
      text += "FAIL " + outcome.name + ": " + outcome.error + "\n";
    }
  }
  text += failed ? "verify: FAILED\n" : "verify: all checks passed\n";
  emit(opt, text);
  return failed ? 4 : 0;
}

int dispatch(const CLI::App& app, const CLI::App* cmd, Options& opt) {
  merge_config(*cmd, opt);
  resolve_threads(opt);
  const std::string name = cmd->get_name();
  if (name == "sample") return cmd_sample(opt);
  if (name == "exact") return cmd_exact(opt);
  if (name == "enumerate") return cmd_enumerate(opt);
  if (name == "tv") return cmd_tv(opt);
  if (name == "tails") return cmd_tails(opt);
  if (name == "verify") return cmd_verify(opt);
  (void)app;
  throw sc::InvalidParams("unknown subcommand " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "surface_census: cycle statistics of random orientable glued surfaces"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* c_sample = app.add_subcommand(
      "sample", "Monte Carlo cycle counts: moments, tails, surface summary");
  c_sample->add_option("--n", opt.n, "number of polygon edges before glueing");
  c_sample->add_option("--k", opt.k, "polygon size (default 3)");
  c_sample->add_option("--samples", opt.samples, "number of draws");
  c_sample->add_option("--seed", opt.seed, "RNG seed (default 0)");
  c_sample->add_option("--threads", opt.threads,
                       "worker threads (default: SURFACE_CENSUS_THREADS or 1)");
  add_common_flags(c_sample, opt);

  CLI::App* c_exact = app.add_subcommand(
      "exact", "Exact cycle-count moments for the symmetric and alternating "
               "group laws, with large-n values");
  c_exact->add_option("--n", opt.n, "group degree");
  c_exact->add_option("--l", opt.l, "highest moment order (default 4)");
  add_common_flags(c_exact, opt);

  CLI::App* c_enumerate = app.add_subcommand(
      "enumerate", "Exact cycle-count and class distributions by exhaustive "
                   "enumeration");
  c_enumerate->add_option("--n", opt.n, "number of polygon edges");
  c_enumerate->add_option("--k", opt.k, "polygon size (default 3)");
  c_enumerate->add_option("--law", opt.law,
                          "glued (default) or alternating");
  add_common_flags(c_enumerate, opt);

  CLI::App* c_tv = app.add_subcommand(
      "tv", "Exact total-variation distance between the glued law and the "
            "uniform alternating-group law");
  c_tv->add_option("--n", opt.n, "number of polygon edges");
  c_tv->add_option("--k", opt.k, "polygon size (default 3)");
  add_common_flags(c_tv, opt);

  CLI::App* c_tails = app.add_subcommand(
      "tails", "Exact tail probabilities against the analytic upper bound");
  c_tails->add_option("--n", opt.n, "number of polygon edges");
  c_tails->add_option("--k", opt.k, "polygon size (default 3)");
  add_common_flags(c_tails, opt);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Run the library's cross-check battery and exit nonzero on "
                "any violation");
  c_verify->add_flag("--quick", opt.quick, "smaller ranges, a few seconds");
  add_common_flags(c_verify, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* cmd = app.get_subcommands().front();
  try {
    return dispatch(app, cmd, opt);
  } catch (const sc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (full enumeration would need "
              << e.required().str() << " states)\n";
    return 3;
  } catch (const sc::RegimeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sc::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sc::InternalInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const sc::InconsistentInvariants& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
