#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "defring/dump.hpp"
#include "defring/verifier.hpp"

using namespace defring;
using charts::Gauge;
using monodromy::Level;

namespace {

constexpr int kPass = 0, kFail = 1, kConfig = 2;

Gauge gauge_arg(const std::string& text) {
  auto g = charts::parse_gauge(text);
  if (!g) throw verifier::ConfigError("unknown shape '" + text + "' (expected t21, t12, t12s, t30, t03, t03s or t21s)");
  return *g;
}

long to_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw verifier::ConfigError(what + ": '" + text + "' is not an integer");
  return v;
}

// "7" sets the default; "t21=7" or "t30=11,13" sets one shape (one value per
// embedding allowed).
void apply_kappa(verifier::RunConfig& cfg, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    cfg.kappa_default = to_long(spec, "--kappa");
    return;
  }
  Gauge g = gauge_arg(spec.substr(0, eq));
  std::vector<long> values;
  std::stringstream ss(spec.substr(eq + 1));
  for (std::string item; std::getline(ss, item, ',');) values.push_back(to_long(item, "--kappa"));
  if (values.empty()) throw verifier::ConfigError("--kappa " + spec + ": no values");
  cfg.kappa[g] = values;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw verifier::ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string params_str(const verifier::Params& ps) {
  std::string s;
  for (const auto& [k, v] : ps) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

struct VerifyArgs {
  std::string group = "all";
  std::string config;
  std::optional<long> p, f, seed;
  std::optional<int> threads;
  std::optional<std::string> torus;
  std::vector<std::string> kappa;
  std::string json, junit;
  bool verbose = false;
};

int run_verify(const VerifyArgs& a) {
  verifier::RunConfig cfg;
  try {
    cfg = a.config.empty() ? verifier::default_config() : verifier::load_config(a.config);
    if (a.p) cfg.p = *a.p;
    if (a.f) {
      if (*a.f < 1) throw verifier::ConfigError("--f must be positive");
      cfg.f = static_cast<std::size_t>(*a.f);
    }
    if (a.seed) {
      if (*a.seed < 0) throw verifier::ConfigError("--seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(*a.seed);
    }
    if (a.threads) cfg.threads = *a.threads;
    if (a.torus) {
      if (*a.torus == "split")
        cfg.torus = chars::Torus::split;
      else if (*a.torus == "nonsplit")
        cfg.torus = chars::Torus::nonsplit;
      else
        throw verifier::ConfigError("--torus must be split or nonsplit");
    }
    for (const auto& k : a.kappa) apply_kappa(cfg, k);
    if (!a.json.empty()) cfg.json_out = a.json;
    if (!a.junit.empty()) cfg.junit_out = a.junit;
    const auto& group = verifier::checks_in_group(a.group);
    std::set<std::string> chosen;
    for (const auto& id : group)
      if (cfg.checks.count(id)) chosen.insert(id);
    cfg.checks = chosen;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }

  std::map<std::string, double> seconds;
  const auto start = std::chrono::steady_clock::now();
  verifier::Report report = verifier::run_all(cfg, &seconds);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<std::string, std::array<std::size_t, 3>> tally;
  for (const auto& e : report.entries) ++tally[e.id][static_cast<std::size_t>(e.verdict)];
  for (const auto& id : verifier::all_checks()) {
    if (!cfg.checks.count(id)) continue;
    const auto& t = tally[id];
    std::cout << std::left << std::setw(16) << id << " pass " << std::setw(5) << t[0] << " fail " << std::setw(4)
              << t[1] << " skip " << std::setw(4) << t[2] << std::fixed << std::setprecision(3) << seconds[id]
              << "s\n";
  }
  for (const auto& e : report.entries) {
    if (e.verdict == verifier::Verdict::fail || (a.verbose && e.verdict == verifier::Verdict::skip))
      std::cout << verifier::verdict_name(e.verdict) << " [" << e.id << "] " << e.anchor << " {" << params_str(e.params)
                << "} " << e.detail << "\n";
  }
  std::cout << (report.ok() ? "PASS" : "FAIL") << " " << report.entries.size() << " entries (" << report.count(verifier::Verdict::fail)
            << " failed, " << report.count(verifier::Verdict::skip) << " skipped) in " << std::fixed
            << std::setprecision(2) << total << "s\n";
  try {
    if (!cfg.json_out.empty()) write_file(cfg.json_out, report.json());
    if (!cfg.junit_out.empty()) write_file(cfg.junit_out, report.junit("defring." + a.group, seconds));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kConfig;
  }
  return report.ok() ? kPass : kFail;
}

struct IdealArgs {
  std::string gauge, weight = "le30", order = "grevlex", chart;
  long p = 23, kappa = 7;
  bool symbolic = false, table = false, verbatim = false, compare = false;
};

monodromy::Config derivation_config(const IdealArgs& a) {
  monodromy::Config c;
  c.p = a.p;
  c.kappa = a.kappa;
  c.symbolic_p = a.symbolic;
  c.validate();
  return c;
}

TermOrder order_for(const Ideal& I, const std::string& name) {
  if (name == "grevlex") return TermOrder::grevlex(*I.roster());
  if (name == "lex") return TermOrder::lex(*I.roster());
  throw verifier::ConfigError("--order must be grevlex or lex");
}

DumpParams dump_params(const IdealArgs& a, Gauge g, const std::string& source) {
  DumpParams ps{{"p", a.symbolic ? std::string("symbolic") : std::to_string(a.p)},
                {"kappa", std::to_string(a.kappa)},
                {"shape", charts::gauge_name(g)},
                {"weight", a.weight},
                {"source", source}};
  if (!a.chart.empty()) ps.push_back({"chart", a.chart});
  return ps;
}

int run_dump_ideal(const IdealArgs& a) {
  Gauge g = gauge_arg(a.gauge);
  Level level = monodromy::parse_level(a.weight);
  monodromy::Config c = derivation_config(a);
  std::optional<Ideal> I;
  std::string source;
  if (!a.chart.empty()) {
    auto chart = charts::build_multichart(gauge_arg(a.chart), c.pmode());
    I = monodromy::k_ideal(chart, g, level, c);
    source = "pullback";
  } else if (a.table || a.verbatim) {
    I = monodromy::table_ideal(g, level, c, a.verbatim);
    source = a.verbatim ? "table-verbatim" : "table";
  } else {
    I = monodromy::derive_ideal(g, level, c);
    source = "derived";
  }
  std::cout << dump_ideal(*I, order_for(*I, a.order), dump_params(a, g, source));
  return kPass;
}

int run_derive(const IdealArgs& a) {
  Gauge g = gauge_arg(a.gauge);
  Level level = monodromy::parse_level(a.weight);
  monodromy::Config c = derivation_config(a);
  Ideal I = monodromy::derive_ideal(g, level, c);
  std::cout << dump_ideal(I, order_for(I, a.order), dump_params(a, g, "derived"));
  if (!a.compare) return kPass;
  Ideal T = monodromy::table_ideal(g, level, c);
  const bool same = ideal_equal(I, T);
  std::cout << "# appendix " << (same ? "match" : "mismatch") << "\n";
  if (!same) {
    for (const auto& t : T.generators())
      if (!I.contains(t)) std::cout << "# table generator not in derived ideal: " << t.str() << "\n";
    for (const auto& d : I.reduced_generators())
      if (!T.contains(d)) std::cout << "# derived generator not in table ideal: " << d.str() << "\n";
  }
  return same ? kPass : kFail;
}

struct ChartArgs {
  std::string gauge, chart, weight = "30";
  long p = 23;
  bool symbolic = false;
};

int run_dump_chart(const ChartArgs& a) {
  charts::PMode mode{a.p, a.symbolic};
  const std::string pstr = a.symbolic ? "symbolic" : std::to_string(a.p);
  if (!a.chart.empty()) {
    auto chart = charts::build_multichart(gauge_arg(a.chart), mode);
    TermOrder order = TermOrder::grevlex(*chart.roster);
    std::cout << dump_matrix(chart.psi_v3, order, {{"p", pstr}, {"chart", a.chart}, {"matrix", "psi*v^3"}});
    for (const auto& pr : chart.table) {
      std::cout << "# projection target=" << charts::gauge_name(pr.target) << " shift=" << pr.shift << "\n";
      const Roster& src = *pr.map.source();
      for (std::size_t i = 0; i < src.size(); ++i)
        std::cout << src.name(i) << " -> "
                  << canonical_polynomial(pr.map.image(i), TermOrder::grevlex(*pr.map.target())) << "\n";
    }
    return kPass;
  }
  Gauge g = gauge_arg(a.gauge);
  weyl::Weight lambda;
  if (a.weight == "30")
    lambda = {3, 0};
  else if (a.weight == "21")
    lambda = {2, 1};
  else
    throw verifier::ConfigError("--weight must be 30 or 21 for dump-chart");
  auto gc = charts::build_gauge(g, lambda, mode);
  std::cout << dump_matrix(gc.matrix, TermOrder::grevlex(*gc.roster),
                           {{"p", pstr}, {"shape", charts::gauge_name(g)}, {"weight", a.weight}});
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation-ring ideal verifier"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the verification ledger");
  verify->add_option("group", va.group, "all, weyl, chars, monodromy or props")
      ->check(CLI::IsMember({"all", "weyl", "chars", "monodromy", "props"}));
  verify->add_option("--config", va.config, "TOML configuration file");
  verify->add_option("--p", va.p, "prime p > 5");
  verify->add_option("--f", va.f, "number of embeddings");
  verify->add_option("--kappa", va.kappa, "default value, or shape=value[,value...]")->take_all();
  verify->add_option("--seed", va.seed, "random seed");
  verify->add_option("--threads", va.threads, "worker threads (0: hardware concurrency)");
  verify->add_option("--torus", va.torus, "split or nonsplit");
  verify->add_option("--json", va.json, "write the JSON report here");
  verify->add_option("--junit", va.junit, "write a JUnit XML report here");
  verify->add_flag("--verbose", va.verbose, "also list skipped entries");

  IdealArgs ia;
  auto* dump_ideal_cmd = app.add_subcommand("dump-ideal", "Print an ideal in canonical form");
  dump_ideal_cmd->add_option("--gauge", ia.gauge, "shape label (the target shape with --chart)")->required();
  dump_ideal_cmd->add_option("--weight", ia.weight, "le30, 21 or 30");
  dump_ideal_cmd->add_option("--p", ia.p, "prime p > 5");
  dump_ideal_cmd->add_option("--kappa", ia.kappa, "structure constant");
  dump_ideal_cmd->add_option("--order", ia.order, "grevlex or lex");
  dump_ideal_cmd->add_option("--chart", ia.chart, "pull back along this multi-type chart (t21, t12, t12s)");
  dump_ideal_cmd->add_flag("--table", ia.table, "tabulated ideal instead of the derived one");
  dump_ideal_cmd->add_flag("--verbatim", ia.verbatim, "tabulated ideal before the sign corrections");
  dump_ideal_cmd->add_flag("--symbolic-p", ia.symbolic, "keep p as a ring variable");

  IdealArgs da;
  auto* derive = app.add_subcommand("derive", "Derive an ideal from the monodromy condition");
  derive->add_option("--gauge", da.gauge, "shape label")->required();
  derive->add_option("--weight", da.weight, "le30, 21 or 30")->required();
  derive->add_option("--p", da.p, "prime p > 5")->required();
  derive->add_option("--kappa", da.kappa, "structure constant")->required();
  derive->add_option("--order", da.order, "grevlex or lex");
  derive->add_flag("--symbolic-p", da.symbolic, "keep p as a ring variable");
  derive->add_flag("--compare-appendix", da.compare, "compare with the tabulated ideal");

  ChartArgs ca;
  auto* dump_chart = app.add_subcommand("dump-chart", "Print a gauge or a multi-type chart");
  auto* gauge_opt = dump_chart->add_option("--gauge", ca.gauge, "shape label");
  auto* chart_opt = dump_chart->add_option("--chart", ca.chart, "multi-type chart base (t21, t12, t12s)");
  gauge_opt->excludes(chart_opt);
  dump_chart->add_option("--weight", ca.weight, "30 or 21 (gauges only)");
  dump_chart->add_option("--p", ca.p, "prime p");
  dump_chart->add_flag("--symbolic-p", ca.symbolic, "keep p as a ring variable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kConfig;
  }

  try {
    if (*verify) return run_verify(va);
    if (*dump_ideal_cmd) return run_dump_ideal(ia);
    if (*derive) return run_derive(da);
    if (*dump_chart) {
      if (ca.gauge.empty() && ca.chart.empty()) throw verifier::ConfigError("dump-chart needs --gauge or --chart");
      return run_dump_chart(ca);
    }
  } catch (const verifier::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kConfig;
}
