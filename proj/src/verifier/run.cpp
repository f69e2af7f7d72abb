#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "defring/verifier.hpp"

namespace defring::verifier {

namespace {

struct Job {
  std::string check;
  std::function<std::vector<Entry>()> run;
};

std::vector<Job> plan(const RunConfig& cfg) {
  std::vector<Job> jobs;
  auto want = [&](const char* id) { return cfg.checks.count(id) > 0; };
  auto add = [&](const char* id, std::function<std::vector<Entry>()> f) { jobs.push_back({id, std::move(f)}); };

  if (want("admissible_sets")) add("admissible_sets", [] { return check_admissible_sets(); });
  if (want("hypercube")) add("hypercube", [&cfg] { return check_hypercube(std::max<std::size_t>(3, cfg.f)); });
  if (want("products")) add("products", [&cfg] { return check_products(cfg); });
  if (want("multiplicity")) add("multiplicity", [&cfg] { return check_multiplicity(cfg); });
  if (want("inertial_jl")) add("inertial_jl", [&cfg] { return check_inertial_jl(cfg); });
  for (std::size_t j = 0; j < cfg.f; ++j) {
    if (want("a2_tables")) add("a2_tables", [&cfg, j] { return check_a2_tables(cfg, j); });
    if (want("a4_pullbacks")) add("a4_pullbacks", [&cfg, j] { return check_a4_pullbacks(cfg, j); });
    if (want("conjugation")) add("conjugation", [&cfg, j] { return check_conjugation(cfg, j); });
    for (int sign : {1, -1}) {
      for (Gauge u : {Gauge::t21, Gauge::t12})
        if (want("higherweight")) add("higherweight", [&cfg, u, sign, j] { return check_higherweight(cfg, u, sign, j); });
      for (Gauge u : {Gauge::t21, Gauge::t12, Gauge::t12s})
        if (want("arm_cyclicity"))
          add("arm_cyclicity", [&cfg, u, sign, j] { return check_arm_cyclicity(cfg, u, sign, j); });
      for (Gauge u : {Gauge::t21, Gauge::t12, Gauge::t12s})
        if (want("wchi3_ledger"))
          add("wchi3_ledger", [&cfg, u, sign, j] { return check_wchi3_ledger(cfg, u, sign, j); });
    }
  }
  if (want("gorenstein")) add("gorenstein", [&cfg] { return check_gorenstein_shape(cfg); });
  if (want("distortion")) add("distortion", [&cfg] { return check_distortion_lemmas(cfg.trials, cfg.seed); });
  return jobs;
}

}  // namespace

Report run_all(const RunConfig& cfg, std::map<std::string, double>* seconds) {
  cfg.validate();
  std::vector<Job> jobs = plan(cfg);
  std::vector<std::vector<Entry>> results(jobs.size());
  std::vector<double> elapsed(jobs.size(), 0.0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        results[i] = {{jobs[i].check, "check ran to completion", {}, Verdict::fail, e.what()}};
      }
      elapsed[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned n = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Single writer: merge in plan order so the report does not depend on timing.
  Report report;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    report.append(std::move(results[i]));
    if (seconds) (*seconds)[jobs[i].check] += elapsed[i];
  }
  return report;
}

}  // namespace defring::verifier
