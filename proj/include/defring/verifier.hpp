#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defring/chars.hpp"
#include "defring/monodromy.hpp"
#include "defring/weyl.hpp"

namespace defring::verifier {

using charts::Gauge;
using monodromy::Level;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Check ids, grouped for the CLI subcommands.
const std::vector<std::string>& all_checks();
const std::vector<std::string>& checks_in_group(const std::string& group);  // weyl, chars, monodromy, props

struct RunConfig {
  // [run]
  long p = 23;
  std::size_t f = 2;
  chars::Torus torus = chars::Torus::split;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
  int trials = 100; // randomized instances per distortion lemma
  int samples = 50; // random characters per chars check
  std::string json_out, junit_out;
  // [rho_bar]
  std::vector<bool> unipotent;  // N_j flags; empty means all trivial
  int depth = 9;                // lowest alcove depth of random presentations
  // [kappa]
  int kappa_depth = 5;
  long kappa_default = 7;
  std::map<Gauge, std::vector<long>> kappa;  // one value or one per embedding
  // [checks]
  std::set<std::string> checks;

  long kappa_for(Gauge g, std::size_t j) const;
  std::vector<bool> unipotent_flags() const;
  monodromy::Config derivation(Gauge g, std::size_t j, bool symbolic_p = false) const;
  // Throws ConfigError.
  void validate() const;
};

RunConfig default_config();  // every check selected
// Throws ConfigError on unreadable, malformed or invalid files.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& toml_text);

enum class Verdict { pass, fail, skip };
std::string verdict_name(Verdict v);

using Params = std::vector<std::pair<std::string, std::string>>;

struct Entry {
  std::string id;      // check id, e.g. "arm_cyclicity"
  std::string anchor;  // the asserted statement
  Params params;
  Verdict verdict = Verdict::pass;
  std::string detail;  // witness (normal-form residue) on failure, reason on skip
};

struct Report {
  std::vector<Entry> entries;

  std::size_t count(Verdict v) const;
  bool ok() const { return count(Verdict::fail) == 0; }
  void append(std::vector<Entry> more);
  std::string json() const;  // byte-stable for identical inputs
  std::string junit(const std::string& suite, const std::map<std::string, double>& seconds = {}) const;
};

// Checks, one report fragment per call.
std::vector<Entry> check_admissible_sets();
std::vector<Entry> check_hypercube(std::size_t max_f);
std::vector<Entry> check_products(const RunConfig& cfg);
std::vector<Entry> check_multiplicity(const RunConfig& cfg);
std::vector<Entry> check_inertial_jl(const RunConfig& cfg);
std::vector<Entry> check_a2_tables(const RunConfig& cfg, std::size_t j);
std::vector<Entry> check_a4_pullbacks(const RunConfig& cfg, std::size_t j);
std::vector<Entry> check_conjugation(const RunConfig& cfg, std::size_t j);
// base is t21 or t12; sign picks the shifted shape base * t_(sign * root).
std::vector<Entry> check_higherweight(const RunConfig& cfg, Gauge base, int sign, std::size_t j);
std::vector<Entry> check_arm_cyclicity(const RunConfig& cfg, Gauge base, int sign, std::size_t j);
// base is t21, t12 or t12s.
std::vector<Entry> check_wchi3_ledger(const RunConfig& cfg, Gauge base, int sign, std::size_t j);
std::vector<Entry> check_gorenstein_shape(const RunConfig& cfg);
std::vector<Entry> check_distortion_lemmas(int trials, std::uint64_t seed);

// All selected checks over every embedding, shape and sign, run on a worker
// pool and merged in a fixed order. `seconds` receives per-check wall time.
Report run_all(const RunConfig& cfg, std::map<std::string, double>* seconds = nullptr);

}  // namespace defring::verifier
