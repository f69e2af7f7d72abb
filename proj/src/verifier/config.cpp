#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "defring/verifier.hpp"

namespace defring::verifier {

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> ids{
      "admissible_sets", "hypercube",   "products",      "multiplicity", "inertial_jl",
      "a2_tables",       "a4_pullbacks", "conjugation",  "higherweight", "arm_cyclicity",
      "wchi3_ledger",    "gorenstein",  "distortion"};
  return ids;
}

const std::vector<std::string>& checks_in_group(const std::string& group) {
  static const std::map<std::string, std::vector<std::string>> groups{
      {"weyl", {"admissible_sets", "hypercube"}},
      {"chars", {"products", "multiplicity", "inertial_jl"}},
      {"monodromy", {"a2_tables", "a4_pullbacks", "conjugation"}},
      {"props", {"higherweight", "arm_cyclicity", "wchi3_ledger", "gorenstein", "distortion"}},
      {"all", all_checks()},
  };
  auto it = groups.find(group);
  if (it == groups.end()) throw ConfigError("unknown check group '" + group + "'");
  return it->second;
}

long RunConfig::kappa_for(Gauge g, std::size_t j) const {
  auto it = kappa.find(g);
  if (it == kappa.end() || it->second.empty()) return kappa_default;
  return it->second.size() == 1 ? it->second[0] : it->second.at(j);
}

std::vector<bool> RunConfig::unipotent_flags() const {
  return unipotent.empty() ? std::vector<bool>(f, false) : unipotent;
}

monodromy::Config RunConfig::derivation(Gauge g, std::size_t j, bool symbolic_p) const {
  monodromy::Config c;
  c.p = p;
  c.kappa = kappa_for(g, j);
  c.depth = kappa_depth;
  c.symbolic_p = symbolic_p;
  return c;
}

void RunConfig::validate() const {
  if (!monodromy::is_prime(p) || p <= 5) throw ConfigError("p must be a prime > 5, got " + std::to_string(p));
  if (f < 1 || f > 4) throw ConfigError("f must be between 1 and 4, got " + std::to_string(f));
  if (!unipotent.empty() && unipotent.size() != f)
    throw ConfigError("rho_bar.unipotent needs one flag per embedding (" + std::to_string(f) + ")");
  if (kappa_depth < 5) throw ConfigError("kappa.depth must be at least 5");
  if (depth < 1) throw ConfigError("rho_bar.depth must be positive");
  if (trials < 1) throw ConfigError("run.trials must be at least 1");
  if (samples < 1) throw ConfigError("run.samples must be at least 1");
  if (threads < 0) throw ConfigError("run.threads must be non-negative");
  if (checks.count("inertial_jl") && p - 2 * depth < 3)
    throw ConfigError("rho_bar.depth = " + std::to_string(depth) + " leaves no lowest alcove room at p = " +
                      std::to_string(p));
  auto generic = [&](long k, const std::string& where) {
    if (!monodromy::kappa_generic(k, p, kappa_depth))
      throw ConfigError(where + " = " + std::to_string(k) + " is congruent to one of 0, +-1, ..., +-" +
                        std::to_string(kappa_depth) + " mod " + std::to_string(p));
  };
  generic(kappa_default, "kappa.default");
  for (const auto& [g, ks] : kappa) {
    if (ks.size() != 1 && ks.size() != f)
      throw ConfigError("kappa." + charts::gauge_name(g) + " needs 1 or " + std::to_string(f) + " values");
    for (long k : ks) generic(k, "kappa." + charts::gauge_name(g));
  }
}

RunConfig default_config() {
  RunConfig c;
  c.checks.insert(all_checks().begin(), all_checks().end());
  return c;
}

namespace {

template <class T>
T get(const toml::table& t, const std::string& section, const std::string& key, T fallback) {
  const toml::node* n = t.get(key);
  if (!n) return fallback;
  if constexpr (std::is_same_v<T, std::string>) {
    if (auto v = n->value<std::string>()) return *v;
  } else if constexpr (std::is_same_v<T, bool>) {
    if (n->is_boolean()) return *n->value<bool>();
  } else {
    if (n->is_integer()) return static_cast<T>(*n->value<std::int64_t>());
  }
  throw ConfigError(section + "." + key + " has the wrong type");
}

void only_keys(const toml::table& t, const std::string& section, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : t)
    if (!allowed.count(std::string(k.str()))) throw ConfigError("unknown key " + section + "." + std::string(k.str()));
}

const toml::table& section(const toml::table& root, const std::string& name) {
  static const toml::table empty;
  const toml::node* n = root.get(name);
  if (!n) return empty;
  if (!n->is_table()) throw ConfigError("[" + name + "] must be a table");
  return *n->as_table();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  toml::table root;
  try {
    root = toml::parse(text);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << "config parse error: " << e.description() << " at line " << e.source().begin.line;
    throw ConfigError(os.str());
  }
  only_keys(root, "", {"run", "rho_bar", "kappa", "checks"});
  RunConfig c = default_config();

  const toml::table& run = section(root, "run");
  only_keys(run, "run", {"p", "f", "torus", "seed", "threads", "trials", "samples", "json", "junit"});
  c.p = get<long>(run, "run", "p", c.p);
  const long f = get<long>(run, "run", "f", static_cast<long>(c.f));
  if (f < 1) throw ConfigError("run.f must be positive");
  c.f = static_cast<std::size_t>(f);
  const std::string torus = get<std::string>(run, "run", "torus", "split");
  if (torus == "split")
    c.torus = chars::Torus::split;
  else if (torus == "nonsplit")
    c.torus = chars::Torus::nonsplit;
  else
    throw ConfigError("run.torus must be \"split\" or \"nonsplit\"");
  const long seed = get<long>(run, "run", "seed", 1);
  if (seed < 0) throw ConfigError("run.seed must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);
  c.threads = get<int>(run, "run", "threads", c.threads);
  c.trials = get<int>(run, "run", "trials", c.trials);
  c.samples = get<int>(run, "run", "samples", c.samples);
  c.json_out = get<std::string>(run, "run", "json", "");
  c.junit_out = get<std::string>(run, "run", "junit", "");

  const toml::table& rho = section(root, "rho_bar");
  only_keys(rho, "rho_bar", {"unipotent", "depth"});
  c.depth = get<int>(rho, "rho_bar", "depth", c.depth);
  if (const toml::node* n = rho.get("unipotent")) {
    const toml::array* arr = n->as_array();
    if (!arr) throw ConfigError("rho_bar.unipotent must be an array of booleans");
    for (const auto& e : *arr) {
      if (!e.is_boolean()) throw ConfigError("rho_bar.unipotent must be an array of booleans");
      c.unipotent.push_back(*e.value<bool>());
    }
  }

  const toml::table& kap = section(root, "kappa");
  for (const auto& [key, node] : kap) {
    const std::string k(key.str());
    if (k == "depth") {
      c.kappa_depth = get<int>(kap, "kappa", k, c.kappa_depth);
    } else if (k == "default") {
      c.kappa_default = get<long>(kap, "kappa", k, c.kappa_default);
    } else {
      auto g = charts::parse_gauge(k);
      if (!g) throw ConfigError("unknown key kappa." + k + " (expected a shape such as t21 or t12s)");
      std::vector<long> values;
      if (node.is_integer()) {
        values.push_back(static_cast<long>(*node.value<std::int64_t>()));
      } else if (const toml::array* arr = node.as_array()) {
        for (const auto& e : *arr) {
          if (!e.is_integer()) throw ConfigError("kappa." + k + " must hold integers");
          values.push_back(static_cast<long>(*e.value<std::int64_t>()));
        }
      } else {
        throw ConfigError("kappa." + k + " must be an integer or an array of integers");
      }
      c.kappa[*g] = values;
    }
  }

  if (root.get("checks")) {
    const toml::table& chk = section(root, "checks");
    std::set<std::string> known(all_checks().begin(), all_checks().end());
    c.checks.clear();
    for (const auto& [key, node] : chk) {
      const std::string k(key.str());
      if (!known.count(k)) throw ConfigError("unknown check checks." + k);
      if (!node.is_boolean()) throw ConfigError("checks." + k + " must be a boolean");
      if (*node.value<bool>()) c.checks.insert(k);
    }
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace defring::verifier
