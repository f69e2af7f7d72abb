#include <doctest.h>

#include <json.hpp>

#include "defring/verifier.hpp"

using namespace defring;
using namespace defring::verifier;

namespace {

RunConfig only(std::initializer_list<const char*> ids, long p = 23, std::size_t f = 2) {
  RunConfig c = default_config();
  c.p = p;
  c.f = f;
  c.checks.clear();
  for (const char* id : ids) c.checks.insert(id);
  return c;
}

std::size_t count_id(const Report& r, const std::string& id, Verdict v) {
  std::size_t n = 0;
  for (const auto& e : r.entries) n += e.id == id && e.verdict == v;
  return n;
}

}  // namespace

TEST_CASE("config parsing") {
  RunConfig c = parse_config(R"(
[run]
p = 31
f = 3
torus = "nonsplit"
seed = 9
[rho_bar]
unipotent = [true, false, true]
depth = 4
[kappa]
default = 8
t30 = [9, 10, 11]
t12s = 13
[checks]
hypercube = true
products = false
)");
  CHECK(c.p == 31);
  CHECK(c.f == 3);
  CHECK(c.torus == chars::Torus::nonsplit);
  CHECK(c.seed == 9);
  CHECK(c.unipotent_flags() == std::vector<bool>{true, false, true});
  CHECK(c.kappa_for(Gauge::t30, 2) == 11);
  CHECK(c.kappa_for(Gauge::t12s, 1) == 13);
  CHECK(c.kappa_for(Gauge::t21, 0) == 8);
  CHECK(c.checks == std::set<std::string>{"hypercube"});
  CHECK(c.derivation(Gauge::t30, 1).kappa == 10);

  RunConfig d = parse_config("");
  CHECK(d.checks.size() == all_checks().size());
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("[run]\np = 21\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run]\np = 5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run]\nprime = 23\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run]\np = \"23\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run]\ntorus = \"ramified\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[extra]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run\np = 23\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[rho_bar]\nunipotent = [true]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[checks]\nmystery = true\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[kappa]\nt99 = 7\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[kappa]\nt30 = [7, 8, 9]\n"), ConfigError);
  // kappa = 1 mod p is not generic.
  CHECK_THROWS_AS(parse_config("[kappa]\nt21 = 24\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[kappa]\ndefault = -3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run]\np = 13\n[rho_bar]\ndepth = 9\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/defring.toml"), ConfigError);
  CHECK_THROWS_AS(checks_in_group("nothing"), ConfigError);
}

TEST_CASE("groups partition the checks") {
  std::multiset<std::string> seen;
  for (const char* g : {"weyl", "chars", "monodromy", "props"})
    for (const auto& id : checks_in_group(g)) seen.insert(id);
  CHECK(seen.size() == all_checks().size());
  for (const auto& id : all_checks()) CHECK(seen.count(id) == 1);
}

TEST_CASE("empty selection gives an empty passing report") {
  Report r = run_all(only({}));
  CHECK(r.entries.empty());
  CHECK(r.ok());
  CHECK(r.json() == "[]\n");
}

TEST_CASE("combinatorial checks pass") {
  Report r = run_all(only({"admissible_sets", "hypercube", "products", "multiplicity", "inertial_jl"}));
  CHECK(r.ok());
  CHECK(count_id(r, "admissible_sets", Verdict::pass) == 6);
  CHECK(count_id(r, "hypercube", Verdict::pass) == 2 + 4 + 8);
  CHECK(count_id(r, "multiplicity", Verdict::pass) == 50);
  CHECK(count_id(r, "inertial_jl", Verdict::pass) == 50 * 4);
}

TEST_CASE("monodromy checks pass") {
  RunConfig c = only({"a2_tables", "a4_pullbacks", "conjugation"});
  c.kappa[Gauge::t30] = {16, 12};
  c.kappa[Gauge::t12s] = {9};
  Report r = run_all(c);
  for (const auto& e : r.entries) CHECK_MESSAGE(e.verdict == Verdict::pass, e.anchor, " ", e.detail);
  CHECK(count_id(r, "a2_tables", Verdict::pass) == 2 * 7 * 4);
  CHECK(count_id(r, "a4_pullbacks", Verdict::pass) == 2 * 8);
  CHECK(count_id(r, "conjugation", Verdict::pass) == 2 * 7 * 2);
}

TEST_CASE("proposition ledgers pass") {
  RunConfig c = only({"higherweight", "arm_cyclicity", "wchi3_ledger", "gorenstein"}, 31, 1);
  c.kappa[Gauge::t30] = {9};
  c.kappa[Gauge::t12] = {13};
  c.kappa[Gauge::t03s] = {21};
  Report r = run_all(c);
  for (const auto& e : r.entries)
    CHECK_MESSAGE(e.verdict != Verdict::fail, e.id, ": ", e.anchor, " ", e.detail);
  // Two shapes, two signs, three assertions; half the targets leave Adm(2,1).
  CHECK(count_id(r, "higherweight", Verdict::pass) == 6);
  CHECK(count_id(r, "higherweight", Verdict::skip) == 6);
  CHECK(count_id(r, "arm_cyclicity", Verdict::fail) == 0);
  CHECK(count_id(r, "wchi3_ledger", Verdict::pass) > 100);
  CHECK(count_id(r, "gorenstein", Verdict::pass) == 4);
}

TEST_CASE("distortion lemmas") {
  auto out = check_distortion_lemmas(10, 3);
  REQUIRE(out.size() == 4);
  for (const auto& e : out) CHECK_MESSAGE(e.verdict == Verdict::pass, e.anchor, " ", e.detail);
}

TEST_CASE("reports are deterministic across thread counts") {
  RunConfig c = only({"hypercube", "multiplicity", "a4_pullbacks", "arm_cyclicity"});
  c.threads = 1;
  const std::string one = run_all(c).json();
  c.threads = 4;
  const std::string four = run_all(c).json();
  CHECK(one == four);
  auto parsed = nlohmann::json::parse(one);
  REQUIRE(parsed.is_array());
  for (const auto& e : parsed) {
    CHECK(e.contains("id"));
    CHECK(e.contains("anchor"));
    CHECK(e.contains("params"));
    CHECK(e["verdict"] == "pass");
  }
}

TEST_CASE("report formats") {
  Report r;
  r.append({{"x", "a < b & c", {{"k", "1"}}, Verdict::fail, "why \"not\""},
            {"x", "ok", {}, Verdict::pass, ""},
            {"y", "later", {}, Verdict::skip, "no hypotheses"}});
  CHECK_FALSE(r.ok());
  CHECK(r.count(Verdict::fail) == 1);
  auto j = nlohmann::json::parse(r.json());
  CHECK(j[0]["detail"] == "why \"not\"");
  CHECK(j[2]["reason"] == "no hypotheses");
  const std::string xml = r.junit("suite", {{"x", 1.5}});
  CHECK(xml.find("a &lt; b &amp; c") != std::string::npos);
  CHECK(xml.find("failures=\"1\"") != std::string::npos);
  CHECK(xml.find("<skipped") != std::string::npos);
}
