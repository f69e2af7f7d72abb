#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "defring/verifier.hpp"
#include "engine_properties.hpp"

using namespace defring;
using namespace defring::verifier;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string note;
};

struct Tally {
  Outcome out;
  void add(const std::vector<Entry>& entries, std::size_t max_notes = 3) {
    for (const auto& e : entries) {
      if (e.verdict == Verdict::skip) continue;
      ++out.checks;
      if (e.verdict == Verdict::pass) continue;
      out.ok = false;
      if (max_notes && std::count(out.note.begin(), out.note.end(), ';') < static_cast<long>(max_notes)) {
        std::string ps;
        for (const auto& [k, v] : e.params) ps += (ps.empty() ? "" : " ") + k + "=" + v;
        out.note += e.anchor + " {" + ps + "}; ";
      }
    }
  }
};

struct GridPoint {
  long p;
  std::array<long, 3> kappas;
};

const std::vector<GridPoint>& grid() {
  static const std::vector<GridPoint> g{{23, {7, 11, 16}}, {31, {8, 13, 21}}, {43, {9, 20, 33}}};
  return g;
}

// Three kappa values spread over the shapes so that each chart sees distinct
// values on its base and its two targets; `rot` rotates the assignment.
RunConfig grid_config(const GridPoint& gp, int rot, std::set<std::string> checks) {
  RunConfig c = default_config();
  c.p = gp.p;
  c.f = 1;
  c.checks = std::move(checks);
  auto k = [&](int i) { return gp.kappas[static_cast<std::size_t>((i + rot) % 3)]; };
  c.kappa_default = k(0);
  c.kappa = {{Gauge::t21, {k(0)}}, {Gauge::t12, {k(1)}}, {Gauge::t12s, {k(2)}}, {Gauge::t30, {k(2)}},
             {Gauge::t03, {k(0)}}, {Gauge::t03s, {k(1)}}, {Gauge::t21s, {k(0)}}};
  c.validate();
  return c;
}

RunConfig chars_config(long p, std::size_t f, chars::Torus t, int samples) {
  RunConfig c = default_config();
  c.p = p;
  c.f = f;
  c.torus = t;
  c.samples = samples;
  // Largest depth that leaves room in the lowest alcove.
  c.depth = static_cast<int>((p - 3) / 2);
  return c;
}

const std::vector<long> kSmallPrimes{5, 7, 11, 23};
const std::vector<chars::Torus> kTori{chars::Torus::split, chars::Torus::nonsplit};

Outcome criterion_tables() {
  Tally t;
  for (const auto& gp : grid())
    for (long kappa : gp.kappas)
      for (Gauge g : charts::all_gauges()) {
        monodromy::Config c;
        c.p = gp.p;
        c.kappa = kappa;
        auto r = monodromy::fixed_weight_consistency(g, c);
        std::vector<Entry> es;
        Params ps{{"p", std::to_string(gp.p)}, {"kappa", std::to_string(kappa)}, {"shape", charts::gauge_name(g)}};
        for (auto [name, ok] : {std::pair{"le30", r.le30_matches}, {"21", r.w21_matches}, {"30", r.w30_matches},
                                {"le30=21+30", r.decomposition_holds}}) {
          Params q = ps;
          q.push_back({"weight", name});
          es.push_back({"a2", "derived ideal equals the tabulated ideal", q, ok ? Verdict::pass : Verdict::fail, r.detail});
        }
        t.add(es);
      }
  return t.out;
}

Outcome criterion_pullbacks() {
  Tally t;
  for (const auto& gp : grid())
    for (long kappa : gp.kappas) {
      RunConfig c = default_config();
      c.p = gp.p;
      c.f = 1;
      c.kappa.clear();
      c.kappa_default = kappa;
      t.add(check_a4_pullbacks(c, 0));
    }
  return t.out;
}

Outcome criterion_admissible() {
  Tally t;
  t.add(check_admissible_sets());
  t.add(check_hypercube(3));
  return t.out;
}

Outcome criterion_products() {
  Tally t;
  for (long p : kSmallPrimes)
    for (std::size_t f = 1; f <= 3; ++f)
      for (auto torus : kTori) t.add(check_products(chars_config(p, f, torus, 1)));
  // Outside the hypothesis the statement must fail somewhere.
  bool violation = false;
  for (std::size_t f = 1; f <= 3; ++f)
    for (auto torus : kTori)
      for (const auto& e : check_products(chars_config(3, f, torus, 1))) violation = violation || e.verdict == Verdict::fail;
  ++t.out.checks;
  if (!violation) {
    t.out.ok = false;
    t.out.note += "no violation found at p = 3; ";
  }
  return t.out;
}

Outcome criterion_multiplicity() {
  Tally t;
  for (long p : kSmallPrimes)
    for (std::size_t f = 1; f <= 3; ++f)
      for (auto torus : kTori) {
        auto es = check_multiplicity(chars_config(p, f, torus, 50));
        std::size_t bad = 0;
        for (const auto& e : es) bad += e.verdict == Verdict::fail;
        if (bad) {
          std::ostringstream os;
          os << "p=" << p << " f=" << f << " " << chars::to_string(torus) << ": " << bad << "/" << es.size()
             << " characters fail; ";
          t.out.note += os.str();
        }
        t.add(es, 0);
      }
  return t.out;
}

Outcome criterion_ledgers() {
  Tally t;
  for (const auto& gp : grid())
    for (int rot = 0; rot < 3; ++rot) {
      RunConfig c = grid_config(gp, rot, {"higherweight", "arm_cyclicity", "wchi3_ledger"});
      c.threads = 1;
      t.add(run_all(c).entries);
    }
  return t.out;
}

Outcome criterion_gorenstein() {
  Tally t;
  for (const auto& gp : grid())
    for (int rot = 0; rot < 3; ++rot) t.add(check_gorenstein_shape(grid_config(gp, rot, {"gorenstein"})));
  return t.out;
}

Outcome criterion_distortion() {
  Tally t;
  auto es = check_distortion_lemmas(100, 2024);
  t.add(es);
  t.out.checks = 0;
  for (const auto& e : es) {
    std::size_t n = 1;
    for (const auto& [k, v] : e.params)
      if (k == "trials") n = std::stoul(v);
    t.out.checks += n;
  }
  return t.out;
}

Outcome criterion_inertial_jl() {
  Tally t;
  for (long p : kSmallPrimes)
    for (std::size_t f = 1; f <= 3; ++f)
      for (auto torus : kTori) t.add(check_inertial_jl(chars_config(p, f, torus, 20)));
  return t.out;
}

Outcome criterion_engine() {
  Outcome out;
  for (const auto& s : testing::run_engine_properties(200, 7)) {
    out.checks += static_cast<std::size_t>(s.instances);
    if (s.instances < 200 || s.failures) {
      out.ok = false;
      out.note += s.name + ": " + std::to_string(s.failures) + " failures, first " + s.first_failure + "; ";
    }
  }
  return out;
}

struct Criterion {
  int id;
  const char* what;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  // --expect-fail N marks a criterion known to fail for a documented reason;
  // the exit status is then 0 only if exactly those criteria fail.
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expected.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "derived fixed-weight ideals equal the tabulated ideals, 7 shapes x 3 weights x grid", 60, criterion_tables},
      {2, "pullbacks along the multi-type charts equal the displayed K-ideals, grid", 60, criterion_pullbacks},
      {3, "admissible sets match the displays (f <= 3); hypercube lemma exhaustive", 5, criterion_admissible},
      {4, "products of embeddings, p in {5,7,11,23} x f in {1,2,3} x both tori; violation at p = 3", 10,
       criterion_products},
      {5, "multiplicity audit, 50 random regular characters per configuration", 5, criterion_multiplicity},
      {6, "proposition ledgers (higherweight, arm cyclicity, Wchi3), grid", 120, criterion_ledgers},
      {7, "Gorenstein shape of the weight-(2,1) ideals", 10, criterion_gorenstein},
      {8, "distortion lemmas, 100 random instances each plus the symbolic identity", 30, criterion_distortion},
      {9, "inertial JL sign, 20 random regular characters per configuration", 5, criterion_inertial_jl},
      {10, "engine property suites, 200 instances each", 30, criterion_engine},
  };

  std::set<int> failed;
  double total = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    const bool in_time = secs < c.limit;
    if (!in_time) o.note += "over the time limit; ";
    const bool pass = o.ok && in_time;
    if (!pass) failed.insert(c.id);
    std::printf("[%s] criterion %2d: %s (%zu checks) %.2fs / %.0fs%s\n", pass ? "PASS" : "FAIL", c.id, c.what, o.checks,
                secs, c.limit, expected.count(c.id) ? " [expected failure]" : "");
    if (!o.note.empty()) std::printf("       %s\n", o.note.c_str());
  }
  std::printf("%zu/%zu criteria pass in %.2fs\n", criteria.size() - failed.size(), criteria.size(), total);
  if (failed == expected) return 0;
  for (int id : expected)
    if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
  return 1;
}
