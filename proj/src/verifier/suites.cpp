#include <algorithm>
#include <random>
#include <set>

#include "defring/verifier.hpp"

namespace defring::verifier {

namespace {

Entry make(std::string id, std::string anchor, Params params, bool ok, std::string detail = {}) {
  Entry e{std::move(id), std::move(anchor), std::move(params), ok ? Verdict::pass : Verdict::fail, {}};
  if (!ok) e.detail = std::move(detail);
  return e;
}

std::string joined(const std::vector<std::string>& items, std::size_t limit = 8) {
  std::string s;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) s += (i ? "; " : "") + items[i];
  if (items.size() > limit) s += "; ... (" + std::to_string(items.size()) + " total)";
  return s;
}

std::string weight_str(const weyl::Weight& w) {
  return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

std::string nu_str(const std::vector<weyl::Weight>& nu) {
  std::string s;
  for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? ";" : "") + weight_str(nu[i]);
  return s;
}

std::string bits(const std::vector<bool>& flags) {
  std::string s;
  for (bool b : flags) s += b ? '1' : '0';
  return s;
}

std::string wv_str(const chars::WeightVector& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? ";" : "") + std::string("(") + std::to_string(w[i][0]) + "," + std::to_string(w[i][1]) + ")";
  return s;
}

chars::WeightVector random_weight(std::mt19937_64& rng, std::size_t f, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  chars::WeightVector w(f);
  for (auto& v : w) v = {d(rng), d(rng)};
  return w;
}

}  // namespace

std::vector<Entry> check_admissible_sets() {
  static const std::map<weyl::Weight, std::set<std::string>> shown{
      {{2, 1}, {"t(2,1)", "t(1,2)", "t(1,2)s"}},
      {{3, 0}, {"t(3,0)", "t(0,3)s", "t(0,3)", "t(2,1)s", "t(2,1)", "t(1,2)", "t(1,2)s"}},
  };
  std::vector<Entry> out;
  for (const auto& [lambda, names] : shown)
    for (std::size_t f = 1; f <= 3; ++f) {
      // Expected: every product of the displayed single-embedding elements.
      std::set<std::string> expected{""};
      for (std::size_t j = 0; j < f; ++j) {
        std::set<std::string> next;
        for (const auto& prefix : expected)
          for (const auto& n : names) next.insert(prefix.empty() ? n : prefix + ";" + n);
        expected = std::move(next);
      }
      std::vector<weyl::Weight> lambdas(f, lambda);
      std::set<std::string> got;
      for (const auto& x : weyl::admissible_product(lambdas)) got.insert(x.str());
      std::vector<std::string> missing, extra;
      std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
      std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
      out.push_back(make("admissible_sets", "admissible set of weight " + weight_str(lambda) + " matches the display",
                         {{"lambda", weight_str(lambda)}, {"f", std::to_string(f)}}, missing.empty() && extra.empty(),
                         "missing: " + joined(missing) + " | extra: " + joined(extra)));
    }
  return out;
}

std::vector<Entry> check_hypercube(std::size_t max_f) {
  std::vector<Entry> out;
  for (std::size_t f = 1; f <= max_f; ++f)
    for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
      std::vector<bool> flags(f);
      for (std::size_t j = 0; j < f; ++j) flags[j] = (mask >> j) & 1;
      auto r = weyl::hypercube_check(flags);
      out.push_back(make("hypercube", "filtered admissible set of weight (3,0) is the union of the shifted cubes",
                         {{"f", std::to_string(f)}, {"unipotent", bits(flags)}, {"checks", std::to_string(r.checks)}},
                         r.pass, joined(r.failures)));
    }
  return out;
}

std::vector<Entry> check_products(const RunConfig& cfg) {
  std::vector<Entry> out;
  for (bool conj : {false, true}) {
    if (conj && cfg.torus == chars::Torus::split) continue;
    chars::Context ctx{static_cast<int>(cfg.p), cfg.f, cfg.torus, conj};
    auto r = chars::check_products_of_embeddings(ctx);
    std::vector<std::string> v;
    for (const auto& w : r.violations) v.push_back(wv_str(w));
    out.push_back(make("products", "product of embedding powers with exponents in {0,+-1,+-2} is trivial only at 0",
                       {{"p", std::to_string(cfg.p)},
                        {"f", std::to_string(cfg.f)},
                        {"torus", chars::to_string(cfg.torus)},
                        {"conjugate", conj ? "true" : "false"},
                        {"tuples", std::to_string(r.tuples)}},
                       r.ok, "violations: " + joined(v)));
  }
  return out;
}

std::vector<Entry> check_multiplicity(const RunConfig& cfg) {
  std::vector<Entry> out;
  chars::Context ctx{static_cast<int>(cfg.p), cfg.f, cfg.torus, false};
  std::mt19937_64 rng(cfg.seed ^ 0x6d756c74ULL);
  int drawn = 0;
  for (int attempts = 0; drawn < cfg.samples && attempts < 100 * cfg.samples; ++attempts) {
    auto mu = random_weight(rng, cfg.f, static_cast<int>(cfg.p));
    auto chi = chars::char_class(mu, ctx);
    if (!chars::regular(chi, ctx)) continue;
    ++drawn;
    auto a = chars::multiplicity_audit(chi, ctx);
    out.push_back(make("multiplicity", "complement of chi is multiplicity free and each chi*alpha occurs once",
                       {{"p", std::to_string(cfg.p)},
                        {"f", std::to_string(cfg.f)},
                        {"torus", chars::to_string(cfg.torus)},
                        {"chi", chi.str()}},
                       a.pass(), a.detail));
  }
  if (drawn < cfg.samples)
    out.push_back({"multiplicity", "enough regular characters sampled", {{"drawn", std::to_string(drawn)}},
                   Verdict::skip, "too few regular characters for this (p, f)"});
  return out;
}

std::vector<Entry> check_inertial_jl(const RunConfig& cfg) {
  std::vector<Entry> out;
  chars::Context ctx{static_cast<int>(cfg.p), cfg.f, cfg.torus, false};
  std::mt19937_64 rng(cfg.seed ^ 0x6a6cULL);
  int drawn = 0;
  for (int attempts = 0; drawn < cfg.samples && attempts < 100 * cfg.samples; ++attempts) {
    auto pres = chars::random_presentation(rng, ctx, cfg.depth);
    if (!chars::regular(chars::char_class(chars::character_weight(pres, ctx), ctx), ctx)) continue;
    ++drawn;
    for (const auto& alpha : chars::roots(cfg.f)) {
      auto s = chars::inertial_jl_shift(pres, alpha, ctx, cfg.depth);
      out.push_back(make("inertial_jl", "exactly one sign eps presents the type of chi*alpha by nu + eps*alpha",
                         {{"p", std::to_string(cfg.p)},
                          {"f", std::to_string(cfg.f)},
                          {"torus", chars::to_string(cfg.torus)},
                          {"nu", nu_str(pres.nu)},
                          {"alpha", wv_str(alpha)},
                          {"epsilon", std::to_string(s.epsilon)},
                          {"certificate", s.target.str()}},
                         s.valid, s.message));
    }
  }
  return out;
}

std::vector<Entry> check_a2_tables(const RunConfig& cfg, std::size_t j) {
  std::vector<Entry> out;
  for (Gauge g : charts::all_gauges()) {
    monodromy::Config c = cfg.derivation(g, j);
    auto r = monodromy::fixed_weight_consistency(g, c);
    Params base{{"p", std::to_string(c.p)}, {"j", std::to_string(j)}, {"kappa", std::to_string(c.kappa)},
                {"shape", charts::gauge_name(g)}};
    auto with = [&](const char* level) {
      Params ps = base;
      ps.push_back({"weight", level});
      return ps;
    };
    out.push_back(make("a2_tables", "derived ideal of weight <=(3,0) equals the tabulated ideal", with("le30"),
                       r.le30_matches, r.detail));
    out.push_back(make("a2_tables", "derived ideal of weight (2,1) equals the tabulated ideal", with("21"),
                       r.w21_matches, r.detail));
    out.push_back(make("a2_tables", "derived (3,0) component equals the tabulated (3,0) ideal", with("30"),
                       r.w30_matches, r.detail));
    out.push_back(make("a2_tables",
                       charts::in_adm21(g) ? "tabulated ideal of weight <=(3,0) is the intersection of the (2,1) and (3,0) ideals"
                                           : "tabulated ideal of weight <=(3,0) equals the (3,0) ideal",
                       with("le30=21+30"), r.decomposition_holds, r.detail));
  }
  return out;
}

std::vector<Entry> check_a4_pullbacks(const RunConfig& cfg, std::size_t j) {
  std::vector<Entry> out;
  for (const auto& d : monodromy::k_displays()) {
    monodromy::Config c = cfg.derivation(d.target, j);
    auto chart = charts::build_multichart(d.base, c.pmode());
    Ideal K = monodromy::k_ideal(chart, d.target, d.level, c);
    Ideal shown = monodromy::k_display_ideal(d.name, c);
    const bool ok = ideal_equal(K, shown);
    std::string detail;
    if (!ok) {
      for (const auto& g : shown.generators())
        if (!K.contains(g)) detail += "display generator not in pullback: " + g.str() + "; ";
      for (const auto& g : K.reduced_generators())
        if (!shown.contains(g)) detail += "pullback element not in display: " + g.str() + "; ";
    }
    out.push_back(make("a4_pullbacks", "pullback of the tabulated ideal along the projection equals the displayed K-ideal",
                       {{"p", std::to_string(c.p)},
                        {"j", std::to_string(j)},
                        {"kappa", std::to_string(c.kappa)},
                        {"case", d.name},
                        {"chart", charts::gauge_name(d.base)},
                        {"target", charts::gauge_name(d.target)},
                        {"weight", monodromy::level_name(d.level)}},
                       ok, detail));
  }
  return out;
}

std::vector<Entry> check_conjugation(const RunConfig& cfg, std::size_t j) {
  std::vector<Entry> out;
  for (Gauge g : charts::all_gauges())
    for (Level l : {Level::le30, Level::w21}) {
      monodromy::Config c = cfg.derivation(g, j);
      out.push_back(make("conjugation", "derivation commutes with conjugation by the Iwahori normalizer",
                         {{"p", std::to_string(c.p)},
                          {"j", std::to_string(j)},
                          {"kappa", std::to_string(c.kappa)},
                          {"shape", charts::gauge_name(g)},
                          {"partner", charts::gauge_name(charts::paired_gauge(g))},
                          {"weight", monodromy::level_name(l)}},
                         monodromy::conjugation_coherent(g, l, c), "relabeled ideals differ"));
    }
  return out;
}

}  // namespace defring::verifier
