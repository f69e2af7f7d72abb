#include "defring/charts.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "defring/parse.hpp"

namespace defring::charts {

namespace {

struct GaugeInfo {
  Gauge g;
  const char* name;
  weyl::Factor factor;
  std::vector<std::string> vars;
  // Entries as coefficient lists (u^0 first); `times_v` marks entries that
  // carry an extra factor v = u - p.
  std::array<std::vector<std::string>, 4> entries;
  std::array<bool, 4> times_v;
};

const std::vector<GaugeInfo>& infos() {
  static const std::vector<GaugeInfo> table = {
      {Gauge::t21, "t21", {false, 2, 1}, {"a0", "a1", "b0", "c0", "c1", "d0"},
       {{{"a0", "a1", "1"}, {"b0"}, {"c0", "c1"}, {"d0", "1"}}}, {{false, false, true, false}}},
      {Gauge::t12, "t12", {false, 1, 2}, {"a0", "b0", "b1", "c0", "d0", "d1"},
       {{{"a0", "1"}, {"b0", "b1"}, {"c0"}, {"d0", "d1", "1"}}}, {{false, false, true, false}}},
      {Gauge::t12s, "t12s", {true, 2, 1}, {"a0", "a1", "b0", "c0", "d0", "d1"},
       {{{"a0", "a1"}, {"b0", "1"}, {"c0", "1"}, {"d0", "d1"}}}, {{false, false, true, false}}},
      {Gauge::t30, "t30", {false, 3, 0}, {"a0", "a1", "a2", "c0", "c1", "c2"},
       {{{"a0", "a1", "a2", "1"}, {}, {"c0", "c1", "c2"}, {"1"}}}, {{false, false, true, false}}},
      {Gauge::t03, "t03", {false, 0, 3}, {"b0", "b1", "b2", "d0", "d1", "d2"},
       {{{"1"}, {"b0", "b1", "b2"}, {}, {"d0", "d1", "d2", "1"}}}, {{false, false, false, false}}},
      {Gauge::t03s, "t03s", {true, 3, 0}, {"a0", "a1", "a2", "c0", "c1", "d0"},
       {{{"a0", "a1", "a2"}, {"1"}, {"c0", "c1", "1"}, {"d0"}}}, {{false, false, true, false}}},
      {Gauge::t21s, "t21s", {true, 1, 2}, {"a0", "b0", "b1", "d0", "d1", "d2"},
       {{{"a0"}, {"b0", "b1", "1"}, {"1"}, {"d0", "d1", "d2"}}}, {{false, false, true, false}}},
  };
  return table;
}

const GaugeInfo& info(Gauge g) {
  for (const auto& i : infos())
    if (i.g == g) return i;
  throw std::invalid_argument("unknown gauge");
}

std::map<std::string, Polynomial> p_binding(const RosterPtr& roster, const PMode& mode) {
  if (mode.symbolic) return {};
  return {{"p", Polynomial(roster, mode.p)}};
}

UPoly upoly(const RosterPtr& roster, const std::vector<std::string>& coeffs, const PMode& mode) {
  auto bind = p_binding(roster, mode);
  std::vector<Polynomial> cs;
  for (const auto& c : coeffs) cs.push_back(parse_polynomial(roster, c, bind));
  return UPoly(roster, std::move(cs));
}

UPoly v_of(const RosterPtr& roster, const PMode& mode) { return UPoly::linear(p_value(roster, mode)); }

MatrixPoly build_matrix(const RosterPtr& roster, const std::array<std::vector<std::string>, 4>& entries,
                        const std::array<bool, 4>& times_v, const PMode& mode) {
  std::array<UPoly, 4> e;
  const UPoly v = v_of(roster, mode);
  for (std::size_t i = 0; i < 4; ++i) {
    e[i] = upoly(roster, entries[i], mode);
    if (times_v[i]) e[i] = v * e[i];
  }
  return MatrixPoly(e[0], e[1], e[2], e[3]);
}

std::string swap_letter(const std::string& name) {
  if (name.size() < 2) return name;
  static const std::map<char, char> sw{{'a', 'd'}, {'d', 'a'}, {'b', 'c'}, {'c', 'b'}};
  auto it = sw.find(name[0]);
  if (it == sw.end()) return name;
  return std::string(1, it->second) + name.substr(1);
}

UPoly v_power(const RosterPtr& roster, const PMode& mode, int k) {
  UPoly r = UPoly::constant(Polynomial(roster, 1));
  const UPoly v = v_of(roster, mode);
  for (int i = 0; i < k; ++i) r = r * v;
  return r;
}

struct ChartInfo {
  std::vector<std::string> vars;
  std::array<std::vector<std::string>, 4> entries;
  std::array<bool, 4> times_v;
  struct Row {
    Gauge target;
    int shift;
    std::vector<std::string> images;  // in `vars` order
  };
  std::vector<Row> rows;
};

const ChartInfo& chart_info(Gauge base) {
  static const ChartInfo t21{
      {"alpha2", "alpha1", "alpha0", "beta1", "beta0", "gamma2", "gamma1", "gamma0", "delta1", "delta0"},
      {{{"alpha0", "alpha1", "alpha2", "1"}, {"beta0", "beta1"}, {"gamma0", "gamma1", "gamma2"},
        {"delta0", "delta1", "1"}}},
      {{false, true, true, true}},
      {{Gauge::t21, 0, {"a1-p", "a0-p*a1", "-p*a0", "b0", "-p*b0", "c1", "c0-p*c1", "-p*c0", "d0-p", "-p*d0"}},
       {Gauge::t30, 1, {"a2", "a1", "a0", "0", "0", "c2", "c1", "c0", "-2*p", "p^2"}},
       {Gauge::t12, -1, {"a0-2*p", "-2*p*a0+p^2", "p^2*a0", "b1", "b0", "c0", "-2*p*c0", "p^2*c0", "d1", "d0"}}}};
  static const ChartInfo t12s{
      {"alpha0", "alpha1", "beta0", "beta1", "beta2", "gamma0", "gamma1", "gamma2", "delta0", "delta1"},
      {{{"alpha0", "alpha1", "1"}, {"beta0", "beta1", "beta2"}, {"gamma0", "gamma1", "gamma2"},
        {"delta0", "delta1", "1"}}},
      {{true, false, true, true}},
      {{Gauge::t12s, 0, {"-p*b0", "b0-p", "-p*a0", "a0-p*a1", "a1", "-p*d0", "d0-p*d1", "d1", "-p*c0", "c0-p"}},
       {Gauge::t03s, 1, {"p^2", "-2*p", "a0", "a1", "a2", "p^2*d0", "-2*p*d0", "d0", "c0", "c1"}},
       {Gauge::t21s, -1, {"b0", "b1", "p^2*a0", "-2*p*a0", "a0", "d0", "d1", "d2", "p^2", "-2*p"}}}};
  if (base == Gauge::t21) return t21;
  if (base == Gauge::t12s) return t12s;
  throw std::invalid_argument("no transcribed chart for " + gauge_name(base));
}

}  // namespace

const std::vector<Gauge>& all_gauges() {
  static const std::vector<Gauge> gs{Gauge::t21, Gauge::t12, Gauge::t12s, Gauge::t30,
                                     Gauge::t03, Gauge::t03s, Gauge::t21s};
  return gs;
}

std::string gauge_name(Gauge g) { return info(g).name; }

std::optional<Gauge> parse_gauge(std::string_view text) {
  for (const auto& i : infos())
    if (text == i.name) return i.g;
  try {
    return gauge_of(weyl::Factor::parse(text));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

weyl::Factor gauge_factor(Gauge g) { return info(g).factor; }

std::optional<Gauge> gauge_of(const weyl::Factor& x) {
  for (const auto& i : infos())
    if (i.factor == x) return i.g;
  return std::nullopt;
}

bool in_adm21(Gauge g) { return g == Gauge::t21 || g == Gauge::t12 || g == Gauge::t12s; }

Gauge paired_gauge(Gauge g) {
  switch (g) {
    case Gauge::t21: return Gauge::t12;
    case Gauge::t12: return Gauge::t21;
    case Gauge::t12s: return Gauge::t12s;
    case Gauge::t30: return Gauge::t03;
    case Gauge::t03: return Gauge::t30;
    case Gauge::t03s: return Gauge::t21s;
    case Gauge::t21s: return Gauge::t03s;
  }
  throw std::invalid_argument("unknown gauge");
}

RosterPtr with_p(const std::vector<std::string>& names, const PMode& mode) {
  std::vector<std::string> all = names;
  if (mode.symbolic) all.push_back("p");
  return Roster::make(std::move(all));
}

Polynomial p_value(const RosterPtr& roster, const PMode& mode) {
  if (mode.symbolic) return Polynomial::variable(roster, "p");
  return Polynomial(roster, mode.p);
}

RingMap specialize_p(const RosterPtr& symbolic, long p) {
  std::vector<std::string> names;
  for (const auto& n : symbolic->names())
    if (n != "p") names.push_back(n);
  RosterPtr target = Roster::make(names);
  std::vector<Polynomial> images;
  for (const auto& n : symbolic->names())
    images.push_back(n == "p" ? Polynomial(target, p) : Polynomial::variable(target, n));
  return RingMap(symbolic, target, std::move(images));
}

std::vector<std::string> gauge_variables(Gauge g) { return info(g).vars; }

GaugeChart build_gauge(Gauge g, weyl::Weight lambda, PMode mode) {
  if (lambda != weyl::Weight{2, 1} && lambda != weyl::Weight{3, 0})
    throw std::invalid_argument("gauge weight must be (2,1) or (3,0)");
  if (lambda == weyl::Weight{2, 1} && !in_adm21(g))
    throw std::invalid_argument(gauge_name(g) + " is not admissible of weight (2,1)");
  const GaugeInfo& i = info(g);
  GaugeChart c;
  c.label = g;
  c.lambda = lambda;
  c.pmode = mode;
  c.roster = with_p(i.vars, mode);
  c.matrix = build_matrix(c.roster, i.entries, i.times_v, mode);
  return c;
}

bool degree_bounds_hold(const GaugeChart& chart) {
  const weyl::Factor z = gauge_factor(chart.label);
  const int nu[2] = {z.nu1, z.nu2};
  auto zperm = [&](int k) { return z.flip ? 1 - k : k; };
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const int bound = nu[k] - (i < zperm(k) ? 1 : 0);
      if (chart.matrix.at(i, k).degree() > bound) return false;
    }
  return true;
}

MatrixPoly conjugate_matrix(const MatrixPoly& m, const Polynomial& p) {
  const UPoly v = UPoly::linear(p);
  return MatrixPoly(m.at(1, 1), m.at(1, 0).divide_linear(p), v * m.at(0, 1), m.at(0, 0));
}

RingMap conjugation_relabel(const RosterPtr& from, const RosterPtr& to) {
  std::vector<std::pair<std::string, std::string>> renames;
  for (const auto& n : from->names()) renames.push_back({n, swap_letter(n)});
  return RingMap::relabel(from, to, renames);
}

GaugeChart conjugate_gauge(const GaugeChart& chart) {
  const Gauge partner = paired_gauge(chart.label);
  GaugeChart out;
  out.label = partner;
  out.lambda = chart.lambda;
  out.pmode = chart.pmode;
  out.roster = with_p(info(partner).vars, chart.pmode);
  RingMap rel = conjugation_relabel(chart.roster, out.roster);
  out.matrix = conjugate_matrix(chart.matrix, chart.p()).map(rel);
  return out;
}

MatrixPoly gauge_over_factor_v3(const GaugeChart& chart) {
  const weyl::Factor z = gauge_factor(chart.label);
  const RosterPtr& r = chart.roster;
  MatrixPoly m =
      chart.matrix * MatrixPoly::diagonal(v_power(r, chart.pmode, 3 - z.nu1), v_power(r, chart.pmode, 3 - z.nu2));
  if (z.flip) m = MatrixPoly(m.at(0, 1), m.at(0, 0), m.at(1, 1), m.at(1, 0));
  return m;
}

const Projection& MultiChart::projection(Gauge target) const {
  for (const auto& pr : table)
    if (pr.target == target) return pr;
  throw std::invalid_argument(gauge_name(target) + " is not in the projection table of " + gauge_name(base));
}

const Projection& MultiChart::projection_by_shift(int shift) const {
  for (const auto& pr : table)
    if (pr.shift == shift) return pr;
  throw std::invalid_argument("no projection with that shift");
}

std::vector<std::string> chart_variables(Gauge base) {
  return chart_info(base == Gauge::t12 ? Gauge::t21 : base).vars;
}

MultiChart build_multichart(Gauge base, PMode mode) {
  if (base == Gauge::t12) {
    // Conjugate of the t21 chart; same coordinates, conjugated matrix.
    MultiChart src = build_multichart(Gauge::t21, mode);
    MultiChart out;
    out.base = Gauge::t12;
    out.pmode = mode;
    out.roster = src.roster;
    out.psi_v3 = conjugate_matrix(src.psi_v3, src.p());
    for (const auto& pr : src.table) {
      const Gauge partner = paired_gauge(pr.target);
      RosterPtr target = with_p(info(partner).vars, mode);
      RingMap rel = conjugation_relabel(pr.map.target(), target);
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < out.roster->size(); ++i) images.push_back(rel(pr.map.image(i)));
      out.table.push_back({partner, -pr.shift, RingMap(out.roster, target, std::move(images))});
    }
    // Keep the order: the base shape, then +alpha, then -alpha.
    auto rank = [](const Projection& pr) { return pr.shift == 0 ? 0 : (pr.shift > 0 ? 1 : 2); };
    std::sort(out.table.begin(), out.table.end(),
              [&](const Projection& a, const Projection& b) { return rank(a) < rank(b); });
    return out;
  }
  const ChartInfo& ci = chart_info(base);
  MultiChart out;
  out.base = base;
  out.pmode = mode;
  out.roster = with_p(ci.vars, mode);
  out.psi_v3 = build_matrix(out.roster, ci.entries, ci.times_v, mode);
  for (const auto& row : ci.rows) {
    RosterPtr target = with_p(info(row.target).vars, mode);
    auto bind = p_binding(target, mode);
    std::vector<Polynomial> images;
    for (const auto& s : row.images) images.push_back(parse_polynomial(target, s, bind));
    if (mode.symbolic) images.push_back(Polynomial::variable(target, "p"));
    out.table.push_back({row.target, row.shift, RingMap(out.roster, target, std::move(images))});
  }
  return out;
}

bool projection_identity_holds(const MultiChart& chart, const Projection& pr) {
  GaugeChart g = build_gauge(pr.target, {3, 0}, chart.pmode);
  if (!same_roster(g.roster, pr.map.target())) throw std::logic_error("projection target roster mismatch");
  return chart.psi_v3.map(pr.map) == gauge_over_factor_v3(g);
}

}  // namespace defring::charts
