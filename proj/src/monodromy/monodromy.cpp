#include "defring/monodromy.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "defring/parse.hpp"

namespace defring::monodromy {

namespace {

std::map<std::string, Polynomial> bindings(const RosterPtr& roster, const Config& cfg) {
  std::map<std::string, Polynomial> b{{"k", Polynomial(roster, cfg.kappa)}};
  if (!cfg.symbolic_p) b.emplace("p", Polynomial(roster, cfg.p));
  return b;
}

Ideal ideal_from(const RosterPtr& roster, const std::vector<std::string>& gens, const Config& cfg) {
  auto b = bindings(roster, cfg);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(roster, g, b));
  return Ideal(roster, std::move(ps));
}

void append_coeffs(std::vector<Polynomial>& out, const UPoly& f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.coeff(i));
}

}  // namespace

std::string level_name(Level l) {
  switch (l) {
    case Level::le30: return "le30";
    case Level::w21: return "21";
    case Level::w30: return "30";
  }
  return "?";
}

Level parse_level(const std::string& text) {
  if (text == "le30") return Level::le30;
  if (text == "21") return Level::w21;
  if (text == "30") return Level::w30;
  throw std::invalid_argument("weight must be le30, 21 or 30, got '" + text + "'");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool kappa_generic(long kappa, long p, int depth) {
  long r = ((kappa % p) + p) % p;
  for (long n = -depth; n <= depth; ++n)
    if (((n % p) + p) % p == r) return false;
  return true;
}

void Config::validate() const {
  if (!is_prime(p) || p <= 5) throw std::invalid_argument("p must be a prime > 5, got " + std::to_string(p));
  if (depth < 5) throw std::invalid_argument("genericity depth must be at least 5");
  if (!kappa_generic(kappa, p, depth))
    throw std::invalid_argument("kappa = " + std::to_string(kappa) + " is congruent to one of 0, +-1, ..., +-" +
                                std::to_string(depth) + " mod " + std::to_string(p));
}

Rational kappa_op(Gauge g, long kappa) {
  switch (g) {
    case Gauge::t12:
    case Gauge::t03:
    case Gauge::t21s: return Rational(1 - kappa);
    default: return Rational(kappa);
  }
}

std::vector<Polynomial> det_condition_generators(const GaugeChart& chart) {
  UPoly det = chart.matrix.det();
  if (det.is_zero()) throw AlgebraError("det condition: determinant vanishes");
  if (det.degree() > 3) throw AlgebraError("det condition: determinant has degree above 3");
  if (det.degree() == 3) {
    Polynomial lead = det.coeff(3);
    if (!lead.is_constant() || lead.is_zero())
      throw AlgebraError("det condition: leading coefficient is not a nonzero constant: " + lead.str());
  } else {
    throw AlgebraError("det condition: determinant has degree below 3");
  }
  std::vector<Polynomial> gens;
  append_coeffs(gens, det, 3);
  return gens;
}

Ideal det_condition_ideal(const GaugeChart& chart) { return Ideal(chart.roster, det_condition_generators(chart)); }

MatrixPoly monodromy_operator(const GaugeChart& chart, const Rational& k) {
  const RosterPtr& r = chart.roster;
  const UPoly v = UPoly::linear(chart.p());
  const MatrixPoly& A = chart.matrix;
  MatrixPoly kdiag = MatrixPoly::diagonal(UPoly::constant(Polynomial(r, k)), UPoly(r));
  return (v * A.derivative() - A * kdiag) * A.adjugate();
}

std::vector<Polynomial> raw_generators(const GaugeChart& chart, const Rational& k, Level level) {
  std::vector<Polynomial> gens = det_condition_generators(chart);
  const Polynomial p = chart.p();
  if (level == Level::le30) {
    MatrixPoly M = monodromy_operator(chart, k);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t c = 0; c < 2; ++c) {
        UPoly e = M.at(i, c);
        if (i == 1 && c == 0) e = e.divide_linear(p);
        append_coeffs(gens, e, 2);
      }
  } else if (level == Level::w21) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t c = 0; c < 2; ++c) {
        UPoly e = chart.matrix.at(i, c);
        if (i == 1 && c == 0) e = e.divide_linear(p);
        append_coeffs(gens, e, 1);
      }
  } else {
    throw std::invalid_argument("the fixed weight (3,0) ideal is tabulated, not derived");
  }
  std::vector<Polynomial> out;
  for (auto& g : gens)
    if (!g.is_zero()) out.push_back(std::move(g));
  return out;
}

Polynomial strip_p_content(const Polynomial& f) {
  const auto idx = f.roster()->find("p");
  if (!idx || f.is_zero()) return f;
  unsigned low = ~0u;
  for (const auto& [m, c] : f.terms()) low = std::min<unsigned>(low, m[*idx]);
  if (low == 0) return f;
  return *f.divide_by_power(*idx, low);
}

Ideal derive_with_op(Gauge g, Level level, const Rational& k, const PMode& mode) {
  PMode sym{mode.p, true};
  GaugeChart chart = charts::build_gauge(g, {3, 0}, sym);
  std::vector<Polynomial> gens;
  for (const auto& f : raw_generators(chart, k, level)) gens.push_back(strip_p_content(f));
  Ideal I(chart.roster, gens);
  if (mode.symbolic) return ideal_saturate(I, chart.p());
  RingMap spec = charts::specialize_p(chart.roster, mode.p);
  return spec(I);
}

Ideal derive_le_ideal(Gauge g, Level level, const Config& cfg) {
  return derive_with_op(g, level, kappa_op(g, cfg.kappa), cfg.pmode());
}

Ideal derive_weight30(Gauge g, const Config& cfg) {
  Ideal le = derive_le_ideal(g, Level::le30, cfg);
  if (!charts::in_adm21(g)) return le;
  Ideal w21 = derive_le_ideal(g, Level::w21, cfg);
  std::optional<Ideal> out;
  for (const auto& f : w21.reduced_generators()) {
    Ideal s = ideal_saturate(le, f);
    out = out ? ideal_intersect(*out, s) : s;
  }
  return out ? *out : Ideal(le.roster(), {Polynomial(le.roster(), 1)});
}

Ideal derive_ideal(Gauge g, Level level, const Config& cfg) {
  return level == Level::w30 ? derive_weight30(g, cfg) : derive_le_ideal(g, level, cfg);
}

const TableEntry& reference_table(Gauge g, bool verbatim) {
  static const std::map<Gauge, TableEntry> corrected{
      {Gauge::t21,
       {{"a1+(k-2)*b0*c1", "d0-(k-1)*b0*c1", "k*c0+(k-1)*(k-2)*b0*c1^2",
         "k*a0-b0*c1*((k-1)^2*(k-2)*b0*c1-p*k)", "b0*((k-1)*(k-2)*b0*c1-2*p)"},
        {"b0", "a1", "d0", "c0", "a0"},
        {"a1+2*p/(k-1)", "d0-2*p/(k-2)", "k*c0+2*p*c1", "k*a0-2*p^2/(k-1)", "(k-1)*(k-2)*b0*c1-2*p"}}},
      {Gauge::t12,
       {{"d1+(k-2)*c0*b1", "a0-(k-1)*c0*b1", "k*b0+(k-1)*(k-2)*c0*b1^2",
         "k*d0-c0*b1*((k-1)^2*(k-2)*c0*b1-p*k)", "c0*((k-1)*(k-2)*c0*b1-2*p)"},
        {"c0", "d1", "a0", "b0", "d0"},
        {"d1+2*p/(k-1)", "a0-2*p/(k-2)", "k*b0+2*p*b1", "k*d0-2*p^2/(k-1)", "(k-1)*(k-2)*c0*b1-2*p"}}},
      {Gauge::t12s,
       {{"c0+(k-1)*(a1*d1+p)", "b0-k*(a1*d1+p)", "(k+1)*a0+k*(k-1)*a1*(a1*d1+p)",
         "(k-2)*d0-k*(k-1)*d1*(a1*d1+p)", "(a1*d1+p)*(k*(k-1)*a1*d1+(k-2)*(k+1)*p)"},
        {"c0", "b0", "a0", "d0", "a1*d1+p"},
        {"c0+2*p/k", "b0-2*p/(k-1)", "(k+1)*a0+2*p*a1", "(k-2)*d0-2*p*d1", "(a1*d1+p)-2*p/(k*(k-1))"}}},
      {Gauge::t30,
       {{"a0", "a1", "a2", "(k-2)*c1+2*p*c2", "(k-1)*c0+p*c1"},
        {"1"},
        {"a0", "a1", "a2", "(k-2)*c1+2*p*c2", "(k-1)*c0+p*c1"}}},
      {Gauge::t03,
       {{"d0", "d1", "d2", "(k-2)*b1+2*p*b2", "(k-1)*b0+p*b1"},
        {"1"},
        {"d0", "d1", "d2", "(k-2)*b1+2*p*b2", "(k-1)*b0+p*b1"}}},
      {Gauge::t03s,
       {{"d0*a2-(c1-p)", "(k-1)*a1+2*p*a2", "p*a1+k*a0", "(k-2)*c1+2*p", "(k-1)*c0+p*c1"},
        {"1"},
        {"d0*a2-(c1-p)", "(k-1)*a1+2*p*a2", "p*a1+k*a0", "(k-2)*c1+2*p", "(k-1)*c0+p*c1"}}},
      {Gauge::t21s,
       {{"a0*d2-(b1-p)", "(k-1)*d1+2*p*d2", "p*d1+k*d0", "(k-2)*b1+2*p", "(k-1)*b0+p*b1"},
        {"1"},
        {"a0*d2-(b1-p)", "(k-1)*d1+2*p*d2", "p*d1+k*d0", "(k-2)*b1+2*p", "(k-1)*b0+p*b1"}}},
  };
  // The uncorrected forms that differ from the corrected ones.
  static const std::map<Gauge, TableEntry> uncorrected = [] {
    std::map<Gauge, TableEntry> t = corrected;
    t[Gauge::t21].le30[2] = "k*c0-(k-1)*(k-2)*b0*c1^2";
    t[Gauge::t21].w30[2] = "k*c0-2*p*c1";
    t[Gauge::t12].le30[2] = "k*b0-(k-1)*(k-2)*c0*b1^2";
    t[Gauge::t12].w30[2] = "k*b0-2*p*b1";
    t[Gauge::t12s].le30[3] = "(k-2)*d0+k*(k-1)*d1*(a1*d1+p)";
    t[Gauge::t12s].w30[0] = "c0+2/k";
    t[Gauge::t12s].w30[1] = "b0-2/(k-1)";
    t[Gauge::t12s].w30[3] = "(k-2)*d0+2*p*d1";
    return t;
  }();
  return (verbatim ? uncorrected : corrected).at(g);
}

Ideal table_ideal(Gauge g, Level level, const Config& cfg, bool verbatim) {
  const TableEntry& t = reference_table(g, verbatim);
  RosterPtr roster = charts::with_p(charts::gauge_variables(g), cfg.pmode());
  const auto& gens = level == Level::le30 ? t.le30 : level == Level::w21 ? t.w21 : t.w30;
  return ideal_from(roster, gens, cfg);
}

ConsistencyResult fixed_weight_consistency(Gauge g, const Config& cfg) {
  ConsistencyResult r;
  Ideal le = derive_le_ideal(g, Level::le30, cfg);
  Ideal t_le = table_ideal(g, Level::le30, cfg);
  Ideal t21 = table_ideal(g, Level::w21, cfg);
  Ideal t30 = table_ideal(g, Level::w30, cfg);
  r.le30_matches = ideal_equal(le, t_le);
  r.w21_matches = ideal_equal(derive_le_ideal(g, Level::w21, cfg), t21);
  r.w30_matches = ideal_equal(derive_weight30(g, cfg), t30);
  if (charts::in_adm21(g))
    r.decomposition_holds = ideal_equal(le, ideal_intersect(t21, t30));
  else
    r.decomposition_holds = ideal_equal(le, t30);
  std::ostringstream os;
  if (!r.le30_matches) os << "derived le30 differs from the table; ";
  if (!r.w21_matches) os << "derived (2,1) ideal differs from the table; ";
  if (!r.w30_matches) os << "derived (3,0) component differs from the table; ";
  if (!r.decomposition_holds) os << "le30 is not the expected combination of the fixed weights; ";
  r.detail = os.str();
  return r;
}

bool conjugation_coherent(Gauge g, Level level, const Config& cfg) {
  const Rational k = kappa_op(g, cfg.kappa);
  Ideal mine = derive_with_op(g, level, k, cfg.pmode());
  const Gauge partner = charts::paired_gauge(g);
  Ideal theirs = derive_with_op(partner, level, Rational(1) - k, cfg.pmode());
  RingMap rel = charts::conjugation_relabel(mine.roster(), theirs.roster());
  return ideal_equal(rel(mine), theirs);
}

Ideal k_ideal(const MultiChart& chart, Gauge target, Level level, const Config& cfg) {
  const charts::Projection& pr = chart.projection(target);
  Config c = cfg;
  c.symbolic_p = chart.pmode.symbolic;
  c.p = chart.pmode.p;
  return preimage_ideal(pr.map, table_ideal(target, level, c));
}

const std::vector<KDisplay>& k_displays() {
  static const std::vector<KDisplay> d{
      {"1", Gauge::t21, Gauge::t21, Level::w21},     {"2_30", Gauge::t21, Gauge::t12, Level::w30},
      {"2_21", Gauge::t21, Gauge::t12, Level::w21},  {"3", Gauge::t21, Gauge::t30, Level::w30},
      {"4", Gauge::t12s, Gauge::t12s, Level::w21},   {"4b", Gauge::t12s, Gauge::t12s, Level::w21},
      {"5", Gauge::t12s, Gauge::t03s, Level::w30},   {"6", Gauge::t12s, Gauge::t21s, Level::w30},
  };
  return d;
}

Ideal k_display_ideal(const std::string& name, const Config& cfg, bool verbatim) {
  static const std::map<std::string, std::vector<std::string>> shown{
      {"1",
       {"alpha0+p*alpha1+p^2*alpha2+p^3", "beta0+p*beta1", "gamma0+p*gamma1+p^2*gamma2", "delta0+p*delta1+p^2",
        "beta1", "alpha2+p", "delta1+p", "gamma1+p*gamma2", "alpha1"}},
      {"2_30",
       {"alpha0+p*alpha1+p^2*alpha2+p^3", "alpha1+2*p*alpha2+3*p^2", "gamma0+p*gamma1+p^2*gamma2",
        "gamma1+2*p*gamma2", "gamma2*beta1-2*p/((k-1)*(k-2))", "delta1+2*p/(k-1)", "alpha2+(1-1/(k-2))*2*p",
        "k*beta0+2*p*beta1", "k*delta0-2*p^2/(k-1)"}},
      {"2_21",
       {"alpha0+p*alpha1+p^2*alpha2+p^3", "alpha1+2*p*alpha2+3*p^2", "gamma0+p*gamma1+p^2*gamma2",
        "gamma1+2*p*gamma2", "gamma2", "delta1", "alpha2+2*p", "beta0", "delta0"}},
      {"3",
       {"beta1", "beta0", "delta1+2*p", "delta0-p^2", "alpha2", "alpha1", "alpha0", "(k-2)*gamma1+2*p*gamma2",
        "(k-1)*gamma0+p*gamma1"}},
      {"4",
       {"alpha0+p*alpha1+p^2", "beta0+p*beta1+p^2*beta2", "gamma0+p*gamma1+p^2*gamma2", "delta0+p*delta1+p^2",
        "delta1+p", "alpha1+p", "beta1+p*beta2", "gamma1+p*gamma2", "beta2*gamma2+p"}},
      {"4b",
       {"alpha0", "alpha1+p", "beta0", "beta1+p*beta2", "gamma0", "gamma1+p*gamma2", "delta0", "delta1+p",
        "beta2*gamma2+p"}},
      {"5",
       {"alpha0-p^2", "alpha1+2*p", "gamma0-p^2*gamma2", "gamma1+2*p*gamma2", "gamma2*beta2-(delta1-p)",
        "(k-1)*beta1+2*p*beta2", "p*beta1+k*beta0", "(k-2)*delta1+2*p", "(k-1)*delta0+p*delta1"}},
      {"6",
       {"delta0-p^2", "delta1+2*p", "beta0-p^2*beta2", "beta1+2*p*beta2", "beta2*gamma2-(alpha1-p)",
        "(k-1)*gamma1+2*p*gamma2", "p*gamma1+k*gamma0", "(k-2)*alpha1+2*p", "(k-1)*alpha0+p*alpha1"}},
  };
  auto it = shown.find(name);
  if (it == shown.end()) throw std::invalid_argument("unknown display '" + name + "'");
  std::vector<std::string> gens = it->second;
  if (verbatim && name == "2_30") gens[7] = "k*beta0-2*p*beta1";
  Gauge base = Gauge::t21;
  for (const auto& d : k_displays())
    if (d.name == name) base = d.base;
  RosterPtr roster = charts::with_p(charts::chart_variables(base), cfg.pmode());
  return ideal_from(roster, gens, cfg);
}

Ideal det_condition_on_chart(const MultiChart& chart) {
  UPoly det = chart.psi_v3.det();
  if (det.is_zero()) throw AlgebraError("chart determinant vanishes");
  const int deg = det.degree();
  Polynomial lead = det.coeff(static_cast<std::size_t>(deg));
  if (deg != 6 || !lead.is_constant()) throw AlgebraError("chart determinant is not of the expected shape");
  const RosterPtr& r = chart.roster;
  UPoly target = UPoly::constant(lead);
  const UPoly v = UPoly::linear(chart.p());
  const UPoly u = UPoly::u(r);
  for (int i = 0; i < 3; ++i) target = target * v * u;
  UPoly diff = det - target;
  std::vector<Polynomial> gens;
  append_coeffs(gens, diff, 6);
  return Ideal(r, gens);
}

}  // namespace defring::monodromy
